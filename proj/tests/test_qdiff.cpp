#include <complex>
#include <random>

#include "doctest.h"
#include "strebel/qdiff.hpp"

using namespace strebel;

namespace {
GaussRat g(long re, long im = 0) { return GaussRat(Q(re), Q(im)); }
GaussRat gq(long n, long d) { return GaussRat(Q(n, d)); }
using P = ExactPoly;
using cd = std::complex<double>;
cd as_cd(const GaussRat& z) { return {to_double(z.re), to_double(z.im)}; }
}  // namespace

TEST_CASE("family numerator against its defining expression") {
    GaussRat l = GaussRat(Q(3, 2), Q(1, 5)), m = GaussRat(Q(-1, 3), Q(2));
    QuadDiff q = family(l, m);
    cd L = as_cd(l), M = as_cd(m);
    for (cd z : {cd(0.3, 0.7), cd(-1.1, 0.2), cd(2.5, -0.4)}) {
        cd N = std::pow((z - 1.0) * (z - L), 2) + std::pow(z * (z - L), 2) + std::pow(z * (z - 1.0), 2) +
               (M - 2.0 * z) * z * (z - 1.0) * (z - L);
        cd D = std::pow(z * (z - 1.0) * (z - L), 2);
        auto v = to_numeric<double>(q.R.num()).eval(Complex<double>(z.real(), z.imag())) /
                 to_numeric<double>(q.R.den()).eval(Complex<double>(z.real(), z.imag()));
        CHECK(std::abs(cd(v.re, v.im) - N / D) < 1e-10 * std::abs(N / D));
    }
}

TEST_CASE("discriminant closed form at random points off the grid") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> u(-40, 40);
    for (int k = 0; k < 25; ++k) {
        GaussRat l(Q(u(rng), 7), Q(u(rng), 5)), m(Q(u(rng), 3), Q(u(rng), 11));
        if (l.is_zero() || l == g(1)) continue;
        CHECK(discriminant(family_numerator(l, m)) == discriminant_closed_form(l, m));
    }
}

TEST_CASE("zero classification") {
    auto c = classify_zeros(gq(1, 2), g(1));
    CHECK(c.partition == ZeroPartition::DoubleDouble);
    REQUIRE(c.zeros.size() == 2);
    for (auto& z : c.zeros) {
        CHECK(z.multiplicity == 2);
        REQUIRE(z.exact);
        CHECK((*z.exact == GaussRat(Q(1, 2), Q(1, 2)) || *z.exact == GaussRat(Q(1, 2), Q(-1, 2))));
    }
    CHECK(classify_zeros(g(2), g(0)).partition == ZeroPartition::FourSimple);
    CHECK_THROWS_AS(family(g(1), g(0)), DegenerateFamily);
}

TEST_CASE("closed-form mu on the three real branches") {
    CHECK(mu_double_zero(gq(-1, 2)) == g(1));
    CHECK(mu_double_zero(gq(3, 4)) == gq(1, 2));
    CHECK(mu_double_zero(g(3)) == g(4));
    CHECK_THROWS(mu_double_zero(g(0)));
    CHECK_THROWS(mu_double_zero(g(1, 1)));
    // the closed form really produces two double zeros
    for (auto l : {gq(-1, 2), gq(3, 4), g(3)})
        CHECK(classify_zeros(l, mu_double_zero(l)).partition == ZeroPartition::DoubleDouble);
}

TEST_CASE("orders and residues of the base differentials") {
    QuadDiff q = q0();
    CHECK(order_at(q, {g(0)}) == -1);
    CHECK(order_at(q, {g(1)}) == -2);
    CHECK(order_at(q, ProjPoint::infinity()) == -1);
    CHECK(residue_at(q, {g(1)}).value == doctest::Approx(1.0));
    QuadDiff f = family(GaussRat(Q(5, 2), Q(1, 3)), g(1, -1));
    for (ProjPoint p : {ProjPoint{g(0)}, ProjPoint{g(1)}, ProjPoint{GaussRat(Q(5, 2), Q(1, 3))}, ProjPoint::infinity()}) {
        Residue r = residue_at(f, p);
        CHECK(r.exact);
        CHECK(r.value == doctest::Approx(1.0));
    }
}

TEST_CASE("pullback is functorial") {
    P x = P::x(), one(g(1));
    ExactRatFunc f(x * x + g(0, 1) * x), h(x * x * x - one, x + g(2) * one);
    QuadDiff a = pullback(f.compose(h), q0());
    QuadDiff b = pullback(h, pullback(f, q0()));
    CHECK(a.R == b.R);
    CHECK(pullback(ExactRatFunc::x(), q0()).R == q0().R);
}

TEST_CASE("mobius maps") {
    MobiusMap m = three_point_map(ProjPoint{g(2)}, ProjPoint{g(0, 1)}, ProjPoint{g(-1)});
    CHECK(apply(m, {g(2)}) == ProjPoint{g(0)});
    CHECK(apply(m, {g(0, 1)}) == ProjPoint{g(1)});
    CHECK(apply(m, {g(-1)}).inf);
    QuadDiff q = family(g(3), g(1));
    QuadDiff back = mobius_apply(m.inverse(), mobius_apply(m, q));
    CHECK(back.R == q.R);
}

TEST_CASE("cross ratio agrees with the exact normalization") {
    PrecisionGuard guard(128);
    // four poles of the x^4 pullback: 1, i, -1, -i
    QuadDiff pb = pullback(ExactRatFunc(P::monomial(g(1), 4)), q0());
    auto n = normalize_poles(pb, {{g(1)}, {g(0, 1)}, {g(-1)}, {g(0, -1)}});
    BigComplex l = cross_ratio_lambda(to_big(g(1)), to_big(g(0, 1)), to_big(g(-1)), to_big(g(0, -1)));
    REQUIRE(!n.lambda.inf);
    CHECK(abs(l - to_big(n.lambda.z)) < Real("1e-30"));
}

TEST_CASE("divisor of a four-simple-zero member") {
    Divisor d = divisor_of(family(g(2), g(0)));
    CHECK(d.degree() == 2);
    int zeros = 0;
    for (auto& e : d.entries)
        if (e.is_zero) {
            ++zeros;
            CHECK(e.angle_over_pi == 3);
        } else {
            CHECK(e.weight == 0);
        }
    CHECK(zeros == 4);
}
