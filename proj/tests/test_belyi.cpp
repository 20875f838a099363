#include <numeric>
#include <random>

#include "doctest.h"
#include "strebel/belyi.hpp"

using namespace strebel;

namespace {
using V = std::vector<int>;
GaussRat g(long re, long im = 0) { return GaussRat(Q(re), Q(im)); }

int defect(const V& fibre, int d) { return d - static_cast<int>(fibre.size()); }
}  // namespace

TEST_CASE("catalog passports") {
    Passport p = passport(catalog("case1"));
    CHECK(p.over0 == V{4});
    CHECK(p.over1 == V{1, 1, 1, 1});
    CHECK(p.overInf == V{4});
    p = passport(catalog("deg8"));
    CHECK(to_string(p) == "(2,3,3)/(2,2,2,2)/(2,3,3)");
    CHECK(p.is_belyi);
    p = passport(catalog("deg12theta"));
    CHECK(to_string(p) == "(3,3,3,3)/(3,3,3,3)/(2,2,2,2,2,2)");
    CHECK(!passport(catalog("deg12theta-literal")).is_belyi);
    CHECK_THROWS(catalog("nope"));
}

TEST_CASE("Riemann-Hurwitz on the Belyi catalog") {
    // a genus-0 Belyi map of degree d has total ramification 2d - 2 over three points
    for (auto& name : catalog_names()) {
        Passport p = passport(catalog(name));
        if (!p.is_belyi) continue;
        int d = p.degree;
        CHECK(defect(p.over0, d) + defect(p.over1, d) + defect(p.overInf, d) == 2 * d - 2);
        for (const V* f : {&p.over0, &p.over1, &p.overInf}) CHECK(std::accumulate(f->begin(), f->end(), 0) == d);
    }
}

TEST_CASE("numeric passport matches the exact one") {
    PrecisionGuard guard(128);
    RationalMap f = catalog("deg8");
    Passport n = passport_numeric(to_numeric<Real>(f.num()), to_numeric<Real>(f.den()), 128);
    Passport e = passport(f);
    CHECK(n.over0 == e.over0);
    CHECK(n.over1 == e.over1);
    CHECK(n.overInf == e.overInf);
}

TEST_CASE("degree-8 report") {
    Deg8Report r = verify_deg8();
    CHECK(r.f_minus_one_identity);
    CHECK(r.pullback_matches);
    CHECK(r.residue_before == 2);
    CHECK(r.residue_after == 1);
    CHECK(r.ok());
}

TEST_CASE("double-zero maps x^2(x-1)^2/c^2") {
    Case2Result r = case2(GaussRat(Q(0), Q(1, 3)));
    REQUIRE(r.lambda_exact);
    CHECK(*r.lambda_exact == GaussRat(Q(4, 5)));
    CHECK(*r.mu_exact == GaussRat(Q(2, 5)));
    CHECK(to_string(passport(r.f)) == "(2,2)/(1,1,1,1)/(4)");
    Case2Result s = case2_from_c2(GaussRat(Q(1, 18)));
    REQUIRE(s.lambda_exact);
    // mu = 2 - 2 lambda is a double-zero locus for every lambda
    CHECK(*s.mu_exact == GaussRat(2) - GaussRat(2) * *s.lambda_exact);
    CHECK(classify_zeros(*s.lambda_exact, *s.mu_exact).partition == ZeroPartition::DoubleDouble);
    CHECK_THROWS(case2(g(0)));
}

TEST_CASE("even maps") {
    RationalMap h(ExactPoly{g(1), g(0, 2), g(3)}, ExactPoly{g(-1), g(1)});
    RationalMap f = compose_square(h);
    auto back = is_even(f);
    REQUIRE(back);
    CHECK(*back == h);
    CHECK(!is_even(h));
}

TEST_CASE("minimal degree") {
    CHECK(min_degree(Q(1, 2), Q(1, 4), Q(1, 4)).min_degree == 8);
    CHECK(min_degree(Q(1, 3), Q(1, 3), Q(1, 3)).min_degree == 12);
    CHECK(min_degree(Q(1, 5), Q(2, 5), Q(2, 5)).min_degree == 20);
    CHECK_THROWS_AS(min_degree(Q(1, 2), Q(1, 2), Q(1, 2)), std::domain_error);
    CHECK_THROWS_AS(min_degree(Q(1), Q(1, 2), Q(-1, 2)), std::domain_error);

    // oracle: scan for the least d with da, db, dc all integral
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> u(1, 30);
    for (int k = 0; k < 200; ++k) {
        Q a(u(rng), u(rng) + 30), b(u(rng), u(rng) + 30);
        Q c = 1 - a - b;
        if (c <= 0) continue;
        long d = 1;
        while (bmp::denominator(a * d) != 1 || bmp::denominator(b * d) != 1 || bmp::denominator(c * d) != 1) ++d;
        auto r = min_degree(a, b, c);
        CHECK(r.d == d);
        CHECK(r.min_degree == (d % 2 ? 4 * d : 2 * d));
    }
}

TEST_CASE("sextic family roots and normalization") {
    auto rows = example43_solve(192);
    REQUIRE(rows.size() == 3);
    PrecisionGuard guard(192);
    for (auto& r : rows) {
        CHECK(r.p_residual < Real("1e-50"));
        CHECK(r.g_residual < Real("1e-40"));
        CHECK(r.h_residual < Real("1e-40"));
        CHECK(r.f_passport.degree == 12);
        CHECK(r.lambda_orbit.size() == 6);
    }
    // t0 and t2 are complex conjugates, t1 is real
    CHECK(abs(rows[0].lambda - conj(rows[2].lambda)) < Real("1e-40"));
    CHECK(abs(rows[1].a5.im) < Real("1e-50"));
    CHECK(to_double(rows[1].a5.re) == doctest::Approx(-4.2865545026));
}
