#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "strebel/exactnum.hpp"

using namespace strebel;

namespace {
GaussRat g(long re, long im = 0) { return GaussRat(Q(re), Q(im)); }
GaussRat gq(long n, long d) { return GaussRat(Q(n, d)); }
ExactPoly lin(const GaussRat& r) { return ExactPoly{-r, GaussRat(1)}; }  // x - r
}  // namespace

TEST_CASE("gaussian rationals print and parse") {
    for (const char* s : {"0", "3/4", "-1/2+1/3*i", "1*i", "-2/7-5*i"}) CHECK(to_string(parse_gauss(s)) == to_string(parse_gauss(to_string(parse_gauss(s)))));
    CHECK(parse_gauss("i") == GaussRat(Q(0), Q(1)));
    CHECK(parse_gauss("-2i") == GaussRat(Q(0), Q(-2)));
    CHECK(parse_gauss("0.9-1.5*i") == GaussRat(Q(9, 10), Q(-3, 2)));
    CHECK(parse_rational("6/4") == Q(3, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_gauss("abc"), ParseError);
    CHECK_THROWS_AS(parse_gauss(""), ParseError);
}

TEST_CASE("big complex text round trip") {
    PrecisionGuard guard(128);
    BigComplex z{Real(1) / 3, -bmp::sqrt(Real(2))};
    BigComplex w = parse_bigcomplex(to_string(z));
    CHECK(abs(w - z) < Real("1e-36"));
    CHECK(to_string(w) == to_string(z));
}

TEST_CASE("precision guard restores the default") {
    unsigned before = current_bits();
    {
        PrecisionGuard g(256);
        CHECK(current_bits() >= 256);
    }
    CHECK(current_bits() == before);
}

TEST_CASE("discriminant of a quadratic") {
    // b^2 - 4ac on random Gaussian coefficients
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> u(-9, 9);
    for (int k = 0; k < 20; ++k) {
        GaussRat a(Q(u(rng), 3), Q(u(rng))), b(Q(u(rng)), Q(u(rng), 2)), c(Q(u(rng)), Q(u(rng)));
        if (a.is_zero()) continue;
        CHECK(discriminant(ExactPoly{c, b, a}) == b * b - g(4) * a * c);
    }
}

TEST_CASE("gcd, resultant and square-free parts") {
    ExactPoly p = lin(g(1)) * lin(g(2)), q = lin(g(1)) * lin(g(0, 3));
    CHECK(gcd(p, q).monic() == lin(g(1)));
    CHECK(resultant(p, q).is_zero());
    CHECK(!resultant(lin(g(2)), q).is_zero());
    auto sf = squarefree(lin(g(1)).pow(2) * lin(g(-2)));
    int total = 0;
    for (auto& [f, m] : sf) total += f.degree() * m;
    CHECK(total == 3);
}

TEST_CASE("numeric roots carry exact multiplicities") {
    ExactPoly p = lin(g(0, 1)).pow(3) * lin(gq(-1, 2));
    auto r = roots_numeric(p, 128);
    REQUIRE(r.size() == 2);
    int m3 = 0;
    for (auto& x : r)
        if (x.multiplicity == 3) {
            ++m3;
            CHECK(abs(x.z - BigComplex(Real(0), Real(1))) < Real("1e-30"));
        }
    CHECK(m3 == 1);
}

TEST_CASE("aberth on roots of unity") {
    CPoly<double> p{Complex<double>(-1), 0, 0, 0, 0, Complex<double>(1)};
    auto z = aberth<double>(p, 1e-14);
    REQUIRE(z.size() == 5);
    for (auto& w : z) {
        std::complex<double> c(w.re, w.im);
        CHECK(std::abs(std::pow(c, 5) - 1.0) < 1e-12);
    }
}

TEST_CASE("roots in Q(i)") {
    ExactPoly p = lin(gq(1, 2)) * lin(g(0, 1)) * ExactPoly{g(2), g(0), g(1)};
    auto r = gaussian_rational_roots(p);
    CHECK(r.size() == 2);
    for (auto& [z, m] : r) CHECK((z == gq(1, 2) || z == g(0, 1)));
}

TEST_CASE("exact square roots") {
    CHECK(exact_sqrt(g(-4)) == g(0, 2));
    auto s = exact_sqrt(g(0, 2));
    REQUIRE(s);
    CHECK(*s * *s == g(0, 2));
    CHECK(!exact_sqrt(g(2)));
    CHECK(exact_sqrt(gq(9, 16)) == gq(3, 4));
}

TEST_CASE("irreducibility over Q") {
    ExactPoly x = ExactPoly::x(), one(g(1));
    CHECK(irreducible_over_Q(x.pow(4) + one));
    CHECK(irreducible_over_Q(x.pow(3) - g(2) * one));
    CHECK(!irreducible_over_Q((x * x + one) * (x * x + g(2) * one)));
    CHECK(!irreducible_over_Q((x.pow(3) - g(2) * one) * (x.pow(3) + x + one)));
    CHECK(!irreducible_over_Q((x + one) * (x.pow(4) + x + one)));
    CHECK(irreducible_over_Q((x + one).pow(6) + g(16) * x.pow(3)));
}

TEST_CASE("rational reconstruction") {
    PrecisionGuard guard(128);
    CHECK(rationalize(pi_v<Real>(), Z(113)) == Q(355, 113));
    CHECK(rationalize(Real(2) / 7, Z(1000)) == Q(2, 7));
}

TEST_CASE("clustering") {
    PrecisionGuard guard(128);
    std::vector<BigComplex> r{BigComplex(Real(1)), BigComplex(Real(1) + Real("1e-12")), BigComplex(Real(-2))};
    auto c = cluster_roots(r, 1e-8);
    REQUIRE(c.size() == 2);
    CHECK(c[0].multiplicity + c[1].multiplicity == 3);
}
