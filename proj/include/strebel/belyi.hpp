#pragma once
// Rational maps as branched covers of P^1: passports, the map catalog,
// even decompositions and the minimal-degree formula.

#include <optional>
#include <string>
#include <vector>

#include "strebel/qdiff.hpp"

namespace strebel {

using RationalMap = ExactRatFunc;

struct Passport {
    int degree = 0;
    std::vector<int> over0, over1, overInf;  // sorted ascending, all preimages
    bool is_belyi = false;
};
std::string to_string(const std::vector<int>& partition);
std::string to_string(const Passport& p);

// local degrees of all preimages of v (v may be infinity)
std::vector<int> fiber(const RationalMap& f, const ProjPoint& v);
Passport passport(const RationalMap& f);

// Numeric passport of N/D from clustered roots. Leading coefficients below
// 2^(32-bits) relative to the largest coefficient are treated as zero.
Passport passport_numeric(const CPoly<Real>& num, const CPoly<Real>& den, unsigned bits);

// case1, phi_case1, deg8, deg12theta, deg12theta-literal, phi
RationalMap catalog(const std::string& name);
std::vector<std::string> catalog_names();
// q0, q0p
QuadDiff catalog_qdiff(const std::string& name);
// the theta example's printed right-hand side -64x^3(x^3-1)^3/(8x^3+1)^3
RationalMap theta_S();

struct Case2Result {
    RationalMap f;                     // x^2 (x-1)^2 / c^2
    GaussRat c2;
    BigComplex lambda, mu;             // mu = 2 - 2 lambda
    std::optional<GaussRat> lambda_exact, mu_exact;
};
Case2Result case2(const GaussRat& c);
Case2Result case2_from_c2(const GaussRat& c2);

RationalMap compose_square(const RationalMap& g);
std::optional<RationalMap> is_even(const RationalMap& f);

struct MinDegreeResult {
    long d = 0;
    long min_degree = 0;
    bool even = false;
};
MinDegreeResult min_degree(const Q& a, const Q& b, const Q& c);

struct Deg8Report {
    bool f_minus_one_identity = false;
    Passport pass;
    bool pullback_matches = false;   // R = -4096x(9x^2+14x+9)/(27x^4+...)^2
    Q residue_before, residue_after; // on the roots of 27x^4+36x^3+2x^2+36x+27
    bool ok() const;
};
Deg8Report verify_deg8();

struct Example43Root {
    std::string label;           // t0, t1, t2
    BigComplex a5, a1, a2, a3, a4;
    Real p_residual;             // |P(a5)|
    Real g_residual;             // |g(1) - g(a5)|
    Real h_residual;             // max |h - 3(x-1)^2(x-a5)^2| over the coefficients
    Passport f_passport;         // f = g o ((a3 x^2 + a1)/(x^2 + 1)), numeric
    std::vector<BigComplex> poles;  // (s1, s5, -s1, -s5), s1^2, s5^2 = psi^{-1}(1), psi^{-1}(a5)
    std::vector<BigComplex> zeros;
    BigComplex lambda, mu;       // poles sent to (0, 1, inf, lambda)
    std::vector<BigComplex> lambda_orbit;  // all six cross-ratio values
};
// P(t) = t^6 + 6t^5 + 15t^4 + 36t^3 + 15t^2 + 6t + 1, whose roots are the a5 values
ExactPoly example43_polynomial();
// representative roots of P(t) from their radical expressions
std::vector<BigComplex> example43_roots(unsigned bits);
std::vector<Example43Root> example43_solve(unsigned bits = 192);

}  // namespace strebel
