#pragma once
// Quadratic differentials q = -(1/4pi^2) R(z) dz^2 on the Riemann sphere.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "strebel/exactnum.hpp"

namespace strebel {

// A point of P^1 with exact coordinate.
struct ProjPoint {
    GaussRat z;
    bool inf = false;

    static ProjPoint infinity() { return {GaussRat{}, true}; }
    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        return a.inf == b.inf && (a.inf || a.z == b.z);
    }
};
std::string to_string(const ProjPoint& p);

struct QuadDiff {
    ExactRatFunc R;
    std::vector<ProjPoint> poles;  // marked double poles with exact coordinates
};

struct DegenerateFamily : std::domain_error {
    using std::domain_error::domain_error;
};

// N(z) = (z-1)^2(z-l)^2 + z^2(z-l)^2 + z^2(z-1)^2 + (m-2z) z(z-1)(z-l)
template <class S> Poly<S> family_numerator(const S& lambda, const S& mu) {
    using P = Poly<S>;
    P z = P::x(), one(S(1));
    P a = z - one, b = z - P(lambda);
    return a * a * b * b + z * z * b * b + z * z * a * a + (P(mu) - S(2) * z) * z * a * b;
}
template <class S> Poly<S> family_denominator(const S& lambda) {
    using P = Poly<S>;
    P z = P::x();
    P d = z * (z - P(S(1))) * (z - P(lambda));
    return d * d;
}

QuadDiff family(const GaussRat& lambda, const GaussRat& mu);

// Standard building blocks: q0' = (1/4pi^2) dz^2/(z(1-z)), q0 = phi^* q0'
// with phi(z) = z/(z-1).
QuadDiff q0_prime();
QuadDiff q0();

// order of q at p (poles negative). At infinity: deg den - deg num - 4.
int order_at(const ExactRatFunc& R, const ProjPoint& p);
int order_at(const QuadDiff& q, const ProjPoint& p);

// R expressed in the chart w = 1/z, i.e. R(1/w)/w^4
ExactRatFunc chart_at_infinity(const ExactRatFunc& R);

struct Residue {
    GaussRat squared;       // A with R ~ A/(z-p)^2
    std::optional<Q> exact; // sqrt(A) when A is a rational square
    double value = 0;       // |sqrt(A)|
    bool positive_real = false;
};
Residue residue_at(const QuadDiff& q, const ProjPoint& p);
// Common residue at all roots of F, where F divides the pole divisor exactly
// twice. Throws if the residue is not constant along the roots of F.
Residue residue_on_factor(const QuadDiff& q, const ExactPoly& F);

enum class ZeroPartition { DoubleDouble, FourSimple, Other };
std::string to_string(ZeroPartition p);

struct ZeroInfo {
    BigComplex approx;
    std::optional<GaussRat> exact;
    int multiplicity;
};
struct ZeroClassification {
    ZeroPartition partition;
    std::vector<ZeroInfo> zeros;
    GaussRat discriminant;
};
ZeroClassification classify_zeros(const GaussRat& lambda, const GaussRat& mu);

// disc_z N = l^2 (l-1)^2 (m-2+2l)^2 (m-2-2l)^2 (m+2-2l)^2
GaussRat discriminant_closed_form(const GaussRat& lambda, const GaussRat& mu);
struct IdentityCheck {
    int points = 0;
    int mismatches = 0;
    bool ok() const { return points > 0 && mismatches == 0; }
};
IdentityCheck discriminant_identity_check();

// Theorem-1.1 closed form for real lambda
template <class T> T mu_double_zero(const T& lambda) {
    if (lambda == 0 || lambda == 1) throw DegenerateFamily("lambda must differ from 0 and 1");
    if (lambda < 0) return T(2 * lambda + 2);
    if (lambda < 1) return T(2 - 2 * lambda);
    return T(2 * lambda - 2);
}
GaussRat mu_double_zero(const GaussRat& lambda);

// pullback f^*q: R_new = R(f) f'^2. Marked poles are the exact double poles
// of the result that are rational over Q(i).
QuadDiff pullback(const ExactRatFunc& f, const QuadDiff& q);

template <class S> struct Mobius {
    S a, b, c, d;  // z -> (a z + b)/(c z + d)
    RatFunc<S> as_ratfunc() const { return RatFunc<S>(Poly<S>{b, a}, Poly<S>{d, c}); }
    Mobius inverse() const { return {d, -b, -c, a}; }
    Mobius then(const Mobius& o) const {  // o after this
        return {o.a * a + o.b * c, o.a * b + o.b * d, o.c * a + o.d * c, o.c * b + o.d * d};
    }
    S det() const { return a * d - b * c; }
};
using MobiusMap = Mobius<GaussRat>;

ProjPoint apply(const MobiusMap& m, const ProjPoint& p);
// map sending p1, p2, p3 to 0, 1, infinity
template <class S> Mobius<S> three_point_map(const S& p1, const S& p2, const S& p3);
MobiusMap three_point_map(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3);

// m^* q: the differential in the coordinate x with z = m(x)
QuadDiff mobius_apply(const MobiusMap& m, const QuadDiff& q);

struct Normalized {
    MobiusMap m;       // sends the chosen poles to 0, 1, infinity
    QuadDiff q;        // (m^{-1})^* q
    ProjPoint lambda;  // image of the fourth pole
};
Normalized normalize_poles(const QuadDiff& q, const std::vector<ProjPoint>& four_poles);

// Numeric cross-ratio: image of p4 under the map p1,p2,p3 -> 0,1,inf.
BigComplex cross_ratio_lambda(const BigComplex& p1, const BigComplex& p2, const BigComplex& p3,
                              const BigComplex& p4);

struct DivisorEntry {
    bool is_zero;          // zero of q, otherwise a double pole
    BigComplex point;
    bool at_infinity = false;
    Q weight;              // (a-1) at a pole, m/2 at a zero
    Q angle_over_pi;       // 2a at a pole, m+2 at a zero
};
struct Divisor {
    std::vector<DivisorEntry> entries;
    Q degree() const;
};
// Requires every double pole to have a rational residue.
Divisor divisor_of(const QuadDiff& q);

}  // namespace strebel
