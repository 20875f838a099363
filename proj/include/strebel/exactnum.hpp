#pragma once
// Exact Gaussian-rational algebra plus the numeric root finder.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "strebel/poly.hpp"
#include "strebel/scalar.hpp"

namespace strebel {

using ExactPoly = Poly<GaussRat>;
using ExactRatFunc = RatFunc<GaussRat>;
template <class T> using CPoly = Poly<Complex<T>>;

template <class T> CPoly<T> to_numeric(const ExactPoly& p) {
    return p.map([](const GaussRat& a) { return from_gauss<T>(a); });
}
template <class T> RatFunc<Complex<T>> to_numeric(const ExactRatFunc& f) {
    return RatFunc<Complex<T>>::raw(to_numeric<T>(f.num()), to_numeric<T>(f.den()));
}

// lowest-degree-first coefficient strings
ExactPoly parse_poly(const std::vector<std::string>& coeffs);
std::vector<std::string> coeff_strings(const ExactPoly& p);
std::string to_string(const ExactPoly& p, const std::string& var = "x");

struct RootError : std::runtime_error {
    RootError(const std::string& what, std::vector<Complex<double>> best)
        : std::runtime_error(what), best_iterate(std::move(best)) {}
    std::vector<Complex<double>> best_iterate;
};

// Aberth–Ehrlich simultaneous iteration followed by Newton polish.
// tol is relative to max(1,|z|).
template <class T>
std::vector<Complex<T>> aberth(const CPoly<T>& p, const T& tol, int max_iter = 1000) {
    using std::abs; using std::pow;
    int n = p.degree();
    if (n < 1) throw std::invalid_argument("roots of a constant polynomial");
    std::vector<Complex<T>> z(n);
    CPoly<T> dp = p.derivative();
    T a0 = strebel::abs(p.coeff(0)), an = strebel::abs(p.lead());
    T r = a0 == 0 ? T(1) : T(pow(a0 / an, T(1) / n));
    if (r == 0) r = 1;
    T two_pi = 2 * pi_v<T>();
    for (int k = 0; k < n; ++k) z[k] = polar(r, two_pi * k / n + T(0.4));
    std::vector<Complex<T>> best = z;
    for (int it = 0; it < max_iter; ++it) {
        bool done = true;
        for (int k = 0; k < n; ++k) {
            Complex<T> pv = p.eval(z[k]);
            if (pv.is_zero()) continue;
            Complex<T> w = pv / dp.eval(z[k]);
            Complex<T> s(0);
            for (int j = 0; j < n; ++j)
                if (j != k) s += Complex<T>(1) / (z[k] - z[j]);
            Complex<T> delta = w / (Complex<T>(1) - w * s);
            z[k] -= delta;
            T scale = std::max(T(1), strebel::abs(z[k]));
            if (strebel::abs(delta) > tol * scale) done = false;
        }
        if (done) {
            for (int pass = 0; pass < 2; ++pass)
                for (auto& x : z) {
                    Complex<T> d = dp.eval(x);
                    if (!d.is_zero()) x -= p.eval(x) / d;
                }
            return z;
        }
    }
    std::vector<Complex<double>> bd;
    for (auto& x : z) bd.push_back({to_double(x.re), to_double(x.im)});
    throw RootError("Aberth iteration did not converge", bd);
}

struct RootMult {
    BigComplex z;
    int multiplicity;
};

// Roots of an exact polynomial at `bits` precision. Multiplicities come from
// the exact square-free decomposition, never from clustering.
std::vector<RootMult> roots_numeric(const ExactPoly& p, unsigned bits);
std::vector<BigComplex> roots_numeric(const CPoly<Real>& p, unsigned bits);

// Roots lying in Q(i), recovered from numeric roots by continued fractions
// and confirmed by exact evaluation. Multiplicities as in roots_numeric.
std::vector<std::pair<GaussRat, int>> gaussian_rational_roots(const ExactPoly& p);

// best rational approximation with denominator <= max_den
Q rationalize(const Real& x, const Z& max_den);

// exact square root in Q(i) when one exists (principal branch)
std::optional<GaussRat> exact_sqrt(const GaussRat& a);

// integer coefficients, degree <= 6
bool irreducible_over_Q(const ExactPoly& p);
bool has_integer_coefficients(const ExactPoly& p);

// numeric multiplicity clustering for inexact inputs; throws if clusters
// are ambiguous at the given tolerance
struct Cluster {
    Complex<double> center;
    int multiplicity;
};
std::vector<Cluster> cluster_roots(const std::vector<BigComplex>& roots, double tol);

}  // namespace strebel
