#include "strebel/exactnum.hpp"

#include <cmath>
#include <cstdint>
#include <numeric>
#include <sstream>

namespace strebel {

ExactPoly parse_poly(const std::vector<std::string>& coeffs) {
    std::vector<GaussRat> c;
    c.reserve(coeffs.size());
    for (const auto& s : coeffs) c.push_back(parse_gauss(s));
    return ExactPoly(std::move(c));
}

std::vector<std::string> coeff_strings(const ExactPoly& p) {
    std::vector<std::string> out;
    for (const auto& a : p.coeffs()) out.push_back(to_string(a));
    return out;
}

std::string to_string(const ExactPoly& p, const std::string& var) {
    if (p.zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const GaussRat& a = p.coeff(k);
        if (a.is_zero()) continue;
        std::string s = to_string(a);
        bool complex_coeff = a.re != 0 && a.im != 0;
        if (complex_coeff) s = "(" + s + ")";
        if (!first) os << (s[0] == '-' ? " - " : " + ");
        else if (s[0] == '-') os << '-';
        if (s[0] == '-') s = s.substr(1);
        if (k == 0 || s != "1") os << s << (k ? "*" : "");
        if (k >= 1) os << var;
        if (k > 1) os << '^' << k;
        first = false;
    }
    return os.str();
}

std::vector<RootMult> roots_numeric(const ExactPoly& p, unsigned bits) {
    if (p.degree() < 1) throw std::invalid_argument("roots of a constant polynomial");
    PrecisionGuard g(bits);
    std::vector<RootMult> out;
    for (auto& [f, m] : squarefree(p)) {
        for (auto& z : roots_numeric(to_numeric<Real>(f), bits)) out.push_back({z, m});
    }
    return out;
}

std::vector<BigComplex> roots_numeric(const CPoly<Real>& p, unsigned bits) {
    PrecisionGuard g(bits);
    Real tol = bmp::ldexp(Real(1), -static_cast<int>(bits) + 12);
    if (p.degree() == 1) return {-(p.coeff(0) / p.coeff(1))};
    // seed from a double-precision solve when possible; it converges faster
    return aberth<Real>(p, tol, 4000);
}

Q rationalize(const Real& x, const Z& max_den) {
    // convergents h/k of the continued fraction of x
    Z h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    Real r = x;
    Q best(0);
    for (int it = 0; it < 200; ++it) {
        Real fl = bmp::floor(r);
        Z a;
        mpfr_get_z(a.backend().data(), fl.backend().data(), MPFR_RNDN);
        Z h2 = a * h1 + h0, k2 = a * k1 + k0;
        if (k2 > max_den) break;
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
        best = Q(h1, k1);
        Real frac = r - fl;
        if (frac == 0 || bmp::abs(x - to_real(best)) < bmp::ldexp(Real(1), -static_cast<int>(current_bits()) + 16))
            break;
        r = 1 / frac;
    }
    return best;
}

std::vector<std::pair<GaussRat, int>> gaussian_rational_roots(const ExactPoly& p) {
    std::vector<std::pair<GaussRat, int>> out;
    if (p.degree() < 1) return out;
    PrecisionGuard g(kDefaultBits);
    const Z max_den("1000000000000");
    for (auto& [f, m] : squarefree(p)) {
        if (f.degree() == 1) {
            out.push_back({-(f.coeff(0) / f.coeff(1)), m});
            continue;
        }
        for (auto& z : roots_numeric(to_numeric<Real>(f), kDefaultBits)) {
            GaussRat r(rationalize(z.re, max_den), rationalize(z.im, max_den));
            if (f.eval(r).is_zero()) out.push_back({r, m});
        }
    }
    return out;
}

std::optional<GaussRat> exact_sqrt(const GaussRat& a) {
    if (a.is_zero()) return GaussRat{};
    PrecisionGuard g(kDefaultBits);
    BigComplex s = sqrt(from_gauss<Real>(a));
    const Z max_den("1000000000000");
    GaussRat r(rationalize(s.re, max_den), rationalize(s.im, max_den));
    if (r * r == a) return r;
    return std::nullopt;
}

bool has_integer_coefficients(const ExactPoly& p) {
    for (const auto& a : p.coeffs())
        if (a.im != 0 || bmp::denominator(a.re) != 1) return false;
    return true;
}

namespace {

using i64 = std::int64_t;

std::vector<i64> divisors(i64 n) {
    std::vector<i64> d;
    n = n < 0 ? -n : n;
    for (i64 k = 1; k * k <= n; ++k)
        if (n % k == 0) {
            d.push_back(k);
            if (k * k != n) d.push_back(n / k);
        }
    return d;
}

i64 eval_int(const std::vector<i64>& c, i64 t) {
    i64 r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * t + *it;
    return r;
}

i64 binom(int n, int k) {
    i64 r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// odometer over coefficient vectors b[1..k-1] in [-B_i, B_i]
bool search_factor(const std::vector<i64>& pc, int k, double norm2) {
    const i64 an = pc.back(), a0 = pc.front();
    const std::vector<i64> probes = {1, -1, 2, -2, 3, -3};
    std::vector<i64> pv;
    for (auto t : probes) pv.push_back(eval_int(pc, t));
    ExactPoly P(std::vector<GaussRat>(pc.begin(), pc.end()));
    std::vector<i64> bound(k + 1);
    for (int i = 0; i <= k; ++i) bound[i] = static_cast<i64>(std::ceil(binom(k, i) * norm2));
    for (i64 lc : divisors(an)) {
        for (i64 c0abs : divisors(a0)) {
            for (int sgn : {1, -1}) {
                std::vector<i64> g(k + 1, 0);
                g[k] = lc;
                g[0] = sgn * c0abs;
                if (c0abs > bound[0]) continue;
                std::vector<i64> mid(k - 1);
                for (int i = 1; i < k; ++i) mid[i - 1] = -bound[i];
                while (true) {
                    for (int i = 1; i < k; ++i) g[i] = mid[i - 1];
                    bool ok = true;
                    for (size_t j = 0; j < probes.size() && ok; ++j) {
                        i64 gv = eval_int(g, probes[j]);
                        if (gv == 0) ok = pv[j] == 0;
                        else ok = pv[j] % gv == 0;
                    }
                    if (ok) {
                        ExactPoly G(std::vector<GaussRat>(g.begin(), g.end()));
                        if ((P % G).zero()) return true;
                    }
                    int i = 0;
                    while (i < k - 1 && mid[i] == bound[i + 1]) { mid[i] = -bound[i + 1]; ++i; }
                    if (i == k - 1) break;
                    ++mid[i];
                }
            }
        }
    }
    return false;
}

}  // namespace

bool irreducible_over_Q(const ExactPoly& p) {
    if (!has_integer_coefficients(p)) throw std::invalid_argument("irreducible_over_Q needs integer coefficients");
    int n = p.degree();
    if (n > 6) throw std::invalid_argument("irreducible_over_Q supports degree <= 6");
    if (n < 1) return false;
    if (n == 1) return true;
    std::vector<i64> c;
    for (const auto& a : p.coeffs()) c.push_back(bmp::numerator(a.re).convert_to<i64>());
    // primitive part
    i64 g = 0;
    for (auto v : c) g = std::gcd(g, v < 0 ? -v : v);
    for (auto& v : c) v /= g;
    if (c[0] == 0) return false;  // x divides p
    // rational roots r/s with r | a0, s | an
    ExactPoly P(std::vector<GaussRat>(c.begin(), c.end()));
    for (i64 r : divisors(c[0]))
        for (i64 s : divisors(c.back()))
            for (int sg : {1, -1}) {
                GaussRat x(Q(sg * r) / Q(s));
                if (P.eval(x).is_zero()) return false;
            }
    double norm2 = 0;
    for (auto v : c) norm2 += static_cast<double>(v) * static_cast<double>(v);
    norm2 = std::sqrt(norm2);
    for (int k = 2; k <= n / 2; ++k)
        if (search_factor(c, k, norm2)) return false;
    return true;
}

std::vector<Cluster> cluster_roots(const std::vector<BigComplex>& roots, double tol) {
    std::vector<Complex<double>> z;
    for (auto& r : roots) z.push_back(to_cd(r));
    std::vector<int> owner(z.size(), -1);
    std::vector<Cluster> out;
    for (size_t i = 0; i < z.size(); ++i) {
        if (owner[i] >= 0) continue;
        owner[i] = static_cast<int>(out.size());
        Cluster c{z[i], 1};
        for (size_t j = i + 1; j < z.size(); ++j) {
            if (owner[j] >= 0) continue;
            if (abs(z[j] - z[i]) < tol) {
                owner[j] = owner[i];
                ++c.multiplicity;
            }
        }
        out.push_back(c);
    }
    // separation check: distinct clusters must be far apart relative to tol
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = i + 1; j < out.size(); ++j)
            if (abs(out[i].center - out[j].center) < 100 * tol)
                throw std::runtime_error("root clusters not separated; increase precision");
    return out;
}

}  // namespace strebel
