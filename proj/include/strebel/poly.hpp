#pragma once
// Dense univariate polynomials and rational functions, templated on the
// coefficient scalar. Exact division/gcd assume the scalar is a field.

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "strebel/complex.hpp"

namespace strebel {

template <class S> bool is_zero(const S& s) { return s == 0; }
template <class T> bool is_zero(const Complex<T>& s) { return s.is_zero(); }

template <class S>
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<S> c) : c_(c) { trim(); }
    explicit Poly(std::vector<S> c) : c_(std::move(c)) { trim(); }
    Poly(const S& constant) : c_{constant} { trim(); }

    static Poly x() { return Poly(std::vector<S>{S(0), S(1)}); }
    static Poly monomial(const S& a, int k) {
        std::vector<S> c(k + 1, S(0));
        c[k] = a;
        return Poly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool zero() const { return c_.empty(); }
    const S& lead() const { return c_.back(); }
    const std::vector<S>& coeffs() const { return c_; }
    S coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : S(0); }

    template <class X> X eval(const X& x) const {
        X r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + X(*it);
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
        for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
        for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    Poly operator-() const {
        Poly r = *this;
        for (auto& a : r.c_) a = -a;
        return r;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.zero() || b.zero()) return Poly();
        std::vector<S> r(a.c_.size() + b.c_.size() - 1, S(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend Poly operator*(const S& s, Poly p) {
        for (auto& a : p.c_) a = s * a;
        p.trim();
        return p;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<S> r(c_.size() - 1);
        for (size_t k = 1; k < c_.size(); ++k) r[k - 1] = S(static_cast<long>(k)) * c_[k];
        return Poly(std::move(r));
    }

    // p(q(x)) by Horner
    Poly compose(const Poly& q) const {
        Poly r;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q + Poly(*it);
        return r;
    }

    Poly monic() const {
        if (zero()) return *this;
        S inv = S(1) / lead();
        return inv * *this;
    }

    Poly pow(unsigned e) const {
        Poly r(S(1)), b = *this;
        while (e) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }

    // f(x) -> f(x^k)
    Poly inflate(int k) const {
        if (zero()) return *this;
        std::vector<S> r(degree() * k + 1, S(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
        return Poly(std::move(r));
    }

    template <class F> auto map(F&& f) const {
        using T = decltype(f(std::declval<S>()));
        std::vector<T> r;
        r.reserve(c_.size());
        for (const auto& a : c_) r.push_back(f(a));
        return Poly<T>(std::move(r));
    }

private:
    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }
    std::vector<S> c_;
};

struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
};

// Euclidean division over a field: a = q*b + r, deg r < deg b.
template <class S>
std::pair<Poly<S>, Poly<S>> divmod(const Poly<S>& a, const Poly<S>& b) {
    if (b.zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<S> r = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {Poly<S>(), a};
    std::vector<S> q(a.degree() - db + 1, S(0));
    S inv = S(1) / b.lead();
    for (int k = a.degree(); k >= db; --k) {
        if (is_zero(r[k])) continue;
        S t = r[k] * inv;
        q[k - db] = t;
        for (int j = 0; j <= db; ++j) r[k - db + j] -= t * b.coeffs()[j];
    }
    r.resize(db);
    return {Poly<S>(std::move(q)), Poly<S>(std::move(r))};
}

template <class S> Poly<S> operator/(const Poly<S>& a, const Poly<S>& b) { return divmod(a, b).first; }
template <class S> Poly<S> operator%(const Poly<S>& a, const Poly<S>& b) { return divmod(a, b).second; }

// Monic gcd; gcd(0,0) = 0.
template <class S> Poly<S> gcd(Poly<S> a, Poly<S> b) {
    while (!b.zero()) {
        Poly<S> r = a % b;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

// Extended gcd: s*a + t*b = g (monic).
template <class S>
void xgcd(const Poly<S>& a, const Poly<S>& b, Poly<S>& g, Poly<S>& s, Poly<S>& t) {
    Poly<S> r0 = a, r1 = b, s0(S(1)), s1, t0, t1(S(1));
    while (!r1.zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1); r1 = std::move(r);
        Poly<S> s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.zero()) { g = r0; s = s0; t = t0; return; }
    S inv = S(1) / r0.lead();
    g = inv * r0; s = inv * s0; t = inv * t0;
}

// Resultant over a field via the Euclidean remainder sequence.
template <class S> S resultant(Poly<S> a, Poly<S> b) {
    if (a.zero() || b.zero()) return S(0);
    S res(1);
    while (true) {
        int da = a.degree(), db = b.degree();
        if (db == 0) {
            S p(1);
            for (int k = 0; k < da; ++k) p *= b.lead();
            return res * p;
        }
        Poly<S> r = a % b;
        if (r.zero()) return S(0);
        int dr = r.degree();
        if ((da % 2 == 1) && (db % 2 == 1)) res = -res;
        for (int k = 0; k < da - dr; ++k) res *= b.lead();
        a = std::move(b);
        b = std::move(r);
    }
}

// disc(p) = (-1)^{n(n-1)/2} res(p, p') / lc(p)
template <class S> S discriminant(const Poly<S>& p) {
    int n = p.degree();
    if (n < 2) throw std::invalid_argument("discriminant needs degree >= 2");
    S r = resultant(p, p.derivative()) / p.lead();
    if ((n * (n - 1) / 2) % 2 == 1) r = -r;
    return r;
}

// Yun's square-free decomposition (characteristic 0): p = c * prod f_i^i.
// Returns (f_i, i) with f_i monic and non-constant.
template <class S> std::vector<std::pair<Poly<S>, int>> squarefree(const Poly<S>& p) {
    std::vector<std::pair<Poly<S>, int>> out;
    if (p.degree() < 1) return out;
    Poly<S> dp = p.derivative();
    Poly<S> a = gcd(p, dp);
    Poly<S> b = p / a, c = dp / a;
    int i = 1;
    while (b.degree() > 0) {
        Poly<S> d = c - b.derivative();
        Poly<S> g = gcd(b, d);
        if (g.degree() > 0) out.push_back({g.monic(), i});
        b = b / g;
        c = d / g;
        ++i;
    }
    return out;
}

template <class S>
class RatFunc {
public:
    RatFunc() : num_(), den_(S(1)) {}
    RatFunc(const Poly<S>& n) : num_(n), den_(S(1)) {}
    RatFunc(const S& c) : num_(c), den_(S(1)) {}
    // reduced, denominator monic
    RatFunc(const Poly<S>& n, const Poly<S>& d) : num_(n), den_(d) { normalize(); }

    // no gcd reduction (numeric coefficient types)
    static RatFunc raw(Poly<S> n, Poly<S> d) {
        RatFunc r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        if (r.den_.zero()) throw DivisionByZero("rational function with zero denominator");
        return r;
    }
    static RatFunc x() { return RatFunc(Poly<S>::x()); }

    const Poly<S>& num() const { return num_; }
    const Poly<S>& den() const { return den_; }
    int degree() const { return std::max(num_.degree(), den_.degree()); }
    bool zero() const { return num_.zero(); }

    template <class X> X eval(const X& x) const { return num_.eval(x) / den_.eval(x); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.zero()) throw DivisionByZero("rational function division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc operator-() const { return raw(-num_, den_); }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc derivative() const {
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    // this(g(x)), homogenized: N(P/Q) = sum n_i P^i Q^{m-i} / Q^m
    RatFunc compose(const RatFunc& g) const {
        auto [n, d] = compose_parts(g);
        return RatFunc(n, d);
    }
    std::pair<Poly<S>, Poly<S>> compose_parts(const RatFunc& g) const {
        int m = degree();
        std::vector<Poly<S>> pp(m + 1), qq(m + 1);
        pp[0] = Poly<S>(S(1));
        qq[0] = Poly<S>(S(1));
        for (int k = 1; k <= m; ++k) {
            pp[k] = pp[k - 1] * g.num_;
            qq[k] = qq[k - 1] * g.den_;
        }
        Poly<S> n, d;
        for (int i = 0; i <= num_.degree(); ++i) n += num_.coeff(i) * (pp[i] * qq[m - i]);
        for (int i = 0; i <= den_.degree(); ++i) d += den_.coeff(i) * (pp[i] * qq[m - i]);
        return {n, d};
    }

private:
    void normalize() {
        if (den_.zero()) throw DivisionByZero("rational function with zero denominator");
        if (num_.zero()) { den_ = Poly<S>(S(1)); return; }
        Poly<S> g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        S inv = S(1) / den_.lead();
        num_ = inv * num_;
        den_ = inv * den_;
    }
    Poly<S> num_, den_;
};

}  // namespace strebel
