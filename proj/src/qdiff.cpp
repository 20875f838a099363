#include "strebel/qdiff.hpp"

#include <algorithm>

namespace strebel {

namespace {

using P = ExactPoly;

P linear(const GaussRat& p) { return P{-p, GaussRat(1)}; }

int multiplicity(P f, const GaussRat& p) {
    if (f.zero()) throw std::invalid_argument("multiplicity of a root of the zero polynomial");
    P l = linear(p);
    int m = 0;
    while (true) {
        auto [qq, r] = divmod(f, l);
        if (!r.zero()) return m;
        f = qq;
        ++m;
    }
}

// coefficients reversed as a degree-n polynomial: x^n f(1/x)
P reversed(const P& f, int n) {
    std::vector<GaussRat> c(n + 1);
    for (int k = 0; k <= f.degree(); ++k) c[n - k] = f.coeff(k);
    return P(std::move(c));
}

Residue make_residue(const GaussRat& A) {
    Residue r;
    r.squared = A;
    r.positive_real = A.im == 0 && A.re > 0;
    if (r.positive_real) {
        Z n = bmp::numerator(A.re), d = bmp::denominator(A.re);
        Z sn = bmp::sqrt(n), sd = bmp::sqrt(d);
        if (sn * sn == n && sd * sd == d) r.exact = Q(sn, sd);
    }
    PrecisionGuard g(kDefaultBits);
    r.value = to_double(abs(sqrt(from_gauss<Real>(A))));
    return r;
}

std::vector<ProjPoint> exact_double_poles(const ExactRatFunc& R) {
    std::vector<ProjPoint> out;
    for (auto& [f, m] : squarefree(R.den())) {
        if (m != 2) continue;
        for (auto& [z, mm] : gaussian_rational_roots(f)) out.push_back({z, false});
    }
    if (order_at(R, ProjPoint::infinity()) == -2) out.push_back(ProjPoint::infinity());
    return out;
}

}  // namespace

std::string to_string(const ProjPoint& p) { return p.inf ? "inf" : to_string(p.z); }

QuadDiff family(const GaussRat& lambda, const GaussRat& mu) {
    if (lambda.is_zero() || lambda == GaussRat(1)) throw DegenerateFamily("lambda must differ from 0 and 1");
    QuadDiff q;
    q.R = ExactRatFunc(family_numerator(lambda, mu), family_denominator(lambda));
    q.poles = {{GaussRat(0)}, {GaussRat(1)}, {lambda}, ProjPoint::infinity()};
    return q;
}

QuadDiff q0_prime() {
    // -(1/4pi^2) R = (1/4pi^2)/(z(1-z))  =>  R = 1/(z(z-1))
    QuadDiff q;
    q.R = ExactRatFunc(P{GaussRat(1)}, P::x() * (P::x() - P(GaussRat(1))));
    q.poles = {ProjPoint::infinity()};
    return q;
}

QuadDiff q0() {
    QuadDiff q;
    P zm1 = P::x() - P(GaussRat(1));
    q.R = ExactRatFunc(P{GaussRat(1)}, P::x() * zm1 * zm1);
    q.poles = {{GaussRat(1)}};
    return q;
}

ExactRatFunc chart_at_infinity(const ExactRatFunc& R) {
    int n = R.num().degree(), m = R.den().degree();
    if (R.zero()) return R;
    P num = reversed(R.num(), n), den = reversed(R.den(), m);
    int e = m - n - 4;
    if (e >= 0) num = num * P::monomial(GaussRat(1), e);
    else den = den * P::monomial(GaussRat(1), -e);
    return ExactRatFunc(num, den);
}

int order_at(const ExactRatFunc& R, const ProjPoint& p) {
    if (R.zero()) throw std::invalid_argument("order of the zero differential");
    if (p.inf) return R.den().degree() - R.num().degree() - 4;
    return multiplicity(R.num(), p.z) - multiplicity(R.den(), p.z);
}
int order_at(const QuadDiff& q, const ProjPoint& p) { return order_at(q.R, p); }

Residue residue_at(const QuadDiff& q, const ProjPoint& p) {
    if (p.inf) {
        QuadDiff w{chart_at_infinity(q.R), {}};
        return residue_at(w, ProjPoint{GaussRat(0)});
    }
    if (order_at(q, p) != -2) throw std::domain_error("residue_at: " + to_string(p) + " is not a double pole");
    P l = linear(p.z);
    P G = q.R.den() / (l * l);
    return make_residue(q.R.num().eval(p.z) / G.eval(p.z));
}

Residue residue_on_factor(const QuadDiff& q, const ExactPoly& F0) {
    P F = F0.monic();
    auto [G2, rem] = divmod(q.R.den(), F * F);
    if (!rem.zero() || (G2 % F).zero())
        throw std::domain_error("residue_on_factor: factor is not an exact double pole");
    P a = (G2 * F.derivative() * F.derivative()) % F;
    P g, s, t;
    xgcd(a, F, g, s, t);
    if (g.degree() != 0) throw std::domain_error("residue_on_factor: factor is not square-free");
    P r = (q.R.num() * s) % F;
    if (r.degree() > 0) throw std::domain_error("residue_on_factor: residue varies along the factor");
    return make_residue(r.coeff(0));
}

std::string to_string(ZeroPartition p) {
    switch (p) {
        case ZeroPartition::DoubleDouble: return "2+2";
        case ZeroPartition::FourSimple: return "1+1+1+1";
        default: return "other";
    }
}

GaussRat discriminant_closed_form(const GaussRat& l, const GaussRat& m) {
    GaussRat t1 = m - GaussRat(2) + GaussRat(2) * l;
    GaussRat t2 = m - GaussRat(2) - GaussRat(2) * l;
    GaussRat t3 = m + GaussRat(2) - GaussRat(2) * l;
    GaussRat lm1 = l - GaussRat(1);
    return l * l * lm1 * lm1 * t1 * t1 * t2 * t2 * t3 * t3;
}

ZeroClassification classify_zeros(const GaussRat& lambda, const GaussRat& mu) {
    if (lambda.is_zero() || lambda == GaussRat(1)) throw DegenerateFamily("lambda must differ from 0 and 1");
    P N = family_numerator(lambda, mu);
    ZeroClassification out;
    out.discriminant = discriminant(N);
    std::vector<int> mult;
    PrecisionGuard g(kDefaultBits);
    const Z max_den("1000000000000");
    for (auto& [f, m] : squarefree(N)) {
        std::vector<BigComplex> rs;
        if (f.degree() == 1) rs.push_back(from_gauss<Real>(-(f.coeff(0) / f.coeff(1))));
        else rs = roots_numeric(to_numeric<Real>(f), kDefaultBits);
        for (auto& z : rs) {
            ZeroInfo zi{z, std::nullopt, m};
            GaussRat r(rationalize(z.re, max_den), rationalize(z.im, max_den));
            if (f.eval(r).is_zero()) zi.exact = r;
            out.zeros.push_back(zi);
            mult.push_back(m);
        }
    }
    std::sort(mult.begin(), mult.end());
    if (mult == std::vector<int>{2, 2}) out.partition = ZeroPartition::DoubleDouble;
    else if (mult == std::vector<int>{1, 1, 1, 1}) out.partition = ZeroPartition::FourSimple;
    else out.partition = ZeroPartition::Other;
    return out;
}

IdentityCheck discriminant_identity_check() {
    // 21 x 21 grid; lambda = (3k-29)/6 never hits 0 or 1
    IdentityCheck c;
    for (int k = 0; k < 21; ++k) {
        GaussRat l(Q(3 * k - 29, 6));
        for (int j = 0; j < 21; ++j) {
            GaussRat m(Q(j - 10, 2));
            ++c.points;
            if (discriminant(family_numerator(l, m)) != discriminant_closed_form(l, m)) ++c.mismatches;
        }
    }
    return c;
}

GaussRat mu_double_zero(const GaussRat& lambda) {
    if (lambda.im != 0) throw std::domain_error("mu_double_zero needs real lambda");
    return GaussRat(mu_double_zero<Q>(lambda.re));
}

QuadDiff pullback(const ExactRatFunc& f, const QuadDiff& q) {
    if (f.degree() < 1) throw std::invalid_argument("pullback by a constant map");
    ExactRatFunc df = f.derivative();
    QuadDiff out;
    out.R = q.R.compose(f) * df * df;
    out.poles = exact_double_poles(out.R);
    return out;
}

ProjPoint apply(const MobiusMap& m, const ProjPoint& p) {
    if (p.inf) {
        if (m.c.is_zero()) return ProjPoint::infinity();
        return {m.a / m.c};
    }
    GaussRat den = m.c * p.z + m.d;
    if (den.is_zero()) return ProjPoint::infinity();
    return {(m.a * p.z + m.b) / den};
}

template <class S> Mobius<S> three_point_map(const S& p1, const S& p2, const S& p3) {
    return {p2 - p3, -(p1 * (p2 - p3)), p2 - p1, -(p3 * (p2 - p1))};
}
template Mobius<GaussRat> three_point_map(const GaussRat&, const GaussRat&, const GaussRat&);
template Mobius<BigComplex> three_point_map(const BigComplex&, const BigComplex&, const BigComplex&);
template Mobius<Complex<double>> three_point_map(const Complex<double>&, const Complex<double>&,
                                                 const Complex<double>&);

MobiusMap three_point_map(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3) {
    if (p1 == p2 || p1 == p3 || p2 == p3) throw std::invalid_argument("three_point_map: coincident points");
    const GaussRat one(1), zero(0);
    if (p1.inf) return {zero, p2.z - p3.z, one, -p3.z};
    if (p2.inf) return {one, -p1.z, one, -p3.z};
    if (p3.inf) return {one, -p1.z, zero, p2.z - p1.z};
    return three_point_map(p1.z, p2.z, p3.z);
}

QuadDiff mobius_apply(const MobiusMap& m, const QuadDiff& q) {
    if (m.det().is_zero()) throw std::invalid_argument("singular Moebius map");
    ExactRatFunc f = m.as_ratfunc();
    ExactRatFunc df = f.derivative();
    QuadDiff out;
    out.R = q.R.compose(f) * df * df;
    MobiusMap inv = m.inverse();
    for (auto& p : q.poles) out.poles.push_back(apply(inv, p));
    return out;
}

Normalized normalize_poles(const QuadDiff& q, const std::vector<ProjPoint>& pp) {
    if (pp.size() != 4) throw std::invalid_argument("normalize_poles needs four poles");
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j)
            if (pp[i] == pp[j]) throw std::invalid_argument("normalize_poles: coincident poles");
    MobiusMap m = three_point_map(pp[0], pp[1], pp[2]);
    Normalized out{m, mobius_apply(m.inverse(), q), apply(m, pp[3])};
    return out;
}

BigComplex cross_ratio_lambda(const BigComplex& p1, const BigComplex& p2, const BigComplex& p3,
                              const BigComplex& p4) {
    return (p4 - p1) * (p2 - p3) / ((p4 - p3) * (p2 - p1));
}

Q Divisor::degree() const {
    Q s(0);
    for (auto& e : entries) s += e.weight;
    return s;
}

Divisor divisor_of(const QuadDiff& q) {
    Divisor D;
    PrecisionGuard g(kDefaultBits);
    auto add_roots = [&](const P& f, bool is_zero, const Q& weight, const Q& angle) {
        std::vector<BigComplex> rs;
        if (f.degree() == 1) rs.push_back(from_gauss<Real>(-(f.coeff(0) / f.coeff(1))));
        else rs = roots_numeric(to_numeric<Real>(f), kDefaultBits);
        for (auto& z : rs) D.entries.push_back({is_zero, z, false, weight, angle});
    };
    for (auto& [f, m] : squarefree(q.R.num())) add_roots(f, true, Q(m, 2), Q(m + 2));
    for (auto& [f, m] : squarefree(q.R.den())) {
        if (m == 1) {
            add_roots(f, false, Q(-1, 2), Q(1));
        } else if (m == 2) {
            Residue r = residue_on_factor(q, f);
            if (!r.exact) throw std::domain_error("divisor_of: residue is not rational");
            add_roots(f, false, *r.exact - 1, 2 * *r.exact);
        } else {
            throw std::domain_error("divisor_of: pole of order > 2");
        }
    }
    int oi = order_at(q, ProjPoint::infinity());
    BigComplex zero_pt{Real(0), Real(0)};
    if (oi > 0) D.entries.push_back({true, zero_pt, true, Q(oi, 2), Q(oi + 2)});
    else if (oi == -1) D.entries.push_back({false, zero_pt, true, Q(-1, 2), Q(1)});
    else if (oi == -2) {
        Residue r = residue_at(q, ProjPoint::infinity());
        if (!r.exact) throw std::domain_error("divisor_of: residue is not rational");
        D.entries.push_back({false, zero_pt, true, *r.exact - 1, 2 * *r.exact});
    } else if (oi < -2) {
        throw std::domain_error("divisor_of: pole of order > 2");
    }
    return D;
}

}  // namespace strebel
