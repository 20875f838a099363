#include "strebel/belyi.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace strebel {

namespace {

using P = ExactPoly;

GaussRat gq(long n, long d = 1) { return GaussRat(Q(n, d)); }

void add_multiplicities(const P& F, std::vector<int>& out) {
    for (auto& [f, m] : squarefree(F))
        for (int k = 0; k < f.degree(); ++k) out.push_back(m);
}

template <class T> CPoly<T> trimmed(const CPoly<T>& p, const T& rel) {
    T mx(0);
    for (auto& c : p.coeffs()) mx = std::max(mx, abs(c));
    std::vector<Complex<T>> c = p.coeffs();
    while (!c.empty() && abs(c.back()) <= rel * mx) c.pop_back();
    return CPoly<T>(std::move(c));
}

std::vector<int> numeric_fiber(const CPoly<Real>& F, int deg_f, const Real& rel) {
    CPoly<Real> G = trimmed(F, rel);
    std::vector<int> out;
    if (G.degree() >= 1) {
        std::vector<BigComplex> rs = aberth<Real>(G, Real(1e-14), 4000);
        for (auto& c : cluster_roots(rs, 1e-7)) out.push_back(c.multiplicity);
    }
    if (deg_f > G.degree()) out.push_back(deg_f - G.degree());
    std::sort(out.begin(), out.end());
    return out;
}

bool belyi_count(Passport& p) {
    int s = 0;
    for (auto* v : {&p.over0, &p.over1, &p.overInf})
        for (int e : *v) s += e - 1;
    return s == 2 * p.degree - 2;
}

}  // namespace

std::string to_string(const std::vector<int>& partition) {
    std::ostringstream os;
    os << '(';
    for (size_t k = 0; k < partition.size(); ++k) os << (k ? "," : "") << partition[k];
    os << ')';
    return os.str();
}

std::string to_string(const Passport& p) {
    return to_string(p.over0) + "/" + to_string(p.over1) + "/" + to_string(p.overInf);
}

std::vector<int> fiber(const RationalMap& f, const ProjPoint& v) {
    int d = f.degree();
    if (d < 1) throw std::invalid_argument("fiber of a constant map");
    std::vector<int> out;
    if (v.inf) {
        add_multiplicities(f.den(), out);
        int e = f.num().degree() - f.den().degree();
        if (e > 0) out.push_back(e);
    } else {
        P F = f.num() - v.z * f.den();
        add_multiplicities(F, out);
        int e = d - F.degree();
        if (e > 0) out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Passport passport(const RationalMap& f) {
    Passport p;
    p.degree = f.degree();
    p.over0 = fiber(f, {GaussRat(0)});
    p.over1 = fiber(f, {GaussRat(1)});
    p.overInf = fiber(f, ProjPoint::infinity());
    p.is_belyi = belyi_count(p);
    return p;
}

Passport passport_numeric(const CPoly<Real>& num0, const CPoly<Real>& den0, unsigned bits) {
    PrecisionGuard g(bits);
    Real rel = bmp::ldexp(Real(1), 32 - static_cast<int>(bits));
    CPoly<Real> num = trimmed(num0, rel), den = trimmed(den0, rel);
    Passport p;
    p.degree = std::max(num.degree(), den.degree());
    p.over0 = numeric_fiber(num, p.degree, rel);
    p.over1 = numeric_fiber(num - den, p.degree, rel);
    p.overInf = numeric_fiber(den, p.degree, rel);
    p.is_belyi = belyi_count(p);
    return p;
}

RationalMap theta_S() {
    P x = P::x(), x3 = P::monomial(GaussRat(1), 3);
    P x3m1 = x3 - P(GaussRat(1));
    P b = gq(8) * x3 + P(GaussRat(1));
    return RationalMap(gq(-64) * x3 * x3m1.pow(3), b.pow(3));
}

RationalMap catalog(const std::string& name) {
    P x = P::x();
    if (name == "case1") return RationalMap(P::monomial(GaussRat(1), 4));
    if (name == "phi_case1")  // (1 - (1-i)x)/(-1 + (1+i)x)
        return RationalMap(P{GaussRat(1), GaussRat(-1, 1)}, P{GaussRat(-1), GaussRat(1, 1)});
    if (name == "phi") return RationalMap(x, x - P(GaussRat(1)));
    if (name == "deg8") {
        P xm1 = x - P(GaussRat(1)), xp1 = x + P(GaussRat(1));
        P quad{gq(9), gq(14), gq(9)};
        return RationalMap(gq(-1, 4096) * xm1 * xm1 * quad.pow(3), x.pow(3) * xp1 * xp1);
    }
    if (name == "deg12theta") {  // f/(f-1) = S  =>  f = S/(S-1)
        RationalMap S = theta_S();
        return S / (S - RationalMap(GaussRat(1)));
    }
    if (name == "deg12theta-literal") {  // f/(1+f) = S  =>  f = S/(1-S)
        RationalMap S = theta_S();
        return S / (RationalMap(GaussRat(1)) - S);
    }
    throw std::invalid_argument("unknown catalog map '" + name + "'");
}

std::vector<std::string> catalog_names() {
    return {"case1", "phi_case1", "phi", "deg8", "deg12theta", "deg12theta-literal"};
}

QuadDiff catalog_qdiff(const std::string& name) {
    if (name == "q0") return q0();
    if (name == "q0p") return q0_prime();
    throw std::invalid_argument("unknown differential '" + name + "'");
}

Case2Result case2_from_c2(const GaussRat& c2) {
    if (c2.is_zero()) throw std::domain_error("case2: c must be nonzero");
    GaussRat disc = GaussRat(1) - gq(16) * c2;
    if (disc.is_zero()) throw std::domain_error("case2: 16c^2 = 1 is degenerate");
    Case2Result r;
    r.c2 = c2;
    P x = P::x(), xm1 = x - P(GaussRat(1));
    r.f = RationalMap((GaussRat(1) / c2) * x * x * xm1 * xm1);
    // lambda = (1 + s)/(2 s), s = sqrt(1 - 16 c^2)
    if (auto s = exact_sqrt(disc)) {
        GaussRat l = (GaussRat(1) + *s) / (GaussRat(2) * *s);
        r.lambda_exact = l;
        r.mu_exact = GaussRat(2) - GaussRat(2) * l;
        r.lambda = to_big(l);
        r.mu = to_big(*r.mu_exact);
    } else {
        PrecisionGuard g(kDefaultBits);
        BigComplex sq = sqrt(to_big(disc));
        r.lambda = (BigComplex(1) + sq) / (BigComplex(2) * sq);
        r.mu = BigComplex(2) - BigComplex(2) * r.lambda;
    }
    return r;
}

Case2Result case2(const GaussRat& c) { return case2_from_c2(c * c); }

RationalMap compose_square(const RationalMap& g) {
    return RationalMap(g.num().inflate(2), g.den().inflate(2));
}

std::optional<RationalMap> is_even(const RationalMap& f) {
    auto even_part = [](const P& p) -> std::optional<P> {
        std::vector<GaussRat> c;
        for (int k = 0; k <= p.degree(); ++k) {
            if (k % 2 == 1) {
                if (!p.coeff(k).is_zero()) return std::nullopt;
            } else {
                c.push_back(p.coeff(k));
            }
        }
        return P(std::move(c));
    };
    auto n = even_part(f.num()), d = even_part(f.den());
    if (!n || !d) return std::nullopt;
    return RationalMap(*n, *d);
}

MinDegreeResult min_degree(const Q& a, const Q& b, const Q& c) {
    if (a <= 0 || b <= 0 || c <= 0) throw std::domain_error("min_degree: a, b, c must be positive");
    if (a + b + c != 1) throw std::domain_error("min_degree: a + b + c must equal 1");
    Z d = bmp::lcm(bmp::lcm(bmp::denominator(a), bmp::denominator(b)), bmp::denominator(c));
    Z da = bmp::numerator(a) * (d / bmp::denominator(a));
    Z db = bmp::numerator(b) * (d / bmp::denominator(b));
    Z dc = bmp::numerator(c) * (d / bmp::denominator(c));
    // a common factor k would make d/k a smaller common denominator
    if (bmp::gcd(bmp::gcd(da, db), dc) != 1) throw std::logic_error("min_degree: gcd(da,db,dc) != 1");
    MinDegreeResult r;
    r.d = d.convert_to<long>();
    r.even = r.d % 2 == 0;
    r.min_degree = r.even ? 2 * r.d : 4 * r.d;
    return r;
}

bool Deg8Report::ok() const {
    return f_minus_one_identity && pullback_matches && pass.is_belyi && pass.over0 == std::vector<int>{2, 3, 3} &&
           pass.over1 == std::vector<int>{2, 2, 2, 2} && pass.overInf == std::vector<int>{2, 3, 3} &&
           residue_before == 2 && residue_after == 1;
}

Deg8Report verify_deg8() {
    Deg8Report r;
    RationalMap f = catalog("deg8");
    P x = P::x(), xp1 = x + P(GaussRat(1));
    P quart{gq(27), gq(36), gq(2), gq(36), gq(27)};
    P quad{gq(9), gq(14), gq(9)};
    RationalMap expect(-(quart * quart), gq(4096) * x.pow(3) * xp1 * xp1);
    r.f_minus_one_identity = (f - RationalMap(GaussRat(1))) == expect;
    r.pass = passport(f);
    QuadDiff pb = pullback(f, q0());
    // the printed form +(1/4pi^2) 4096x(...)/(...)^2 means R = -4096x(...)/(...)^2
    r.pullback_matches = pb.R == RationalMap(gq(-4096) * x * quad, quart * quart);
    r.residue_before = residue_on_factor(pb, quart).exact.value_or(Q(-1));
    QuadDiff q1{RationalMap(gq(1, 4)) * pb.R, {}};
    r.residue_after = residue_on_factor(q1, quart).exact.value_or(Q(-1));
    return r;
}

ExactPoly example43_polynomial() { return P{gq(1), gq(6), gq(15), gq(36), gq(15), gq(6), gq(1)}; }

std::vector<BigComplex> example43_roots(unsigned bits) {
    PrecisionGuard g(bits);
    Real c = bmp::cbrt(Real(2));
    Real s3 = bmp::sqrt(Real(3));
    BigComplex ci{Real(0), c * s3};
    BigComplex two(2), cc{c, Real(0)};
    BigComplex t0 = (BigComplex(-2) + cc + ci - sqrt(BigComplex(-4) + (two - cc - ci) * (two - cc - ci))) / two;
    BigComplex t2 = (BigComplex(-2) + cc - ci - sqrt(BigComplex(-4) + (two - cc + ci) * (two - cc + ci))) / two;
    Real t1 = -1 - c - c * bmp::sqrt(1 + c * c);
    return {t0, BigComplex(t1), t2};
}

std::vector<Example43Root> example43_solve(unsigned bits) {
    PrecisionGuard guard(bits);
    using C = BigComplex;
    using CP = CPoly<Real>;
    std::vector<Example43Root> out;
    auto roots = example43_roots(bits);
    const char* labels[] = {"t0", "t1", "t2"};
    for (int k = 0; k < 3; ++k) {
        Example43Root r;
        r.label = labels[k];
        C t = roots[k];
        C t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t;
        r.a5 = t;
        r.a1 = (C(1) + C(10) * t + C(35) * t2 + C(15) * t3 + C(6) * t4 + t5) / C(-2);
        r.a2 = (C(7) + C(16) * t + C(35) * t2 + C(15) * t3 + C(6) * t4 + t5) / C(4);
        r.a3 = (C(21) + C(45) * t + C(166) * t2 + C(70) * t3 + C(29) * t4 + C(5) * t5) / C(16);
        r.a4 = (C(3) * t - C(61) * t2 - C(25) * t3 - C(11) * t4 - C(2) * t5) / C(20);
        CP Pt = to_numeric<Real>(example43_polynomial());
        r.p_residual = abs(Pt.eval(t));

        CP x = CP::x();
        auto L = [&](const C& a) { return x - CP(a); };
        CP gn = x * x * x * L(r.a1) * L(r.a2) * L(r.a2);
        CP gd = L(r.a3) * L(r.a4) * L(r.a4);
        auto geval = [&](const C& z) { return gn.eval(z) / gd.eval(z); };
        C g1 = geval(C(1));
        r.g_residual = abs(g1 - geval(t));

        const C &a1 = r.a1, &a2 = r.a2, &a3 = r.a3, &a4 = r.a4;
        CP h{C(3) * a1 * a2 * a3 * a4,
             -(a1 * a2 * a3 + C(2) * a1 * a2 * a4 + C(5) * a1 * a3 * a4 + C(4) * a2 * a3 * a4),
             C(3) * a1 * a3 + C(2) * a2 * a3 + C(4) * a1 * a4 + C(3) * a2 * a4 + C(6) * a3 * a4,
             -(C(2) * a1 + a2 + C(4) * a3 + C(5) * a4), C(3)};
        CP h2 = C(3) * L(C(1)) * L(C(1)) * L(t) * L(t);
        r.h_residual = 0;
        for (int i = 0; i <= 4; ++i) r.h_residual = std::max(r.h_residual, abs(h.coeff(i) - h2.coeff(i)));

        // f = (g/g(1)) o psi o x^2, psi(y) = (a3 y + a1)/(y + 1)
        auto G = RatFunc<C>::raw((C(1) / g1) * gn, gd);
        auto psi = RatFunc<C>::raw(CP{a1, a3}, CP{C(1), C(1)});
        auto [fn, fd] = G.compose_parts(psi);
        r.f_passport = passport_numeric(fn.inflate(2), fd.inflate(2), bits);

        auto psi_inv = [&](const C& w) { return (w - a1) / (a3 - w); };
        C s1 = sqrt(psi_inv(C(1))), s5 = sqrt(psi_inv(t));
        r.poles = {s1, s5, -s1, -s5};
        C z0 = sqrt(-(a1 / a3));
        r.zeros = {z0, -z0, C{Real(0), Real(1)}, C{Real(0), Real(-1)}};

        // normalized differential: poles to 0, 1, inf, lambda; its numerator is
        // monic with roots m(zeros), so its z^3 coefficient mu - 2(lambda+1)
        // equals -sum m(z_j)
        auto m = three_point_map(r.poles[0], r.poles[1], r.poles[2]);
        auto mob = [&](const C& z) { return (m.a * z + m.b) / (m.c * z + m.d); };
        r.lambda = mob(r.poles[3]);
        C sum(0);
        for (auto& z : r.zeros) sum += mob(z);
        r.mu = C(2) * (r.lambda + C(1)) - sum;
        const C& l = r.lambda;
        r.lambda_orbit = {l, C(1) - l, C(1) / l, C(1) / (C(1) - l), l / (l - C(1)), (l - C(1)) / l};
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace strebel
