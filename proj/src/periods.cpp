#include "strebel/periods.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>

#include "strebel/exactnum.hpp"
#include "strebel/qdiff.hpp"

namespace strebel {

namespace {

constexpr double kPi = 3.14159265358979323846;

Complex<double> to_c(cd z) { return {z.real(), z.imag()}; }
cd from_c(const Complex<double>& z) { return {z.re, z.im}; }

bool lex_less(cd a, cd b) { return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag(); }

std::vector<cd> match(const std::vector<cd>& old, std::vector<cd> fresh) {
    std::vector<cd> out;
    for (cd z : old) {
        auto it = std::min_element(fresh.begin(), fresh.end(),
                                   [&](cd a, cd b) { return std::abs(a - z) < std::abs(b - z); });
        out.push_back(*it);
        fresh.erase(it);
    }
    return out;
}

Field field_from_zeros(cd lambda, const std::vector<cd>& zeros, const std::vector<int>& mult) {
    Field f{cd(-1.0), zeros, mult};
    for (cd p : {cd(0.0), cd(1.0), lambda}) {
        f.a.push_back(p);
        f.m.push_back(-2);
    }
    return f;
}

void check_lambda(cd lambda) {
    if (std::abs(lambda) < 1e-12 || std::abs(lambda - 1.0) < 1e-12)
        throw DegenerateFamily("lambda must differ from 0 and 1");
}

}  // namespace

std::vector<cd> family_zeros(cd lambda, cd mu) {
    check_lambda(lambda);
    auto N = family_numerator<Complex<double>>(to_c(lambda), to_c(mu));
    auto dN = N.derivative();
    // companion-matrix eigenvalues stay well defined near coalescing roots
    int n = N.degree();
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(n, n);
    cd lead = from_c(N.lead());
    for (int k = 0; k < n; ++k) C(0, k) = -from_c(N.coeff(n - 1 - k)) / lead;
    for (int k = 1; k < n; ++k) C(k, k - 1) = 1.0;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
    std::vector<cd> z;
    for (int k = 0; k < n; ++k) {
        cd r = es.eigenvalues()[k];
        for (int pass = 0; pass < 3; ++pass) {
            cd v = from_c(N.eval(to_c(r))), d = from_c(dN.eval(to_c(r)));
            if (std::abs(d) == 0) break;
            cd next = r - v / d;
            if (std::abs(from_c(N.eval(to_c(next)))) >= std::abs(v)) break;
            r = next;
        }
        z.push_back(r);
    }
    std::sort(z.begin(), z.end(), lex_less);
    return z;
}

Field family_field(cd lambda, cd mu, double merge_tol) {
    std::vector<cd> z = family_zeros(lambda, mu), zs;
    std::vector<int> m;
    std::vector<char> used(z.size(), 0);
    for (size_t i = 0; i < z.size(); ++i) {
        if (used[i]) continue;
        cd sum = z[i];
        int k = 1;
        for (size_t j = i + 1; j < z.size(); ++j)
            if (!used[j] && std::abs(z[j] - z[i]) < merge_tol) {
                used[j] = 1;
                sum += z[j];
                ++k;
            }
        cd c = sum / double(k);
        if (k == 2) {
            // a double root of N is a simple root of N'
            auto N = family_numerator<Complex<double>>(to_c(lambda), to_c(mu));
            auto d1 = N.derivative(), d2 = d1.derivative();
            for (int pass = 0; pass < 4; ++pass) {
                cd dd = from_c(d2.eval(to_c(c)));
                if (std::abs(dd) == 0) break;
                c -= from_c(d1.eval(to_c(c))) / dd;
            }
        }
        zs.push_back(c);
        m.push_back(k);
    }
    return field_from_zeros(lambda, zs, m);
}

PeriodSet periods(cd lambda, cd mu, const std::vector<cd>* follow) {
    PeriodSet ps;
    ps.zeros = family_zeros(lambda, mu);
    if (follow) ps.zeros = match(*follow, ps.zeros);
    for (size_t i = 0; i < ps.zeros.size(); ++i)
        for (size_t j = i + 1; j < ps.zeros.size(); ++j)
            if (std::abs(ps.zeros[i] - ps.zeros[j]) < 1e-12) throw DegenerateFamily("q has a double zero; periods between simple zeros are undefined");
    Field f = field_from_zeros(lambda, ps.zeros, {1, 1, 1, 1});
    for (size_t k = 0; k < kZeroPairs.size(); ++k) {
        auto [i, j] = kZeroPairs[k];
        ps.P[k] = path_integral(f, ps.zeros[i], ps.zeros[j], i, j);
        ps.residual = std::max(ps.residual, std::abs(ps.P[k].imag()));
    }
    return ps;
}

double strebel_residual(cd lambda, cd mu) {
    // coalesced zeros are merged so that the exact double-zero case scores 0
    Field f = family_field(lambda, mu, 1e-6);
    int nz = 0;
    for (int m : f.m) nz += m > 0;
    if (nz == 4) return periods(lambda, mu).residual;
    double r = 0;
    for (int i = 0; i < nz; ++i)
        for (int j = i + 1; j < nz; ++j) r = std::max(r, std::abs(path_integral(f, f.a[i], f.a[j], i, j).imag()));
    return r;
}

namespace {

struct NewtonOut {
    cd mu;
    PeriodSet ps;
    int iterations;
};

NewtonOut newton(cd lambda, cd mu, double tol) {
    for (int it = 0; it < 60; ++it) {
        PeriodSet ps = periods(lambda, mu);
        if (ps.residual < tol) return {mu, ps, it};
        double h = 1e-7 * std::max(1.0, std::abs(mu));
        // J[k] = d Im P_k / d(Re mu, Im mu)
        std::array<Eigen::Vector2d, 6> J;
        for (int c = 0; c < 2; ++c) {
            cd dmu = c == 0 ? cd(h, 0) : cd(0, h);
            PeriodSet p2 = periods(lambda, mu + dmu, &ps.zeros);
            for (int k = 0; k < 6; ++k) {
                cd a = p2.P[k];
                if (std::abs(a + ps.P[k]) < std::abs(a - ps.P[k])) a = -a;
                J[k][c] = (a - ps.P[k]).imag() / h;
            }
        }
        // the two rows with the best-conditioned 2x2 system
        double best = -1;
        Eigen::Matrix2d A;
        Eigen::Vector2d F;
        for (int x = 0; x < 6; ++x)
            for (int y = x + 1; y < 6; ++y) {
                double d = std::abs(J[x][0] * J[y][1] - J[x][1] * J[y][0]) / (J[x].norm() * J[y].norm() + 1e-300);
                if (d > best) {
                    best = d;
                    A.row(0) = J[x].transpose();
                    A.row(1) = J[y].transpose();
                    F = {ps.P[x].imag(), ps.P[y].imag()};
                }
            }
        Eigen::Vector2d dx = A.fullPivLu().solve(-F);
        cd step(dx[0], dx[1]);
        if (!std::isfinite(dx[0]) || !std::isfinite(dx[1])) throw NewtonDivergence("singular Newton system");
        double t = 1.0;
        while (t > 1e-3) {
            try {
                if (periods(lambda, mu + t * step).residual < ps.residual) break;
            } catch (const std::exception&) {
            }
            t /= 2;
        }
        mu += t * step;
    }
    throw NewtonDivergence("Newton iteration for mu did not converge; seed closer or continue along a homotopy in lambda");
}

cd closed_form_seed(double re) {
    if (std::abs(re) < 1e-6 || std::abs(re - 1) < 1e-6) re += 1e-3;
    return mu_double_zero(re);
}

FindMuResult homotopy(cd lambda, int steps, double tol) {
    double a = lambda.real();
    cd mu = closed_form_seed(a);
    std::optional<cd> prev;
    FindMuResult r;
    for (int k = 1; k <= steps; ++k) {
        cd l(a, lambda.imag() * k / steps);
        cd seed = prev ? 2.0 * mu - *prev : mu;
        NewtonOut n = newton(l, seed, tol);
        prev = mu;
        mu = n.mu;
        r.iterations += n.iterations;
        r.periods = n.ps;
    }
    r.mu = mu;
    r.residual = r.periods.residual;
    r.homotopy_steps = steps;
    return r;
}

}  // namespace

FindMuResult find_mu(cd lambda, std::optional<cd> seed, double tol) {
    check_lambda(lambda);
    if (seed || lambda.imag() == 0) {
        cd s = seed ? *seed : mu_double_zero(lambda.real()) + cd(0.1, 0.05);
        NewtonOut n = newton(lambda, s, tol);
        return {n.mu, n.ps.residual, n.iterations, 0, n.ps};
    }
    try {
        return homotopy(lambda, 8, tol);
    } catch (const std::exception&) {
        return homotopy(lambda, 32, tol);
    }
}

EdgeLengths edge_lengths(cd lambda, cd mu) {
    EdgeLengths out;
    out.zeros = family_zeros(lambda, mu);
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j)
            if (std::abs(out.zeros[i] - out.zeros[j]) < 1e-6)
                throw DegenerateFamily("double zero: the critical graph is the two-vertex graph, use the arc-length parametrisation");
    Field f = field_from_zeros(lambda, out.zeros, {1, 1, 1, 1});
    double gap = std::min({std::abs(lambda), std::abs(lambda - 1.0), 1.0});
    for (int i = 0; i < 4; ++i) {
        double zgap = gap;
        for (int j = 0; j < 4; ++j)
            if (j != i) zgap = std::min(zgap, std::abs(out.zeros[i] - out.zeros[j]));
        double r0 = std::min(1e-3, 0.05 * zgap);
        cd kap = f.kappa(i);
        for (int k = 0; k < 3; ++k) {
            double th = (-std::arg(kap) + 2 * kPi * k) / 3;
            cd dir = std::polar(1.0, th);
            cd x = out.zeros[i] + r0 * dir;
            double len = std::abs(segment_integral(f, out.zeros[i], x, i, -1).integral);
            TraceOptions opt;
            opt.detect_closure = false;
            opt.exclude = i;
            opt.guard = std::min(2e-3, 0.1 * zgap);
            TrajectoryTrace tr = trace_trajectory(f, x, dir, opt);
            if (tr.hit < 0 || tr.hit >= 4)
                throw std::runtime_error("critical trajectory did not end at a zero (" + tr.diagnostic + ")");
            len += tr.length + std::abs(segment_integral(f, tr.points.back(), out.zeros[tr.hit], -1, tr.hit).integral);
            out.traces.push_back({i, tr.hit, len});
        }
    }
    std::array<int, 6> count{};
    for (auto& e : out.traces) {
        int a = std::min(e.from, e.to), b = std::max(e.from, e.to);
        for (size_t k = 0; k < 6; ++k)
            if (kZeroPairs[k] == std::make_pair(a, b)) {
                out.pair[k] += e.length;
                ++count[k];
            }
    }
    for (size_t k = 0; k < 6; ++k) {
        if (count[k] != 2) throw std::runtime_error("critical graph is not K4");
        out.pair[k] /= 2;
    }
    out.abc = {(out.pair[0] + out.pair[5]) / 2, (out.pair[1] + out.pair[4]) / 2, (out.pair[2] + out.pair[3]) / 2};
    return out;
}

double arc_length_formula(double l) {
    if (!(l >= 0.5 && l < 1)) throw std::domain_error("arc length formula needs lambda0 in [1/2, 1)");
    return std::asin(2 * l - 1) / kPi;
}

double arc_length_oracle(double l) {
    if (!(l >= 0.5 && l < 1)) throw std::domain_error("arc length formula needs lambda0 in [1/2, 1)");
    double top = (2 * l - 1) * (2 * l - 1);
    if (top == 0) return 0;
    boost::math::quadrature::tanh_sinh<double> ts;
    return ts.integrate([](double z) { return 1 / (2 * kPi * std::sqrt(z * (1 - z))); }, 0.0, top);
}

ArcLengthNumeric arc_length_numeric(double l) {
    if (!(l > 0 && l < 1)) throw std::domain_error("double zeros are complex conjugate only for lambda in (0,1)");
    // mu = 2 - 2 lambda: N = (z^2 - 2 lambda z + lambda)^2, double zeros lambda +- i sqrt(lambda - lambda^2)
    double w = std::sqrt(l - l * l);
    std::vector<cd> z{cd(l, -w), cd(l, w)};
    Field f = field_from_zeros(l, z, {2, 2});
    ArcLengthNumeric r;
    r.period = path_integral(f, z[0], z[1], 0, 1);
    double p = std::abs(r.period);
    r.s = 0.5 - std::min(p, 1 - p);
    return r;
}

}  // namespace strebel
