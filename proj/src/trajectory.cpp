#include "strebel/trajectory.hpp"

#include <algorithm>
#include <array>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/tools/toms748_solve.hpp>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace strebel {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

cd ipow(cd w, int e) {
    cd r = 1.0;
    for (int k = 0; k < std::abs(e); ++k) r *= w;
    return e < 0 ? 1.0 / r : r;
}

// square root with the cut rotated to the ray of direction theta + pi
cd rsqrt(cd w, double theta) {
    cd e = std::polar(1.0, theta);
    return std::polar(1.0, theta / 2) * std::sqrt(w / e);
}

}  // namespace

cd Field::minus_R(cd z) const {
    cd v = K;
    for (size_t k = 0; k < a.size(); ++k) v *= ipow(z - a[k], m[k]);
    return v;
}

cd Field::sqrt_minus_R(cd z, const std::vector<double>& theta) const { return sqrt_minus_R(z, 0.0, theta); }

cd Field::sqrt_minus_R(cd base, cd dz, const std::vector<double>& theta) const {
    cd v = std::sqrt(K);
    for (size_t k = 0; k < a.size(); ++k) {
        cd w = (base - a[k]) + dz;
        if (m[k] % 2 == 0) v *= ipow(w, m[k] / 2);
        else v *= rsqrt(w, theta[k]) * ipow(w, (m[k] - 1) / 2);
    }
    return v;
}

double Field::min_dist(cd z) const {
    double d = std::numeric_limits<double>::infinity();
    for (cd p : a) d = std::min(d, std::abs(z - p));
    return d;
}

cd Field::kappa(int i) const {
    cd v = K;
    for (size_t k = 0; k < a.size(); ++k)
        if (static_cast<int>(k) != i) v *= ipow(a[i] - a[k], m[k]);
    return v;
}

Field q0p_field() { return {cd(-1.0), {0.0, 1.0}, {-1, -1}}; }
Field q0_field() { return {cd(-1.0), {0.0, 1.0}, {-1, -2}}; }

// --- quadrature ------------------------------------------------------------

namespace {

using GL = boost::math::quadrature::gauss<double, 20>;

cd gl(const std::function<cd(double)>& g, double a, double b) {
    const auto& x = GL::abscissa();
    const auto& w = GL::weights();
    double c = (a + b) / 2, h = (b - a) / 2;
    cd s = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) s += w[i] * g(c);
        else s += w[i] * (g(c + h * x[i]) + g(c - h * x[i]));
    }
    return s * h;
}

cd adapt(const std::function<cd(double)>& g, double a, double b, double tol, cd whole, int depth) {
    double m = (a + b) / 2;
    cd left = gl(g, a, m), right = gl(g, m, b);
    if (std::abs(whole - (left + right)) < tol) return left + right;
    if (depth > 30) throw std::runtime_error("quadrature did not converge");
    return adapt(g, a, m, tol / 2, left, depth + 1) + adapt(g, m, b, tol / 2, right, depth + 1);
}

cd integrate01(const std::function<cd(double)>& g, double tol) { return adapt(g, 0.0, 1.0, tol, gl(g, 0.0, 1.0), 0); }

}  // namespace

Segment segment_integral(const Field& f, cd A, cd B, int end_a, int end_b, double tol) {
    cd mid = (A + B) / 2.0;
    std::vector<double> th(f.a.size(), 0.0);
    for (size_t k = 0; k < f.a.size(); ++k) {
        int ki = static_cast<int>(k);
        if (ki == end_a) th[k] = std::arg(B - A);
        else if (ki == end_b) th[k] = std::arg(A - B);
        else th[k] = std::arg(mid - f.a[k]);
    }
    auto F = [&](cd z) { return f.sqrt_minus_R(z, th); };
    // endpoint branch points are regularised by z = end + D u^2; the offset is
    // passed separately so that z - end is exact
    auto half = [&](cd E, bool singular) {
        cd D = mid - E;
        if (singular)
            return integrate01([&](double u) { return f.sqrt_minus_R(E, D * (u * u), th) * 2.0 * D * u; }, tol);
        return integrate01([&](double t) { return f.sqrt_minus_R(E, D * t, th) * D; }, tol);
    };
    Segment s;
    s.integral = (half(A, end_a >= 0) - half(B, end_b >= 0)) / kTwoPi;
    s.value_a = end_a >= 0 ? cd(0.0) : F(A);
    s.value_b = end_b >= 0 ? cd(0.0) : F(B);
    return s;
}

namespace {

void detour(cd A, cd B, const std::vector<cd>& poles, double r, int depth, std::vector<cd>& out) {
    for (cd p : poles) {
        cd d = B - A;
        double t = std::real((p - A) * std::conj(d)) / std::norm(d);
        double dist = std::abs(A + std::clamp(t, 0.0, 1.0) * d - p);
        if (dist < r && t > 0 && t < 1 && depth < 6) {
            cd W = p + cd(0, 1) * (d / std::abs(d)) * (2 * r);
            detour(A, W, poles, r, depth + 1, out);
            detour(W, B, poles, r, depth + 1, out);
            return;
        }
    }
    out.push_back(B);
}

}  // namespace

cd path_integral(const Field& f, cd A, cd B, int end_a, int end_b, double tol) {
    std::vector<cd> poles;
    for (size_t k = 0; k < f.a.size(); ++k)
        if (f.m[k] <= -2) poles.push_back(f.a[k]);
    double gap = 1.0;
    for (size_t i = 0; i < poles.size(); ++i)
        for (size_t j = i + 1; j < poles.size(); ++j) gap = std::min(gap, std::abs(poles[i] - poles[j]));
    std::vector<cd> pts{A};
    detour(A, B, poles, 0.1 * gap, 0, pts);
    for (cd p : pts)
        for (cd q : poles)
            if (std::abs(p - q) < 1e-3 * gap) throw std::runtime_error("integration path collides with a pole");
    cd total = 0.0, prev = 0.0;
    for (size_t k = 0; k + 1 < pts.size(); ++k) {
        int ea = k == 0 ? end_a : -1, eb = k + 2 == pts.size() ? end_b : -1;
        Segment s = segment_integral(f, pts[k], pts[k + 1], ea, eb, tol);
        double sign = 1;
        if (k > 0 && std::abs(s.value_a - prev) > std::abs(s.value_a + prev)) sign = -1;
        total += sign * s.integral;
        prev = sign * s.value_b;
    }
    return total;
}

// --- tracing -----------------------------------------------------------------

namespace {

namespace ode = boost::numeric::odeint;
using State = std::array<double, 2>;

struct Flow {
    const Field* f;
    cd ref;  // previous velocity, fixes the branch of the square root
    cd velocity(cd z) const {
        cd v = kTwoPi / std::sqrt(f->minus_R(z));
        return std::real(v * std::conj(ref)) < 0 ? -v : v;
    }
    void operator()(const State& x, State& dx, double) const {
        cd v = velocity({x[0], x[1]});
        dx = {v.real(), v.imag()};
    }
};

}  // namespace

TrajectoryTrace trace_trajectory(const Field& f, cd z0, cd hint, const TraceOptions& opt) {
    TrajectoryTrace tr;
    for (size_t k = 0; k < f.a.size(); ++k)
        if (static_cast<int>(k) != opt.exclude && std::abs(z0 - f.a[k]) < opt.guard)
            throw std::invalid_argument("trajectory start is at a zero or pole");
    Flow flow{&f, hint == 0.0 ? cd(1.0) : hint};
    cd v0 = kTwoPi / std::sqrt(f.minus_R(z0));
    if (hint == 0.0) flow.ref = v0;
    cd d0 = flow.velocity(z0);
    d0 /= std::abs(d0);
    flow.ref = d0;

    auto stepper = ode::make_controlled<ode::runge_kutta_dopri5<State>>(opt.atol, opt.rtol);
    State x{z0.real(), z0.imag()};
    double t = 0, dt = opt.max_step;
    double g_prev = 0;
    tr.points.push_back(z0);
    for (long step = 0; step < opt.max_steps; ++step) {
        cd z{x[0], x[1]};
        double speed = std::abs(flow.velocity(z));
        dt = std::min({dt, opt.max_step, 0.2 * f.min_dist(z) / speed});
        if (dt < 1e-15) {
            tr.diagnostic = "step size underflow";
            break;
        }
        State saved = x;
        double t_saved = t;
        cd ref_saved = flow.ref;
        if (stepper.try_step(std::ref(flow), x, t, dt) != ode::success) continue;
        cd zn{x[0], x[1]};
        flow.ref = flow.velocity(zn);
        tr.points.push_back(zn);

        double g = std::real((zn - z0) * std::conj(d0));
        cd chord = zn - z;
        double u = std::clamp(std::real((z0 - z) * std::conj(chord)) / std::norm(chord), 0.0, 1.0);
        if (opt.detect_closure && g_prev < 0 && g >= 0 && std::abs(z + u * chord - z0) < opt.closure_radius) {
            // locate the crossing with single DOPRI5 steps from the saved state
            auto at = [&](double h) {
                ode::runge_kutta_dopri5<State> rk;  // fresh: the FSAL cache must not leak between probes
                State y = saved;
                Flow fl{&f, ref_saved};
                rk.do_step(std::ref(fl), y, t_saved, h);
                return y;
            };
            auto gfun = [&](double h) {
                State y = at(h);
                return std::real((cd{y[0], y[1]} - z0) * std::conj(d0));
            };
            boost::uintmax_t iters = 100;
            auto tol = [](double a, double b) { return std::abs(a - b) < 1e-15; };
            auto [lo, hi] = boost::math::tools::toms748_solve(gfun, 0.0, t - t_saved, g_prev, g, tol, iters);
            double h = (lo + hi) / 2;
            State y = at(h);
            tr.points.back() = {y[0], y[1]};
            tr.length = t_saved + h;
            tr.closed = true;
            tr.closure_gap = std::abs(cd{y[0], y[1]} - z0);
            return tr;
        }
        g_prev = g;
        for (size_t k = 0; k < f.a.size(); ++k) {
            if (static_cast<int>(k) == opt.exclude && t < 0.01) continue;
            if (std::abs(zn - f.a[k]) < opt.guard) {
                tr.hit = static_cast<int>(k);
                tr.length = t;
                return tr;
            }
        }
    }
    tr.length = t;
    if (tr.diagnostic.empty()) tr.diagnostic = "step budget exhausted";
    return tr;
}

}  // namespace strebel
