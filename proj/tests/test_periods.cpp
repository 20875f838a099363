#include <cmath>

#include "doctest.h"
#include "strebel/periods.hpp"
#include "strebel/trajectory.hpp"

using namespace strebel;

namespace {

constexpr double kPi = 3.14159265358979323846;

double seg_dist(cd p, cd a, cd b) {
    cd d = b - a;
    double t = std::clamp(std::real((p - a) * std::conj(d)) / std::norm(d), 0.0, 1.0);
    return std::abs(a + t * d - p);
}

// (1/2pi) int_A^B sqrt(-R) dz by the trapezoid rule after t = (1 - cos pi s)/2,
// following the square root by continuity from A to B
cd trapezoid_period(const Field& f, cd A, cd B, int n) {
    cd sum = 0.0, prev = 0.0;
    for (int k = 1; k < n; ++k) {
        double s = static_cast<double>(k) / n;
        double t = (1 - std::cos(kPi * s)) / 2, dt = kPi / 2 * std::sin(kPi * s);
        cd v = std::sqrt(f.minus_R(A + t * (B - A)));
        if (k > 1 && std::abs(v - prev) > std::abs(v + prev)) v = -v;
        prev = v;
        sum += v * dt;
    }
    return sum * (B - A) / static_cast<double>(n) / (2 * kPi);
}

// integral A -> W -> B with the sign matched at W
cd bent_period(const Field& f, cd A, cd W, cd B, int ia, int ib) {
    Segment s1 = segment_integral(f, A, W, ia, -1), s2 = segment_integral(f, W, B, -1, ib);
    double sign = std::abs(s2.value_a - s1.value_b) < std::abs(s2.value_a + s1.value_b) ? 1 : -1;
    return s1.integral + sign * s2.integral;
}

// distance of x from the nearest integer
double frac_dist(double x) { return std::abs(x - std::round(x)); }

}  // namespace

TEST_CASE("slit period of q0'") {
    cd p = path_integral(q0p_field(), 0.0, 1.0, 0, 1);
    CHECK(std::abs(p) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("straight periods against a trapezoid oracle") {
    cd lambda(2.0, 1.0), mu(1.0, 0.0);
    Field f = family_field(lambda, mu);
    auto z = family_zeros(lambda, mu);
    int compared = 0;
    for (auto [i, j] : kZeroPairs) {
        bool clear = true;
        for (cd p : {cd(0), cd(1), lambda}) clear = clear && seg_dist(p, z[i], z[j]) > 0.3;
        for (size_t k = 0; k < z.size(); ++k)
            if (static_cast<int>(k) != i && static_cast<int>(k) != j) clear = clear && seg_dist(z[k], z[i], z[j]) > 0.1;
        if (!clear) continue;
        int ia = -1, ib = -1;
        for (size_t k = 0; k < f.a.size(); ++k) {
            if (f.a[k] == z[i]) ia = static_cast<int>(k);
            if (f.a[k] == z[j]) ib = static_cast<int>(k);
        }
        REQUIRE(ia >= 0);
        REQUIRE(ib >= 0);
        cd p = path_integral(f, z[i], z[j], ia, ib);
        cd o = trapezoid_period(f, z[i], z[j], 4000);
        CHECK(std::min(std::abs(p - o), std::abs(p + o)) < 1e-9);
        ++compared;
    }
    CHECK(compared > 0);
}

TEST_CASE("imaginary parts do not depend on the path") {
    // sweeping the path across double poles (real residues) changes only Re P,
    // by integers; the swept triangle must not contain another zero
    cd lambda(0.75, 0.0), mu(0.5, 0.3);
    Field f = family_field(lambda, mu);
    auto z = family_zeros(lambda, mu);
    auto index = [&](cd p) {
        for (size_t k = 0; k < f.a.size(); ++k)
            if (f.a[k] == p) return static_cast<int>(k);
        return -1;
    };
    auto inside = [](cd p, cd a, cd b, cd c) {
        auto side = [](cd u, cd v, cd w) { return std::imag(std::conj(v - u) * (w - u)); };
        double d1 = side(a, b, p), d2 = side(b, c, p), d3 = side(c, a, p);
        return (d1 > 0 && d2 > 0 && d3 > 0) || (d1 < 0 && d2 < 0 && d3 < 0);
    };
    int compared = 0;
    for (auto [i, j] : kZeroPairs)
        for (cd w : {cd(0.4, 2.0), cd(0.4, -2.0), cd(-1.5, 0.3), cd(2.5, 0.1), cd(0.5, 0.9), cd(0.5, -0.9)}) {
            bool ok = true;
            int poles = 0;
            for (size_t k = 0; k < f.a.size(); ++k) {
                if (f.a[k] == z[i] || f.a[k] == z[j]) continue;
                bool in = inside(f.a[k], z[i], w, z[j]);
                if (f.m[k] > 0 && in) ok = false;
                if (f.m[k] < 0 && in) ++poles;
                ok = ok && seg_dist(f.a[k], z[i], w) > 0.05 && seg_dist(f.a[k], w, z[j]) > 0.05 &&
                     seg_dist(f.a[k], z[i], z[j]) > 0.05;
            }
            if (!ok || poles == 0) continue;
            cd direct = path_integral(f, z[i], z[j], index(z[i]), index(z[j]));
            cd bent = bent_period(f, z[i], w, z[j], index(z[i]), index(z[j]));
            CHECK(std::abs(std::abs(bent.imag()) - std::abs(direct.imag())) < 1e-9);
            CHECK(std::min(frac_dist(bent.real() - direct.real()), frac_dist(bent.real() + direct.real())) < 1e-9);
            ++compared;
        }
    CHECK(compared > 0);
}

TEST_CASE("Strebel residual vanishes at the closed form") {
    CHECK(strebel_residual(0.75, 0.5) < 1e-9);
    CHECK(strebel_residual(0.75, cd(0.5, 0.3)) > 1e-3);
}

TEST_CASE("solver matches the closed form and conjugation symmetry") {
    FindMuResult r = find_mu(0.6);
    CHECK(std::abs(r.mu - cd(0.8)) < 1e-9);
    CHECK(r.residual < 1e-10);
    cd lambda(0.5, 5 * std::sqrt(2.0) / 4);
    cd a = find_mu(lambda).mu, b = find_mu(std::conj(lambda)).mu;
    CHECK(std::abs(a - std::conj(b)) < 1e-9);
    CHECK(std::abs(a - cd(1.0, 3 * std::sqrt(2.0) / 2)) < 1e-8);
}

TEST_CASE("edge lengths of the degree-8 instance") {
    cd lambda(0.5, 5 * std::sqrt(2.0) / 4);
    EdgeLengths e = edge_lengths(lambda, find_mu(lambda).mu);
    CHECK(e.traces.size() == 12);
    CHECK(e.sum() == doctest::Approx(1.0).epsilon(1e-8));
    // opposite edges carry the same length
    CHECK(e.pair[0] == doctest::Approx(e.pair[5]).epsilon(1e-8));
    CHECK(e.pair[1] == doctest::Approx(e.pair[4]).epsilon(1e-8));
    CHECK(e.pair[2] == doctest::Approx(e.pair[3]).epsilon(1e-8));
}

TEST_CASE("arc length formula, oracle and numeric period") {
    for (double l : {0.6, 0.75, 0.9, 0.97}) {
        double s = arc_length_formula(l);
        CHECK(arc_length_oracle(l) == doctest::Approx(s).epsilon(1e-10));
        CHECK(arc_length_numeric(l).s == doctest::Approx(s).epsilon(1e-8));
    }
}

TEST_CASE("closed trajectories") {
    for (cd hint : {cd(1.0), cd(-1.0)}) {
        TrajectoryTrace t = trace_trajectory(q0p_field(), {0.5, 0.5}, hint);
        CHECK(t.closed);
        CHECK(t.length == doctest::Approx(1.0).epsilon(1e-8));
    }
    // every closed trajectory of q0' is an ellipse with foci 0 and 1
    TrajectoryTrace t = trace_trajectory(q0p_field(), {0.2, 0.9});
    double c = std::abs(cd(0.2, 0.9)) + std::abs(cd(0.2, 0.9) - 1.0);
    for (cd z : t.points) CHECK(std::abs(std::abs(z) + std::abs(z - 1.0) - c) < 1e-8);
    CHECK(trace_trajectory(q0_field(), 1.2).length == doctest::Approx(1.0).epsilon(1e-8));
    CHECK_THROWS(trace_trajectory(q0p_field(), 1e-4));
}
