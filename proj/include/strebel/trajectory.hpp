#pragma once
// Horizontal trajectories of q = -(1/4pi^2) R dz^2 in double precision.
//
// The field stores -R = K * prod (z - a_k)^{m_k}. Odd exponents are branch
// points of sqrt(-R): simple zeros and simple poles.

#include <complex>
#include <string>
#include <vector>

namespace strebel {

using cd = std::complex<double>;

struct Field {
    cd K{1.0};
    std::vector<cd> a;
    std::vector<int> m;

    cd minus_R(cd z) const;
    // sqrt(-R) with each odd factor cut along the ray from a_k in direction theta_k + pi
    cd sqrt_minus_R(cd z, const std::vector<double>& theta) const;
    // same at base + dz, with each z - a_k formed as (base - a_k) + dz
    cd sqrt_minus_R(cd base, cd dz, const std::vector<double>& theta) const;
    double min_dist(cd z) const;  // to any zero or pole
    // -R ~ kappa (z - a_i) near a simple zero a_i
    cd kappa(int i) const;
};

// q0' : R = 1/(z(z-1)), q0 : R = 1/(z(z-1)^2)
Field q0p_field();
Field q0_field();

struct TraceOptions {
    double rtol = 1e-12, atol = 1e-14;
    double guard = 2e-3;           // stop this close to a zero or pole
    double max_step = 0.02;        // in arc length
    long max_steps = 1000000;
    bool detect_closure = true;
    double closure_radius = 0.05;  // closure is only tested this close to the start
    int exclude = -1;              // critical point ignored while s < 0.01 (the one we left)
};

struct TrajectoryTrace {
    std::vector<cd> points;
    double length = 0;      // q-length of the traced part (1/2pi) int |sqrt(-R)| |dz|
    bool closed = false;
    double closure_gap = 0; // |z(end) - z0| at the detected return
    int hit = -1;           // index into Field::a when stopped near a critical point
    std::string diagnostic;
};

// Follows dz/ds = 2pi / sqrt(-R) from z0 with the branch whose initial
// velocity points along `hint` (principal branch when hint == 0).
TrajectoryTrace trace_trajectory(const Field& f, cd z0, cd hint = 0.0, const TraceOptions& opt = {});

// (1/2pi) * integral of sqrt(-R) along the segment A -> B. end_a / end_b are
// indices of branch points sitting exactly at A / B, or -1.
struct Segment {
    cd integral;
    cd value_a, value_b;  // integrand at non-singular ends (for sign matching)
};
Segment segment_integral(const Field& f, cd A, cd B, int end_a, int end_b, double tol = 1e-13);

// polyline integral with pole detours and sign matching at the joints
cd path_integral(const Field& f, cd A, cd B, int end_a, int end_b, double tol = 1e-13);

}  // namespace strebel
