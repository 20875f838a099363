#pragma once
// Periods of the family q_{lambda,mu}, the Strebel solver mu(lambda) and
// critical edge lengths. Everything here runs in double precision.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "strebel/trajectory.hpp"

namespace strebel {

// -R = -N/(z(z-1)(z-lambda))^2 with N factored over its numeric roots.
// Roots closer than merge_tol are merged into double zeros.
Field family_field(cd lambda, cd mu, double merge_tol = 0.0);
std::vector<cd> family_zeros(cd lambda, cd mu);  // sorted by (Re, Im)

constexpr std::array<std::pair<int, int>, 6> kZeroPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

struct PeriodSet {
    std::vector<cd> zeros;
    std::array<cd, 6> P{};  // along kZeroPairs, straight paths with pole detours
    double residual = 0;    // max |Im P|
};
// zeros: optional ordering to follow (nearest-neighbour matched)
PeriodSet periods(cd lambda, cd mu, const std::vector<cd>* follow = nullptr);
double strebel_residual(cd lambda, cd mu);

struct NewtonDivergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FindMuResult {
    cd mu;
    double residual = 0;
    int iterations = 0;      // Newton iterations summed over the homotopy
    int homotopy_steps = 0;  // 0 when seeded directly
    PeriodSet periods;
};
// Without a seed: real lambda starts at the closed form + 0.1 + 0.05i, other
// lambda walk from Re(lambda) in 8 steps (32 on failure).
FindMuResult find_mu(cd lambda, std::optional<cd> seed = std::nullopt, double tol = 1e-11);

struct Edge {
    int from, to;
    double length;
};
struct EdgeLengths {
    std::vector<cd> zeros;
    std::vector<Edge> traces;     // 12 critical trajectories, one per zero and direction
    std::array<double, 6> pair{}; // length per kZeroPairs entry, averaged over both ends
    std::array<double, 3> abc{};  // opposite pairs {01,23}, {02,13}, {03,12}
    double sum() const { return abc[0] + abc[1] + abc[2]; }
};
// requires four simple zeros and a K4 critical graph
EdgeLengths edge_lengths(cd lambda, cd mu);

// s = arcsin(2 lambda - 1)/pi on [1/2, 1)
double arc_length_formula(double lambda0);
// the same from the 1-D integral int_0^{(2l-1)^2} dz / (2 pi sqrt(z(1-z)))
double arc_length_oracle(double lambda0);
// s from the period between the two double zeros of q_{lambda, 2-2lambda}
struct ArcLengthNumeric {
    cd period;
    double s;
};
ArcLengthNumeric arc_length_numeric(double lambda0);

}  // namespace strebel
