#pragma once
// Ribbon graphs as permutation pairs on half-edges.
//
// sigma: rotation at vertices (counter-clockwise), alpha: edge involution.
// Faces are the cycles of sigma o alpha, i.e. h -> sigma(alpha(h)).

#include <optional>
#include <string>
#include <vector>

#include "strebel/scalar.hpp"

namespace strebel {

using Perm = std::vector<int>;
using Cycles = std::vector<std::vector<int>>;

Cycles cycles_of(const Perm& p);
Perm from_cycles(const Cycles& c, int n);
Perm inverse(const Perm& p);
Perm compose(const Perm& outer, const Perm& inner);  // outer(inner(h))
std::vector<int> cycle_type(const Perm& p);         // sorted ascending

struct MalformedGraph : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RibbonGraph {
    Perm sigma, alpha;
    std::vector<Q> lengths;  // per edge, empty when unmetrised
    Cycles vertices, edges, faces;
    std::vector<int> edge_of, vertex_of, face_of;  // indexed by half-edge
    int V = 0, E = 0, F = 0, genus = 0;

    int half_edges() const { return static_cast<int>(sigma.size()); }
    bool has_loop() const;
    std::vector<Q> face_lengths() const;
};

RibbonGraph build(Perm sigma, Perm alpha, std::vector<Q> lengths = {});

// Edge u-v leaving u at angle_u and v at angle_v (degrees, counter-clockwise).
struct EmbeddedEdge {
    int u, v;
    double angle_u, angle_v;
    Q length = Q(0);
};
// Half-edges 2k (at u) and 2k+1 (at v) for edge k; rotation by angle.
RibbonGraph from_embedding(int n_vertices, const std::vector<EmbeddedEdge>& edges, bool metric = false);
// straight-line drawing
RibbonGraph from_straight(const std::vector<std::pair<double, double>>& coords,
                          const std::vector<std::pair<int, int>>& edges, const std::vector<Q>& lengths = {});

// fixed planar drawing: vertex coordinates plus edge departure angles
struct Drawing {
    std::vector<std::pair<double, double>> xy;
    std::vector<EmbeddedEdge> edges;
};
// catalog: "theta4" (two 4-valent vertices), "k4", "fake", "theta3"
Drawing catalog_drawing(const std::string& name);
std::vector<std::string> catalog_graph_names();
RibbonGraph catalog_graph(const std::string& name);
// K4 with lengths (a,a,b,b,c,c) on the opposite pairs (C-B, TL-TR), (C-TL, TR-B), (C-TR, TL-B)
RibbonGraph k4_metric(const Q& a, const Q& b, const Q& c);
// K4 opposite-pair index (0 = a, 1 = b, 2 = c) of each K4 edge in catalog order
std::vector<int> k4_pair_labels();

enum class Feasibility { Infeasible, Unique, Family };
std::string to_string(Feasibility f);

struct FeasibilityResult {
    Feasibility status = Feasibility::Infeasible;
    int dimension = -1;                 // dimension of the positive solution set
    std::vector<Q> particular;          // x0 with A x0 = r (if the linear system is consistent)
    std::vector<std::vector<Q>> basis;  // null space of A
    std::optional<std::vector<Q>> witness;  // a strictly positive solution
};
// boundary length of face i = residues[i], all edge lengths > 0
FeasibilityResult metric_feasible(const RibbonGraph& g, const std::vector<Q>& residues);

struct EnumerateOptions {
    int genus = 0;
    int faces = -1;  // any
    bool loopless = false;
    bool identify_mirrors = false;
};
constexpr int kMaxHalfEdges = 12;
std::vector<RibbonGraph> enumerate(const std::vector<int>& degrees, const EnumerateOptions& opt);

// lexicographically minimal relabelling; mirror images identified on request
std::vector<int> canonical_form(const RibbonGraph& g, bool identify_mirrors = false);

struct AutomorphismReport {
    int order = 0;                 // orientation-preserving automorphisms
    int face_fixing_order = 0;     // subgroup fixing every face
    int label_preserving_order = 0;// subgroup fixing every edge label
    int label_action_order = 0;    // image in the permutations of labels
    std::vector<Perm> elements;
};
// labels: per edge; automorphisms must map labels to labels consistently
// (a bijection of label values). Empty labels means no constraint.
AutomorphismReport automorphisms(const RibbonGraph& g, const std::vector<int>& labels = {});

// orientation-preserving isomorphism respecting lengths (when both metrised)
std::optional<Perm> isomorphism(const RibbonGraph& a, const RibbonGraph& b, bool use_lengths = true);

// remove 2-valent vertices, merging the two incident edges (lengths add)
RibbonGraph smooth_bivalent(const RibbonGraph& g);

// orientation reversal: sigma -> sigma^{-1}
RibbonGraph mirror(const RibbonGraph& g);

}  // namespace strebel
