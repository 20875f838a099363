#include "strebel/ribbon.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace strebel {

Cycles cycles_of(const Perm& p) {
    Cycles out;
    std::vector<char> seen(p.size(), 0);
    for (int s = 0; s < static_cast<int>(p.size()); ++s) {
        if (seen[s]) continue;
        std::vector<int> c;
        for (int h = s; !seen[h]; h = p[h]) {
            seen[h] = 1;
            c.push_back(h);
        }
        out.push_back(std::move(c));
    }
    return out;
}

Perm from_cycles(const Cycles& cs, int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    for (auto& c : cs)
        for (size_t k = 0; k < c.size(); ++k) p.at(c[k]) = c[(k + 1) % c.size()];
    return p;
}

Perm inverse(const Perm& p) {
    Perm q(p.size());
    for (size_t h = 0; h < p.size(); ++h) q[p[h]] = static_cast<int>(h);
    return q;
}

Perm compose(const Perm& outer, const Perm& inner) {
    Perm r(inner.size());
    for (size_t h = 0; h < inner.size(); ++h) r[h] = outer[inner[h]];
    return r;
}

std::vector<int> cycle_type(const Perm& p) {
    std::vector<int> t;
    for (auto& c : cycles_of(p)) t.push_back(static_cast<int>(c.size()));
    std::sort(t.begin(), t.end());
    return t;
}

bool RibbonGraph::has_loop() const {
    for (int h = 0; h < half_edges(); ++h)
        if (vertex_of[h] == vertex_of[alpha[h]]) return true;
    return false;
}

std::vector<Q> RibbonGraph::face_lengths() const {
    std::vector<Q> out;
    for (auto& f : faces) {
        Q s(0);
        for (int h : f) s += lengths.at(edge_of[h]);
        out.push_back(s);
    }
    return out;
}

namespace {

bool is_permutation(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    for (int v : p) {
        if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

bool transitive(const Perm& s, const Perm& a) {
    int n = static_cast<int>(s.size());
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int h = stack.back();
        stack.pop_back();
        for (int nb : {s[h], a[h]})
            if (!seen[nb]) {
                seen[nb] = 1;
                ++count;
                stack.push_back(nb);
            }
    }
    return count == n;
}

std::vector<int> index_of(const Cycles& cs, int n) {
    std::vector<int> idx(n);
    for (size_t i = 0; i < cs.size(); ++i)
        for (int h : cs[i]) idx[h] = static_cast<int>(i);
    return idx;
}

// BFS relabelling from root; returns encoding (sigma', alpha')
std::vector<int> encode_from(const Perm& s, const Perm& a, int root) {
    int n = static_cast<int>(s.size());
    std::vector<int> L(n, -1), order;
    order.reserve(n);
    L[root] = 0;
    order.push_back(root);
    for (size_t k = 0; k < order.size(); ++k) {
        int h = order[k];
        for (int nb : {s[h], a[h]})
            if (L[nb] < 0) {
                L[nb] = static_cast<int>(order.size());
                order.push_back(nb);
            }
    }
    std::vector<int> code(2 * n);
    for (int h = 0; h < n; ++h) {
        code[L[h]] = L[s[h]];
        code[n + L[h]] = L[a[h]];
    }
    return code;
}

// extend phi(root_a) = root_b to a map commuting with sigma and alpha
std::optional<Perm> extend(const RibbonGraph& A, const RibbonGraph& B, int root_a, int root_b) {
    int n = A.half_edges();
    Perm phi(n, -1);
    std::vector<char> used(n, 0);
    phi[root_a] = root_b;
    used[root_b] = 1;
    std::vector<int> stack{root_a};
    while (!stack.empty()) {
        int h = stack.back();
        stack.pop_back();
        std::pair<int, int> nbs[2] = {{A.sigma[h], B.sigma[phi[h]]}, {A.alpha[h], B.alpha[phi[h]]}};
        for (auto [x, y] : nbs) {
            if (phi[x] < 0) {
                if (used[y]) return std::nullopt;
                phi[x] = y;
                used[y] = 1;
                stack.push_back(x);
            } else if (phi[x] != y) {
                return std::nullopt;
            }
        }
    }
    for (int v : phi)
        if (v < 0) return std::nullopt;
    return phi;
}

}  // namespace

RibbonGraph build(Perm sigma, Perm alpha, std::vector<Q> lengths) {
    int n = static_cast<int>(sigma.size());
    if (n == 0 || static_cast<int>(alpha.size()) != n) throw MalformedGraph("sigma and alpha must have equal nonzero size");
    if (!is_permutation(sigma) || !is_permutation(alpha)) throw MalformedGraph("sigma and alpha must be permutations");
    for (int h = 0; h < n; ++h)
        if (alpha[h] == h || alpha[alpha[h]] != h) throw MalformedGraph("alpha must be a fixed-point-free involution");
    if (!transitive(sigma, alpha)) throw MalformedGraph("ribbon graph is not connected");
    RibbonGraph g;
    g.sigma = std::move(sigma);
    g.alpha = std::move(alpha);
    g.vertices = cycles_of(g.sigma);
    g.edges = cycles_of(g.alpha);
    g.faces = cycles_of(compose(g.sigma, g.alpha));
    g.V = static_cast<int>(g.vertices.size());
    g.E = static_cast<int>(g.edges.size());
    g.F = static_cast<int>(g.faces.size());
    int chi = g.V - g.E + g.F;
    if ((2 - chi) % 2 != 0 || chi > 2) throw MalformedGraph("inconsistent Euler characteristic");
    g.genus = (2 - chi) / 2;
    g.vertex_of = index_of(g.vertices, n);
    g.edge_of = index_of(g.edges, n);
    g.face_of = index_of(g.faces, n);
    if (!lengths.empty() && static_cast<int>(lengths.size()) != g.E) throw MalformedGraph("one length per edge expected");
    g.lengths = std::move(lengths);
    return g;
}

RibbonGraph from_embedding(int nv, const std::vector<EmbeddedEdge>& edges, bool metric) {
    int n = 2 * static_cast<int>(edges.size());
    std::vector<std::vector<std::pair<double, int>>> at(nv);
    Perm alpha(n);
    for (size_t k = 0; k < edges.size(); ++k) {
        int h = 2 * static_cast<int>(k);
        auto norm = [](double a) { return std::fmod(std::fmod(a, 360.0) + 360.0, 360.0); };
        at.at(edges[k].u).push_back({norm(edges[k].angle_u), h});
        at.at(edges[k].v).push_back({norm(edges[k].angle_v), h + 1});
        alpha[h] = h + 1;
        alpha[h + 1] = h;
    }
    Cycles cs;
    for (auto& v : at) {
        if (v.empty()) continue;
        std::sort(v.begin(), v.end());
        std::vector<int> c;
        for (auto& [ang, h] : v) c.push_back(h);
        cs.push_back(c);
    }
    // edge k is the alpha-cycle {2k, 2k+1}, which cycles_of lists in order k
    std::vector<Q> lens;
    if (metric)
        for (auto& e : edges) lens.push_back(e.length);
    return build(from_cycles(cs, n), alpha, lens);
}

namespace {

double angle_deg(std::pair<double, double> from, std::pair<double, double> to) {
    return std::atan2(to.second - from.second, to.first - from.first) * 180.0 / 3.14159265358979323846;
}

Drawing straight_drawing(const std::vector<std::pair<double, double>>& xy, const std::vector<std::pair<int, int>>& edges,
                         const std::vector<Q>& lengths) {
    Drawing d{xy, {}};
    for (size_t k = 0; k < edges.size(); ++k) {
        auto [u, v] = edges[k];
        d.edges.push_back({u, v, angle_deg(xy[u], xy[v]), angle_deg(xy[v], xy[u]), lengths.empty() ? Q(0) : lengths[k]});
    }
    return d;
}

const std::vector<std::pair<double, double>> kK4xy = {{0, 0.3}, {1, 1}, {-1, 1}, {0, -1}};  // C, TR, TL, B
const std::vector<std::pair<int, int>> kK4edges = {{0, 3}, {2, 1}, {0, 2}, {1, 3}, {0, 1}, {2, 3}};

}  // namespace

RibbonGraph from_straight(const std::vector<std::pair<double, double>>& xy, const std::vector<std::pair<int, int>>& edges,
                          const std::vector<Q>& lengths) {
    return from_embedding(static_cast<int>(xy.size()), straight_drawing(xy, edges, lengths).edges, !lengths.empty());
}

std::vector<int> k4_pair_labels() { return {0, 0, 1, 1, 2, 2}; }

RibbonGraph k4_metric(const Q& a, const Q& b, const Q& c) {
    return from_straight(kK4xy, kK4edges, {a, a, b, b, c, c});
}

Drawing catalog_drawing(const std::string& name) {
    if (name == "k4") return straight_drawing(kK4xy, kK4edges, {});
    if (name == "theta4")  // L, R; big and small arcs above and below
        return {{{-1, 0}, {1, 0}}, {{0, 1, 60, 120}, {0, 1, 20, 160}, {0, 1, 340, 200}, {0, 1, 300, 240}}};
    if (name == "theta3") return {{{-1, 0}, {1, 0}}, {{0, 1, 45, 135}, {0, 1, 0, 180}, {0, 1, 315, 225}}};
    if (name == "fake")  // two digons joined by two bridges; vertices L0, R0, L1, R1
        return {{{-1, 0}, {1, 0}, {-1, 1}, {1, 1}},
                {{0, 1, 20, 160}, {0, 1, 340, 200}, {2, 3, 20, 160}, {2, 3, 340, 200}, {2, 0, 270, 90}, {3, 1, 270, 90}}};
    throw std::invalid_argument("unknown graph '" + name + "'");
}

std::vector<std::string> catalog_graph_names() { return {"theta4", "k4", "fake", "theta3"}; }

RibbonGraph catalog_graph(const std::string& name) {
    Drawing d = catalog_drawing(name);
    return from_embedding(static_cast<int>(d.xy.size()), d.edges);
}

std::string to_string(Feasibility f) {
    switch (f) {
        case Feasibility::Infeasible: return "infeasible";
        case Feasibility::Unique: return "unique";
        default: return "family";
    }
}

namespace {

struct Ineq {
    std::vector<Q> c;  // c . t + k > 0
    Q k;
};

// Fourier-Motzkin for strict inequalities; returns a witness t or nothing
std::optional<std::vector<Q>> fm_solve(std::vector<Ineq> sys, int nvar) {
    std::vector<std::vector<Ineq>> stages(nvar + 1);
    stages[nvar] = sys;
    for (int j = nvar - 1; j >= 0; --j) {
        std::vector<Ineq> pos, neg, next;
        for (auto& q : stages[j + 1]) {
            if (q.c[j] > 0) pos.push_back(q);
            else if (q.c[j] < 0) neg.push_back(q);
            else next.push_back(q);
        }
        for (auto& p : pos)
            for (auto& m : neg) {
                // p/p_j - m/m_j eliminates t_j (m_j < 0)
                Ineq r{std::vector<Q>(nvar, Q(0)), Q(0)};
                Q wp = -m.c[j], wm = p.c[j];
                for (int i = 0; i < nvar; ++i) r.c[i] = wp * p.c[i] + wm * m.c[i];
                r.k = wp * p.k + wm * m.k;
                r.c[j] = 0;
                next.push_back(r);
            }
        stages[j] = std::move(next);
    }
    for (auto& q : stages[0])
        if (q.k <= 0) return std::nullopt;
    std::vector<Q> t(nvar, Q(0));
    for (int j = 0; j < nvar; ++j) {
        std::optional<Q> lo, hi;
        for (auto& q : stages[j + 1]) {
            if (q.c[j] == 0) continue;
            Q rest = q.k;
            for (int i = 0; i < j; ++i) rest += q.c[i] * t[i];
            Q b = -rest / q.c[j];
            if (q.c[j] > 0) lo = lo ? std::max(*lo, b) : b;
            else hi = hi ? std::min(*hi, b) : b;
        }
        if (lo && hi) t[j] = (*lo + *hi) / 2;
        else if (lo) t[j] = *lo + 1;
        else if (hi) t[j] = *hi - 1;
    }
    return t;
}

}  // namespace

FeasibilityResult metric_feasible(const RibbonGraph& g, const std::vector<Q>& residues) {
    if (static_cast<int>(residues.size()) != g.F) throw std::invalid_argument("one residue per face expected");
    int R = g.F, C = g.E;
    std::vector<std::vector<Q>> M(R, std::vector<Q>(C + 1, Q(0)));
    for (int f = 0; f < R; ++f) {
        for (int h : g.faces[f]) M[f][g.edge_of[h]] += 1;
        M[f][C] = residues[f];
    }
    // reduced row echelon form
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < C && row < R; ++col) {
        int p = -1;
        for (int r = row; r < R; ++r)
            if (M[r][col] != 0) { p = r; break; }
        if (p < 0) continue;
        std::swap(M[row], M[p]);
        Q inv = 1 / M[row][col];
        for (auto& v : M[row]) v *= inv;
        for (int r = 0; r < R; ++r) {
            if (r == row || M[r][col] == 0) continue;
            Q f = M[r][col];
            for (int k = 0; k <= C; ++k) M[r][k] -= f * M[row][k];
        }
        pivot_col.push_back(col);
        ++row;
    }
    FeasibilityResult res;
    for (int r = row; r < R; ++r)
        if (M[r][C] != 0) return res;  // inconsistent linear system
    std::vector<char> is_pivot(C, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    res.particular.assign(C, Q(0));
    for (size_t r = 0; r < pivot_col.size(); ++r) res.particular[pivot_col[r]] = M[r][C];
    for (int fc = 0; fc < C; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Q> v(C, Q(0));
        v[fc] = 1;
        for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -M[r][fc];
        res.basis.push_back(v);
    }
    int k = static_cast<int>(res.basis.size());
    std::vector<Ineq> sys;
    for (int e = 0; e < C; ++e) {
        Ineq q{std::vector<Q>(k), res.particular[e]};
        for (int j = 0; j < k; ++j) q.c[j] = res.basis[j][e];
        sys.push_back(q);
    }
    auto t = fm_solve(sys, k);
    if (!t) return res;
    std::vector<Q> x = res.particular;
    for (int j = 0; j < k; ++j)
        for (int e = 0; e < C; ++e) x[e] += (*t)[j] * res.basis[j][e];
    res.witness = x;
    // the positive solution set is open in the affine space, so its dimension is k
    res.dimension = k;
    res.status = k == 0 ? Feasibility::Unique : Feasibility::Family;
    return res;
}

std::vector<int> canonical_form(const RibbonGraph& g, bool identify_mirrors) {
    std::vector<int> best;
    auto consider = [&](const Perm& s) {
        for (int r = 0; r < g.half_edges(); ++r) {
            auto code = encode_from(s, g.alpha, r);
            if (best.empty() || code < best) best = std::move(code);
        }
    };
    consider(g.sigma);
    if (identify_mirrors) consider(inverse(g.sigma));
    return best;
}

std::vector<RibbonGraph> enumerate(const std::vector<int>& degrees, const EnumerateOptions& opt) {
    int n = std::accumulate(degrees.begin(), degrees.end(), 0);
    if (n % 2 != 0) throw std::invalid_argument("total degree must be even");
    if (n > kMaxHalfEdges)
        throw std::invalid_argument("enumeration is capped at " + std::to_string(kMaxHalfEdges) + " half-edges");
    for (int d : degrees)
        if (d < 1) throw std::invalid_argument("vertex degrees must be positive");
    Cycles cs;
    int o = 0;
    for (int d : degrees) {
        std::vector<int> c(d);
        std::iota(c.begin(), c.end(), o);
        o += d;
        cs.push_back(c);
    }
    Perm sigma = from_cycles(cs, n);
    std::vector<int> vertex(n);
    for (size_t v = 0; v < cs.size(); ++v)
        for (int h : cs[v]) vertex[h] = static_cast<int>(v);

    std::set<std::vector<int>> seen;
    std::vector<RibbonGraph> out;
    Perm alpha(n, -1);
    // all fixed-point-free involutions
    auto rec = [&](auto&& self) -> void {
        int h = -1;
        for (int k = 0; k < n; ++k)
            if (alpha[k] < 0) { h = k; break; }
        if (h < 0) {
            if (!transitive(sigma, alpha)) return;
            RibbonGraph g = build(sigma, alpha);
            if (g.genus != opt.genus) return;
            if (opt.faces >= 0 && g.F != opt.faces) return;
            if (opt.loopless && g.has_loop()) return;
            if (seen.insert(canonical_form(g, opt.identify_mirrors)).second) out.push_back(std::move(g));
            return;
        }
        for (int k = h + 1; k < n; ++k) {
            if (alpha[k] >= 0) continue;
            if (opt.loopless && vertex[k] == vertex[h]) continue;
            alpha[h] = k;
            alpha[k] = h;
            self(self);
            alpha[h] = alpha[k] = -1;
        }
    };
    rec(rec);
    return out;
}

AutomorphismReport automorphisms(const RibbonGraph& g, const std::vector<int>& labels) {
    if (!labels.empty() && static_cast<int>(labels.size()) != g.E) throw std::invalid_argument("one label per edge expected");
    AutomorphismReport r;
    std::set<std::vector<std::pair<int, int>>> actions;
    for (int t = 0; t < g.half_edges(); ++t) {
        auto phi = extend(g, g, 0, t);
        if (!phi) continue;
        std::map<int, int> lab;
        bool consistent = true;
        if (!labels.empty()) {
            std::set<int> images;
            for (int e = 0; e < g.E && consistent; ++e) {
                int from = labels[e], to = labels[g.edge_of[(*phi)[g.edges[e][0]]]];
                auto it = lab.find(from);
                if (it == lab.end()) {
                    if (!images.insert(to).second) consistent = false;
                    lab[from] = to;
                } else if (it->second != to) {
                    consistent = false;
                }
            }
        }
        if (!consistent) continue;
        ++r.order;
        bool fixes_faces = true;
        for (int h = 0; h < g.half_edges(); ++h)
            if (g.face_of[(*phi)[h]] != g.face_of[h]) { fixes_faces = false; break; }
        if (fixes_faces) ++r.face_fixing_order;
        bool fixes_labels = true;
        for (auto& [a, b] : lab)
            if (a != b) fixes_labels = false;
        if (fixes_labels) ++r.label_preserving_order;
        actions.insert(std::vector<std::pair<int, int>>(lab.begin(), lab.end()));
        r.elements.push_back(*phi);
    }
    r.label_action_order = labels.empty() ? 1 : static_cast<int>(actions.size());
    return r;
}

std::optional<Perm> isomorphism(const RibbonGraph& a, const RibbonGraph& b, bool use_lengths) {
    if (a.half_edges() != b.half_edges() || a.V != b.V || a.F != b.F) return std::nullopt;
    bool metric = use_lengths && !a.lengths.empty() && !b.lengths.empty();
    for (int t = 0; t < b.half_edges(); ++t) {
        auto phi = extend(a, b, 0, t);
        if (!phi) continue;
        if (metric) {
            bool ok = true;
            for (int h = 0; h < a.half_edges() && ok; ++h)
                ok = a.lengths[a.edge_of[h]] == b.lengths[b.edge_of[(*phi)[h]]];
            if (!ok) continue;
        }
        return phi;
    }
    return std::nullopt;
}

RibbonGraph smooth_bivalent(const RibbonGraph& g0) {
    int n = g0.half_edges();
    Perm s = g0.sigma, a = g0.alpha;
    std::vector<Q> len(n, Q(0));  // length per half-edge (same on both ends)
    bool metric = !g0.lengths.empty();
    if (metric)
        for (int h = 0; h < n; ++h) len[h] = g0.lengths[g0.edge_of[h]];
    std::vector<char> alive(n, 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int h1 = 0; h1 < n; ++h1) {
            if (!alive[h1]) continue;
            int h2 = s[h1];
            if (h2 == h1 || s[h2] != h1 || a[h1] == h2) continue;
            int x = a[h1], y = a[h2];
            Q l = len[h1] + len[h2];
            a[x] = y;
            a[y] = x;
            len[x] = len[y] = l;
            alive[h1] = alive[h2] = 0;
            changed = true;
        }
    }
    std::vector<int> idx(n, -1);
    int m = 0;
    for (int h = 0; h < n; ++h)
        if (alive[h]) idx[h] = m++;
    Perm s2(m), a2(m);
    for (int h = 0; h < n; ++h) {
        if (!alive[h]) continue;
        s2[idx[h]] = idx[s[h]];
        a2[idx[h]] = idx[a[h]];
    }
    RibbonGraph tmp = build(s2, a2);
    if (!metric) return tmp;
    std::vector<Q> lens(tmp.E);
    for (int e = 0; e < tmp.E; ++e) {
        int h = tmp.edges[e][0];
        for (int old = 0; old < n; ++old)
            if (idx[old] == h) { lens[e] = len[old]; break; }
    }
    return build(tmp.sigma, tmp.alpha, lens);
}

RibbonGraph mirror(const RibbonGraph& g) { return build(inverse(g.sigma), g.alpha, g.lengths); }

}  // namespace strebel
