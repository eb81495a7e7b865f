#include "backedge/width.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <numeric>
#include <queue>
#include <string>

namespace backedge {

namespace {

std::string guard_msg(const char* what, int n, int cap) {
    return std::string(what) + ": size " + std::to_string(n) +
           " exceeds guard " + std::to_string(cap);
}

// Calls fn with every permutation of 0..n-1 in lexicographic order.
template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
    std::vector<Vertex> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        fn(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

// Maximum backedge degree of d under perm, without materializing the graph.
int backedge_max_degree(const Digraph& d, const std::vector<Vertex>& perm) {
    const int n = d.n();
    std::vector<int> pos(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<size_t>(perm[static_cast<size_t>(i)])] = i;
    std::vector<int> deg(static_cast<size_t>(n), 0);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : d.out_neighbors(u))
            if (pos[static_cast<size_t>(v)] < pos[static_cast<size_t>(u)]) {
                ++deg[static_cast<size_t>(u)];
                ++deg[static_cast<size_t>(v)];
            }
    int best = 0;
    for (int x : deg) best = std::max(best, x);
    return best;
}

uint32_t full_mask(int n) { return n >= 32 ? ~0u : ((1u << n) - 1); }

void build_masks(const Digraph& d, std::vector<uint32_t>& outm, std::vector<uint32_t>& inm) {
    const int n = d.n();
    outm.assign(static_cast<size_t>(n), 0);
    inm.assign(static_cast<size_t>(n), 0);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : d.out_neighbors(u)) {
            outm[static_cast<size_t>(u)] |= 1u << v;
            inm[static_cast<size_t>(v)] |= 1u << u;
        }
}

} // namespace

const char* parameter_name(GraphParameter p) {
    switch (p) {
        case GraphParameter::MaxDegree: return "max_degree";
        case GraphParameter::ChromaticNumber: return "chromatic_number";
        case GraphParameter::CliqueNumber: return "clique_number";
        case GraphParameter::VertexCover: return "vertex_cover";
    }
    return "?";
}

int max_degree(const UndirectedGraph& g) {
    int best = 0;
    for (Vertex v = 0; v < g.n(); ++v) best = std::max(best, g.degree(v));
    return best;
}

namespace {

void clique_dfs(const UndirectedGraph& g, const std::vector<Vertex>& cand, int size, int& best) {
    if (size > best) best = size;
    if (size + static_cast<int>(cand.size()) <= best) return;
    for (size_t i = 0; i < cand.size(); ++i) {
        if (size + static_cast<int>(cand.size() - i) <= best) return;
        Vertex v = cand[i];
        std::vector<Vertex> next;
        for (size_t j = i + 1; j < cand.size(); ++j)
            if (g.has_edge(v, cand[j])) next.push_back(cand[j]);
        clique_dfs(g, next, size + 1, best);
    }
}

bool colorable_dfs(const UndirectedGraph& g, const std::vector<Vertex>& order, size_t idx,
                   std::vector<int>& color, int used, int limit) {
    if (idx == order.size()) return true;
    Vertex v = order[idx];
    // Trying at most one fresh color breaks color-class symmetry.
    const int tryup = std::min(limit, used + 1);
    for (int c = 0; c < tryup; ++c) {
        bool ok = true;
        for (Vertex w : g.neighbors(v))
            if (color[static_cast<size_t>(w)] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        color[static_cast<size_t>(v)] = c;
        if (colorable_dfs(g, order, idx + 1, color, std::max(used, c + 1), limit)) return true;
        color[static_cast<size_t>(v)] = -1;
    }
    return false;
}

void vc_dfs(const UndirectedGraph& g, std::vector<uint8_t>& removed, int size, int& best) {
    if (size >= best) return;
    // First edge with both endpoints still present.
    for (const Edge& e : g.edges()) {
        if (removed[static_cast<size_t>(e.u)] || removed[static_cast<size_t>(e.v)]) continue;
        removed[static_cast<size_t>(e.u)] = 1;
        vc_dfs(g, removed, size + 1, best);
        removed[static_cast<size_t>(e.u)] = 0;
        removed[static_cast<size_t>(e.v)] = 1;
        vc_dfs(g, removed, size + 1, best);
        removed[static_cast<size_t>(e.v)] = 0;
        return;
    }
    best = size; // edgeless
}

} // namespace

int clique_number_exact(const UndirectedGraph& g) {
    if (g.n() == 0) return 0;
    std::vector<Vertex> cand(static_cast<size_t>(g.n()));
    std::iota(cand.begin(), cand.end(), 0);
    int best = 1;
    clique_dfs(g, cand, 0, best);
    return best;
}

int chromatic_number_exact(const UndirectedGraph& g) {
    const int n = g.n();
    if (n == 0) return 0;
    if (g.edge_count() == 0) return 1;
    std::vector<Vertex> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    const int ub = greedy_color_count(g, Ordering(order));
    const int lb = clique_number_exact(g);
    for (int k = lb; k < ub; ++k) {
        std::vector<int> color(static_cast<size_t>(n), -1);
        if (colorable_dfs(g, order, 0, color, 0, k)) return k;
    }
    return ub;
}

int vertex_cover_number_exact(const UndirectedGraph& g) {
    std::vector<uint8_t> removed(static_cast<size_t>(g.n()), 0);
    int best = g.n();
    if (g.edge_count() == 0) return 0;
    vc_dfs(g, removed, 0, best);
    return best;
}

int apply_parameter(const UndirectedGraph& g, GraphParameter p) {
    switch (p) {
        case GraphParameter::MaxDegree: return max_degree(g);
        case GraphParameter::ChromaticNumber: return chromatic_number_exact(g);
        case GraphParameter::CliqueNumber: return clique_number_exact(g);
        case GraphParameter::VertexCover: return vertex_cover_number_exact(g);
    }
    return 0;
}

int greedy_color_count(const UndirectedGraph& g, const Ordering& ord) {
    if (ord.size() != g.n()) throw GraphError("ordering length mismatch");
    std::vector<int> color(static_cast<size_t>(g.n()), -1);
    int used = 0;
    for (int i = 0; i < g.n(); ++i) {
        Vertex v = ord.at(i);
        std::vector<uint8_t> taken(static_cast<size_t>(used + 1), 0);
        for (Vertex w : g.neighbors(v)) {
            int c = color[static_cast<size_t>(w)];
            if (c >= 0 && c <= used) taken[static_cast<size_t>(c)] = 1;
        }
        int c = 0;
        while (taken[static_cast<size_t>(c)]) ++c;
        color[static_cast<size_t>(v)] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

WidthResult degreewidth_bruteforce(const Digraph& d, const SolverGuards& guards) {
    const int n = d.n();
    if (n > guards.brute_n) throw GuardError(guard_msg("degreewidth_bruteforce", n, guards.brute_n));
    int best = INT_MAX;
    std::vector<Vertex> witness;
    for_each_permutation(n, [&](const std::vector<Vertex>& perm) {
        int v = backedge_max_degree(d, perm);
        if (v < best) {
            best = v;
            witness = perm;
        }
    });
    return {best == INT_MAX ? 0 : best, Ordering(witness), "bruteforce"};
}

int placement_degree(const Digraph& d, Vertex u, uint32_t prefix_mask) {
    d.check_vertex(u);
    if (d.n() > 32) throw GuardError("placement_degree: vertex count exceeds mask width");
    int deg = 0;
    for (Vertex w : d.out_neighbors(u))
        if (prefix_mask >> w & 1u) ++deg;
    for (Vertex w : d.in_neighbors(u))
        if (!(prefix_mask >> w & 1u)) ++deg;
    return deg;
}

WidthResult degreewidth_dp(const Digraph& d, const SolverGuards& guards) {
    const int n = d.n();
    if (n > guards.dp_n) throw GuardError(guard_msg("degreewidth_dp", n, guards.dp_n));
    if (n == 0) return {0, Ordering(), "dp"};

    std::vector<uint32_t> outm, inm;
    build_masks(d, outm, inm);
    const uint32_t full = full_mask(n);

    // table[S] = best achievable max over placement degrees when the
    // vertices of S are already placed as a prefix (in some order that the
    // table does not need to remember).
    auto pdeg = [&](int u, uint32_t placed) {
        return std::popcount(outm[static_cast<size_t>(u)] & placed) +
               std::popcount(inm[static_cast<size_t>(u)] & ~placed & full & ~(1u << u));
    };

    std::vector<uint8_t> table(static_cast<size_t>(full) + 1);
    table[full] = 0;
    for (uint32_t mask = full; mask-- > 0;) {
        int best = INT_MAX;
        for (int u = 0; u < n; ++u) {
            if (mask >> u & 1u) continue;
            int val = std::max(pdeg(u, mask), static_cast<int>(table[mask | (1u << u)]));
            best = std::min(best, val);
        }
        table[mask] = static_cast<uint8_t>(best);
    }

    const int value = table[0];
    std::vector<Vertex> perm;
    perm.reserve(static_cast<size_t>(n));
    uint32_t placed = 0;
    while (static_cast<int>(perm.size()) < n) {
        for (int u = 0; u < n; ++u) {
            if (placed >> u & 1u) continue;
            if (std::max(pdeg(u, placed), static_cast<int>(table[placed | (1u << u)])) <= value) {
                perm.push_back(u);
                placed |= 1u << u;
                break;
            }
        }
    }
    return {value, Ordering(std::move(perm)), "dp"};
}

// ---- FAS branch and bound ----

namespace {

struct FasSearch {
    const Digraph& d;
    int k;
    int n;
    std::vector<std::vector<uint8_t>> in_f;   // chosen arcs
    std::vector<std::vector<uint8_t>> edge_f; // collapsed undirected edges
    std::vector<int> deg_f;
    std::vector<Arc> chosen;

    explicit FasSearch(const Digraph& dig, int bound)
        : d(dig),
          k(bound),
          n(dig.n()),
          in_f(static_cast<size_t>(dig.n()),
               std::vector<uint8_t>(static_cast<size_t>(dig.n()), 0)),
          edge_f(static_cast<size_t>(dig.n()),
                 std::vector<uint8_t>(static_cast<size_t>(dig.n()), 0)),
          deg_f(static_cast<size_t>(dig.n()), 0) {}

    // Shortest directed cycle avoiding the chosen arcs; deterministic:
    // smallest start vertex wins ties, neighbors scanned in sorted order.
    bool shortest_cycle(std::vector<Arc>& cycle) const {
        int best_len = INT_MAX;
        std::vector<Vertex> best_path;
        std::vector<int> parent(static_cast<size_t>(n));
        std::vector<int> dist(static_cast<size_t>(n));
        for (Vertex s = 0; s < n; ++s) {
            if (best_len == 2) break;
            std::fill(dist.begin(), dist.end(), -1);
            dist[static_cast<size_t>(s)] = 0;
            std::queue<Vertex> q;
            q.push(s);
            int found = -1;
            Vertex last = -1;
            while (!q.empty() && found == -1) {
                Vertex v = q.front();
                q.pop();
                if (dist[static_cast<size_t>(v)] + 1 >= best_len) break;
                for (Vertex w : d.out_neighbors(v)) {
                    if (in_f[static_cast<size_t>(v)][static_cast<size_t>(w)]) continue;
                    if (w == s) {
                        found = dist[static_cast<size_t>(v)] + 1;
                        last = v;
                        break;
                    }
                    if (dist[static_cast<size_t>(w)] == -1) {
                        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
                        parent[static_cast<size_t>(w)] = v;
                        q.push(w);
                    }
                }
            }
            if (found != -1 && found < best_len) {
                best_len = found;
                best_path.clear();
                for (Vertex v = last; v != s; v = parent[static_cast<size_t>(v)])
                    best_path.push_back(v);
                best_path.push_back(s);
                std::reverse(best_path.begin(), best_path.end()); // s, ..., last
            }
        }
        if (best_len == INT_MAX) return false;
        cycle.clear();
        for (size_t i = 0; i < best_path.size(); ++i) {
            Vertex u = best_path[i];
            Vertex v = best_path[(i + 1) % best_path.size()];
            cycle.push_back({u, v});
        }
        return true;
    }

    bool add(const Arc& a) {
        auto& edge = edge_f[static_cast<size_t>(a.tail)][static_cast<size_t>(a.head)];
        if (!edge) {
            // New collapsed edge: both endpoints gain a degree.
            if (deg_f[static_cast<size_t>(a.tail)] >= k || deg_f[static_cast<size_t>(a.head)] >= k)
                return false;
            ++deg_f[static_cast<size_t>(a.tail)];
            ++deg_f[static_cast<size_t>(a.head)];
        }
        edge_f[static_cast<size_t>(a.tail)][static_cast<size_t>(a.head)] += 1;
        edge_f[static_cast<size_t>(a.head)][static_cast<size_t>(a.tail)] += 1;
        in_f[static_cast<size_t>(a.tail)][static_cast<size_t>(a.head)] = 1;
        chosen.push_back(a);
        return true;
    }

    void undo(const Arc& a) {
        chosen.pop_back();
        in_f[static_cast<size_t>(a.tail)][static_cast<size_t>(a.head)] = 0;
        edge_f[static_cast<size_t>(a.tail)][static_cast<size_t>(a.head)] -= 1;
        edge_f[static_cast<size_t>(a.head)][static_cast<size_t>(a.tail)] -= 1;
        if (!edge_f[static_cast<size_t>(a.tail)][static_cast<size_t>(a.head)]) {
            --deg_f[static_cast<size_t>(a.tail)];
            --deg_f[static_cast<size_t>(a.head)];
        }
    }

    bool search() {
        std::vector<Arc> cycle;
        if (!shortest_cycle(cycle)) return true; // acyclic: chosen is a FAS
        for (const Arc& a : cycle) {
            if (!add(a)) continue;
            if (search()) return true;
            undo(a);
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<Arc>> degreewidth_via_fas(const Digraph& d, int k) {
    if (k < 0) return std::nullopt;
    if (dig_lower_bound(d) > k) return std::nullopt;
    FasSearch search(d, k);
    if (!search.search()) return std::nullopt;
    std::vector<Arc> fas = search.chosen;
    std::sort(fas.begin(), fas.end());
    return fas;
}

bool k_degreewidth_decide(const Digraph& d, int k, const SolverGuards& guards) {
    if (k < 0) return false;
    if (d.n() <= guards.dp_n) return degreewidth_dp(d, guards).value <= k;
    return degreewidth_via_fas(d, k).has_value();
}

WidthResult indeg_ordering_heuristic(const Digraph& d) {
    std::vector<Vertex> perm(static_cast<size_t>(d.n()));
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](Vertex a, Vertex b) { return d.in_degree(a) < d.in_degree(b); });
    int value = backedge_max_degree(d, perm);
    return {value, Ordering(std::move(perm)), "indeg_heuristic"};
}

// ---- dichromatic number ----

int dichromatic_number(const Digraph& d, const SolverGuards& guards) {
    const int n = d.n();
    if (n > guards.dichromatic_n)
        throw GuardError(guard_msg("dichromatic_number", n, guards.dichromatic_n));
    if (n == 0) return 0;

    std::vector<uint32_t> outm, inm;
    build_masks(d, outm, inm);
    const uint32_t full = full_mask(n);

    // acyclic[S] = 1 iff D[S] is acyclic. A set is acyclic iff it has a sink
    // within the set and stays acyclic after deleting that sink.
    std::vector<uint8_t> acyclic(static_cast<size_t>(full) + 1, 0);
    acyclic[0] = 1;
    for (uint32_t mask = 1; mask <= full; ++mask) {
        uint32_t rest = mask;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if ((outm[static_cast<size_t>(v)] & mask) == 0) {
                acyclic[mask] = acyclic[mask & ~(1u << v)];
                break;
            }
        }
    }

    std::vector<uint8_t> parts(static_cast<size_t>(full) + 1, 0);
    for (uint32_t mask = 1; mask <= full; ++mask) {
        int best = INT_MAX;
        const uint32_t low = mask & (~mask + 1); // lowest set bit stays in the part
        for (uint32_t sub = mask; sub; sub = (sub - 1) & mask) {
            if (!(sub & low)) continue;
            if (!acyclic[sub]) continue;
            best = std::min(best, 1 + static_cast<int>(parts[mask & ~sub]));
        }
        parts[mask] = static_cast<uint8_t>(best);
    }
    return parts[full];
}

int gamma_vec_bruteforce(const Digraph& d, GraphParameter sel, const SolverGuards& guards) {
    const int n = d.n();
    if (n > guards.brute_n) throw GuardError(guard_msg("gamma_vec_bruteforce", n, guards.brute_n));
    int best = INT_MAX;
    for_each_permutation(n, [&](const std::vector<Vertex>& perm) {
        best = std::min(best, apply_parameter(backedge_graph(d, Ordering(perm)), sel));
    });
    return best == INT_MAX ? 0 : best;
}

int chi_vec_via_orderings(const Digraph& d, const SolverGuards& guards) {
    return gamma_vec_bruteforce(d, GraphParameter::ChromaticNumber, guards);
}

int directed_clique_number(const Digraph& d, const SolverGuards& guards) {
    return gamma_vec_bruteforce(d, GraphParameter::CliqueNumber, guards);
}

int tau_vec_via_orderings(const Digraph& d, const SolverGuards& guards) {
    return gamma_vec_bruteforce(d, GraphParameter::VertexCover, guards);
}

// ---- feedback vertex number ----

namespace {

// Shortest directed cycle among alive vertices, as a vertex list.
bool shortest_cycle_vertices(const Digraph& d, const std::vector<uint8_t>& alive,
                             std::vector<Vertex>& cycle) {
    const int n = d.n();
    int best_len = INT_MAX;
    std::vector<int> parent(static_cast<size_t>(n)), dist(static_cast<size_t>(n));
    for (Vertex s = 0; s < n; ++s) {
        if (!alive[static_cast<size_t>(s)]) continue;
        if (best_len == 2) break;
        std::fill(dist.begin(), dist.end(), -1);
        dist[static_cast<size_t>(s)] = 0;
        std::queue<Vertex> q;
        q.push(s);
        int found = -1;
        Vertex last = -1;
        while (!q.empty() && found == -1) {
            Vertex v = q.front();
            q.pop();
            if (dist[static_cast<size_t>(v)] + 1 >= best_len) break;
            for (Vertex w : d.out_neighbors(v)) {
                if (!alive[static_cast<size_t>(w)]) continue;
                if (w == s) {
                    found = dist[static_cast<size_t>(v)] + 1;
                    last = v;
                    break;
                }
                if (dist[static_cast<size_t>(w)] == -1) {
                    dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
                    parent[static_cast<size_t>(w)] = v;
                    q.push(w);
                }
            }
        }
        if (found != -1 && found < best_len) {
            best_len = found;
            cycle.clear();
            for (Vertex v = last; v != s; v = parent[static_cast<size_t>(v)])
                cycle.push_back(v);
            cycle.push_back(s);
            std::reverse(cycle.begin(), cycle.end());
        }
    }
    return best_len != INT_MAX;
}

void fvn_dfs(const Digraph& d, std::vector<uint8_t>& alive, int removed, int& best) {
    std::vector<Vertex> cycle;
    if (!shortest_cycle_vertices(d, alive, cycle)) {
        best = std::min(best, removed);
        return;
    }
    if (removed + 1 >= best) return;
    for (Vertex v : cycle) {
        alive[static_cast<size_t>(v)] = 0;
        fvn_dfs(d, alive, removed + 1, best);
        alive[static_cast<size_t>(v)] = 1;
    }
}

} // namespace

int fvn(const Digraph& d, const SolverGuards& guards) {
    if (d.n() > guards.dp_n) throw GuardError(guard_msg("fvn", d.n(), guards.dp_n));
    std::vector<uint8_t> alive(static_cast<size_t>(d.n()), 1);
    int best = d.n();
    fvn_dfs(d, alive, 0, best);
    return best;
}

// ---- minimal feedback arc sets ----

std::vector<std::vector<Arc>> minimal_feedback_arc_sets(const Digraph& d,
                                                        const SolverGuards& guards) {
    const int n = d.n();
    // Only arcs lying on a directed cycle can appear in a minimal FAS.
    std::vector<std::vector<uint8_t>> reach(
        static_cast<size_t>(n), std::vector<uint8_t>(static_cast<size_t>(n), 0));
    for (Vertex s = 0; s < n; ++s) {
        std::queue<Vertex> q;
        q.push(s);
        reach[static_cast<size_t>(s)][static_cast<size_t>(s)] = 1;
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : d.out_neighbors(v))
                if (!reach[static_cast<size_t>(s)][static_cast<size_t>(w)]) {
                    reach[static_cast<size_t>(s)][static_cast<size_t>(w)] = 1;
                    q.push(w);
                }
        }
    }
    std::vector<Arc> cyclic;
    for (const Arc& a : d.arcs())
        if (reach[static_cast<size_t>(a.head)][static_cast<size_t>(a.tail)]) cyclic.push_back(a);
    const int m = static_cast<int>(cyclic.size());
    if (m > guards.minimal_fas_arcs || m > 25)
        throw GuardError(guard_msg("minimal_feedback_arc_sets (cycle arcs)", m,
                                   std::min(guards.minimal_fas_arcs, 25)));

    // Kahn over adjacency that skips dropped cyclic arcs.
    std::vector<int> base_indeg(static_cast<size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) base_indeg[static_cast<size_t>(v)] = d.in_degree(v);
    std::vector<std::vector<std::pair<Vertex, int>>> out_id(static_cast<size_t>(n));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : d.out_neighbors(u)) {
            int id = -1;
            for (int i = 0; i < m; ++i)
                if (cyclic[static_cast<size_t>(i)] == Arc{u, v}) {
                    id = i;
                    break;
                }
            out_id[static_cast<size_t>(u)].push_back({v, id});
        }
    auto acyclic_without = [&](uint32_t drop) {
        std::vector<int> indeg = base_indeg;
        for (int i = 0; i < m; ++i)
            if (drop >> i & 1u) --indeg[static_cast<size_t>(cyclic[static_cast<size_t>(i)].head)];
        std::vector<Vertex> stack;
        for (Vertex v = 0; v < n; ++v)
            if (indeg[static_cast<size_t>(v)] == 0) stack.push_back(v);
        int taken = 0;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            ++taken;
            for (auto [w, id] : out_id[static_cast<size_t>(v)]) {
                if (id >= 0 && (drop >> id & 1u)) continue;
                if (--indeg[static_cast<size_t>(w)] == 0) stack.push_back(w);
            }
        }
        return taken == n;
    };

    // Masks by increasing popcount: any FAS that contains an already-found
    // minimal FAS is itself non-minimal and is skipped.
    std::vector<uint32_t> order;
    order.reserve(1u << m);
    for (uint32_t mask = 0; mask < (1u << m); ++mask) order.push_back(mask);
    std::stable_sort(order.begin(), order.end(), [](uint32_t a, uint32_t b) {
        return std::popcount(a) < std::popcount(b);
    });
    std::vector<uint32_t> minimal;
    for (uint32_t mask : order) {
        bool superset = false;
        for (uint32_t f : minimal)
            if ((mask & f) == f) {
                superset = true;
                break;
            }
        if (superset) continue;
        if (acyclic_without(mask)) minimal.push_back(mask);
    }

    std::vector<std::vector<Arc>> result;
    result.reserve(minimal.size());
    for (uint32_t mask : minimal) {
        std::vector<Arc> f;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1u) f.push_back(cyclic[static_cast<size_t>(i)]);
        result.push_back(std::move(f));
    }
    std::sort(result.begin(), result.end());
    return result;
}

int gamma_via_minimal_fas(const Digraph& d, GraphParameter sel, const SolverGuards& guards) {
    int best = INT_MAX;
    for (const auto& f : minimal_feedback_arc_sets(d, guards))
        best = std::min(best, apply_parameter(graph_of_arcset(d, f), sel));
    return best;
}

int dig_lower_bound(const Digraph& d) {
    int best = 0;
    for (Vertex v = 0; v < d.n(); ++v) best = std::max(best, dig(d, v));
    return best;
}

// ---- Brooks tightness scan ----

namespace {

bool has_brooks_component(const UndirectedGraph& g, int k) {
    for (const auto& comp : connected_components(g)) {
        if (k == 2) {
            // Odd cycle: connected, 2-regular, odd size.
            if (comp.size() % 2 == 0 || comp.size() < 3) continue;
            bool regular = true;
            for (Vertex v : comp)
                if (g.degree(v) != 2) {
                    regular = false;
                    break;
                }
            if (regular) return true;
        } else {
            // K_{k+1}: connected, k-regular, exactly k+1 vertices.
            if (static_cast<int>(comp.size()) != k + 1) continue;
            bool complete = true;
            for (Vertex v : comp)
                if (g.degree(v) != k) {
                    complete = false;
                    break;
                }
            if (complete) return true;
        }
    }
    return false;
}

} // namespace

BrooksScanReport brooks_tightness_scan(const Digraph& d, int k, const SolverGuards& guards) {
    const int n = d.n();
    if (n > guards.brute_n) throw GuardError(guard_msg("brooks_tightness_scan", n, guards.brute_n));
    const int width = degreewidth_dp(d, guards).value;
    if (width != k)
        throw InstanceError("brooks_tightness_scan: degreewidth is " + std::to_string(width) +
                            ", expected " + std::to_string(k));
    BrooksScanReport report;
    report.k = k;
    report.chi_a = dichromatic_number(d, guards);
    if (report.chi_a != k + 1) {
        report.conditional_holds_vacuously = true;
        return report;
    }
    for_each_permutation(n, [&](const std::vector<Vertex>& perm) {
        if (backedge_max_degree(d, perm) != k) return;
        ++report.orderings_checked;
        UndirectedGraph g = backedge_graph(d, Ordering(perm));
        if (!has_brooks_component(g, k)) report.violations.push_back(Ordering(perm));
    });
    return report;
}

} // namespace backedge
