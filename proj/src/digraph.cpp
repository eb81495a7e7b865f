#include "backedge/digraph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace backedge {

Ordering::Ordering(std::vector<Vertex> perm) : perm_(std::move(perm)) {
    const int n = static_cast<int>(perm_.size());
    pos_.assign(static_cast<size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        const Vertex v = perm_[static_cast<size_t>(i)];
        if (v < 0 || v >= n)
            throw GraphError("ordering entry " + std::to_string(v) + " out of range");
        if (pos_[static_cast<size_t>(v)] != -1)
            throw GraphError("ordering repeats vertex " + std::to_string(v));
        pos_[static_cast<size_t>(v)] = i;
    }
}

Ordering Ordering::identity(int n) {
    std::vector<Vertex> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    return Ordering(std::move(perm));
}

Ordering Ordering::reversed() const {
    std::vector<Vertex> perm(perm_.rbegin(), perm_.rend());
    return Ordering(std::move(perm));
}

Digraph::Digraph(int n, const std::vector<Arc>& arcs) : n_(n) {
    if (n < 0) throw GraphError("negative vertex count");
    adj_.assign(static_cast<size_t>(n), std::vector<uint8_t>(static_cast<size_t>(n), 0));
    out_.assign(static_cast<size_t>(n), {});
    in_.assign(static_cast<size_t>(n), {});
    for (const Arc& a : arcs) {
        if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
            throw GraphError("arc (" + std::to_string(a.tail) + "," +
                             std::to_string(a.head) + ") endpoint out of range");
        if (a.tail == a.head)
            throw GraphError("loop at vertex " + std::to_string(a.tail));
        auto& cell = adj_[static_cast<size_t>(a.tail)][static_cast<size_t>(a.head)];
        if (cell)
            throw GraphError("duplicate arc (" + std::to_string(a.tail) + "," +
                             std::to_string(a.head) + ")");
        cell = 1;
        out_[static_cast<size_t>(a.tail)].push_back(a.head);
        in_[static_cast<size_t>(a.head)].push_back(a.tail);
        ++arc_count_;
    }
    for (auto& v : out_) std::sort(v.begin(), v.end());
    for (auto& v : in_) std::sort(v.begin(), v.end());
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> out;
    out.reserve(static_cast<size_t>(arc_count_));
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : out_neighbors(u)) out.push_back({u, v});
    return out;
}

void Digraph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        throw GraphError("vertex " + std::to_string(v) + " out of range");
}

UndirectedGraph::UndirectedGraph(int n, const std::vector<Edge>& edges) : n_(n) {
    if (n < 0) throw GraphError("negative vertex count");
    adj_.assign(static_cast<size_t>(n), std::vector<uint8_t>(static_cast<size_t>(n), 0));
    nbr_.assign(static_cast<size_t>(n), {});
    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw GraphError("edge {" + std::to_string(e.u) + "," +
                             std::to_string(e.v) + "} endpoint out of range");
        if (e.u == e.v)
            throw GraphError("loop at vertex " + std::to_string(e.u));
        auto& cell = adj_[static_cast<size_t>(e.u)][static_cast<size_t>(e.v)];
        if (cell)
            throw GraphError("duplicate edge {" + std::to_string(e.u) + "," +
                             std::to_string(e.v) + "}");
        cell = 1;
        adj_[static_cast<size_t>(e.v)][static_cast<size_t>(e.u)] = 1;
        nbr_[static_cast<size_t>(e.u)].push_back(e.v);
        nbr_[static_cast<size_t>(e.v)].push_back(e.u);
        ++edge_count_;
    }
    for (auto& v : nbr_) std::sort(v.begin(), v.end());
}

std::vector<Edge> UndirectedGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<size_t>(edge_count_));
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.push_back({u, v});
    return out;
}

void UndirectedGraph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        throw GraphError("vertex " + std::to_string(v) + " out of range");
}

Digraph make_digraph(int n, const std::vector<Arc>& arcs) { return Digraph(n, arcs); }

UndirectedGraph backedge_graph(const Digraph& d, const Ordering& ord) {
    if (ord.size() != d.n())
        throw GraphError("ordering length " + std::to_string(ord.size()) +
                         " does not match vertex count " + std::to_string(d.n()));
    // Exactly one arc of a digon points backwards under any ordering, so no
    // edge can be produced twice.
    std::vector<Edge> edges;
    for (Vertex u = 0; u < d.n(); ++u)
        for (Vertex v : d.out_neighbors(u))
            if (ord.position(v) < ord.position(u))
                edges.push_back({std::min(u, v), std::max(u, v)});
    std::sort(edges.begin(), edges.end());
    return UndirectedGraph(d.n(), edges);
}

Digraph reverse(const Digraph& d) {
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<size_t>(d.arc_count()));
    for (const Arc& a : d.arcs()) arcs.push_back({a.head, a.tail});
    return Digraph(d.n(), arcs);
}

Digraph subdivide(const Digraph& d) {
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<size_t>(2 * d.arc_count()));
    Vertex next = d.n();
    for (const Arc& a : d.arcs()) {
        arcs.push_back({a.tail, next});
        arcs.push_back({next, a.head});
        ++next;
    }
    return Digraph(next, arcs);
}

Digraph symmetric_closure(const UndirectedGraph& g) {
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<size_t>(2 * g.edge_count()));
    for (const Edge& e : g.edges()) {
        arcs.push_back({e.u, e.v});
        arcs.push_back({e.v, e.u});
    }
    return Digraph(g.n(), arcs);
}

DegreeStats degree_stats(const Digraph& d, Vertex v) {
    d.check_vertex(v);
    DegreeStats s;
    s.out_deg = d.out_degree(v);
    s.in_deg = d.in_degree(v);
    s.d_max = std::max(s.out_deg, s.in_deg);
    s.d_min = std::min(s.out_deg, s.in_deg);
    for (Vertex w : d.out_neighbors(v))
        if (d.has_arc(w, v)) ++s.dig;
    return s;
}

int dig(const Digraph& d, Vertex v) { return degree_stats(d, v).dig; }

int delta_max(const Digraph& d) {
    int best = 0;
    for (Vertex v = 0; v < d.n(); ++v)
        best = std::max(best, degree_stats(d, v).d_max);
    return best;
}

int delta_min(const Digraph& d) {
    int best = 0;
    for (Vertex v = 0; v < d.n(); ++v)
        best = std::max(best, degree_stats(d, v).d_min);
    return best;
}

std::optional<Ordering> topological_order(const Digraph& d) {
    const int n = d.n();
    std::vector<int> indeg(static_cast<size_t>(n));
    for (Vertex v = 0; v < n; ++v) indeg[static_cast<size_t>(v)] = d.in_degree(v);
    // Min-vertex-first Kahn: the result is the lexicographically smallest
    // topological ordering.
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
    for (Vertex v = 0; v < n; ++v)
        if (indeg[static_cast<size_t>(v)] == 0) ready.push(v);
    std::vector<Vertex> perm;
    perm.reserve(static_cast<size_t>(n));
    while (!ready.empty()) {
        Vertex v = ready.top();
        ready.pop();
        perm.push_back(v);
        for (Vertex w : d.out_neighbors(v))
            if (--indeg[static_cast<size_t>(w)] == 0) ready.push(w);
    }
    if (static_cast<int>(perm.size()) != n) return std::nullopt;
    return Ordering(std::move(perm));
}

bool is_acyclic(const Digraph& d) { return topological_order(d).has_value(); }

UndirectedGraph graph_of_arcset(const Digraph& d, const std::vector<Arc>& fas) {
    std::vector<Edge> edges;
    for (const Arc& a : fas) {
        d.check_vertex(a.tail);
        d.check_vertex(a.head);
        if (!d.has_arc(a.tail, a.head))
            throw GraphError("arc (" + std::to_string(a.tail) + "," +
                             std::to_string(a.head) + ") not in host digraph");
        edges.push_back({std::min(a.tail, a.head), std::max(a.tail, a.head)});
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return UndirectedGraph(d.n(), edges);
}

bool is_fas(const Digraph& d, const std::vector<Arc>& fas) {
    return is_acyclic(remove_arcs(d, fas));
}

Digraph remove_arcs(const Digraph& d, const std::vector<Arc>& del) {
    std::vector<std::vector<uint8_t>> drop(
        static_cast<size_t>(d.n()), std::vector<uint8_t>(static_cast<size_t>(d.n()), 0));
    for (const Arc& a : del) {
        d.check_vertex(a.tail);
        d.check_vertex(a.head);
        if (!d.has_arc(a.tail, a.head))
            throw GraphError("arc (" + std::to_string(a.tail) + "," +
                             std::to_string(a.head) + ") not in host digraph");
        drop[static_cast<size_t>(a.tail)][static_cast<size_t>(a.head)] = 1;
    }
    std::vector<Arc> keep;
    for (const Arc& a : d.arcs())
        if (!drop[static_cast<size_t>(a.tail)][static_cast<size_t>(a.head)])
            keep.push_back(a);
    return Digraph(d.n(), keep);
}

UndirectedGraph underlying_graph(const Digraph& d) {
    std::vector<Edge> edges;
    for (const Arc& a : d.arcs()) {
        // Emit each digon once, from the arc with the smaller tail.
        if (a.tail < a.head || !d.has_arc(a.head, a.tail))
            edges.push_back({std::min(a.tail, a.head), std::max(a.tail, a.head)});
    }
    std::sort(edges.begin(), edges.end());
    return UndirectedGraph(d.n(), edges);
}

bool is_bipartite(const UndirectedGraph& g) {
    std::vector<int> side(static_cast<size_t>(g.n()), -1);
    for (Vertex s = 0; s < g.n(); ++s) {
        if (side[static_cast<size_t>(s)] != -1) continue;
        side[static_cast<size_t>(s)] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : g.neighbors(v)) {
                if (side[static_cast<size_t>(w)] == -1) {
                    side[static_cast<size_t>(w)] = 1 - side[static_cast<size_t>(v)];
                    q.push(w);
                } else if (side[static_cast<size_t>(w)] == side[static_cast<size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

int degeneracy(const UndirectedGraph& g) {
    const int n = g.n();
    std::vector<int> deg(static_cast<size_t>(n));
    std::vector<uint8_t> alive(static_cast<size_t>(n), 1);
    for (Vertex v = 0; v < n; ++v) deg[static_cast<size_t>(v)] = g.degree(v);
    int result = 0;
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v)
            if (alive[static_cast<size_t>(v)] &&
                (best == -1 || deg[static_cast<size_t>(v)] < deg[static_cast<size_t>(best)]))
                best = v;
        result = std::max(result, deg[static_cast<size_t>(best)]);
        alive[static_cast<size_t>(best)] = 0;
        for (Vertex w : g.neighbors(best))
            if (alive[static_cast<size_t>(w)]) --deg[static_cast<size_t>(w)];
    }
    return result;
}

std::vector<std::vector<Vertex>> connected_components(const UndirectedGraph& g) {
    std::vector<uint8_t> seen(static_cast<size_t>(g.n()), 0);
    std::vector<std::vector<Vertex>> comps;
    for (Vertex s = 0; s < g.n(); ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        std::vector<Vertex> comp;
        std::queue<Vertex> q;
        q.push(s);
        seen[static_cast<size_t>(s)] = 1;
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    q.push(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

} // namespace backedge
