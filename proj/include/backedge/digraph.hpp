#pragma once

#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "backedge/errors.hpp"

namespace backedge {

using Vertex = int;

// Ordered pair (tail -> head).
struct Arc {
    Vertex tail = 0;
    Vertex head = 0;

    friend bool operator==(const Arc& a, const Arc& b) {
        return a.tail == b.tail && a.head == b.head;
    }
    friend bool operator<(const Arc& a, const Arc& b) {
        return std::tie(a.tail, a.head) < std::tie(b.tail, b.head);
    }
};

// Unordered pair {u, v}, stored with u <= v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend bool operator==(const Edge& a, const Edge& b) {
        return a.u == b.u && a.v == b.v;
    }
    friend bool operator<(const Edge& a, const Edge& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    }
};

// A permutation of 0..n-1 together with its inverse (vertex -> position).
class Ordering {
public:
    Ordering() = default;
    explicit Ordering(std::vector<Vertex> perm);

    static Ordering identity(int n);

    int size() const { return static_cast<int>(perm_.size()); }
    Vertex at(int position) const { return perm_[static_cast<size_t>(position)]; }
    int position(Vertex v) const { return pos_[static_cast<size_t>(v)]; }
    const std::vector<Vertex>& perm() const { return perm_; }

    // Same vertices in the opposite left-to-right order.
    Ordering reversed() const;

    friend bool operator==(const Ordering& a, const Ordering& b) {
        return a.perm_ == b.perm_;
    }

private:
    std::vector<Vertex> perm_;
    std::vector<int> pos_;
};

// Simple digraph on vertices 0..n-1. Digons (both (u,v) and (v,u)) are
// allowed, loops and parallel arcs are not. Immutable after construction;
// dense rows give O(1) arc membership.
class Digraph {
public:
    Digraph() = default;
    Digraph(int n, const std::vector<Arc>& arcs);

    int n() const { return n_; }
    int arc_count() const { return arc_count_; }

    bool has_arc(Vertex u, Vertex v) const {
        return adj_[static_cast<size_t>(u)][static_cast<size_t>(v)] != 0;
    }
    const std::vector<Vertex>& out_neighbors(Vertex v) const {
        return out_[static_cast<size_t>(v)];
    }
    const std::vector<Vertex>& in_neighbors(Vertex v) const {
        return in_[static_cast<size_t>(v)];
    }
    int out_degree(Vertex v) const {
        return static_cast<int>(out_[static_cast<size_t>(v)].size());
    }
    int in_degree(Vertex v) const {
        return static_cast<int>(in_[static_cast<size_t>(v)].size());
    }

    // All arcs in lexicographic order.
    std::vector<Arc> arcs() const;

    void check_vertex(Vertex v) const;

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    int n_ = 0;
    int arc_count_ = 0;
    std::vector<std::vector<uint8_t>> adj_;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
};

// Simple undirected graph on vertices 0..n-1.
class UndirectedGraph {
public:
    UndirectedGraph() = default;
    UndirectedGraph(int n, const std::vector<Edge>& edges);

    int n() const { return n_; }
    int edge_count() const { return edge_count_; }

    bool has_edge(Vertex u, Vertex v) const {
        return adj_[static_cast<size_t>(u)][static_cast<size_t>(v)] != 0;
    }
    const std::vector<Vertex>& neighbors(Vertex v) const {
        return nbr_[static_cast<size_t>(v)];
    }
    int degree(Vertex v) const {
        return static_cast<int>(nbr_[static_cast<size_t>(v)].size());
    }

    // All edges {u, v} with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    void check_vertex(Vertex v) const;

    friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    int n_ = 0;
    int edge_count_ = 0;
    std::vector<std::vector<uint8_t>> adj_;
    std::vector<std::vector<Vertex>> nbr_;
};

// Per-vertex degree statistics. dig counts digons at the vertex.
struct DegreeStats {
    int out_deg = 0;
    int in_deg = 0;
    int d_max = 0;
    int d_min = 0;
    int dig = 0;
};

Digraph make_digraph(int n, const std::vector<Arc>& arcs);

// Undirected graph whose edges are the arcs of D pointing backwards under
// ord: {u,v} present iff (u,v) in A(D) with position(v) < position(u).
// A digon contributes exactly one edge under any ordering.
UndirectedGraph backedge_graph(const Digraph& d, const Ordering& ord);

// All arcs reversed.
Digraph reverse(const Digraph& d);

// Each arc (x,y) replaced by (x,w),(w,y) through a fresh vertex w.
// Fresh vertices are n, n+1, ... in lexicographic order of the arcs.
Digraph subdivide(const Digraph& d);

// Each edge replaced by a digon.
Digraph symmetric_closure(const UndirectedGraph& g);

DegreeStats degree_stats(const Digraph& d, Vertex v);
int dig(const Digraph& d, Vertex v);
int delta_max(const Digraph& d);
int delta_min(const Digraph& d);

bool is_acyclic(const Digraph& d);

// Lexicographically smallest topological ordering, or nullopt when cyclic.
std::optional<Ordering> topological_order(const Digraph& d);

// Undirected graph on V(D) with {u,v} iff (u,v) in F or (v,u) in F.
// Throws GraphError when F contains an arc not present in d.
UndirectedGraph graph_of_arcset(const Digraph& d, const std::vector<Arc>& fas);

// True iff D - F is acyclic.
bool is_fas(const Digraph& d, const std::vector<Arc>& fas);

// D with the given arcs deleted (arcs must exist in d).
Digraph remove_arcs(const Digraph& d, const std::vector<Arc>& arcs);

UndirectedGraph underlying_graph(const Digraph& d);
bool is_bipartite(const UndirectedGraph& g);

// Maximum over the min-degree elimination order.
int degeneracy(const UndirectedGraph& g);

// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const UndirectedGraph& g);

} // namespace backedge
