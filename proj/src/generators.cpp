#include "backedge/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "backedge/rng.hpp"

namespace backedge {

Digraph gen_random(int n, double p, uint64_t seed) {
    if (n < 0) throw InstanceError("negative vertex count");
    if (p < 0.0 || p > 1.0) throw InstanceError("arc probability out of [0,1]");
    SplitMix64 rng(seed);
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            if (u == v) continue;
            if (rng.next_double() < p) arcs.push_back({u, v});
        }
    return Digraph(n, arcs);
}

Digraph gen_tournament(int n, uint64_t seed) {
    if (n < 0) throw InstanceError("negative vertex count");
    SplitMix64 rng(seed);
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (rng.next() & 1ULL)
                arcs.push_back({u, v});
            else
                arcs.push_back({v, u});
        }
    return Digraph(n, arcs);
}

namespace {

// Fisher-Yates with the portable generator.
std::vector<Vertex> random_permutation(int n, SplitMix64& rng) {
    std::vector<Vertex> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        const auto j = static_cast<size_t>(rng.next_below(static_cast<uint64_t>(i) + 1));
        std::swap(perm[static_cast<size_t>(i)], perm[j]);
    }
    return perm;
}

bool has_fixed_point(const std::vector<Vertex>& perm) {
    for (size_t i = 0; i < perm.size(); ++i)
        if (perm[i] == static_cast<Vertex>(i)) return true;
    return false;
}

} // namespace

Digraph gen_kregular(int n, int k, uint64_t seed) {
    if (n < 0) throw InstanceError("negative vertex count");
    if (k < 0) throw InstanceError("negative degree");
    if (k >= n && k > 0)
        throw InstanceError("k-regular digraph needs k <= n-1 (got k=" + std::to_string(k) +
                            ", n=" + std::to_string(n) + ")");
    if (k == 0) return Digraph(n, {});

    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < 5000; ++attempt) {
        std::vector<std::vector<uint8_t>> used(
            static_cast<size_t>(n), std::vector<uint8_t>(static_cast<size_t>(n), 0));
        std::vector<Arc> arcs;
        bool ok = true;
        for (int layer = 0; layer < k && ok; ++layer) {
            std::vector<Vertex> perm;
            int tries = 0;
            do {
                perm = random_permutation(n, rng);
            } while (has_fixed_point(perm) && ++tries < 200);
            if (has_fixed_point(perm)) {
                ok = false;
                break;
            }
            for (Vertex v = 0; v < n; ++v) {
                Vertex w = perm[static_cast<size_t>(v)];
                if (used[static_cast<size_t>(v)][static_cast<size_t>(w)]) {
                    ok = false;
                    break;
                }
                used[static_cast<size_t>(v)][static_cast<size_t>(w)] = 1;
                arcs.push_back({v, w});
            }
        }
        if (ok) return Digraph(n, arcs);
    }

    // Rotations v -> v+r are fixed-point-free and pairwise arc-disjoint.
    std::vector<Arc> arcs;
    for (int r = 1; r <= k; ++r)
        for (Vertex v = 0; v < n; ++v) arcs.push_back({v, (v + r) % n});
    return Digraph(n, arcs);
}

UndirectedGraph complete_graph(int n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
    return UndirectedGraph(n, edges);
}

UndirectedGraph cycle_graph(int n) {
    if (n < 3) throw InstanceError("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) {
        Vertex w = (v + 1) % n;
        edges.push_back({std::min(v, w), std::max(v, w)});
    }
    return UndirectedGraph(n, edges);
}

UndirectedGraph path_graph(int n) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return UndirectedGraph(n, edges);
}

UndirectedGraph star_graph(int n) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.push_back({0, v});
    return UndirectedGraph(n, edges);
}

Digraph gen_symmetric(SymmetricFamily family, int n) {
    switch (family) {
        case SymmetricFamily::Complete: return symmetric_closure(complete_graph(n));
        case SymmetricFamily::Cycle: return symmetric_closure(cycle_graph(n));
        case SymmetricFamily::Path: return symmetric_closure(path_graph(n));
        case SymmetricFamily::Star: return symmetric_closure(star_graph(n));
    }
    throw InstanceError("unknown symmetric family");
}

} // namespace backedge
