#include "backedge/ordering_costs.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <numeric>

namespace backedge {

namespace {

std::string guard_msg(const char* what, int n, int cap) {
    return std::string(what) + ": size " + std::to_string(n) +
           " exceeds guard " + std::to_string(cap);
}

uint32_t full_mask(int n) { return n >= 32 ? ~0u : ((1u << n) - 1); }

} // namespace

int arc_length(const Ordering& ord, Vertex u, Vertex v) {
    if (u == v) throw GraphError("arc_length: equal endpoints");
    return std::abs(ord.position(u) - ord.position(v));
}

int backedge_length_sum(const Digraph& d, const Ordering& ord) {
    int sum = 0;
    for (const Arc& a : d.arcs())
        if (ord.position(a.head) < ord.position(a.tail))
            sum += ord.position(a.tail) - ord.position(a.head);
    return sum;
}

int max_backedge_length(const Digraph& d, const Ordering& ord) {
    int best = 0;
    for (const Arc& a : d.arcs())
        if (ord.position(a.head) < ord.position(a.tail))
            best = std::max(best, ord.position(a.tail) - ord.position(a.head));
    return best;
}

int prefix_cut(const Digraph& d, const Ordering& ord, int i) {
    int count = 0;
    for (const Arc& a : d.arcs())
        if (ord.position(a.head) <= i && i < ord.position(a.tail)) ++count;
    return count;
}

int prefix_cut_sum(const Digraph& d, const Ordering& ord) {
    int sum = 0;
    for (int i = 0; i + 1 < d.n(); ++i) sum += prefix_cut(d, ord, i);
    return sum;
}

int max_prefix_cut(const Digraph& d, const Ordering& ord) {
    int best = 0;
    for (int i = 0; i + 1 < d.n(); ++i) best = std::max(best, prefix_cut(d, ord, i));
    return best;
}

int edge_length_sum(const UndirectedGraph& g, const Ordering& ord) {
    int sum = 0;
    for (const Edge& e : g.edges()) sum += std::abs(ord.position(e.u) - ord.position(e.v));
    return sum;
}

namespace {

// Shared prefix-cut DP. cut(S) must give, for a prefix set S, the quantity
// whose sum (mode Sum) or maximum (mode Max) over all proper nonempty
// prefixes is the cost of the ordering. table[S] = best cost of the cuts
// seen from S onward (cut(S) included; cut(empty set) is 0 by convention).
enum class CutMode { Sum, Max };

template <typename CutFn>
std::pair<int, Ordering> prefix_cut_dp(int n, CutMode mode, CutFn&& cut) {
    if (n == 0) return {0, Ordering()};
    const uint32_t full = full_mask(n);
    std::vector<uint16_t> table(static_cast<size_t>(full) + 1, 0);
    for (uint32_t mask = full; mask-- > 0;) {
        int best = INT_MAX;
        for (int u = 0; u < n; ++u) {
            if (mask >> u & 1u) continue;
            best = std::min(best, static_cast<int>(table[mask | (1u << u)]));
        }
        const int c = mask == 0 ? 0 : cut(mask);
        table[mask] =
            static_cast<uint16_t>(mode == CutMode::Sum ? c + best : std::max(c, best));
    }

    // Lexicographically smallest optimal witness. For the sum the running
    // spent cost pins each step to an exact residual; for the max any
    // continuation whose table value stays within the optimum is fine (an
    // earlier cut may already dominate), so the comparison is against the
    // global value, not the state residual.
    const int value = table[0];
    std::vector<Vertex> perm;
    perm.reserve(static_cast<size_t>(n));
    uint32_t placed = 0;
    int spent = 0;
    while (static_cast<int>(perm.size()) < n) {
        const int c = placed == 0 ? 0 : cut(placed);
        for (int u = 0; u < n; ++u) {
            if (placed >> u & 1u) continue;
            const int next = static_cast<int>(table[placed | (1u << u)]);
            const bool ok = mode == CutMode::Sum ? (spent + c + next == value)
                                                 : (next <= value);
            if (ok) {
                perm.push_back(u);
                placed |= 1u << u;
                spent += c;
                break;
            }
        }
    }
    return {value, Ordering(std::move(perm))};
}

} // namespace

CostReport di_ola(const Digraph& d, const SolverGuards& guards) {
    const int n = d.n();
    if (n > guards.dp_n) throw GuardError(guard_msg("di_ola", n, guards.dp_n));
    std::vector<uint32_t> inm(static_cast<size_t>(n), 0);
    for (const Arc& a : d.arcs()) inm[static_cast<size_t>(a.head)] |= 1u << a.tail;
    // Backward arcs crossing the cut behind prefix S: arcs entering S from
    // outside. Summed over the chain of prefixes this is the total length.
    auto cut = [&](uint32_t mask) {
        int c = 0;
        uint32_t rest = mask;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            c += std::popcount(inm[static_cast<size_t>(v)] & ~mask);
        }
        return c;
    };
    auto [value, witness] = prefix_cut_dp(n, CutMode::Sum, cut);
    return {value, std::move(witness), std::nullopt, "subset_dp"};
}

CostReport ola_undirected(const UndirectedGraph& g, const SolverGuards& guards) {
    const int n = g.n();
    if (n > guards.dp_n) throw GuardError(guard_msg("ola_undirected", n, guards.dp_n));
    std::vector<uint32_t> adjm(static_cast<size_t>(n), 0);
    for (const Edge& e : g.edges()) {
        adjm[static_cast<size_t>(e.u)] |= 1u << e.v;
        adjm[static_cast<size_t>(e.v)] |= 1u << e.u;
    }
    auto cut = [&](uint32_t mask) {
        int c = 0;
        uint32_t rest = mask;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            c += std::popcount(adjm[static_cast<size_t>(v)] & ~mask);
        }
        return c;
    };
    auto [value, witness] = prefix_cut_dp(n, CutMode::Sum, cut);
    return {value, std::move(witness), std::nullopt, "subset_dp"};
}

namespace {

// Value-only OLA of a backedge graph, used in the inner loop of ola_vec.
int ola_value(const UndirectedGraph& g) {
    const int n = g.n();
    std::vector<uint32_t> adjm(static_cast<size_t>(n), 0);
    for (const Edge& e : g.edges()) {
        adjm[static_cast<size_t>(e.u)] |= 1u << e.v;
        adjm[static_cast<size_t>(e.v)] |= 1u << e.u;
    }
    auto cut = [&](uint32_t mask) {
        int c = 0;
        uint32_t rest = mask;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            c += std::popcount(adjm[static_cast<size_t>(v)] & ~mask);
        }
        return c;
    };
    return prefix_cut_dp(n, CutMode::Sum, cut).first;
}

} // namespace

CostReport ola_vec(const Digraph& d, const SolverGuards& guards) {
    const int n = d.n();
    if (n > guards.ola_vec_n) throw GuardError(guard_msg("ola_vec", n, guards.ola_vec_n));
    int best = INT_MAX;
    std::vector<Vertex> best_perm;
    std::vector<Vertex> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int v = ola_value(backedge_graph(d, Ordering(perm)));
        if (v < best) {
            best = v;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (best == INT_MAX) {
        best = 0;
        best_perm.clear();
    }
    Ordering outer(best_perm);
    CostReport inner = ola_undirected(backedge_graph(d, outer), guards);
    return {best, std::move(outer), std::move(inner.witness), "double_bruteforce"};
}

CostReport directed_cutwidth(const Digraph& d, const SolverGuards& guards) {
    const int n = d.n();
    if (n > guards.dp_n) throw GuardError(guard_msg("directed_cutwidth", n, guards.dp_n));
    std::vector<uint32_t> inm(static_cast<size_t>(n), 0);
    for (const Arc& a : d.arcs()) inm[static_cast<size_t>(a.head)] |= 1u << a.tail;
    auto cut = [&](uint32_t mask) {
        int c = 0;
        uint32_t rest = mask;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            c += std::popcount(inm[static_cast<size_t>(v)] & ~mask);
        }
        return c;
    };
    auto [value, witness] = prefix_cut_dp(n, CutMode::Max, cut);
    return {value, std::move(witness), std::nullopt, "subset_dp"};
}

namespace {

struct BandwidthSearch {
    const Digraph& d;
    int n;
    int best = INT_MAX;
    std::vector<Vertex> perm;
    std::vector<Vertex> best_perm;
    std::vector<int> pos;

    explicit BandwidthSearch(const Digraph& dig)
        : d(dig), n(dig.n()), pos(static_cast<size_t>(dig.n()), -1) {}

    // Lexicographic DFS with strict improvement keeps the first (and thus
    // lexicographically smallest) optimal ordering.
    void dfs(int depth, int partial) {
        if (partial >= best) return;
        if (depth == n) {
            best = partial;
            best_perm = perm;
            return;
        }
        for (Vertex u = 0; u < n; ++u) {
            if (pos[static_cast<size_t>(u)] != -1) continue;
            int widened = partial;
            for (Vertex w : d.out_neighbors(u)) {
                int p = pos[static_cast<size_t>(w)];
                if (p != -1) widened = std::max(widened, depth - p);
            }
            if (widened >= best) continue;
            pos[static_cast<size_t>(u)] = depth;
            perm.push_back(u);
            dfs(depth + 1, widened);
            perm.pop_back();
            pos[static_cast<size_t>(u)] = -1;
        }
    }
};

} // namespace

CostReport directed_bandwidth(const Digraph& d, const SolverGuards& guards) {
    const int n = d.n();
    if (n > guards.brute_n)
        throw GuardError(guard_msg("directed_bandwidth", n, guards.brute_n));
    BandwidthSearch search(d);
    search.dfs(0, 0);
    return {search.best == INT_MAX ? 0 : search.best, Ordering(search.best_perm),
            std::nullopt, "dfs_bb"};
}

} // namespace backedge
