#include "backedge/reduction.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "backedge/rng.hpp"

namespace backedge {

CnfFormula::CnfFormula(int num_vars, std::vector<std::array<Literal, 3>> clauses)
    : num_vars_(num_vars), clauses_(std::move(clauses)) {
    if (num_vars < 0) throw InstanceError("negative variable count");
    for (size_t j = 0; j < clauses_.size(); ++j) {
        const auto& cl = clauses_[j];
        for (const Literal& l : cl)
            if (l.var < 0 || l.var >= num_vars)
                throw InstanceError("clause " + std::to_string(j + 1) +
                                    ": variable out of range");
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                if (complementary(cl[static_cast<size_t>(a)], cl[static_cast<size_t>(b)]))
                    throw InstanceError("clause " + std::to_string(j + 1) +
                                        " is tautological");
    }
}

bool CnfFormula::satisfied_by(const Valuation& nu) const {
    if (static_cast<int>(nu.value.size()) != num_vars_)
        throw InstanceError("valuation covers " + std::to_string(nu.value.size()) +
                            " variables, formula has " + std::to_string(num_vars_));
    for (const auto& cl : clauses_) {
        bool sat = false;
        for (const Literal& l : cl)
            if (nu.satisfies(l)) {
                sat = true;
                break;
            }
        if (!sat) return false;
    }
    return true;
}

std::optional<Valuation> sat_bruteforce(const CnfFormula& phi, const SolverGuards& guards) {
    const int n = phi.num_vars();
    if (n > guards.sat_vars)
        throw GuardError("sat_bruteforce: " + std::to_string(n) + " variables exceed guard " +
                         std::to_string(guards.sat_vars));
    for (uint64_t bits = 0; bits < (1ULL << n); ++bits) {
        Valuation nu;
        nu.value.resize(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) nu.value[static_cast<size_t>(v)] = (bits >> v) & 1ULL;
        if (phi.satisfied_by(nu)) return nu;
    }
    return std::nullopt;
}

TransferDigraph transfer_digraph(int p) {
    if (p < 1) throw InstanceError("transfer digraph needs at least one path");
    std::vector<Arc> arcs;
    TransferDigraph t;
    t.s = 0;
    t.t = p + 1;
    for (int i = 1; i <= p; ++i) {
        t.mids.push_back(i);
        arcs.push_back({t.s, i});
        arcs.push_back({i, t.t});
    }
    t.digraph = Digraph(p + 2, arcs);
    return t;
}

namespace {

std::string lit_role(int j, int i) {
    return "l:j=" + std::to_string(j + 1) + ",i=" + std::to_string(i + 1);
}
std::string lit_tilde_role(int j, int i) {
    return "l~:j=" + std::to_string(j + 1) + ",i=" + std::to_string(i + 1);
}
std::string cyc_role(int j, int i) {
    return "c:j=" + std::to_string(j + 1) + ",i=" + std::to_string(i + 1);
}

struct GadgetBuilder {
    std::vector<Arc> arcs;
    std::vector<std::string> roles;

    Vertex add_vertex(std::string role) {
        roles.push_back(std::move(role));
        return static_cast<Vertex>(roles.size()) - 1;
    }

    // p disjoint length-2 paths from src to dst with fresh mid vertices.
    Transfer add_transfer(Vertex src, Vertex dst, int p) {
        Transfer tr{src, dst, {}};
        for (int path = 1; path <= p; ++path) {
            Vertex mid = add_vertex("tr:src=" + roles[static_cast<size_t>(src)] +
                                    ",dst=" + roles[static_cast<size_t>(dst)] +
                                    ",path=" + std::to_string(path));
            arcs.push_back({src, mid});
            arcs.push_back({mid, dst});
            tr.mids.push_back(mid);
        }
        return tr;
    }
};

} // namespace

ReductionOutput build_reduction(const CnfFormula& phi, int k) {
    if (k < 1) throw InstanceError("the reduction is defined for k >= 1");
    const int m = phi.num_clauses();

    GadgetBuilder b;
    ReductionOutput r;
    r.k = k;
    r.formula = phi;
    r.lit.resize(static_cast<size_t>(m));
    r.lit_tilde.resize(static_cast<size_t>(m));
    r.cyc.resize(static_cast<size_t>(m));
    r.cycle_arcs.resize(static_cast<size_t>(m));
    r.literal_transfers.resize(static_cast<size_t>(m));

    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < 3; ++i) {
            r.lit[static_cast<size_t>(j)][static_cast<size_t>(i)] =
                b.add_vertex(lit_role(j, i));
            r.lit_tilde[static_cast<size_t>(j)][static_cast<size_t>(i)] =
                b.add_vertex(lit_tilde_role(j, i));
        }
        for (int i = 0; i < 3; ++i)
            r.cyc[static_cast<size_t>(j)][static_cast<size_t>(i)] =
                b.add_vertex(cyc_role(j, i));

        for (int i = 0; i < 3; ++i)
            r.literal_transfers[static_cast<size_t>(j)][static_cast<size_t>(i)] =
                b.add_transfer(r.lit[static_cast<size_t>(j)][static_cast<size_t>(i)],
                               r.lit_tilde[static_cast<size_t>(j)][static_cast<size_t>(i)],
                               2 * k);
        for (int i = 0; i < 3; ++i)
            for (int i2 = 0; i2 < 3; ++i2) {
                if (i2 == i) continue;
                r.link_transfers.push_back(
                    b.add_transfer(r.lit_tilde[static_cast<size_t>(j)][static_cast<size_t>(i)],
                                   r.lit[static_cast<size_t>(j)][static_cast<size_t>(i2)],
                                   2 * k + 1));
            }

        // Cycle (l~1, c1, l~2, c2, l~3, c3).
        for (int i = 0; i < 3; ++i) {
            Vertex a = r.lit_tilde[static_cast<size_t>(j)][static_cast<size_t>(i)];
            Vertex c = r.cyc[static_cast<size_t>(j)][static_cast<size_t>(i)];
            Vertex nxt = r.lit_tilde[static_cast<size_t>(j)][static_cast<size_t>((i + 1) % 3)];
            b.arcs.push_back({a, c});
            b.arcs.push_back({c, nxt});
            r.cycle_arcs[static_cast<size_t>(j)][static_cast<size_t>(2 * i)] = {a, c};
            r.cycle_arcs[static_cast<size_t>(j)][static_cast<size_t>(2 * i + 1)] = {c, nxt};
        }
    }

    // One size-(2k+1) transfer per ordered occurrence of complementary
    // literals in distinct clauses.
    for (int j = 0; j < m; ++j)
        for (int j2 = 0; j2 < m; ++j2) {
            if (j2 == j) continue;
            for (int i = 0; i < 3; ++i)
                for (int i2 = 0; i2 < 3; ++i2)
                    if (complementary(phi.clause(j)[static_cast<size_t>(i)],
                                      phi.clause(j2)[static_cast<size_t>(i2)]))
                        r.link_transfers.push_back(b.add_transfer(
                            r.lit_tilde[static_cast<size_t>(j)][static_cast<size_t>(i)],
                            r.lit[static_cast<size_t>(j2)][static_cast<size_t>(i2)],
                            2 * k + 1));
        }

    r.digraph = Digraph(static_cast<int>(b.roles.size()), b.arcs);
    r.roles = std::move(b.roles);
    return r;
}

namespace {

long cross_link_count(const CnfFormula& phi) {
    long links = 0;
    for (int j = 0; j < phi.num_clauses(); ++j)
        for (int j2 = 0; j2 < phi.num_clauses(); ++j2) {
            if (j2 == j) continue;
            for (int i = 0; i < 3; ++i)
                for (int i2 = 0; i2 < 3; ++i2)
                    if (complementary(phi.clause(j)[static_cast<size_t>(i)],
                                      phi.clause(j2)[static_cast<size_t>(i2)]))
                        ++links;
        }
    return links;
}

} // namespace

long reduction_vertex_count(const CnfFormula& phi, int k) {
    const long m = phi.num_clauses();
    return m * (9 + 3L * (2 * k) + 6L * (2 * k + 1)) + cross_link_count(phi) * (2L * k + 1);
}

long reduction_arc_count(const CnfFormula& phi, int k) {
    const long m = phi.num_clauses();
    return m * (6L * (2 * k) + 12L * (2 * k + 1) + 6) + cross_link_count(phi) * 2 * (2L * k + 1);
}

ReductionOutput clause_gadget(int k) {
    // A single clause on three distinct variables has no complementary
    // pair, so the output is exactly one clause gadget.
    CnfFormula phi(3, {{Literal{0, false}, Literal{1, false}, Literal{2, false}}});
    return build_reduction(phi, k);
}

std::vector<Arc> witness_fas_from_valuation(const ReductionOutput& r, const Valuation& nu) {
    if (!r.formula.satisfied_by(nu))
        throw InstanceError("valuation does not satisfy the formula");
    const int m = r.formula.num_clauses();
    const int k = r.k;
    std::vector<Arc> fas;
    for (int j = 0; j < m; ++j) {
        int chosen = -1;
        for (int i = 0; i < 3; ++i)
            if (nu.satisfies(r.formula.clause(j)[static_cast<size_t>(i)])) {
                chosen = i;
                break;
            }
        // The cycle arc leaving l~(j, chosen).
        fas.push_back(r.cycle_arcs[static_cast<size_t>(j)][static_cast<size_t>(2 * chosen)]);
        // Disconnect the other two literal transfers, cutting k paths at the
        // source and k at the sink so both endpoints get degree exactly k.
        for (int i = 0; i < 3; ++i) {
            if (i == chosen) continue;
            const Transfer& tr =
                r.literal_transfers[static_cast<size_t>(j)][static_cast<size_t>(i)];
            for (int t = 0; t < k; ++t)
                fas.push_back({tr.src, tr.mids[static_cast<size_t>(t)]});
            for (int t = k; t < 2 * k; ++t)
                fas.push_back({tr.mids[static_cast<size_t>(t)], tr.dst});
        }
    }
    std::sort(fas.begin(), fas.end());

    if (!is_fas(r.digraph, fas))
        throw std::logic_error("constructed witness is not a feedback arc set");
    const int width = max_degree(graph_of_arcset(r.digraph, fas));
    const int expected = m > 0 ? k : 0;
    if (width != expected)
        throw std::logic_error("constructed witness has max degree " + std::to_string(width) +
                               ", expected " + std::to_string(expected));
    return fas;
}

Valuation valuation_from_fas(const ReductionOutput& r, const std::vector<Arc>& fas) {
    if (!is_fas(r.digraph, fas))
        throw InstanceError("arc set is not a feedback arc set");
    if (max_degree(graph_of_arcset(r.digraph, fas)) > r.k)
        throw InstanceError("feedback arc set exceeds the degree bound");

    std::set<Arc> in_fas(fas.begin(), fas.end());
    const int m = r.formula.num_clauses();
    Valuation nu;
    nu.value.assign(static_cast<size_t>(r.formula.num_vars()), false);
    std::vector<int> forced(static_cast<size_t>(r.formula.num_vars()), -1);
    for (int j = 0; j < m; ++j) {
        for (int e = 0; e < 6; ++e) {
            if (!in_fas.count(r.cycle_arcs[static_cast<size_t>(j)][static_cast<size_t>(e)]))
                continue;
            // Arc 2i touches l~(j,i), arc 2i+1 touches l~(j,i+1).
            const int i = (e % 2 == 0) ? e / 2 : (e / 2 + 1) % 3;
            const Literal& l = r.formula.clause(j)[static_cast<size_t>(i)];
            const int want = l.negated ? 0 : 1;
            if (forced[static_cast<size_t>(l.var)] == -1) {
                forced[static_cast<size_t>(l.var)] = want;
            } else if (forced[static_cast<size_t>(l.var)] != want) {
                throw InstanceError("conflicting forced assignment for variable " +
                                    std::to_string(l.var + 1));
            }
        }
    }
    for (int v = 0; v < r.formula.num_vars(); ++v)
        nu.value[static_cast<size_t>(v)] = forced[static_cast<size_t>(v)] == 1;

    if (!r.formula.satisfied_by(nu))
        throw std::logic_error("extracted valuation does not satisfy the formula");
    return nu;
}

TransferBoundReport transfer_degree_bound_check(int k, int p, long samples, uint64_t seed) {
    if (p != 2 * k && p != 2 * k + 1)
        throw InstanceError("transfer bound check needs p == 2k or p == 2k+1");
    if (p < 1) throw InstanceError("transfer digraph needs at least one path");
    if (p > 31) throw GuardError("transfer bound check: subsets of more than 62 arcs");

    TransferBoundReport report;
    report.p = p;
    report.k = k;
    const int arcs = 2 * p; // arc 2i = (s, v_i), arc 2i+1 = (v_i, t)
    const int need = (p + 1) / 2;

    auto inspect = [&](uint64_t f) {
        ++report.subsets_checked;
        bool disconnects = true;
        for (int i = 0; i < p && disconnects; ++i)
            if (!((f >> (2 * i)) & 1ULL) && !((f >> (2 * i + 1)) & 1ULL)) disconnects = false;
        if (!disconnects) return;
        ++report.disconnecting;
        int ds = 0, dt = 0, dmid = 0;
        for (int i = 0; i < p; ++i) {
            const int a = static_cast<int>((f >> (2 * i)) & 1ULL);
            const int b = static_cast<int>((f >> (2 * i + 1)) & 1ULL);
            ds += a;
            dt += b;
            dmid = std::max(dmid, a + b);
        }
        const int delta = std::max({ds, dt, dmid});
        if (delta < need) ++report.bound_violations;
        if (p == 2 * k) {
            const bool equality = delta == k;
            const bool balanced = ds == k && dt == k;
            if (equality != balanced) ++report.equality_violations;
        }
    };

    if (samples <= 0) {
        if (arcs > 30) throw GuardError("claim check: exhaustive range too large");
        report.exhaustive = true;
        for (uint64_t f = 0; f < (1ULL << arcs); ++f) inspect(f);
    } else {
        report.exhaustive = false;
        SplitMix64 rng(seed);
        for (long s = 0; s < samples; ++s)
            inspect(rng.next() & ((1ULL << arcs) - 1));
    }
    return report;
}

BrooksGadget brooks_gadget(const Digraph& d, int k) {
    if (k < 2) throw InstanceError("the gadget is defined for k >= 2");
    BrooksGadget g;
    g.k = k;
    const int block = k + 1;
    const int n = d.n() * block;
    std::vector<Arc> arcs;
    g.roles.resize(static_cast<size_t>(n));

    auto digon = [&arcs](Vertex a, Vertex b) {
        arcs.push_back({a, b});
        arcs.push_back({b, a});
    };

    for (Vertex v = 0; v < d.n(); ++v) {
        const Vertex vm = g.minus_of(v);
        const Vertex vp = g.plus_of(v);
        g.roles[static_cast<size_t>(vm)] = "minus:v=" + std::to_string(v);
        g.roles[static_cast<size_t>(vp)] = "plus:v=" + std::to_string(v);
        for (int t = 1; t < k; ++t)
            g.roles[static_cast<size_t>(g.mid_of(v, t))] =
                "mid:v=" + std::to_string(v) + ",t=" + std::to_string(t);

        // Two symmetric cliques sharing the mid vertices.
        for (int t = 1; t < k; ++t) {
            digon(vm, g.mid_of(v, t));
            digon(vp, g.mid_of(v, t));
            for (int t2 = t + 1; t2 < k; ++t2) digon(g.mid_of(v, t), g.mid_of(v, t2));
        }
        arcs.push_back({vm, vp});
    }
    for (const Arc& a : d.arcs())
        arcs.push_back({g.plus_of(a.tail), g.minus_of(a.head)});

    g.digraph = Digraph(n, arcs);

    if (d.n() > 0) {
        if (delta_min(g.digraph) != k)
            throw std::logic_error("gadget max min-degree is not k");
        if (dig_lower_bound(g.digraph) != k)
            throw std::logic_error("gadget digon bound is not k");
    }
    return g;
}

} // namespace backedge
