#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "backedge/digraph.hpp"
#include "backedge/generators.hpp"
#include "backedge/io.hpp"
#include "backedge/ordering_costs.hpp"
#include "backedge/reduction.hpp"
#include "backedge/width.hpp"

using json = nlohmann::ordered_json;
using namespace backedge;

namespace {

// 2^n solver tables must stay in memory; raising a guard beyond this is
// rejected rather than honored.
constexpr int kHardGuardCap = 26;

struct CommonOpts {
    int guard_n = 0;  // 0 = defaults
    int threads = 1;  // reserved; solvers currently run on one thread
};

SolverGuards make_guards(const CommonOpts& opts) {
    SolverGuards g;
    if (opts.guard_n > 0) {
        if (opts.guard_n > kHardGuardCap)
            throw GuardError("guard override " + std::to_string(opts.guard_n) +
                             " exceeds the hard cap " + std::to_string(kHardGuardCap));
        g.brute_n = opts.guard_n;
        g.dp_n = opts.guard_n;
        g.dichromatic_n = opts.guard_n;
        g.ola_vec_n = opts.guard_n;
    }
    return g;
}

json guards_json(const SolverGuards& g) {
    return json{{"brute_n", g.brute_n},
                {"dp_n", g.dp_n},
                {"dichromatic_n", g.dichromatic_n},
                {"minimal_fas_arcs", g.minimal_fas_arcs},
                {"ola_vec_n", g.ola_vec_n},
                {"sat_vars", g.sat_vars}};
}

json ordering_json(const Ordering& ord) {
    json arr = json::array();
    for (Vertex v : ord.perm()) arr.push_back(v);
    return arr;
}

json arcs_json(const std::vector<Arc>& arcs) {
    json arr = json::array();
    for (const Arc& a : arcs) arr.push_back(json::array({a.tail, a.head}));
    return arr;
}

class Stopwatch {
public:
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const json& report) { std::cout << report.dump() << "\n"; }

void write_dot_file(const std::string& path, const Digraph& d, const Ordering* ord) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    out << to_dot(d, ord);
}

int run_compute(const std::string& param, const std::string& input,
                const std::string& dot_path, const CommonOpts& opts) {
    const SolverGuards guards = make_guards(opts);
    const Digraph d = read_edge_list_file(input);
    Stopwatch timer;

    json report;
    report["parameter"] = param;
    std::optional<Ordering> dot_order;

    if (param == "degreewidth") {
        WidthResult r = degreewidth_dp(d, guards);
        report["value"] = r.value;
        report["witness"] = json{{"ordering", ordering_json(r.witness)}};
        report["method"] = r.method;
        dot_order = r.witness;
    } else if (param == "dichromatic") {
        report["value"] = dichromatic_number(d, guards);
        report["witness"] = nullptr;
        report["method"] = "subset_dp";
    } else if (param == "diclique") {
        report["value"] = directed_clique_number(d, guards);
        report["witness"] = nullptr;
        report["method"] = "bruteforce";
    } else if (param == "fvn") {
        report["value"] = fvn(d, guards);
        report["witness"] = nullptr;
        report["method"] = "cycle_bb";
    } else if (param == "diOLA") {
        CostReport r = di_ola(d, guards);
        report["value"] = r.value;
        report["witness"] = json{{"ordering", ordering_json(r.witness)}};
        report["method"] = r.method;
        dot_order = r.witness;
    } else if (param == "OLAvec") {
        CostReport r = ola_vec(d, guards);
        report["value"] = r.value;
        report["witness"] = json{{"ordering", ordering_json(r.witness)},
                                 {"inner_ordering", ordering_json(*r.inner)}};
        report["method"] = r.method;
        dot_order = r.witness;
    } else if (param == "dcw") {
        CostReport r = directed_cutwidth(d, guards);
        report["value"] = r.value;
        report["witness"] = json{{"ordering", ordering_json(r.witness)}};
        report["method"] = r.method;
        dot_order = r.witness;
    } else if (param == "dbw") {
        CostReport r = directed_bandwidth(d, guards);
        report["value"] = r.value;
        report["witness"] = json{{"ordering", ordering_json(r.witness)}};
        report["method"] = r.method;
        dot_order = r.witness;
    } else if (param == "dmax") {
        report["value"] = delta_max(d);
        report["witness"] = nullptr;
        report["method"] = "direct";
    } else if (param == "dmin") {
        report["value"] = delta_min(d);
        report["witness"] = nullptr;
        report["method"] = "direct";
    } else if (param == "diglb") {
        report["value"] = dig_lower_bound(d);
        report["witness"] = nullptr;
        report["method"] = "direct";
    } else {
        throw InstanceError("unknown parameter '" + param + "'");
    }

    report["elapsed_ms"] = timer.ms();
    report["guards"] = guards_json(guards);
    emit(report);
    std::cerr << param << " = " << report["value"] << " (" << report["method"].get<std::string>()
              << ", " << report["elapsed_ms"] << " ms)\n";
    if (!dot_path.empty())
        write_dot_file(dot_path, d, dot_order ? &*dot_order : nullptr);
    return 0;
}

int run_decide(const std::string& input, int k, const CommonOpts& opts) {
    const SolverGuards guards = make_guards(opts);
    const Digraph d = read_edge_list_file(input);
    Stopwatch timer;

    json report;
    report["parameter"] = "k-degreewidth";
    report["k"] = k;
    bool answer;
    if (d.n() <= guards.dp_n) {
        WidthResult r = degreewidth_dp(d, guards);
        answer = r.value <= k;
        report["answer"] = answer;
        report["witness"] =
            answer ? json{{"ordering", ordering_json(r.witness)}} : json(nullptr);
        report["method"] = "dp";
    } else {
        auto fas = degreewidth_via_fas(d, k);
        answer = fas.has_value();
        report["answer"] = answer;
        report["witness"] = answer ? json{{"fas", arcs_json(*fas)}} : json(nullptr);
        report["method"] = "fas_bb";
    }
    report["elapsed_ms"] = timer.ms();
    report["guards"] = guards_json(guards);
    emit(report);
    std::cerr << "degreewidth <= " << k << ": " << (answer ? "yes" : "no") << "\n";
    return 0;
}

int run_reduce(const std::string& input, int k, const std::string& output) {
    const CnfFormula phi = read_dimacs_file(input);
    const ReductionOutput r = build_reduction(phi, k);

    write_edge_list_file(output, r.digraph);
    json roles;
    for (Vertex v = 0; v < r.digraph.n(); ++v)
        roles[std::to_string(v)] = r.roles[static_cast<size_t>(v)];
    const std::string roles_path = output + ".roles.json";
    std::ofstream roles_out(roles_path);
    if (!roles_out) throw ParseError("cannot open '" + roles_path + "' for writing");
    roles_out << roles.dump(2) << "\n";

    json report;
    report["k"] = k;
    report["vars"] = phi.num_vars();
    report["clauses"] = phi.num_clauses();
    report["vertices"] = r.digraph.n();
    report["arcs"] = r.digraph.arc_count();
    report["output"] = output;
    report["roles_output"] = roles_path;
    emit(report);
    std::cerr << "reduction: " << r.digraph.n() << " vertices, " << r.digraph.arc_count()
              << " arcs\n";
    return 0;
}

int run_verify(const std::string& input, int k, const CommonOpts& opts) {
    const SolverGuards guards = make_guards(opts);
    const CnfFormula phi = read_dimacs_file(input);
    Stopwatch timer;

    const ReductionOutput r = build_reduction(phi, k);
    auto nu = sat_bruteforce(phi, guards);

    json report;
    report["k"] = k;
    report["vars"] = phi.num_vars();
    report["clauses"] = phi.num_clauses();
    report["vertices"] = r.digraph.n();
    report["satisfiable"] = nu.has_value();

    bool agree;
    if (nu) {
        std::vector<Arc> fas = witness_fas_from_valuation(r, *nu);
        const bool fas_ok = is_fas(r.digraph, fas);
        const int delta = max_degree(graph_of_arcset(r.digraph, fas));
        const Valuation extracted = valuation_from_fas(r, fas);
        const bool roundtrip = phi.satisfied_by(extracted);
        report["witness_fas_size"] = fas.size();
        report["witness_is_fas"] = fas_ok;
        report["witness_delta"] = delta;
        report["roundtrip_satisfies"] = roundtrip;
        agree = fas_ok && delta == k && roundtrip;
    } else {
        const bool found = degreewidth_via_fas(r.digraph, k).has_value();
        report["fas_search_found_witness"] = found;
        agree = !found;
    }
    report["agree"] = agree;
    report["verdict"] = agree ? "OK" : "FAIL";
    report["elapsed_ms"] = timer.ms();
    emit(report);
    std::cerr << "verify: " << (nu ? "SAT" : "UNSAT") << " side "
              << (agree ? "verified" : "FAILED") << "\n";
    return agree ? 0 : 1;
}

int run_gen(const std::string& kind, int n, uint64_t seed, double p, int k,
            const std::string& family, const std::string& output,
            const std::string& dot_path) {
    Digraph d;
    if (kind == "random") {
        d = gen_random(n, p, seed);
    } else if (kind == "tournament") {
        d = gen_tournament(n, seed);
    } else if (kind == "kregular") {
        d = gen_kregular(n, k, seed);
    } else if (kind == "symmetric") {
        SymmetricFamily fam;
        if (family == "complete")
            fam = SymmetricFamily::Complete;
        else if (family == "cycle")
            fam = SymmetricFamily::Cycle;
        else if (family == "path")
            fam = SymmetricFamily::Path;
        else if (family == "star")
            fam = SymmetricFamily::Star;
        else
            throw InstanceError("unknown family '" + family +
                                "' (complete, cycle, path, star)");
        d = gen_symmetric(fam, n);
    } else {
        throw InstanceError("unknown generator '" + kind +
                            "' (random, tournament, kregular, symmetric)");
    }

    if (output.empty()) {
        write_edge_list(std::cout, d);
    } else {
        write_edge_list_file(output, d);
        json report;
        report["kind"] = kind;
        report["n"] = d.n();
        report["arcs"] = d.arc_count();
        report["seed"] = seed;
        report["output"] = output;
        emit(report);
    }
    if (!dot_path.empty()) write_dot_file(dot_path, d, nullptr);
    std::cerr << "generated " << kind << ": " << d.n() << " vertices, " << d.arc_count()
              << " arcs\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solvers for backedge-graph parameters of digraphs"};
    app.require_subcommand(1);

    CommonOpts opts;

    std::string param, input, output, dot_path, family = "complete", kind;
    int k = 1, n = 0, gen_k = 1;
    uint64_t seed = 0;
    double p = 0.5;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--guard-n", opts.guard_n,
                        "override the per-solver size guards (hard cap 26)");
        cmd->add_option("--threads", opts.threads, "worker threads (reserved)")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* compute =
        app.add_subcommand("compute", "compute a parameter of an edge-list digraph");
    compute->add_option("param", param,
                        "degreewidth|dichromatic|diclique|fvn|diOLA|OLAvec|dcw|dbw|dmax|dmin|diglb")
        ->required();
    compute->add_option("input", input, "edge-list file")->required();
    compute->add_option("--dot", dot_path, "export DOT with backedges of the witness");
    add_common(compute);

    CLI::App* decide = app.add_subcommand("decide", "is the degreewidth at most k?");
    decide->add_option("input", input, "edge-list file")->required();
    decide->add_option("-k,--k", k, "width bound")->required()->check(CLI::NonNegativeNumber);
    add_common(decide);

    CLI::App* reduce =
        app.add_subcommand("reduce", "materialize the 3-SAT to k-degreewidth construction");
    reduce->add_option("input", input, "DIMACS CNF file")->required();
    reduce->add_option("-k,--k", k, "target width (>= 1)")->required();
    reduce->add_option("-o,--output", output, "edge-list output path")->required();

    CLI::App* verify = app.add_subcommand(
        "verify", "check the construction equivalence on a small formula");
    verify->add_option("input", input, "DIMACS CNF file")->required();
    verify->add_option("-k,--k", k, "target width (>= 1)")->required();
    add_common(verify);

    CLI::App* gen = app.add_subcommand("gen", "generate a reproducible instance");
    gen->add_option("kind", kind, "random|tournament|kregular|symmetric")->required();
    gen->add_option("n", n, "vertex count")->required();
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--p", p, "arc probability for 'random'");
    gen->add_option("--k", gen_k, "degree for 'kregular'");
    gen->add_option("--family", family, "complete|cycle|path|star for 'symmetric'");
    gen->add_option("-o,--output", output, "edge-list output path (default stdout)");
    gen->add_option("--dot", dot_path, "also export DOT");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) return run_compute(param, input, dot_path, opts);
        if (decide->parsed()) return run_decide(input, k, opts);
        if (reduce->parsed()) return run_reduce(input, k, output);
        if (verify->parsed()) return run_verify(input, k, opts);
        if (gen->parsed()) return run_gen(kind, n, seed, p, gen_k, family, output, dot_path);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const GuardError& e) {
        std::cerr << "guard exceeded: " << e.what() << "\n";
        return 3;
    } catch (const InstanceError& e) {
        std::cerr << "invalid instance: " << e.what() << "\n";
        return 4;
    } catch (const GraphError& e) {
        std::cerr << "invalid instance: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
