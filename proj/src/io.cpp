#include "backedge/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace backedge {

namespace {

// Skips '#' comments and blank lines; false at end of input.
bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        const auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        return true;
    }
    return false;
}

} // namespace

Digraph parse_edge_list(std::istream& in) {
    std::string line;
    if (!next_data_line(in, line)) throw ParseError("edge list: missing header line");
    std::istringstream header(line);
    long long n = 0, m = 0;
    if (!(header >> n >> m)) throw ParseError("edge list: header must be 'n m'");
    std::string extra;
    if (header >> extra) throw ParseError("edge list: trailing tokens after header");
    if (n < 0 || m < 0) throw ParseError("edge list: negative counts");

    std::vector<Arc> arcs;
    arcs.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(in, line))
            throw ParseError("edge list: expected " + std::to_string(m) + " arcs, got " +
                             std::to_string(i));
        std::istringstream row(line);
        long long u = 0, v = 0;
        if (!(row >> u >> v))
            throw ParseError("edge list: bad arc line '" + line + "'");
        if (row >> extra) throw ParseError("edge list: trailing tokens on arc line");
        arcs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    if (next_data_line(in, line)) throw ParseError("edge list: extra data after arc list");
    return Digraph(static_cast<int>(n), arcs);
}

Digraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Digraph& d) {
    out << d.n() << ' ' << d.arc_count() << '\n';
    for (const Arc& a : d.arcs()) out << a.tail << ' ' << a.head << '\n';
}

void write_edge_list_file(const std::string& path, const Digraph& d) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    write_edge_list(out, d);
}

std::string to_dot(const Digraph& d, const Ordering* highlight) {
    std::ostringstream out;
    out << "digraph G {\n";
    for (Vertex v = 0; v < d.n(); ++v) {
        out << "  " << v;
        if (highlight) out << " [label=\"" << v << " @" << highlight->position(v) << "\"]";
        out << ";\n";
    }
    for (const Arc& a : d.arcs()) {
        out << "  " << a.tail << " -> " << a.head;
        if (highlight && highlight->position(a.head) < highlight->position(a.tail))
            out << " [color=red,style=bold]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

CnfFormula parse_dimacs(std::istream& in) {
    std::string line;
    long long vars = -1, clauses = -1;
    std::vector<std::array<Literal, 3>> parsed;
    std::vector<long long> current;

    while (std::getline(in, line)) {
        const auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == 'c') continue;
        if (line[pos] == 'p') {
            if (vars != -1) throw ParseError("dimacs: duplicate problem line");
            std::istringstream header(line);
            std::string p, fmt;
            if (!(header >> p >> fmt >> vars >> clauses) || fmt != "cnf")
                throw ParseError("dimacs: problem line must be 'p cnf <vars> <clauses>'");
            if (vars < 0 || clauses < 0) throw ParseError("dimacs: negative counts");
            continue;
        }
        if (vars == -1) throw ParseError("dimacs: clause before problem line");
        std::istringstream row(line);
        long long lit = 0;
        while (row >> lit) {
            if (lit == 0) {
                if (current.size() != 3)
                    throw ParseError("dimacs: clause " + std::to_string(parsed.size() + 1) +
                                     " has " + std::to_string(current.size()) +
                                     " literals, expected 3");
                std::array<Literal, 3> cl;
                for (int i = 0; i < 3; ++i) {
                    const long long raw = current[static_cast<size_t>(i)];
                    const long long var = raw > 0 ? raw : -raw;
                    if (var > vars)
                        throw ParseError("dimacs: literal " + std::to_string(raw) +
                                         " exceeds declared variable count");
                    cl[static_cast<size_t>(i)] =
                        Literal{static_cast<int>(var - 1), raw < 0};
                }
                parsed.push_back(cl);
                current.clear();
            } else {
                current.push_back(lit);
            }
        }
        if (row.fail() && !row.eof()) throw ParseError("dimacs: bad token in clause line");
    }
    if (vars == -1) throw ParseError("dimacs: missing problem line");
    if (!current.empty()) throw ParseError("dimacs: unterminated clause");
    if (static_cast<long long>(parsed.size()) != clauses)
        throw ParseError("dimacs: declared " + std::to_string(clauses) + " clauses, found " +
                         std::to_string(parsed.size()));
    return CnfFormula(static_cast<int>(vars), std::move(parsed));
}

CnfFormula read_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_dimacs(in);
}

} // namespace backedge
