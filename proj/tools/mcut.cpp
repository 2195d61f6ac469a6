// mcut: matching cut, perfect matching cut and disconnected perfect matching
// solver, class checker, reduction generator and cross-checker.

#include "mcut/crosscheck.hpp"
#include "mcut/io.hpp"
#include "mcut/oracle.hpp"
#include "mcut/reduction.hpp"
#include "mcut/solve.hpp"
#include "mcut/twosat.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace mcut;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kAnswered = 0, kUsage = 2, kBudget = 3, kDisagree = 4 };

struct Globals {
    double budget_seconds = 60;
    std::size_t max_oracle_n = 30;
    std::uint64_t seed = 1;
    std::string format = "text";

    oracle::Config config() const {
        return {max_oracle_n, std::chrono::duration<double>(budget_seconds)};
    }
    bool as_json() const { return format == "json"; }
};

std::string ids(std::span<const Vertex> vs) {
    std::string s;
    for (Vertex v : vs) s += (s.empty() ? "" : " ") + std::to_string(v);
    return s;
}

std::string edge_list(const std::vector<Edge>& es) {
    std::string s;
    for (const Edge& e : es) s += (s.empty() ? "" : " ") + std::to_string(e.u) + "-" + std::to_string(e.v);
    return s;
}

json edges_json(const std::vector<Edge>& es) {
    json a = json::array();
    for (const Edge& e : es) a.push_back({e.u, e.v});
    return a;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw io::ParseError("cannot write " + path);
    out << text;
}

// --- solve -----------------------------------------------------------------

struct SolveArgs {
    std::string file;
    std::string problem = "pmc";
    std::string algo = "auto";
    std::string emit_2cnf;
    Vertex root = 0;
    bool reverse = false;
};

int cmd_solve(const Globals& gl, const SolveArgs& a) {
    static const std::map<std::string, Problem> problems{
        {"mc", Problem::MC}, {"pmc", Problem::PMC}, {"dpm", Problem::DPM}};
    static const std::map<std::string, Algo> algos{
        {"auto", Algo::Auto}, {"fourchordal", Algo::FourChordal}, {"oracle", Algo::Oracle}};
    Graph g = io::read_graph_file(a.file);
    if (a.root >= g.order() && g.order() > 0) throw CLI::ValidationError("--root", "out of range");
    pmc::Options opts{a.root, a.reverse ? pmc::ScanOrder::Descending : pmc::ScanOrder::Ascending};
    const Problem p = problems.at(a.problem);
    Verdict v = solve(g, p, algos.at(a.algo), gl.config(), opts);

    if (!a.emit_2cnf.empty()) {
        if (!v.formula) {
            std::cerr << "warning: no 2-CNF formula was built (problem, algorithm or early NO)\n";
        } else {
            std::vector<std::string> comments{"perfect matching cut formula; variable i is vertex i-1",
                                              "true = side X"};
            write_file(a.emit_2cnf, io::cnf_to_string(io::from_2sat(*v.formula), comments));
            json map = json::object();
            for (Vertex x = 0; x < g.order(); ++x) map[std::to_string(x + 1)] = x;
            write_file(a.emit_2cnf + ".map.json", map.dump(2) + "\n");
        }
    }

    for (const auto& note : v.notes) std::cerr << "note: " << note << '\n';
    if (gl.as_json()) {
        json j;
        j["problem"] = a.problem;
        j["algo"] = to_string(v.used);
        j["verdict"] = v.yes ? "YES" : "NO";
        if (v.cut) {
            j["X"] = v.cut->members(Side::X);
            j["Y"] = v.cut->members(Side::Y);
            j["crossing"] = edges_json(v.cut->crossing);
        }
        if (v.matching) j["matching"] = edges_json(v.matching->edges);
        j["notes"] = v.notes;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << (v.yes ? "YES" : "NO") << '\n';
        if (v.cut) {
            std::cout << "X: " << ids(v.cut->members(Side::X)) << '\n'
                      << "Y: " << ids(v.cut->members(Side::Y)) << '\n'
                      << "crossing: " << edge_list(v.cut->crossing) << '\n';
        }
        if (v.matching) std::cout << "matching: " << edge_list(v.matching->edges) << '\n';
    }
    return kAnswered;
}

// --- check -----------------------------------------------------------------

struct CheckArgs {
    std::string file;
    std::optional<std::size_t> pt_free;
    std::optional<std::size_t> k_chordal;
    std::string pattern;
};

int cmd_check(const Globals& gl, const CheckArgs& a) {
    Graph g = io::read_graph_file(a.file);
    const auto cfg = gl.config();
    json j = json::array();
    auto report = [&](const std::string& name, bool holds, const std::string& what,
                      const std::vector<Vertex>& witness) {
        j.push_back({{"check", name}, {"holds", holds}, {"witness_kind", what}, {"witness", witness}});
        if (!gl.as_json()) {
            std::cout << name << ": " << (holds ? "true" : "false");
            if (!witness.empty()) std::cout << "  " << what << ": " << ids(witness);
            std::cout << '\n';
        }
    };
    if (a.pt_free) {
        auto path = oracle::longest_induced_path_witness(g, cfg);
        report("pt_free(" + std::to_string(*a.pt_free) + ")", path.size() < *a.pt_free,
               "longest induced path P" + std::to_string(path.size()), path);
    }
    if (a.k_chordal) {
        auto cycle = oracle::longest_induced_cycle_witness(g, cfg);
        const std::size_t len = cycle ? cycle->size() : 0;
        report("k_chordal(" + std::to_string(*a.k_chordal) + ")", len <= *a.k_chordal,
               cycle ? "longest induced cycle C" + std::to_string(len) : "no cycle",
               cycle.value_or(std::vector<Vertex>{}));
    }
    if (!a.pattern.empty()) {
        Graph pat = io::read_graph_file(a.pattern);
        auto emb = oracle::find_induced_embedding(g, pat, cfg);
        report("pattern_free(" + a.pattern + ")", !emb, emb ? "embedding of pattern vertices" : "",
               emb.value_or(std::vector<Vertex>{}));
    }
    if (j.empty()) throw CLI::ValidationError("check", "give --pt-free, --k-chordal or --pattern");
    if (gl.as_json()) std::cout << j.dump(2) << '\n';
    return kAnswered;
}

// --- reduce ----------------------------------------------------------------

int cmd_reduce(const Globals& gl, const std::string& file, const std::string& out) {
    Formula13 f = io::to_formula13(io::read_cnf_file(file));
    reduction::GadgetLayout layout = reduction::build_reduction(f);
    const std::string graph_path = out + ".graph";
    const std::string layout_path = out + ".layout.json";
    write_file(graph_path, io::graph_to_string(layout.graph));
    write_file(layout_path, io::layout_to_json(layout));

    std::vector<std::size_t> q_sizes;
    for (const auto& q : layout.q_cliques) q_sizes.push_back(q.size());
    if (gl.as_json()) {
        json j{{"graph", graph_path},        {"layout", layout_path},
               {"vertices", layout.graph.order()}, {"edges", layout.graph.size()},
               {"clauses", f.clauses.size()}, {"F", layout.f_clique.size()},
               {"T", layout.t_clique.size()}, {"Q", q_sizes}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "clauses=" << f.clauses.size() << " n=" << layout.graph.order()
                  << " m=" << layout.graph.size() << " |F|=" << layout.f_clique.size()
                  << " |T|=" << layout.t_clique.size() << " |Q|=";
        for (std::size_t i = 0; i < q_sizes.size(); ++i) std::cout << (i ? "," : "") << q_sizes[i];
        std::cout << "\nwrote " << graph_path << ' ' << layout_path << '\n';
    }
    return kAnswered;
}

// --- crosscheck ------------------------------------------------------------

int cmd_crosscheck(const Globals& gl, std::size_t count, std::size_t min_n, std::size_t max_n) {
    if (min_n < 1 || min_n > max_n) throw CLI::ValidationError("--min-n/--max-n", "bad range");
    auto r = crosscheck::run(gl.seed, count, {min_n, max_n}, gl.config());
    std::cout << (gl.as_json() ? crosscheck::to_json(r) : crosscheck::to_text(r));
    return r.disagreements.empty() ? kAnswered : kDisagree;
}

// --- twosat ----------------------------------------------------------------

int cmd_twosat(const Globals& gl, const std::string& file) {
    twosat::Instance inst = io::to_2sat(io::read_cnf_file(file));
    auto r = twosat::solve(inst);
    if (gl.as_json()) {
        json j{{"satisfiable", r.satisfiable()}};
        if (r.model) j["model"] = r.model->value;
        if (r.conflict) j["conflict_variable"] = *r.conflict + 1;
        std::cout << j.dump(2) << '\n';
    } else if (r.model) {
        std::cout << "SAT\nv";
        for (std::size_t x = 0; x < inst.var_count(); ++x) {
            std::cout << ' ' << ((*r.model)[static_cast<twosat::Var>(x)] ? "" : "-") << x + 1;
        }
        std::cout << " 0\n";
    } else {
        std::cout << "UNSAT\n";
    }
    return kAnswered;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Matching cuts: solve, check, reduce, crosscheck"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals gl;
    app.add_option("--budget-seconds", gl.budget_seconds, "Oracle time budget per call")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-oracle-n", gl.max_oracle_n, "Largest graph the oracle accepts");
    app.add_option("--seed", gl.seed, "Seed for all randomness");
    app.add_option("--format", gl.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    SolveArgs sa;
    auto* solve = app.add_subcommand("solve", "Decide mc, pmc or dpm for a graph file");
    solve->add_option("graph", sa.file)->required()->check(CLI::ExistingFile);
    solve->add_option("--problem", sa.problem)->check(CLI::IsMember({"mc", "pmc", "dpm"}));
    solve->add_option("--algo", sa.algo)->check(CLI::IsMember({"auto", "fourchordal", "oracle"}));
    solve->add_option("--emit-2cnf", sa.emit_2cnf, "Write the pmc 2-CNF formula (DIMACS)");
    solve->add_option("--root", sa.root, "BFS root for the pmc sweep");
    solve->add_flag("--reverse", sa.reverse, "Scan each level in descending id order");

    CheckArgs ca;
    auto* check = app.add_subcommand("check", "Induced path / cycle / pattern checks");
    check->add_option("graph", ca.file)->required()->check(CLI::ExistingFile);
    check->add_option("--pt-free", ca.pt_free, "No induced path on t vertices");
    check->add_option("--k-chordal", ca.k_chordal, "No induced cycle longer than k");
    check->add_option("--pattern", ca.pattern, "No induced copy of this graph file")
        ->check(CLI::ExistingFile);

    std::string cnf_file, out_prefix = "reduction";
    auto* reduce = app.add_subcommand("reduce", "Positive 1-in-3 CNF to reduction graph");
    reduce->add_option("cnf", cnf_file)->required()->check(CLI::ExistingFile);
    reduce->add_option("--out", out_prefix, "Output prefix");

    std::size_t count = 100, min_n = 2, max_n = 16;
    auto* cross = app.add_subcommand("crosscheck", "Random 4-chordal graphs vs the oracle");
    cross->add_option("--count", count);
    cross->add_option("--min-n", min_n);
    cross->add_option("--max-n", max_n);

    std::string twosat_file;
    auto* ts = app.add_subcommand("twosat", "Solve a 2-CNF DIMACS file");
    ts->add_option("cnf", twosat_file)->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kAnswered : kUsage;
    }

    try {
        if (*solve) return cmd_solve(gl, sa);
        if (*check) return cmd_check(gl, ca);
        if (*reduce) return cmd_reduce(gl, cnf_file, out_prefix);
        if (*cross) return cmd_crosscheck(gl, count, min_n, max_n);
        if (*ts) return cmd_twosat(gl, twosat_file);
    } catch (const io::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const FormulaError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const oracle::BoundExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBudget;
    } catch (const oracle::BudgetExhausted& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBudget;
    }
    return kUsage;
}
