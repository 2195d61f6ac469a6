#include "mcut/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace mcut::io {

namespace {

bool skippable(const std::string& line, char comment) {
    auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == comment;
}

std::ifstream open(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return in;
}

// Reads exactly `count` unsigned integers from the line; nothing else allowed.
std::vector<unsigned long long> numbers(const std::string& line, std::size_t count,
                                        std::size_t lineno) {
    std::istringstream ss(line);
    std::vector<unsigned long long> out;
    std::string tok;
    while (ss >> tok) {
        if (tok.find_first_not_of("0123456789") != std::string::npos) {
            throw ParseError("line " + std::to_string(lineno) + ": bad token '" + tok + "'");
        }
        try {
            out.push_back(std::stoull(tok));
        } catch (const std::out_of_range&) {
            throw ParseError("line " + std::to_string(lineno) + ": number too large");
        }
    }
    if (out.size() != count) {
        throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(count) +
                         " integers");
    }
    return out;
}

}  // namespace

Graph parse_graph(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    std::optional<std::pair<std::size_t, std::size_t>> header;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line, '#')) continue;
        if (!header) {
            auto nm = numbers(line, 2, lineno);
            if (nm[0] > std::numeric_limits<Vertex>::max()) throw ParseError("n too large");
            header.emplace(nm[0], nm[1]);
            continue;
        }
        auto uv = numbers(line, 2, lineno);
        if (uv[0] >= header->first || uv[1] >= header->first) {
            throw ParseError("line " + std::to_string(lineno) + ": vertex out of range");
        }
        edges.emplace_back(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1]));
    }
    if (!header) throw ParseError("missing 'n m' header");
    if (edges.size() != header->second) {
        throw ParseError("header announces " + std::to_string(header->second) + " edges, found " +
                         std::to_string(edges.size()));
    }
    try {
        return Graph::from_edges(header->first, edges);
    } catch (const GraphError& e) {
        throw ParseError(e.what());
    }
}

Graph parse_graph_string(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

Graph read_graph_file(const std::string& path) {
    auto in = open(path);
    return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.size() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string graph_to_string(const Graph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

Cnf parse_cnf(std::istream& in) {
    Cnf cnf;
    std::optional<std::size_t> declared;
    std::vector<int> current;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line, 'c') || skippable(line, '%')) continue;
        std::istringstream ss(line);
        if (line.find_first_not_of(" \t") != std::string::npos &&
            line[line.find_first_not_of(" \t")] == 'p') {
            std::string p, fmt;
            long long v = -1, c = -1;
            if (declared || !(ss >> p >> fmt >> v >> c) || fmt != "cnf" || v < 0 || c < 0) {
                throw ParseError("line " + std::to_string(lineno) + ": bad problem line");
            }
            cnf.var_count = static_cast<std::size_t>(v);
            declared = static_cast<std::size_t>(c);
            continue;
        }
        if (!declared) throw ParseError("line " + std::to_string(lineno) + ": clause before header");
        std::string tok;
        while (ss >> tok) {
            long long lit = 0;
            try {
                std::size_t used = 0;
                lit = std::stoll(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw ParseError("line " + std::to_string(lineno) + ": bad literal '" + tok + "'");
            }
            if (lit == 0) {
                cnf.clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            if (static_cast<std::size_t>(std::llabs(lit)) > cnf.var_count) {
                throw ParseError("line " + std::to_string(lineno) + ": literal " + tok +
                                 " out of range");
            }
            current.push_back(static_cast<int>(lit));
        }
    }
    if (!declared) throw ParseError("missing 'p cnf' header");
    if (!current.empty()) throw ParseError("last clause not terminated by 0");
    if (cnf.clauses.size() != *declared) {
        throw ParseError("header announces " + std::to_string(*declared) + " clauses, found " +
                         std::to_string(cnf.clauses.size()));
    }
    return cnf;
}

Cnf parse_cnf_string(const std::string& text) {
    std::istringstream in(text);
    return parse_cnf(in);
}

Cnf read_cnf_file(const std::string& path) {
    auto in = open(path);
    return parse_cnf(in);
}

Formula13 to_formula13(const Cnf& cnf) {
    Formula13 f;
    f.var_count = cnf.var_count;
    for (std::size_t i = 0; i < cnf.clauses.size(); ++i) {
        const auto& c = cnf.clauses[i];
        const std::string where = "clause " + std::to_string(i + 1) + ": ";
        if (c.size() != 3) throw ParseError(where + "arity " + std::to_string(c.size()) + ", need 3");
        std::array<Variable, 3> vars{};
        for (std::size_t k = 0; k < 3; ++k) {
            if (c[k] < 0) throw ParseError(where + "negative literal " + std::to_string(c[k]));
            vars[k] = static_cast<Variable>(c[k] - 1);
        }
        if (vars[0] == vars[1] || vars[0] == vars[2] || vars[1] == vars[2]) {
            throw ParseError(where + "repeated variable");
        }
        f.clauses.push_back(vars);
    }
    if (f.clauses.empty()) throw ParseError("formula has no clauses");
    return f;
}

Cnf from_formula13(const Formula13& f) {
    Cnf cnf;
    cnf.var_count = f.var_count;
    for (const auto& c : f.clauses) {
        cnf.clauses.push_back({static_cast<int>(c[0]) + 1, static_cast<int>(c[1]) + 1,
                               static_cast<int>(c[2]) + 1});
    }
    return cnf;
}

twosat::Instance to_2sat(const Cnf& cnf) {
    twosat::Instance inst(cnf.var_count);
    auto lit = [](int l) {
        return twosat::Literal{static_cast<twosat::Var>(std::abs(l) - 1), l > 0};
    };
    for (std::size_t i = 0; i < cnf.clauses.size(); ++i) {
        const auto& c = cnf.clauses[i];
        if (c.empty() || c.size() > 2) {
            throw ParseError("clause " + std::to_string(i + 1) + ": not a 2-CNF clause");
        }
        inst.add(lit(c.front()), lit(c.back()));
    }
    return inst;
}

Cnf from_2sat(const twosat::Instance& inst) {
    Cnf cnf;
    cnf.var_count = inst.var_count();
    auto lit = [](twosat::Literal l) {
        int v = static_cast<int>(l.var) + 1;
        return l.positive ? v : -v;
    };
    for (auto [a, b] : inst.clauses()) {
        if (a == b) {
            cnf.clauses.push_back({lit(a)});
        } else {
            cnf.clauses.push_back({lit(a), lit(b)});
        }
    }
    return cnf;
}

void write_cnf(std::ostream& out, const Cnf& cnf, const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "c " << c << '\n';
    out << "p cnf " << cnf.var_count << ' ' << cnf.clauses.size() << '\n';
    for (const auto& clause : cnf.clauses) {
        for (int l : clause) out << l << ' ';
        out << "0\n";
    }
}

std::string cnf_to_string(const Cnf& cnf, const std::vector<std::string>& comments) {
    std::ostringstream out;
    write_cnf(out, cnf, comments);
    return out.str();
}

std::string layout_to_json(const reduction::GadgetLayout& layout) {
    nlohmann::ordered_json j;
    j["n"] = layout.graph.order();
    j["clauses"] = layout.clauses.size();
    for (std::size_t c = 0; c < layout.clauses.size(); ++c) {
        const auto& ids = layout.clauses[c];
        const std::string jj = "[" + std::to_string(c) + "]";
        j["c" + jj] = ids.c;
        j["c'" + jj] = ids.c_prime;
        for (std::size_t k = 0; k < 3; ++k) {
            const std::string kk = jj + "[" + std::to_string(k) + "]";
            j["cjk" + kk] = ids.var[k];
            j["a" + kk] = ids.a[k];
            j["b" + kk] = ids.b[k];
            j["c'jk" + kk] = ids.cp[k];
        }
    }
    for (std::size_t x = 0; x < layout.q_cliques.size(); ++x) {
        j["Q[" + std::to_string(x) + "]"] = layout.q_cliques[x];
    }
    j["F"] = layout.f_clique;
    j["T"] = layout.t_clique;
    return j.dump(2) + "\n";
}

}  // namespace mcut::io
