#pragma once

#include "mcut/formula.hpp"
#include "mcut/graph.hpp"
#include "mcut/reduction.hpp"
#include "mcut/twosat.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcut::io {

class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// "n m" header, then m lines "u v" (0-based). Blank lines and lines
/// starting with '#' are ignored anywhere.
Graph parse_graph(std::istream& in);
Graph parse_graph_string(const std::string& text);
Graph read_graph_file(const std::string& path);

/// Edges in ascending order, one per line.
void write_graph(std::ostream& out, const Graph& g);
std::string graph_to_string(const Graph& g);

struct Cnf {
    std::size_t var_count = 0;
    std::vector<std::vector<int>> clauses;  // DIMACS literals, no trailing 0
};

/// DIMACS: 'c' comment lines, one "p cnf V C" header, clauses terminated by 0
/// (may span lines). Checks the declared counts and literal range.
Cnf parse_cnf(std::istream& in);
Cnf parse_cnf_string(const std::string& text);
Cnf read_cnf_file(const std::string& path);

/// Rejects negative literals, clauses of arity other than 3 and repeated
/// variables within a clause. Variable i becomes id i-1.
Formula13 to_formula13(const Cnf& cnf);
Cnf from_formula13(const Formula13& f);

/// Clauses of one or two literals; a unit clause becomes (l, l).
twosat::Instance to_2sat(const Cnf& cnf);
/// A clause (l, l) is written as a unit clause.
Cnf from_2sat(const twosat::Instance& inst);

/// Header comment lines are written first, each prefixed with "c ".
void write_cnf(std::ostream& out, const Cnf& cnf, const std::vector<std::string>& comments = {});
std::string cnf_to_string(const Cnf& cnf, const std::vector<std::string>& comments = {});

/// JSON sidecar for a reduction layout: role name -> vertex id(s).
std::string layout_to_json(const reduction::GadgetLayout& layout);

}  // namespace mcut::io
