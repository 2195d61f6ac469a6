#pragma once

#include "mcut/formula.hpp"
#include "mcut/graph.hpp"
#include "mcut/oracle.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

/// Positive 1-in-3SAT to (perfect) matching cut: one cube-based gadget per
/// clause, glued by variable cliques Q(x) and the two cliques F and T.
namespace mcut::reduction {

/// G(H;v): H - v with a triangle a1a2a3 replacing v, each a_k hanging off
/// b_k (the k-th neighbor of v in ascending order), plus c adjacent to
/// c1, c2, c3 with c_k ~ a_k.
struct HostGadget {
    Graph graph;
    std::array<Vertex, 3> b{};  // ids in graph
    std::array<Vertex, 3> a{};
    std::array<Vertex, 3> ck{};
    Vertex c = 0;
};

/// Vertices of H other than v keep their relative order; the seven new
/// vertices follow as a1, a2, a3, c1, c2, c3, c. Throws GraphError unless
/// deg(v) = 3.
HostGadget build_g_h_v(const Graph& h, Vertex v);

Graph cube_graph();
Graph petersen_graph();

/// Ids of one clause block; block j starts at 14j and is laid out as
/// c, c1..c3, a1..a3, b1..b3, c'1..c'3, c'.
struct ClauseIds {
    Vertex c = 0;
    std::array<Vertex, 3> var{};
    std::array<Vertex, 3> a{};
    std::array<Vertex, 3> b{};
    std::array<Vertex, 3> cp{};
    Vertex c_prime = 0;
};

inline constexpr std::size_t kBlock = 14;

struct GadgetLayout {
    Graph graph;
    Formula13 formula;
    std::vector<ClauseIds> clauses;
    /// Q(x) per variable, ascending; empty for variables that never occur.
    std::vector<std::vector<Vertex>> q_cliques;
    std::vector<Vertex> f_clique;  // all c_j and c'_j
    std::vector<Vertex> t_clique;  // all a_jk
};

/// Throws FormulaError on a malformed formula.
GadgetLayout build_reduction(const Formula13& f);

/// F and the false variables' cliques go to X, and so do b_jk and its two
/// c'-neighbors for the true variable of clause j. Throws FormulaError unless
/// the assignment is 1-in-3.
Cut assignment_to_pmc(const GadgetLayout& layout, const std::vector<bool>& assignment);

/// Variable x is true iff Q(x) lands on the side opposite F. Variables
/// without occurrences come out false. Throws GraphError if the partition is
/// not a matching cut, or if F or some Q(x) is split.
std::vector<bool> cut_to_assignment(const GadgetLayout& layout, const Cut& cut);

struct ReductionCheck {
    std::string name;
    bool passed = false;
    bool skipped = false;  // budget or size bound hit before a verdict
    std::string detail;
};

struct ReductionReport {
    std::vector<ReductionCheck> checks;

    bool all_passed() const;   // skipped checks count as not failed
    bool any_skipped() const;
};

struct VerifyOptions {
    oracle::Config cut_oracle{};                 // matching-cut enumeration
    oracle::Config class_oracle{};
    /// Class checks (path, cycle, 3P6, 2P7) only run up to this order.
    std::size_t class_max_vertices = 14;
};

ReductionReport verify_reduction(const Formula13& f, const GadgetLayout& layout,
                                 const VerifyOptions& opts = {});

}  // namespace mcut::reduction
