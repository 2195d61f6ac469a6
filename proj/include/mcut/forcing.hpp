#pragma once

#include "mcut/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

/// Forcing rules for A,B-matching cuts and the matching-cut and
/// disconnected-perfect-matching solvers for 4-chordal graphs built on them.
namespace mcut::forcing {

enum class Zone : std::uint8_t { Free, X, Y };

enum class Rule : std::uint8_t {
    R1 = 1,  // free vertex sees A, and B or two of Y \ B
    R2,      // free vertex sees B, and A or two of X \ A
    R3,      // free vertex sees two of X \ A and two of Y \ B
    R4,      // free vertex joins X
    R5,      // free vertex joins Y
};

/// A, B, X, Y and the free set F, with A in X and B in Y.
struct ForcingState {
    std::vector<Zone> zone;
    std::vector<bool> in_a, in_b;
    /// The matched pairs (a, b), a in A and b in B, in the order they were
    /// forced. The seed edge comes first.
    std::vector<std::pair<Vertex, Vertex>> pairs;

    std::vector<Vertex> members(Zone z) const;
    std::vector<Vertex> a_set() const;
    std::vector<Vertex> b_set() const;
};

struct Refutation {
    Rule rule;
    Vertex witness;
};

using Propagation = std::variant<Refutation, ForcingState>;

/// Applies (R1)-(R5) from A = {a}, B = {b} until no rule applies. Free
/// vertices are scanned in ascending id; refutations are checked before any
/// vertex is moved. Throws GraphError unless ab is an edge.
Propagation propagate(const Graph& g, Vertex a, Vertex b);

/// The rule that applies to free vertex v in state s, if any (refutations
/// take precedence).
std::optional<Rule> applicable_rule(const Graph& g, const ForcingState& s, Vertex v);

struct FreeSplit {
    std::vector<Vertex> toward_x;  // F_X
    std::vector<Vertex> toward_y;  // F_Y
};

/// A free component attached to both X and Y. Cannot happen on 4-chordal
/// inputs.
struct MixedComponent {
    std::vector<Vertex> component;
};

std::variant<FreeSplit, MixedComponent> split_free_vertices(const Graph& g,
                                                           const ForcingState& s);

/// The cut (X u F_X, Y u F_Y).
Cut extend_to_cut(const Graph& g, const ForcingState& s, const FreeSplit& split);

struct McResult {
    std::optional<Cut> cut;
    std::optional<Edge> seed;
    /// Edges skipped because a free component attached to both sides.
    std::size_t mixed_edges = 0;
};

struct DpmResult {
    std::optional<Matching> matching;
    std::optional<Cut> cut;
    std::optional<Edge> seed;
    std::size_t mixed_edges = 0;
};

/// Requires a connected graph (GraphError otherwise). Correct on 4-chordal
/// graphs; any cut it returns is a matching cut regardless.
McResult solve_mc_4chordal(const Graph& g);

/// Requires a connected graph. For each edge ab in ascending order: propagate,
/// then test G - A - B for a perfect matching.
DpmResult solve_dpm_4chordal(const Graph& g);

std::string to_string(Rule r);

}  // namespace mcut::forcing
