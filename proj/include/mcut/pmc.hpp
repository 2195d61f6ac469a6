#pragma once

#include "mcut/graph.hpp"
#include "mcut/twosat.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

/// Perfect matching cuts in 4-chordal graphs via a bottom-up sweep over BFS
/// levels that emits a 2-CNF formula (one Boolean variable per vertex, true
/// meaning side X).
namespace mcut::pmc {

enum class LeafKind : std::uint8_t { C1, C2, C3, None };

/// How an undetermined vertex v on level i finds its private neighbor.
///   C1: v has a single neighbor u in L[i-1] \ Q.
///   C2: v has neighbors u1, u2 in two different components of G[L[i-1] \ Q],
///       one each, and w in L[i-2] \ Q is adjacent to both; {v, w} and
///       {u1, u2} are split by the cut.
///   C3: v has one neighbor u in one component of G[L[i-1] \ Q] and at least
///       two in another; u is the private neighbor.
///   None: no perfect matching cut exists.
struct LeafClassification {
    LeafKind kind = LeafKind::None;
    Vertex u = 0;   // C1, C3
    Vertex u1 = 0;  // C2, u1 < u2
    Vertex u2 = 0;
    Vertex w = 0;
};

struct TraceEntry {
    Vertex v = 0;
    LeafClassification classification;
    std::vector<Vertex> determined;  // vertices that entered Q at this step
    std::size_t first_clause = 0;
    std::size_t clause_count = 0;
};

/// Vertices whose private neighbors are already fixed, plus the log of the
/// decisions that fixed them. Grows monotonically; each vertex enters once.
class DeterminedSet {
  public:
    explicit DeterminedSet(std::size_t n = 0) : member_(n, false) {}

    bool contains(Vertex v) const { return member_[v]; }
    /// Throws std::logic_error if v is already determined.
    void add(Vertex v);
    std::size_t size() const { return count_; }
    std::vector<TraceEntry>& trace() { return trace_; }
    const std::vector<TraceEntry>& trace() const { return trace_; }

  private:
    std::vector<bool> member_;
    std::size_t count_ = 0;
    std::vector<TraceEntry> trace_;
};

enum class ScanOrder : std::uint8_t { Ascending, Descending };

struct Options {
    Vertex root = 0;
    /// Order in which the vertices of one level are visited.
    ScanOrder order = ScanOrder::Ascending;
};

LeafClassification classify_leaf(const Graph& g, const BfsLevels& levels, const DeterminedSet& q,
                                 Vertex v);

struct PmcFormula {
    twosat::Instance formula;
    DeterminedSet determined;
    BfsLevels levels;
};

enum class NoPmcReason : std::uint8_t {
    Unclassifiable,    // a vertex matched none of C1, C2, C3
    RootUndetermined,  // sweep ended with the root still lacking a partner
};

struct NoPmc {
    Vertex witness = 0;
    NoPmcReason reason = NoPmcReason::Unclassifiable;
    /// Clauses emitted before the sweep stopped.
    twosat::Instance partial;
    DeterminedSet determined;
};

/// Sweeps levels h..1 from the root. Requires a connected graph with at
/// least two vertices (GraphError otherwise).
std::variant<PmcFormula, NoPmc> build_pmc_formula(const Graph& g, const Options& opts = {});

struct PmcResult {
    std::optional<Cut> cut;
    /// Union of the per-component formulas over the original vertex ids.
    twosat::Instance formula;
    std::optional<Vertex> witness;
    std::string reason;
};

/// Decides PMC component by component. Correct on 4-chordal graphs; any cut
/// it returns is a perfect matching cut regardless of the input class.
PmcResult solve_pmc_4chordal(const Graph& g, const Options& opts = {});

std::string to_string(LeafKind k);

}  // namespace mcut::pmc
