#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcut {

using Vertex = std::uint32_t;

/// Undirected edge, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class InducedSubgraph;

/// Simple undirected graph on the dense vertex set 0..n-1.
///
/// Immutable after construction. Neighbor lists are sorted ascending, which
/// every traversal in the library relies on for deterministic output.
class Graph {
  public:
    Graph() = default;

    /// Throws GraphError on self-loops, duplicate edges or out-of-range
    /// endpoints. Duplicates are rejected rather than collapsed.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);
    static Graph from_edges(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

    std::size_t order() const { return adj_.size(); }
    std::size_t size() const { return m_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }
    bool adjacent(Vertex u, Vertex v) const;

    /// All edges, sorted by (u, v).
    std::vector<Edge> edges() const;

    /// Materialized copy of G[vertices]; ids are renumbered in ascending
    /// order of the original ids.
    InducedSubgraph induced(std::span<const Vertex> vertices) const;

    /// G minus the given edges. Edges absent from G are ignored.
    Graph without_edges(std::span<const Edge> removed) const;

    friend bool operator==(const Graph&, const Graph&) = default;

  private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t m_ = 0;
};

class InducedSubgraph {
  public:
    InducedSubgraph(Graph g, std::vector<Vertex> to_parent)
        : graph_(std::move(g)), to_parent_(std::move(to_parent)) {}

    const Graph& graph() const { return graph_; }
    Vertex to_parent(Vertex local) const { return to_parent_[local]; }
    std::span<const Vertex> parent_ids() const { return to_parent_; }

  private:
    Graph graph_;
    std::vector<Vertex> to_parent_;
};

enum class Side : std::uint8_t { X = 0, Y = 1 };

inline Side opposite(Side s) { return s == Side::X ? Side::Y : Side::X; }

using Partition = std::vector<Side>;

/// A bipartition (X, Y) together with its edge cut E(X, Y).
struct Cut {
    Partition side;
    std::vector<Edge> crossing;

    /// Recomputes the crossing edges from the side vector.
    static Cut from_sides(const Graph& g, Partition side);

    std::vector<Vertex> members(Side s) const;
    Cut flipped() const;

    friend bool operator==(const Cut&, const Cut&) = default;
};

struct Matching {
    std::vector<Edge> edges;

    std::size_t size() const { return edges.size(); }
    bool is_valid_in(const Graph& g) const;
    bool covers_all(const Graph& g) const;
};

struct BfsLevels {
    Vertex root = 0;
    std::vector<std::size_t> level_of;
    std::vector<std::vector<Vertex>> levels;

    /// Index of the last non-empty level.
    std::size_t height() const { return levels.empty() ? 0 : levels.size() - 1; }
};

/// Throws GraphError when some vertex is unreachable from r.
BfsLevels bfs_levels(const Graph& g, Vertex r);

/// Components of G[subset], each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g,
                                                      std::span<const Vertex> subset);
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

enum class CutDefect : std::uint8_t {
    None,
    WrongLength,
    EmptySide,
    TooManyCrossNeighbors,  // some vertex has >= 2 neighbors across
    NoCrossNeighbor,        // perfect variant: some vertex has 0 neighbors across
};

struct CutCheck {
    std::optional<Cut> cut;
    CutDefect defect = CutDefect::None;
    std::optional<Vertex> witness;

    explicit operator bool() const { return cut.has_value(); }
};

CutCheck is_matching_cut(const Graph& g, const Partition& side);
CutCheck is_perfect_matching_cut(const Graph& g, const Partition& side);

enum class DpmDefect : std::uint8_t {
    None,
    NotAMatching,
    EdgeNotInGraph,
    NotPerfect,
    RemainsConnected,
};

struct DpmCheck {
    /// The matching cut contained in the matching: one component of G - M
    /// against the rest.
    std::optional<Cut> cut;
    DpmDefect defect = DpmDefect::None;

    explicit operator bool() const { return cut.has_value(); }
};

/// A perfect matching M contains a matching cut iff G - M is disconnected.
DpmCheck is_disconnected_perfect_matching(const Graph& g, const Matching& m);

std::string to_string(CutDefect d);
std::string to_string(DpmDefect d);

}  // namespace mcut
