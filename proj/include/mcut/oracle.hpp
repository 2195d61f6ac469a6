#pragma once

#include "mcut/formula.hpp"
#include "mcut/graph.hpp"

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

/// Exponential-time ground truth. Every polynomial solver in the library is
/// validated against these procedures.
namespace mcut::oracle {

struct Config {
    std::size_t max_vertices = 30;
    std::chrono::duration<double> budget = std::chrono::seconds(60);
};

/// Instance larger than Config::max_vertices (or another hard size limit).
class BoundExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Wall-clock budget ran out before the search finished.
class BudgetExhausted : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class Deadline {
  public:
    explicit Deadline(std::chrono::duration<double> budget)
        : end_(std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(budget)) {}

    void tick() {
        if (++ticks_ % 1024 == 0 && std::chrono::steady_clock::now() > end_) {
            throw BudgetExhausted("oracle time budget exhausted");
        }
    }

  private:
    std::chrono::steady_clock::time_point end_;
    std::size_t ticks_ = 0;
};

enum class CutMode { All, MatchingOnly, PerfectOnly };

/// One representative per unordered partition {X, Y} (vertex 0 is always in
/// X), sorted lexicographically by side vector.
std::vector<Cut> enumerate_matching_cuts(const Graph& g, CutMode mode, const Config& cfg = {});

/// The first cut the search reaches (not necessarily the smallest).
std::optional<Cut> first_matching_cut(const Graph& g, CutMode mode, const Config& cfg = {});

bool has_mc(const Graph& g, const Config& cfg = {});
bool has_pmc(const Graph& g, const Config& cfg = {});
/// Scans perfect matchings M and tests G - E(M) for disconnection.
bool has_dpm(const Graph& g, const Config& cfg = {});

/// Second, independent route to has_mc: scan all matchings M (the empty one
/// included) and accept when G - M is disconnected.
bool has_mc_by_edge_subsets(const Graph& g, const Config& cfg = {});

/// Calls visit(m) for every perfect matching until it returns false.
template <class Visit>
void for_each_perfect_matching(const Graph& g, const Config& cfg, Visit&& visit);

std::vector<Matching> enumerate_perfect_matchings(const Graph& g, const Config& cfg = {});

/// Exhaustive maximum matching size.
std::size_t max_matching_size_exhaustive(const Graph& g, const Config& cfg = {});

/// Vertex sequence of a longest induced path (empty for the empty graph).
std::vector<Vertex> longest_induced_path_witness(const Graph& g, const Config& cfg = {});
std::size_t longest_induced_path(const Graph& g, const Config& cfg = {});
/// An induced path on exactly t vertices, if one exists.
std::optional<std::vector<Vertex>> find_induced_path(const Graph& g, std::size_t t,
                                                     const Config& cfg = {});

/// Vertex sequence of a longest induced cycle, or nullopt for forests.
std::optional<std::vector<Vertex>> longest_induced_cycle_witness(const Graph& g,
                                                                 const Config& cfg = {});
std::optional<std::size_t> longest_induced_cycle(const Graph& g, const Config& cfg = {});
/// An induced cycle on at least k vertices, if one exists.
std::optional<std::vector<Vertex>> find_induced_cycle_at_least(const Graph& g, std::size_t k,
                                                               const Config& cfg = {});

bool is_induced_path(const Graph& g, const std::vector<Vertex>& seq);
bool is_induced_cycle(const Graph& g, const std::vector<Vertex>& seq);

/// Injective map pattern -> g preserving adjacency and non-adjacency.
std::optional<std::vector<Vertex>> find_induced_embedding(const Graph& g, const Graph& pattern,
                                                          const Config& cfg = {});
bool contains_induced(const Graph& g, const Graph& pattern, const Config& cfg = {});

/// All 1-in-3 assignments, in lexicographic order (false < true).
std::vector<std::vector<bool>> enumerate_one_in_three(const Formula13& f,
                                                      std::size_t max_vars = 25);

struct ClassReport {
    std::size_t longest_induced_path_vertices = 0;
    std::optional<std::size_t> longest_induced_cycle_vertices;

    bool is_pt_free(std::size_t t) const { return longest_induced_path_vertices < t; }
    /// Smallest k >= 3 such that the graph is k-chordal (3 for forests).
    std::size_t chordality() const;
};

ClassReport classify(const Graph& g, const Config& cfg = {});

// Graph families used as patterns and test hosts.
Graph path_graph(std::size_t t);
Graph cycle_graph(std::size_t t);
Graph complete_graph(std::size_t t);
/// p disjoint copies of h.
Graph disjoint_copies(const Graph& h, std::size_t p);

// ---------------------------------------------------------------------------

void require_bound(const Graph& g, const Config& cfg);

template <class Visit>
void for_each_perfect_matching(const Graph& g, const Config& cfg, Visit&& visit) {
    require_bound(g, cfg);
    const std::size_t n = g.order();
    if (n % 2 != 0) return;
    Deadline deadline(cfg.budget);
    std::vector<bool> used(n, false);
    Matching current;
    bool stop = false;
    auto rec = [&](auto&& self) -> void {
        deadline.tick();
        Vertex v = 0;
        while (v < n && used[v]) ++v;
        if (v == n) {
            if (!visit(current)) stop = true;
            return;
        }
        used[v] = true;
        for (Vertex w : g.neighbors(v)) {
            if (used[w]) continue;
            used[w] = true;
            current.edges.emplace_back(v, w);
            self(self);
            current.edges.pop_back();
            used[w] = false;
            if (stop) break;
        }
        used[v] = false;
    };
    rec(rec);
}

}  // namespace mcut::oracle
