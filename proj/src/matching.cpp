#include "mcut/matching.hpp"

#include <deque>
#include <limits>

namespace mcut {
namespace {

constexpr Vertex none = std::numeric_limits<Vertex>::max();

class Blossom {
  public:
    explicit Blossom(const Graph& g)
        : g_(g), n_(g.order()), match_(n_, none), parent_(n_), base_(n_), in_tree_(n_),
          in_blossom_(n_) {}

    Matching run() {
        for (Vertex root = 0; root < n_; ++root) {
            if (match_[root] != none) continue;
            Vertex end = find_augmenting_path(root);
            if (end != none) augment(end);
        }
        Matching m;
        for (Vertex v = 0; v < n_; ++v) {
            if (match_[v] != none && v < match_[v]) m.edges.emplace_back(v, match_[v]);
        }
        return m;
    }

  private:
    Vertex lowest_common_ancestor(Vertex a, Vertex b) {
        std::vector<bool> seen(n_, false);
        while (true) {
            a = base_[a];
            seen[a] = true;
            if (match_[a] == none) break;
            a = parent_[match_[a]];
        }
        while (true) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(Vertex v, Vertex b, Vertex child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = true;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    Vertex find_augmenting_path(Vertex root) {
        std::fill(in_tree_.begin(), in_tree_.end(), false);
        std::fill(parent_.begin(), parent_.end(), none);
        for (Vertex v = 0; v < n_; ++v) base_[v] = v;

        std::deque<Vertex> queue{root};
        in_tree_[root] = true;
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            for (Vertex to : g_.neighbors(v)) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != none && parent_[match_[to]] != none)) {
                    // Odd cycle: shrink the blossom into its base.
                    Vertex cur_base = lowest_common_ancestor(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), false);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (Vertex i = 0; i < n_; ++i) {
                        if (!in_blossom_[base_[i]]) continue;
                        base_[i] = cur_base;
                        if (!in_tree_[i]) {
                            in_tree_[i] = true;
                            queue.push_back(i);
                        }
                    }
                } else if (parent_[to] == none) {
                    parent_[to] = v;
                    if (match_[to] == none) return to;
                    in_tree_[match_[to]] = true;
                    queue.push_back(match_[to]);
                }
            }
        }
        return none;
    }

    void augment(Vertex v) {
        while (v != none) {
            Vertex pv = parent_[v];
            Vertex ppv = match_[pv];
            match_[v] = pv;
            match_[pv] = v;
            v = ppv;
        }
    }

    const Graph& g_;
    std::size_t n_;
    std::vector<Vertex> match_, parent_, base_;
    std::vector<bool> in_tree_, in_blossom_;
};

}  // namespace

Matching maximum_matching(const Graph& g) { return Blossom(g).run(); }

bool has_perfect_matching(const Graph& g) {
    if (g.order() % 2 != 0) return false;
    return 2 * maximum_matching(g).size() == g.order();
}

}  // namespace mcut
