#include "mcut/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <string>

namespace mcut::oracle {

void require_bound(const Graph& g, const Config& cfg) {
    if (g.order() > cfg.max_vertices) {
        throw BoundExceeded("graph has " + std::to_string(g.order()) +
                            " vertices, oracle bound is " + std::to_string(cfg.max_vertices));
    }
}

namespace {

// BFS order over every component, each component started at its smallest
// vertex. Assigning vertices in this order keeps the assigned region
// connected, which is what makes the cross-neighbor pruning bite early.
std::vector<Vertex> bfs_order(const Graph& g) {
    std::vector<Vertex> order;
    std::vector<bool> seen(g.order(), false);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        seen[s] = true;
        std::size_t head = order.size();
        order.push_back(s);
        while (head < order.size()) {
            Vertex u = order[head++];
            for (Vertex w : g.neighbors(u)) {
                if (!seen[w]) {
                    seen[w] = true;
                    order.push_back(w);
                }
            }
        }
    }
    return order;
}

// Branch on sides in BFS order; prune as soon as an assigned vertex has two
// cross neighbors (or, in perfect mode, is finished with none).
class CutSearch {
  public:
    CutSearch(const Graph& g, CutMode mode, const Config& cfg,
              std::function<bool(const Partition&)> visit)
        : g_(g), mode_(mode), deadline_(cfg.budget), visit_(std::move(visit)),
          order_(bfs_order(g)), assigned_(g.order(), false), side_(g.order(), Side::X),
          cross_(g.order(), 0), open_(g.order(), 0) {
        for (Vertex v = 0; v < g.order(); ++v) open_[v] = g.degree(v);
    }

    void run() {
        if (g_.order() >= 2) rec(0);
    }

  private:
    bool rec(std::size_t idx) {
        deadline_.tick();
        if (idx == order_.size()) {
            std::size_t xs = std::count(side_.begin(), side_.end(), Side::X);
            if (xs == 0 || xs == side_.size()) return true;
            return visit_(side_);
        }
        Vertex v = order_[idx];
        for (Side s : {Side::X, Side::Y}) {
            if (idx == 0 && s == Side::Y) break;
            bool ok = assign(v, s);
            bool keep_going = true;
            if (ok) keep_going = rec(idx + 1);
            unassign(v);
            if (!keep_going) return false;
        }
        return true;
    }

    bool assign(Vertex v, Side s) {
        assigned_[v] = true;
        side_[v] = s;
        bool ok = true;
        for (Vertex w : g_.neighbors(v)) {
            --open_[w];
            if (!assigned_[w]) continue;
            if (side_[w] != s) {
                ++cross_[w];
                ++cross_[v];
            }
            if (!fine(w)) ok = false;
        }
        return ok && fine(v);
    }

    void unassign(Vertex v) {
        for (Vertex w : g_.neighbors(v)) {
            ++open_[w];
            if (assigned_[w] && side_[w] != side_[v]) {
                --cross_[w];
                --cross_[v];
            }
        }
        assigned_[v] = false;
    }

    bool fine(Vertex v) const {
        if (mode_ == CutMode::All) return true;
        if (cross_[v] >= 2) return false;
        if (mode_ == CutMode::PerfectOnly && open_[v] == 0 && cross_[v] == 0) return false;
        return true;
    }

    const Graph& g_;
    CutMode mode_;
    Deadline deadline_;
    std::function<bool(const Partition&)> visit_;
    std::vector<Vertex> order_;
    std::vector<bool> assigned_;
    Partition side_;
    std::vector<std::size_t> cross_, open_;
};

bool any_cut(const Graph& g, CutMode mode, const Config& cfg) {
    return first_matching_cut(g, mode, cfg).has_value();
}

bool disconnected_without_perfect_matching(const Graph& g, const Matching& m) {
    std::vector<Vertex> mate(g.order());
    for (const Edge& e : m.edges) {
        mate[e.u] = e.v;
        mate[e.v] = e.u;
    }
    std::vector<bool> seen(g.order(), false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(u)) {
            if (seen[w] || mate[u] == w) continue;
            seen[w] = true;
            ++reached;
            stack.push_back(w);
        }
    }
    return reached < g.order();
}

std::vector<char> adjacency_matrix(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<char> a(n * n, 0);
    for (const Edge& e : g.edges()) a[e.u * n + e.v] = a[e.v * n + e.u] = 1;
    return a;
}

// Shared state for induced path and cycle searches: the current path and,
// for every vertex, how many path vertices it is adjacent to.
class InducedWalk {
  public:
    InducedWalk(const Graph& g, const Config& cfg)
        : g_(g), n_(g.order()), adj_(adjacency_matrix(g)), deadline_(cfg.budget),
          touch_(n_, 0), in_path_(n_, 0), mark_(n_, 0) {}

    // ---- paths --------------------------------------------------------

    std::vector<Vertex> longest_path() {
        best_.clear();
        for (Vertex s = 0; s < n_; ++s) {
            push(s);
            path_dfs_longest();
            pop();
        }
        return best_;
    }

    std::optional<std::vector<Vertex>> path_of(std::size_t t) {
        if (t == 0) return std::vector<Vertex>{};
        if (t > n_) return std::nullopt;
        for (Vertex s = 0; s < n_; ++s) {
            push(s);
            bool found = path_dfs_target(t);
            if (found) return path_;
            pop();
        }
        return std::nullopt;
    }

    // ---- cycles -------------------------------------------------------

    std::vector<Vertex> longest_cycle() {
        best_.clear();
        target_ = 0;
        cycles(false);
        return best_;
    }

    std::optional<std::vector<Vertex>> cycle_at_least(std::size_t k) {
        best_.clear();
        target_ = std::max<std::size_t>(k, 3);
        if (target_ > n_) return std::nullopt;
        if (cycles(true)) return best_;
        return std::nullopt;
    }

  private:
    bool A(Vertex u, Vertex v) const { return adj_[u * n_ + v] != 0; }

    void push(Vertex v) {
        path_.push_back(v);
        in_path_[v] = 1;
        for (Vertex w : g_.neighbors(v)) ++touch_[w];
    }

    void pop() {
        Vertex v = path_.back();
        path_.pop_back();
        in_path_[v] = 0;
        for (Vertex w : g_.neighbors(v)) --touch_[w];
    }

    // Vertices a path extension from the current end could still use.
    std::size_t path_reach() {
        Vertex end = path_.back();
        ++stamp_;
        std::size_t count = 0;
        std::vector<Vertex>& q = queue_;
        q.clear();
        q.push_back(end);
        mark_[end] = stamp_;
        for (std::size_t head = 0; head < q.size(); ++head) {
            Vertex u = q[head];
            for (Vertex w : g_.neighbors(u)) {
                if (mark_[w] == stamp_ || in_path_[w]) continue;
                bool eligible = touch_[w] == 0 || (touch_[w] == 1 && A(w, end));
                if (!eligible) continue;
                mark_[w] = stamp_;
                ++count;
                q.push_back(w);
            }
        }
        return count;
    }

    void path_dfs_longest() {
        deadline_.tick();
        if (path_.size() > best_.size() && (path_.size() == 1 || path_.back() > path_.front())) {
            best_ = path_;
        }
        if (path_.size() + path_reach() <= best_.size()) return;
        Vertex end = path_.back();
        for (Vertex w : g_.neighbors(end)) {
            if (in_path_[w] || touch_[w] != 1) continue;
            push(w);
            path_dfs_longest();
            pop();
        }
    }

    bool path_dfs_target(std::size_t t) {
        deadline_.tick();
        if (path_.size() == t) return true;
        if (path_.size() + path_reach() < t) return false;
        Vertex end = path_.back();
        for (Vertex w : g_.neighbors(end)) {
            if (in_path_[w] || touch_[w] != 1) continue;
            push(w);
            if (path_dfs_target(t)) return true;
            pop();
        }
        return false;
    }

    // Cycles are enumerated from their smallest vertex s; all other cycle
    // vertices are > s. Returns true when a target search succeeded.
    bool cycles(bool stop_at_target) {
        for (Vertex s = 0; s < n_; ++s) {
            push(s);
            for (Vertex p1 : g_.neighbors(s)) {
                if (p1 < s) continue;
                push(p1);
                bool done = cycle_dfs(stop_at_target);
                if (done) return true;
                pop();
            }
            pop();
        }
        return false;
    }

    std::size_t cycle_reach() {
        Vertex s = path_.front(), end = path_.back();
        ++stamp_;
        std::size_t count = 0;
        std::vector<Vertex>& q = queue_;
        q.clear();
        q.push_back(end);
        mark_[end] = stamp_;
        for (std::size_t head = 0; head < q.size(); ++head) {
            Vertex u = q[head];
            for (Vertex w : g_.neighbors(u)) {
                if (w < s || mark_[w] == stamp_ || in_path_[w]) continue;
                int inner = touch_[w] - (A(s, w) ? 1 : 0);
                bool eligible = inner == 0 || (inner == 1 && A(w, end));
                if (!eligible) continue;
                mark_[w] = stamp_;
                ++count;
                // A vertex adjacent to s can only close the cycle.
                if (!A(s, w)) q.push_back(w);
            }
        }
        return count;
    }

    bool cycle_dfs(bool stop_at_target) {
        deadline_.tick();
        const Vertex s = path_.front(), end = path_.back();
        std::size_t floor = stop_at_target ? target_ : best_.size() + 1;
        if (path_.size() + cycle_reach() < floor) return false;
        for (Vertex w : g_.neighbors(end)) {
            if (w < s || in_path_[w]) continue;
            int inner = touch_[w] - (A(s, w) ? 1 : 0);
            if (inner != 1) continue;
            if (A(s, w)) {
                if (w < path_[1]) continue;  // each cycle once per direction
                std::size_t len = path_.size() + 1;
                if (stop_at_target ? len >= target_ : len > best_.size()) {
                    best_ = path_;
                    best_.push_back(w);
                    if (stop_at_target) return true;
                }
                continue;
            }
            push(w);
            bool done = cycle_dfs(stop_at_target);
            pop();
            if (done) return true;
        }
        return false;
    }

    const Graph& g_;
    std::size_t n_;
    std::vector<char> adj_;
    Deadline deadline_;
    std::vector<int> touch_;
    std::vector<char> in_path_;
    std::vector<std::size_t> mark_;
    std::size_t stamp_ = 0;
    std::vector<Vertex> queue_;
    std::vector<Vertex> path_, best_;
    std::size_t target_ = 0;
};

}  // namespace

std::vector<Cut> enumerate_matching_cuts(const Graph& g, CutMode mode, const Config& cfg) {
    require_bound(g, cfg);
    std::vector<Partition> sides;
    CutSearch(g, mode, cfg, [&](const Partition& p) {
        sides.push_back(p);
        return true;
    }).run();
    std::sort(sides.begin(), sides.end());
    std::vector<Cut> cuts;
    cuts.reserve(sides.size());
    for (auto& p : sides) cuts.push_back(Cut::from_sides(g, std::move(p)));
    return cuts;
}

std::optional<Cut> first_matching_cut(const Graph& g, CutMode mode, const Config& cfg) {
    require_bound(g, cfg);
    std::optional<Partition> found;
    CutSearch(g, mode, cfg, [&](const Partition& p) {
        found = p;
        return false;
    }).run();
    if (!found) return std::nullopt;
    return Cut::from_sides(g, std::move(*found));
}

bool has_mc(const Graph& g, const Config& cfg) { return any_cut(g, CutMode::MatchingOnly, cfg); }

bool has_pmc(const Graph& g, const Config& cfg) { return any_cut(g, CutMode::PerfectOnly, cfg); }

bool has_dpm(const Graph& g, const Config& cfg) {
    require_bound(g, cfg);
    if (g.order() < 2) return false;
    bool found = false;
    for_each_perfect_matching(g, cfg, [&](const Matching& m) {
        found = disconnected_without_perfect_matching(g, m);
        return !found;
    });
    return found;
}

bool has_mc_by_edge_subsets(const Graph& g, const Config& cfg) {
    require_bound(g, cfg);
    if (g.order() < 2) return false;
    Deadline deadline(cfg.budget);
    const auto edges = g.edges();
    std::vector<bool> used(g.order(), false);
    std::vector<Edge> chosen;
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        deadline.tick();
        if (i == edges.size()) {
            return connected_components(g.without_edges(chosen)).size() >= 2;
        }
        if (self(self, i + 1)) return true;
        const Edge& e = edges[i];
        if (used[e.u] || used[e.v]) return false;
        used[e.u] = used[e.v] = true;
        chosen.push_back(e);
        bool r = self(self, i + 1);
        chosen.pop_back();
        used[e.u] = used[e.v] = false;
        return r;
    };
    return rec(rec, 0);
}

std::vector<Matching> enumerate_perfect_matchings(const Graph& g, const Config& cfg) {
    std::vector<Matching> out;
    for_each_perfect_matching(g, cfg, [&](const Matching& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

std::size_t max_matching_size_exhaustive(const Graph& g, const Config& cfg) {
    require_bound(g, cfg);
    Deadline deadline(cfg.budget);
    const std::size_t n = g.order();
    std::vector<bool> used(n, false);
    std::size_t best = 0;
    auto rec = [&](auto&& self, Vertex v, std::size_t size) -> void {
        deadline.tick();
        while (v < n && used[v]) ++v;
        if (v == n) {
            best = std::max(best, size);
            return;
        }
        used[v] = true;
        self(self, v + 1, size);  // v stays exposed
        for (Vertex w : g.neighbors(v)) {
            if (used[w]) continue;
            used[w] = true;
            self(self, v + 1, size + 1);
            used[w] = false;
        }
        used[v] = false;
    };
    rec(rec, 0, 0);
    return best;
}

std::vector<Vertex> longest_induced_path_witness(const Graph& g, const Config& cfg) {
    require_bound(g, cfg);
    return InducedWalk(g, cfg).longest_path();
}

std::size_t longest_induced_path(const Graph& g, const Config& cfg) {
    return longest_induced_path_witness(g, cfg).size();
}

std::optional<std::vector<Vertex>> find_induced_path(const Graph& g, std::size_t t,
                                                     const Config& cfg) {
    require_bound(g, cfg);
    return InducedWalk(g, cfg).path_of(t);
}

std::optional<std::vector<Vertex>> longest_induced_cycle_witness(const Graph& g,
                                                                 const Config& cfg) {
    require_bound(g, cfg);
    auto c = InducedWalk(g, cfg).longest_cycle();
    if (c.empty()) return std::nullopt;
    return c;
}

std::optional<std::size_t> longest_induced_cycle(const Graph& g, const Config& cfg) {
    auto c = longest_induced_cycle_witness(g, cfg);
    if (!c) return std::nullopt;
    return c->size();
}

std::optional<std::vector<Vertex>> find_induced_cycle_at_least(const Graph& g, std::size_t k,
                                                               const Config& cfg) {
    require_bound(g, cfg);
    return InducedWalk(g, cfg).cycle_at_least(k);
}

bool is_induced_path(const Graph& g, const std::vector<Vertex>& seq) {
    std::vector<bool> seen(g.order(), false);
    for (Vertex v : seq) {
        if (v >= g.order() || seen[v]) return false;
        seen[v] = true;
    }
    for (std::size_t i = 0; i < seq.size(); ++i) {
        for (std::size_t j = i + 1; j < seq.size(); ++j) {
            if (g.adjacent(seq[i], seq[j]) != (j == i + 1)) return false;
        }
    }
    return true;
}

bool is_induced_cycle(const Graph& g, const std::vector<Vertex>& seq) {
    const std::size_t k = seq.size();
    if (k < 3) return false;
    std::vector<bool> seen(g.order(), false);
    for (Vertex v : seq) {
        if (v >= g.order() || seen[v]) return false;
        seen[v] = true;
    }
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if (g.adjacent(seq[i], seq[j]) != consecutive) return false;
        }
    }
    return true;
}

std::optional<std::vector<Vertex>> find_induced_embedding(const Graph& g, const Graph& pattern,
                                                          const Config& cfg) {
    const std::size_t k = pattern.order(), n = g.order();
    if (k > n) return std::nullopt;
    if (k > 21) throw BoundExceeded("pattern has more than 21 vertices");
    Deadline deadline(cfg.budget);
    const auto adj = adjacency_matrix(g);
    auto A = [&](Vertex u, Vertex v) { return adj[u * n + v] != 0; };

    constexpr Vertex none = ~Vertex{0};
    std::vector<Vertex> order = bfs_order(pattern), parent(k, none), pos(k);
    for (std::size_t i = 0; i < k; ++i) pos[order[i]] = static_cast<Vertex>(i);
    for (Vertex p : order) {
        for (Vertex q : pattern.neighbors(p)) {
            if (pos[q] < pos[p]) {
                parent[p] = q;
                break;
            }
        }
    }

    std::vector<Vertex> image(k, none);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        deadline.tick();
        if (i == k) return true;
        Vertex p = order[i];
        auto try_candidate = [&](Vertex c) {
            if (used[c] || g.degree(c) < pattern.degree(p)) return false;
            for (std::size_t j = 0; j < i; ++j) {
                Vertex q = order[j];
                if (pattern.adjacent(p, q) != A(c, image[q])) return false;
            }
            image[p] = c;
            used[c] = true;
            bool ok = self(self, i + 1);
            used[c] = false;
            return ok;
        };
        if (parent[p] != none) {
            for (Vertex c : g.neighbors(image[parent[p]])) {
                if (try_candidate(c)) return true;
            }
        } else {
            for (Vertex c = 0; c < n; ++c) {
                if (try_candidate(c)) return true;
            }
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return image;
}

bool contains_induced(const Graph& g, const Graph& pattern, const Config& cfg) {
    return find_induced_embedding(g, pattern, cfg).has_value();
}

std::vector<std::vector<bool>> enumerate_one_in_three(const Formula13& f,
                                                      std::size_t max_vars) {
    f.validate();
    if (f.var_count > max_vars) {
        throw BoundExceeded("formula has " + std::to_string(f.var_count) +
                            " variables, bound is " + std::to_string(max_vars));
    }
    std::vector<std::vector<std::size_t>> occurs(f.var_count);
    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        for (Variable x : f.clauses[j]) occurs[x].push_back(j);
    }
    // Per clause: number of true variables and number still unassigned.
    std::vector<int> trues(f.clauses.size(), 0), open(f.clauses.size(), 3);
    std::vector<bool> value(f.var_count, false);
    std::vector<std::vector<bool>> out;

    auto rec = [&](auto&& self, Variable x) -> void {
        if (x == f.var_count) {
            out.push_back(value);
            return;
        }
        for (bool b : {false, true}) {
            value[x] = b;
            bool ok = true;
            for (std::size_t j : occurs[x]) {
                trues[j] += b;
                --open[j];
                if (trues[j] > 1 || (open[j] == 0 && trues[j] == 0)) ok = false;
            }
            if (ok) self(self, x + 1);
            for (std::size_t j : occurs[x]) {
                trues[j] -= b;
                ++open[j];
            }
        }
        value[x] = false;
    };
    rec(rec, 0);
    return out;
}

std::size_t ClassReport::chordality() const {
    if (!longest_induced_cycle_vertices) return 3;
    return std::max<std::size_t>(3, *longest_induced_cycle_vertices);
}

ClassReport classify(const Graph& g, const Config& cfg) {
    ClassReport r;
    r.longest_induced_path_vertices = longest_induced_path(g, cfg);
    r.longest_induced_cycle_vertices = longest_induced_cycle(g, cfg);
    return r;
}

Graph path_graph(std::size_t t) {
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < t; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(t, e);
}

Graph cycle_graph(std::size_t t) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < t; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % t));
    return Graph::from_edges(t, e);
}

Graph complete_graph(std::size_t t) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < t; ++i) {
        for (Vertex j = i + 1; j < t; ++j) e.emplace_back(i, j);
    }
    return Graph::from_edges(t, e);
}

Graph disjoint_copies(const Graph& h, std::size_t p) {
    std::vector<Edge> e;
    const auto base = h.edges();
    for (std::size_t c = 0; c < p; ++c) {
        Vertex off = static_cast<Vertex>(c * h.order());
        for (const Edge& x : base) e.emplace_back(x.u + off, x.v + off);
    }
    return Graph::from_edges(h.order() * p, e);
}

}  // namespace mcut::oracle
