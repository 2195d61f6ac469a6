#include "mcut/twosat.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace mcut::twosat {

void Instance::add(Literal a, Literal b) {
    if (a.var >= var_count_ || b.var >= var_count_) {
        throw std::out_of_range("2-SAT literal names variable " +
                                std::to_string(std::max(a.var, b.var)) + " but var_count is " +
                                std::to_string(var_count_));
    }
    clauses_.emplace_back(a, b);
}

namespace {

// Node 2v is literal v, node 2v+1 is literal not-v.
std::size_t node(Literal l) { return 2 * std::size_t{l.var} + (l.positive ? 0 : 1); }

struct ImplicationGraph {
    std::vector<std::vector<std::size_t>> out;

    explicit ImplicationGraph(const Instance& inst) : out(2 * inst.var_count()) {
        for (const auto& [a, b] : inst.clauses()) {
            // (a or b) == (~a -> b) and (~b -> a)
            out[node(~a)].push_back(node(b));
            if (!(a == b)) out[node(~b)].push_back(node(a));
        }
    }
};

// Iterative Tarjan. Components are numbered in completion order, which is a
// reverse topological order of the condensation.
std::vector<std::size_t> tarjan(const ImplicationGraph& ig) {
    constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
    const std::size_t n = ig.out.size();
    std::vector<std::size_t> index(n, unvisited), low(n, 0), comp(n, unvisited);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::pair<std::size_t, std::size_t>> frames;  // (node, next edge)
    std::size_t counter = 0, comps = 0;

    for (std::size_t s = 0; s < n; ++s) {
        if (index[s] != unvisited) continue;
        frames.emplace_back(s, 0);
        index[s] = low[s] = counter++;
        stack.push_back(s);
        on_stack[s] = true;
        while (!frames.empty()) {
            auto& [u, next] = frames.back();
            if (next < ig.out[u].size()) {
                std::size_t w = ig.out[u][next++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[u] = std::min(low[u], index[w]);
                }
                continue;
            }
            std::size_t done = u;
            frames.pop_back();
            if (!frames.empty()) {
                std::size_t parent = frames.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
            if (low[done] == index[done]) {
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = comps;
                } while (w != done);
                ++comps;
            }
        }
    }
    return comp;
}

}  // namespace

Result solve(const Instance& inst) {
    ImplicationGraph ig(inst);
    auto comp = tarjan(ig);
    Result r;
    Assignment a;
    a.value.resize(inst.var_count());
    for (Var v = 0; v < inst.var_count(); ++v) {
        std::size_t t = comp[node(pos(v))], f = comp[node(neg(v))];
        if (t == f) {
            r.conflict = v;
            return r;
        }
        // The literal whose component completes first is closer to the sinks.
        a.value[v] = t < f;
    }
    r.model = std::move(a);
    return r;
}

bool verify(const Instance& inst, const Assignment& a) {
    if (a.value.size() < inst.var_count()) return false;
    return std::all_of(inst.clauses().begin(), inst.clauses().end(), [&](const Clause& c) {
        return a.satisfies(c.first) || a.satisfies(c.second);
    });
}

}  // namespace mcut::twosat
