#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace mcut::twosat {

using Var = std::uint32_t;

struct Literal {
    Var var = 0;
    bool positive = true;

    Literal operator~() const { return {var, !positive}; }
    friend bool operator==(const Literal&, const Literal&) = default;
};

inline Literal pos(Var v) { return {v, true}; }
inline Literal neg(Var v) { return {v, false}; }

using Clause = std::pair<Literal, Literal>;

/// 2-CNF formula. A unit clause (l) is stored as (l, l).
class Instance {
  public:
    explicit Instance(std::size_t var_count = 0) : var_count_(var_count) {}

    /// Throws std::out_of_range when a literal names a variable >= var_count.
    void add(Literal a, Literal b);
    void add_unit(Literal a) { add(a, a); }

    std::size_t var_count() const { return var_count_; }
    const std::vector<Clause>& clauses() const { return clauses_; }

    friend bool operator==(const Instance&, const Instance&) = default;

  private:
    std::size_t var_count_;
    std::vector<Clause> clauses_;
};

struct Assignment {
    std::vector<bool> value;

    bool operator[](Var v) const { return value[v]; }
    bool satisfies(Literal l) const { return value[l.var] == l.positive; }
};

struct Result {
    std::optional<Assignment> model;
    /// Set when unsatisfiable: a variable whose two literals share a strongly
    /// connected component of the implication graph.
    std::optional<Var> conflict;

    bool satisfiable() const { return model.has_value(); }
};

/// Implication graph + Tarjan SCC. Deterministic for a fixed instance.
Result solve(const Instance& inst);

bool verify(const Instance& inst, const Assignment& a);

}  // namespace mcut::twosat
