#include "mcut/formula.hpp"

#include <string>

namespace mcut {

void Formula13::validate() const {
    if (clauses.empty()) throw FormulaError("formula has no clauses");
    for (std::size_t j = 0; j < clauses.size(); ++j) {
        const auto& c = clauses[j];
        for (Variable x : c) {
            if (x >= var_count) {
                throw FormulaError("clause " + std::to_string(j) + " names variable " +
                                   std::to_string(x) + " >= var_count " +
                                   std::to_string(var_count));
            }
        }
        if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2]) {
            throw FormulaError("clause " + std::to_string(j) + " repeats a variable");
        }
    }
}

bool Formula13::is_one_in_three(const std::vector<bool>& assignment) const {
    if (assignment.size() < var_count) return false;
    for (const auto& c : clauses) {
        int trues = assignment[c[0]] + assignment[c[1]] + assignment[c[2]];
        if (trues != 1) return false;
    }
    return true;
}

std::vector<bool> Formula13::occurring() const {
    std::vector<bool> seen(var_count, false);
    for (const auto& c : clauses) {
        for (Variable x : c) seen[x] = true;
    }
    return seen;
}

}  // namespace mcut
