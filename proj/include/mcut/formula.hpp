#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mcut {

using Variable = std::uint32_t;

class FormulaError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Positive 1-in-3SAT instance: every clause lists three distinct variables,
/// all occurring positively.
struct Formula13 {
    std::size_t var_count = 0;
    std::vector<std::array<Variable, 3>> clauses;

    /// Throws FormulaError on empty clause lists, repeated variables inside a
    /// clause, or variables >= var_count.
    void validate() const;

    /// True iff every clause has exactly one true variable.
    bool is_one_in_three(const std::vector<bool>& assignment) const;

    /// Whether variable x occurs in some clause.
    std::vector<bool> occurring() const;
};

}  // namespace mcut
