#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace schurforge {

// Raised when a computation would exceed the configured term budget.
// The condition is a resource statement, never a numeric answer; drivers
// surface it as "infeasible at desk scale".
class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded(std::size_t live_terms, std::size_t limit)
      : std::runtime_error("term budget exhausted: " + std::to_string(live_terms) +
                           " live terms against a limit of " + std::to_string(limit)),
        live_terms(live_terms), limit(limit) {}
  std::size_t live_terms;
  std::size_t limit;
};

// Support-size guard for ring computations with unbounded intermediate
// supports. Also records the high-water mark for reporting.
struct TermBudget {
  static constexpr std::size_t kDefaultMaxTerms = 5'000'000;

  std::size_t max_terms = kDefaultMaxTerms;
  mutable std::size_t peak_terms = 0;

  void check(std::size_t live_terms) const {
    if (live_terms > peak_terms) peak_terms = live_terms;
    if (live_terms > max_terms) throw BudgetExceeded(live_terms, max_terms);
  }
};

} // namespace schurforge
