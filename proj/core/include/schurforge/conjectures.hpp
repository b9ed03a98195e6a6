#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "schurforge/budget.hpp"
#include "schurforge/exact_int.hpp"
#include "schurforge/g_routes.hpp"
#include "schurforge/partition.hpp"
#include "schurforge/valuation.hpp"

namespace schurforge {

struct RouteCheck {
  std::string route;
  ExactInt value;
  bool agrees = false;
};

// Aggregate outcome of one divisibility check. Everything is exact; the
// count of minimal-valuation terms is itself part of the parity argument,
// so counts are integers, never estimates.
struct ValuationReport {
  std::string check; // "c2" | "c5" | "two-rows"
  std::vector<std::pair<std::string, std::int64_t>> params;
  bool feasible = true;
  std::string infeasible_reason;
  ExactInt total = 0;
  Valuation total_valuation = Valuation::infinity();
  std::optional<std::int64_t> expected_valuation;
  std::optional<Valuation> min_term_valuation;
  std::optional<ExactInt> count_at_min;
  std::optional<ExactInt> term_count;
  bool holds = false;
  std::vector<RouteCheck> route_checks;
  std::string note;
};

nlohmann::ordered_json report_to_json(const ValuationReport& report);

// Checks val_p g(p^e, p^f) = f - e. Computes the direct route, cross
// checks against the Cauchy route and (when m = 2) the two-row sum as the
// budget allows. Budget exhaustion of every route yields an infeasible
// report, never a wrong answer.
ValuationReport verify_conj2(std::uint64_t p, int e, int f,
                             const TermBudget& budget = {}, int threads = 1);

// One slot of the tuple lattice behind the termwise divisibility scan:
// an elementary bi-monomial e_mu e'_nu with its coefficient in the
// coproduct sum, i.e. sum over square partitions lambda of
// M^{se}_{lambda mu} * M^{se}_{dual(lambda) nu}. The sum is expanded in
// the elementary basis before the power is taken, so slots collapse over
// lambda; scanning at per-lambda granularity provably breaks the
// divisibility already at (p, e, f) = (2, 1, 2).
struct Conj5Slot {
  Partition mu;
  Partition nu;
  ExactInt weight;
};

// All nonzero slots over the m x m square, in canonical order.
std::vector<Conj5Slot> conj5_slots(int m);

// The exact term attached to one exponent tuple: the multinomial times
// the slot weights to their multiplicities times the two elementary
// pairings against (n-m)^m. Weight-degenerate tuples evaluate to zero.
ExactInt conj5_term(const std::vector<Conj5Slot>& slots,
                    const std::vector<int>& counts, const GInput& input);

// Enumerates every exponent tuple summing to 2(k-1), checks p^(f-e)
// divides each nonzero term, and cross checks the tuple total against
// g_direct. term_count counts nonzero terms.
ValuationReport termwise_scan(std::uint64_t p, int e, int f,
                              const TermBudget& budget = {}, int threads = 1);

} // namespace schurforge
