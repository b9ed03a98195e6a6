#include "schurforge/conjectures.hpp"

#include <algorithm>
#include <stdexcept>

#include "schurforge/arith.hpp"
#include "schurforge/chow.hpp"
#include "schurforge/lr.hpp"
#include "schurforge/parallel.hpp"
#include "schurforge/transition.hpp"

namespace schurforge {

namespace {

nlohmann::ordered_json valuation_json(const Valuation& v) {
  if (v.is_infinite()) return "infinity";
  return v.amount();
}

std::optional<std::int64_t> checked_pow(std::uint64_t base, int exponent, std::int64_t limit) {
  std::int64_t value = 1;
  for (int i = 0; i < exponent; ++i) {
    if (value > limit / static_cast<std::int64_t>(base)) return std::nullopt;
    value *= static_cast<std::int64_t>(base);
  }
  return value;
}

} // namespace

nlohmann::ordered_json report_to_json(const ValuationReport& report) {
  nlohmann::ordered_json j;
  j["check"] = report.check;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [name, value] : report.params) params[name] = value;
  j["params"] = params;
  j["feasible"] = report.feasible;
  if (!report.feasible) j["infeasible_reason"] = report.infeasible_reason;
  j["total"] = decimal_string(report.total);
  j["total_valuation"] = valuation_json(report.total_valuation);
  if (report.expected_valuation) j["expected_valuation"] = *report.expected_valuation;
  if (report.min_term_valuation) j["min_term_valuation"] = valuation_json(*report.min_term_valuation);
  if (report.count_at_min) j["count_at_min"] = decimal_string(*report.count_at_min);
  if (report.term_count) j["term_count"] = decimal_string(*report.term_count);
  j["holds"] = report.holds;
  nlohmann::ordered_json routes = nlohmann::ordered_json::array();
  for (const RouteCheck& rc : report.route_checks) {
    nlohmann::ordered_json r;
    r["route"] = rc.route;
    r["value"] = decimal_string(rc.value);
    r["agrees"] = rc.agrees;
    routes.push_back(r);
  }
  j["route_checks"] = routes;
  if (!report.note.empty()) j["note"] = report.note;
  return j;
}

ValuationReport verify_conj2(std::uint64_t p, int e, int f,
                             const TermBudget& budget, int threads) {
  require_prime(p);
  if (e < 1 || f <= e) throw std::invalid_argument("verify_conj2 requires 1 <= e < f");

  ValuationReport report;
  report.check = "c2";
  report.params = {{"p", static_cast<std::int64_t>(p)}, {"e", e}, {"f", f}};
  report.expected_valuation = f - e;

  auto m = checked_pow(p, e, 1 << 20);
  auto n = checked_pow(p, f, 1 << 20);
  if (!m || !n) {
    report.feasible = false;
    report.infeasible_reason = "infeasible at desk scale: p^f out of range";
    return report;
  }
  GInput input(*m, *n);

  std::optional<ExactInt> primary;
  std::string skipped;
  auto attempt = [&](const std::string& name, auto&& compute) {
    try {
      ExactInt value = compute();
      report.route_checks.push_back({name, value, true});
      if (!primary) primary = value;
    } catch (const BudgetExceeded&) {
      skipped += (skipped.empty() ? "" : ", ") + name + " route over budget";
    }
  };

  attempt("direct", [&] { return g_direct(input, budget); });
  attempt("cauchy", [&] { return g_cauchy(input, budget); });
  if (*m == 2) {
    std::int64_t ell = (*n - 2) / 2;
    ExactInt septuple_bound = binomial(2 * ell + 6, 6);
    if (septuple_bound <= static_cast<long>(budget.max_terms))
      attempt("two-rows", [&] { return g_two_rows(ell, threads); });
    else
      skipped += (skipped.empty() ? "" : ", ") + std::string("two-rows route over budget");
  }
  report.note = skipped;

  if (!primary) {
    report.feasible = false;
    report.infeasible_reason = "infeasible at desk scale: every route exceeded the term budget";
    return report;
  }

  bool agrees = true;
  for (RouteCheck& rc : report.route_checks) {
    rc.agrees = (rc.value == *primary);
    agrees = agrees && rc.agrees;
  }
  report.total = *primary;
  report.total_valuation = val_p(report.total, p);
  report.holds = agrees && !report.total_valuation.is_infinite() &&
                 report.total_valuation.amount() == f - e;
  return report;
}

std::vector<Conj5Slot> conj5_slots(int m) {
  Rectangle square(m, m);
  std::map<PartitionPair, ExactInt> collapsed;
  for (const Partition& lambda : enumerate_in_rect(square)) {
    Partition dual = transpose_complement(lambda, square);
    SymElement expansion = schur_to_elementary(lambda);
    SymElement dual_expansion = schur_to_elementary(dual);
    for (const auto& [mu, a] : expansion.terms())
      for (const auto& [nu, b] : dual_expansion.terms()) {
        auto [it, inserted] = collapsed.emplace(PartitionPair{mu, nu}, a * b);
        if (!inserted) it->second += a * b;
      }
  }
  std::vector<Conj5Slot> slots;
  slots.reserve(collapsed.size());
  for (const auto& [pair, weight] : collapsed)
    if (weight != 0) slots.push_back(Conj5Slot{pair.first, pair.second, weight});
  return slots;
}

ExactInt conj5_term(const std::vector<Conj5Slot>& slots,
                    const std::vector<int>& counts, const GInput& input) {
  if (counts.size() != slots.size())
    throw std::invalid_argument("counts must align with the slot index");
  std::int64_t r = 2 * (input.k - 1);
  std::int64_t degree = input.m * (input.n - input.m);

  std::vector<std::int64_t> exponents(counts.begin(), counts.end());
  std::int64_t total_count = 0, mu_weight = 0;
  for (std::size_t t = 0; t < counts.size(); ++t) {
    if (counts[t] < 0) throw std::invalid_argument("counts must be nonnegative");
    total_count += counts[t];
    mu_weight += counts[t] * slots[t].mu.weight();
  }
  if (total_count != r) throw std::invalid_argument("counts must sum to 2(k-1)");
  if (mu_weight != degree) return 0; // pairing vanishes on weight mismatch

  ExactInt value = multinomial(r, exponents);
  std::vector<int> mu_parts, nu_parts;
  for (std::size_t t = 0; t < counts.size(); ++t) {
    if (counts[t] == 0) continue;
    ExactInt powed;
    mpz_pow_ui(powed.get_mpz_t(), slots[t].weight.get_mpz_t(),
               static_cast<unsigned long>(counts[t]));
    value *= powed;
    for (int rep = 0; rep < counts[t]; ++rep) {
      mu_parts.insert(mu_parts.end(), slots[t].mu.parts().begin(), slots[t].mu.parts().end());
      nu_parts.insert(nu_parts.end(), slots[t].nu.parts().begin(), slots[t].nu.parts().end());
    }
  }
  std::sort(mu_parts.begin(), mu_parts.end(), std::greater<int>());
  std::sort(nu_parts.begin(), nu_parts.end(), std::greater<int>());

  Partition shape = Rectangle(static_cast<int>(input.n - input.m),
                              static_cast<int>(input.m)).as_partition();
  value *= kostka(shape, Partition(std::move(mu_parts)));
  if (value == 0) return 0;
  value *= kostka(shape, Partition(std::move(nu_parts)));
  return value;
}

namespace {

struct ScanAccumulator {
  ExactInt total = 0;
  std::optional<Valuation> min_valuation;
  ExactInt count_at_min = 0;
  ExactInt nonzero_terms = 0;
  bool all_divisible = true;

  void take_term(const ExactInt& value, const Valuation& valuation, std::int64_t required) {
    total += value;
    if (value == 0) return;
    nonzero_terms += 1;
    if (valuation.is_infinite() || valuation.amount() < required) all_divisible = false;
    if (!min_valuation || valuation < *min_valuation) {
      min_valuation = valuation;
      count_at_min = 1;
    } else if (valuation == *min_valuation) {
      count_at_min += 1;
    }
  }

  void merge(ScanAccumulator& other) {
    total += other.total;
    nonzero_terms += other.nonzero_terms;
    all_divisible = all_divisible && other.all_divisible;
    if (other.min_valuation) {
      if (!min_valuation || *other.min_valuation < *min_valuation) {
        min_valuation = other.min_valuation;
        count_at_min = other.count_at_min;
      } else if (*other.min_valuation == *min_valuation) {
        count_at_min += other.count_at_min;
      }
    }
  }
};

// Exponent tuples summing to `r` whose mu-weight lands exactly on
// `degree`; anything else pairs to zero and is pruned by the weight
// window of the remaining slots.
std::vector<std::vector<int>> enumerate_tuples(const std::vector<Conj5Slot>& index,
                                               std::int64_t r, std::int64_t degree,
                                               const TermBudget& budget) {
  std::size_t slots = index.size();
  std::vector<std::int64_t> min_suffix(slots + 1, 0), max_suffix(slots + 1, 0);
  for (std::size_t i = slots; i-- > 0;) {
    std::int64_t w = index[i].mu.weight();
    min_suffix[i] = (i + 1 == slots) ? w : std::min(min_suffix[i + 1], w);
    max_suffix[i] = (i + 1 == slots) ? w : std::max(max_suffix[i + 1], w);
  }

  std::vector<std::vector<int>> tuples;
  std::vector<int> counts(slots, 0);
  auto walk = [&](auto&& self, std::size_t slot, std::int64_t remaining,
                  std::int64_t weight_left) -> void {
    if (slot == slots) {
      if (remaining == 0 && weight_left == 0) {
        tuples.push_back(counts);
        budget.check(tuples.size());
      }
      return;
    }
    if (remaining == 0) {
      if (weight_left != 0) return;
    } else if (weight_left < remaining * min_suffix[slot] ||
               weight_left > remaining * max_suffix[slot]) {
      return;
    }
    std::int64_t w = index[slot].mu.weight();
    for (int take = 0; take <= remaining; ++take) {
      if (static_cast<std::int64_t>(take) * w > weight_left) break;
      counts[slot] = take;
      self(self, slot + 1, remaining - take, weight_left - take * w);
    }
    counts[slot] = 0;
  };
  walk(walk, 0, r, degree);
  return tuples;
}

} // namespace

ValuationReport termwise_scan(std::uint64_t p, int e, int f,
                              const TermBudget& budget, int threads) {
  require_prime(p);
  if (e < 1 || f <= e) throw std::invalid_argument("termwise_scan requires 1 <= e < f");

  ValuationReport report;
  report.check = "c5";
  report.params = {{"p", static_cast<std::int64_t>(p)}, {"e", e}, {"f", f}};
  report.expected_valuation = f - e;
  report.note = "tuples indexed per elementary bi-monomial slot, coproduct coefficients collapsed";

  auto m = checked_pow(p, e, 1 << 16);
  auto n = checked_pow(p, f, 1 << 16);
  if (!m || !n) {
    report.feasible = false;
    report.infeasible_reason = "infeasible at desk scale: p^f out of range";
    return report;
  }
  GInput input(*m, *n);
  std::int64_t r = 2 * (input.k - 1);
  std::int64_t degree = input.m * (input.n - input.m);

  std::vector<Conj5Slot> slots = conj5_slots(static_cast<int>(*m));
  ExactInt lattice_bound = binomial(r + static_cast<std::int64_t>(slots.size()) - 1,
                                    static_cast<std::int64_t>(slots.size()) - 1);
  if (lattice_bound > static_cast<long>(budget.max_terms)) {
    report.feasible = false;
    report.infeasible_reason = "infeasible at desk scale: tuple lattice exceeds the term budget";
    return report;
  }

  std::vector<std::vector<int>> tuples;
  try {
    tuples = enumerate_tuples(slots, r, degree, budget);
  } catch (const BudgetExceeded&) {
    report.feasible = false;
    report.infeasible_reason = "infeasible at desk scale: tuple lattice exceeds the term budget";
    return report;
  }

  std::int64_t required = f - e;
  ScanAccumulator scan = parallel_fold<ScanAccumulator>(
      tuples.size(), threads,
      [&](ScanAccumulator& acc, std::size_t i) {
        ExactInt value = conj5_term(slots, tuples[i], input);
        acc.take_term(value, value == 0 ? Valuation::infinity() : val_p(value, p), required);
      },
      [](ScanAccumulator& into, ScanAccumulator& part) { into.merge(part); });

  report.total = scan.total;
  report.total_valuation = val_p(scan.total, p);
  report.min_term_valuation =
      scan.min_valuation ? *scan.min_valuation : Valuation::infinity();
  report.count_at_min = scan.count_at_min;
  report.term_count = scan.nonzero_terms;

  bool direct_agrees = true;
  try {
    ExactInt direct = g_direct(input, budget);
    direct_agrees = (direct == scan.total);
    report.route_checks.push_back({"direct", direct, direct_agrees});
    if (!direct_agrees)
      throw std::logic_error("termwise scan total disagrees with g_direct");
  } catch (const BudgetExceeded&) {
    report.note += "; direct cross-check over budget";
  }

  report.holds = scan.all_divisible && direct_agrees;
  return report;
}

} // namespace schurforge
