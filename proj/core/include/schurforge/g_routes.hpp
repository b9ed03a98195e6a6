#pragma once

#include <cstdint>
#include <vector>

#include "schurforge/budget.hpp"
#include "schurforge/exact_int.hpp"
#include "schurforge/valuation.hpp"

namespace schurforge {

// Parameters of the invariant g(m, n): n must be a proper multiple of m.
struct GInput {
  std::int64_t m;
  std::int64_t n;
  std::int64_t k; // n / m
  GInput(std::int64_t m, std::int64_t n);
};

// Hall pairing of s_{m^(n-m)} s_{(n-m)^m} against the 2(k-1) power of
// s_{m^m}, the power formed by iterated Schur multiplication in the full
// ring (no truncation), degree 2m(n-m).
ExactInt g_direct(const GInput& input, const TermBudget& budget = {});

// The same number as the coefficient of the pair ((n-m)^m, (n-m)^m) in
// the 2(k-1) power of the coproduct sum over lambda inside the m x m
// square of (lambda, transpose-complement of lambda). Extracting a single
// rectangle-bounded coefficient lets the power run in the product Chow
// ring of two copies of G(m, n), which is exact for that coefficient
// because shapes only grow under multiplication.
ExactInt g_cauchy(const GInput& input, const TermBudget& budget = {});

// The two-row septuple sum evaluating g(2, 2*ell + 2).
ExactInt g_two_rows(std::int64_t ell, int threads = 1);

// One index of the two-row sum. Entries are nonnegative; the paired
// constraints sum-to-2ell and d + 2f = e + 2g hold for every enumerated
// septuple, which forces d + e to be even.
struct Septuple {
  std::int64_t a, b, c, d, e, f, g;
  std::int64_t total() const { return a + b + c + d + e + f + g; }
  bool balanced() const { return d + 2 * f == e + 2 * g; }
  Septuple swapped() const { return Septuple{b, a, c, e, d, g, f}; }
  bool operator==(const Septuple&) const = default;
};

std::vector<Septuple> enumerate_septuples(std::int64_t ell);

// (-2)^c * multinomial(2ell; a..g) * C_{a+(d+e)/2} * C_{b+(d+e)/2}
ExactInt septuple_value(const Septuple& s);

struct SeptupleTerm {
  Septuple index;
  ExactInt value;
  Valuation valuation; // 2-adic
};

std::vector<SeptupleTerm> septuple_terms(std::int64_t ell, int threads = 1);

// True iff swapping (a, d, f) with (b, e, g) maps valid septuples to valid
// septuples preserving the term value, and every fixed point has even c.
bool involution_check(std::int64_t ell);

} // namespace schurforge
