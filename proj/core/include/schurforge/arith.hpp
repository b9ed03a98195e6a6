#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "schurforge/exact_int.hpp"
#include "schurforge/valuation.hpp"

namespace schurforge {

// Throws std::invalid_argument unless p >= 2 and p passes trial division.
// Callers only ever pass small primes; there is no general primality
// machinery here.
void require_prime(std::uint64_t p);

// Largest t with p^t | x; Valuation::infinity() for x = 0.
Valuation val_p(const ExactInt& x, std::uint64_t p);

// Sum of base-p digits of n.
std::int64_t digit_sum(const ExactInt& n, std::uint64_t p);
std::int64_t digit_sum(std::uint64_t n, std::uint64_t p);

// Exact binomial coefficient; 0 when k < 0 or k > n.
ExactInt binomial(std::int64_t n, std::int64_t k);

// Exact multinomial coefficient n! / prod(parts!). The parts must be
// nonnegative and sum to n.
ExactInt multinomial(std::int64_t n, std::span<const std::int64_t> parts);

// val_p of multinomial(n, parts) via carry counting: the base-p digit-sum
// excess of the parts over n, divided by p - 1. Agrees with val_p of the
// exact coefficient without ever forming it.
std::int64_t kummer_valuation(std::int64_t n, std::span<const std::int64_t> parts,
                              std::uint64_t p);

// Exact Catalan number binom(2k, k) / (k + 1).
ExactInt catalan(std::int64_t k);

} // namespace schurforge
