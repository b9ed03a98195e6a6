#include "schurforge/arith.hpp"

#include <numeric>
#include <stdexcept>

namespace schurforge {

void require_prime(std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("p must be a prime >= 2");
  if (p >= (1ull << 16)) return; // caller-checked beyond this range
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("p is not prime");
}

Valuation val_p(const ExactInt& x, std::uint64_t p) {
  require_prime(p);
  if (x == 0) return Valuation::infinity();
  if (p == 2) {
    // index of the lowest set bit of |x|
    return Valuation::finite(static_cast<std::int64_t>(mpz_scan1(x.get_mpz_t(), 0)));
  }
  ExactInt reduced;
  ExactInt prime(static_cast<unsigned long>(p));
  mp_bitcnt_t t = mpz_remove(reduced.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t());
  return Valuation::finite(static_cast<std::int64_t>(t));
}

std::int64_t digit_sum(std::uint64_t n, std::uint64_t p) {
  require_prime(p);
  std::int64_t s = 0;
  while (n != 0) {
    s += static_cast<std::int64_t>(n % p);
    n /= p;
  }
  return s;
}

std::int64_t digit_sum(const ExactInt& n, std::uint64_t p) {
  require_prime(p);
  if (n < 0) throw std::invalid_argument("digit_sum requires n >= 0");
  if (p == 2) return static_cast<std::int64_t>(mpz_popcount(n.get_mpz_t()));
  ExactInt rest = n, q, r;
  ExactInt prime(static_cast<unsigned long>(p));
  std::int64_t s = 0;
  while (rest != 0) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rest.get_mpz_t(), prime.get_mpz_t());
    s += r.get_si();
    rest = q;
  }
  return s;
}

ExactInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  ExactInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

ExactInt multinomial(std::int64_t n, std::span<const std::int64_t> parts) {
  std::int64_t sum = 0;
  for (std::int64_t part : parts) {
    if (part < 0) throw std::invalid_argument("multinomial parts must be nonnegative");
    sum += part;
  }
  if (sum != n) throw std::invalid_argument("multinomial parts must sum to n");
  // n! / prod(parts!) as a telescoping product of binomials of the
  // partial sums; each factor is exact.
  ExactInt result = 1;
  std::int64_t consumed = 0;
  for (std::int64_t part : parts) {
    consumed += part;
    result *= binomial(consumed, part);
  }
  return result;
}

std::int64_t kummer_valuation(std::int64_t n, std::span<const std::int64_t> parts,
                              std::uint64_t p) {
  require_prime(p);
  if (n < 0) throw std::invalid_argument("kummer_valuation requires n >= 0");
  std::int64_t sum = 0, digits = 0;
  for (std::int64_t part : parts) {
    if (part < 0) throw std::invalid_argument("kummer_valuation parts must be nonnegative");
    sum += part;
    digits += digit_sum(static_cast<std::uint64_t>(part), p);
  }
  if (sum != n) throw std::invalid_argument("kummer_valuation parts must sum to n");
  std::int64_t excess = digits - digit_sum(static_cast<std::uint64_t>(n), p);
  // For p = 2 the digit-sum excess is the carry count verbatim; for a
  // general prime each carry contributes p - 1 to the excess.
  return excess / static_cast<std::int64_t>(p - 1);
}

ExactInt catalan(std::int64_t k) {
  if (k < 0) throw std::invalid_argument("catalan requires k >= 0");
  ExactInt c = binomial(2 * k, k);
  mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k + 1));
  return c;
}

} // namespace schurforge
