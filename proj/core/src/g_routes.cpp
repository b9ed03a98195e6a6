#include "schurforge/g_routes.hpp"

#include <array>
#include <stdexcept>

#include "schurforge/arith.hpp"
#include "schurforge/chow.hpp"
#include "schurforge/lr.hpp"
#include "schurforge/parallel.hpp"
#include "schurforge/partition.hpp"
#include "schurforge/sym_element.hpp"

namespace schurforge {

GInput::GInput(std::int64_t m_in, std::int64_t n_in) : m(m_in), n(n_in), k(0) {
  if (m < 1) throw std::invalid_argument("g(m, n) requires m >= 1");
  if (n <= m || n % m != 0)
    throw std::invalid_argument("g(m, n) requires n a proper multiple of m");
  k = n / m;
}

ExactInt g_direct(const GInput& input, const TermBudget& budget) {
  int m = static_cast<int>(input.m);
  int n = static_cast<int>(input.n);
  Partition square = Rectangle(m, m).as_partition();
  SymElement base = SymElement::unit(BasisTag::schur, square);

  SymElement power = SymElement::one(BasisTag::schur);
  std::int64_t exponent = 2 * (input.k - 1);
  for (std::int64_t i = 0; i < exponent; ++i) power = schur_multiply(power, base, &budget);

  Partition tall = Rectangle(n - m, m).as_partition(); // m^(n-m)
  Partition wide = Rectangle(m, n - m).as_partition(); // (n-m)^m
  ExactInt total = 0;
  for (const auto& [nu, mult] : lr_expand(tall, wide)) {
    auto it = power.terms().find(nu);
    if (it != power.terms().end()) total += mult * it->second;
  }
  return total;
}

ExactInt g_cauchy(const GInput& input, const TermBudget& budget) {
  int m = static_cast<int>(input.m);
  int n = static_cast<int>(input.n);
  ChowRingSpec spec(m, n);
  Rectangle square(m, m);

  BiChowClass coproduct(spec, spec);
  for (const Partition& lambda : enumerate_in_rect(square))
    coproduct.add_term({lambda, transpose_complement(lambda, square)}, 1);

  BiChowClass power = bichow_power(coproduct, static_cast<int>(2 * (input.k - 1)), &budget);
  return bipoint_coefficient(power);
}

std::vector<Septuple> enumerate_septuples(std::int64_t ell) {
  if (ell < 1) throw std::invalid_argument("two-row sum requires ell >= 1");
  std::int64_t total = 2 * ell;
  std::vector<Septuple> out;
  for (std::int64_t a = 0; a <= total; ++a)
    for (std::int64_t b = 0; a + b <= total; ++b)
      for (std::int64_t c = 0; a + b + c <= total; ++c)
        for (std::int64_t d = 0; a + b + c + d <= total; ++d)
          for (std::int64_t e = 0; a + b + c + d + e <= total; ++e)
            for (std::int64_t f = 0; a + b + c + d + e + f <= total; ++f) {
              std::int64_t g = total - (a + b + c + d + e + f);
              Septuple s{a, b, c, d, e, f, g};
              if (s.balanced()) out.push_back(s);
            }
  return out;
}

ExactInt septuple_value(const Septuple& s) {
  if (!s.balanced()) throw std::invalid_argument("septuple violates d + 2f = e + 2g");
  std::array<std::int64_t, 7> parts{s.a, s.b, s.c, s.d, s.e, s.f, s.g};
  std::int64_t half = (s.d + s.e) / 2;
  ExactInt value = multinomial(s.total(), parts);
  value *= catalan(s.a + half);
  value *= catalan(s.b + half);
  if (s.c % 2 == 1) value = -value;
  mpz_mul_2exp(value.get_mpz_t(), value.get_mpz_t(), static_cast<mp_bitcnt_t>(s.c));
  return value;
}

ExactInt g_two_rows(std::int64_t ell, int threads) {
  std::vector<Septuple> septuples = enumerate_septuples(ell);
  return parallel_fold<ExactInt>(
      septuples.size(), threads,
      [&](ExactInt& acc, std::size_t i) { acc += septuple_value(septuples[i]); },
      [](ExactInt& into, ExactInt& part) { into += part; });
}

std::vector<SeptupleTerm> septuple_terms(std::int64_t ell, int threads) {
  std::vector<Septuple> septuples = enumerate_septuples(ell);
  return parallel_fold<std::vector<SeptupleTerm>>(
      septuples.size(), threads,
      [&](std::vector<SeptupleTerm>& acc, std::size_t i) {
        ExactInt value = septuple_value(septuples[i]);
        Valuation valuation = val_p(value, 2);
        acc.push_back(SeptupleTerm{septuples[i], std::move(value), valuation});
      },
      [](std::vector<SeptupleTerm>& into, std::vector<SeptupleTerm>& part) {
        into.insert(into.end(), std::make_move_iterator(part.begin()),
                    std::make_move_iterator(part.end()));
      });
}

bool involution_check(std::int64_t ell) {
  for (const Septuple& s : enumerate_septuples(ell)) {
    Septuple swapped = s.swapped();
    if (swapped.total() != s.total() || !swapped.balanced()) return false;
    if (septuple_value(swapped) != septuple_value(s)) return false;
    bool fixed = swapped == s;
    if (fixed && s.c % 2 != 0) return false;
  }
  return true;
}

} // namespace schurforge
