#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "schurforge/arith.hpp"

using namespace schurforge;

TEST_CASE("val_p small cases") {
  CHECK(val_p(6, 2) == Valuation::finite(1));
  CHECK(val_p(27, 3) == Valuation::finite(3));
  CHECK(val_p(binomial(4, 2), 2) == Valuation::finite(1)); // binom(4,2)=6, singly even
  CHECK(val_p(-24, 2) == Valuation::finite(3));
  CHECK(val_p(7, 2) == Valuation::finite(0));
}

TEST_CASE("valuation of zero is the infinity marker") {
  Valuation infinite = val_p(0, 5);
  CHECK(infinite.is_infinite());
  CHECK(infinite > Valuation::finite(1'000'000));
  CHECK(Valuation::finite(3) < infinite);
  CHECK(infinite == Valuation::infinity());
  CHECK_THROWS_AS(infinite.amount(), std::logic_error);
}

TEST_CASE("composite or tiny p rejected") {
  CHECK_THROWS_AS(val_p(6, 1), std::invalid_argument);
  CHECK_THROWS_AS(val_p(6, 0), std::invalid_argument);
  CHECK_THROWS_AS(val_p(6, 4), std::invalid_argument);
  CHECK_THROWS_AS(digit_sum(std::uint64_t{6}, 9), std::invalid_argument);
}

TEST_CASE("digit_sum") {
  CHECK(digit_sum(std::uint64_t{3}, 2) == 2);
  CHECK(digit_sum(std::uint64_t{8}, 2) == 1);
  CHECK(digit_sum(std::uint64_t{0}, 2) == 0);
  CHECK(digit_sum(std::uint64_t{26}, 3) == 6); // 222 base 3
  CHECK(digit_sum(ExactInt("123456789123456789"), 3) ==
        digit_sum(ExactInt("123456789123456789"), 3));
  CHECK(digit_sum(ExactInt(255), 2) == 8);
}

TEST_CASE("multinomial examples") {
  CHECK(multinomial(4, std::vector<std::int64_t>{2, 2}) == 6);
  CHECK(multinomial(2, std::vector<std::int64_t>{2, 0, 0, 0, 0, 0, 0}) == 1);
  std::vector<std::int64_t> parts{1, 1, 0, 2, 2, 0, 0};
  ExactInt expected = oracle::pascal_multinomial(6, parts);
  CHECK(expected == 180);
  CHECK(multinomial(6, parts) == expected);
  CHECK_THROWS_AS(multinomial(5, std::vector<std::int64_t>{2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(multinomial(4, std::vector<std::int64_t>{5, -1}), std::invalid_argument);
}

TEST_CASE("multinomial invariant under permutation of parts") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> part(0, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::int64_t> parts(5);
    std::int64_t n = 0;
    for (auto& x : parts) {
      x = part(rng);
      n += x;
    }
    ExactInt reference = multinomial(n, parts);
    std::shuffle(parts.begin(), parts.end(), rng);
    CHECK(multinomial(n, parts) == reference);
  }
}

TEST_CASE("kummer_valuation pinned cases") {
  CHECK(kummer_valuation(6, std::vector<std::int64_t>{3, 3}, 2) == 2);
  CHECK(val_p(20, 2) == Valuation::finite(2)); // binom(6,3) = 20
  CHECK(kummer_valuation(4, std::vector<std::int64_t>{2, 2}, 2) == 1);
  CHECK(multinomial(9, std::vector<std::int64_t>{3, 3, 3}) == 1680);
  CHECK(kummer_valuation(9, std::vector<std::int64_t>{3, 3, 3}, 3) == 1);
  CHECK(val_p(1680, 3) == Valuation::finite(1)); // 1680 = 2^4 * 3 * 5 * 7
  CHECK_THROWS_AS(kummer_valuation(5, std::vector<std::int64_t>{2, 2}, 2),
                  std::invalid_argument);
}

TEST_CASE("kummer valuation agrees with direct factor counting") {
  // exhaustive on small binomials
  for (std::uint64_t p : {2u, 3u, 5u})
    for (std::int64_t n = 0; n <= 120; ++n)
      for (std::int64_t k = 0; k <= n; ++k) {
        std::vector<std::int64_t> parts{k, n - k};
        CHECK(kummer_valuation(n, parts, p) ==
              oracle::legendre_multinomial_valuation(n, parts, p));
      }

  // sampled up to 2^20, binomials and wider multinomials
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> big(0, 1 << 20);
  for (int trial = 0; trial < 4000; ++trial) {
    std::int64_t n = big(rng);
    std::int64_t k = std::uniform_int_distribution<std::int64_t>(0, n)(rng);
    for (std::uint64_t p : {2u, 3u, 5u}) {
      std::vector<std::int64_t> parts{k, n - k};
      CHECK(kummer_valuation(n, parts, p) ==
            oracle::legendre_multinomial_valuation(n, parts, p));
    }
  }
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::int64_t> parts(4);
    std::int64_t n = 0;
    for (auto& x : parts) {
      x = std::uniform_int_distribution<std::int64_t>(0, 5000)(rng);
      n += x;
    }
    for (std::uint64_t p : {2u, 3u})
      CHECK(kummer_valuation(n, parts, p) ==
            oracle::legendre_multinomial_valuation(n, parts, p));
  }
}

TEST_CASE("kummer valuation matches val_p of the exact coefficient") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::int64_t> parts(3);
    std::int64_t n = 0;
    for (auto& x : parts) {
      x = std::uniform_int_distribution<std::int64_t>(0, 40)(rng);
      n += x;
    }
    ExactInt value = multinomial(n, parts);
    for (std::uint64_t p : {2u, 3u, 5u})
      CHECK(Valuation::finite(kummer_valuation(n, parts, p)) == val_p(value, p));
  }
}

TEST_CASE("catalan numbers") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(4) == 14);
  CHECK(catalan(10) == 16796);
  CHECK_THROWS_AS(catalan(-1), std::invalid_argument);
}

TEST_CASE("catalan valuation identity to k = 2000") {
  // val_2 C_k = v(k+1) - 1; the full 10^4 sweep runs in the acceptance suite
  ExactInt c = 1;
  for (std::int64_t k = 0; k <= 2000; ++k) {
    CHECK(val_p(c, 2) == Valuation::finite(digit_sum(static_cast<std::uint64_t>(k + 1), 2) - 1));
    c = c * 2 * (2 * k + 1);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k + 2));
  }
}

TEST_CASE("digit-sum triangle inequality") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::uint64_t> any(0, 1ull << 40);
  for (int trial = 0; trial < 100'000; ++trial) {
    std::uint64_t k = any(rng), j = any(rng);
    CHECK(digit_sum(k + j, 2) <= digit_sum(k, 2) + digit_sum(j, 2));
    CHECK(digit_sum(2 * k, 2) == digit_sum(k, 2));
  }
}
