#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace schurforge::oracle {

namespace {

struct Cell {
  int row, col;
};

std::vector<Cell> reading_order_cells(const Partition& outer, const Partition& inner) {
  std::vector<Cell> cells;
  for (int r = 0; r < outer.length(); ++r)
    for (int c = inner.part(r); c < outer.part(r); ++c) cells.push_back({r, c});
  return cells;
}

// Fill the listed cells with values 1..len(content), row-weak and
// column-strict, consuming the content exactly. Calls `done` for each
// complete filling with the grid of values.
template <class Done>
void fill_cells(const Partition& outer, const std::vector<Cell>& cells,
                std::vector<int> content, Done&& done) {
  std::vector<std::vector<int>> grid(static_cast<std::size_t>(outer.length()));
  for (int r = 0; r < outer.length(); ++r)
    grid[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(outer.part(r)), 0);

  auto step = [&](auto&& self, std::size_t i) -> void {
    if (i == cells.size()) {
      done(grid);
      return;
    }
    auto [r, c] = cells[i];
    int left = c > 0 ? grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)] : 0;
    int above = r > 0 && c < outer.part(r - 1)
                    ? grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)]
                    : 0;
    for (int v = 1; v <= static_cast<int>(content.size()); ++v) {
      if (content[static_cast<std::size_t>(v - 1)] == 0) continue;
      if (left != 0 && v < left) continue;   // row weakly increasing
      if (v <= above) continue;              // column strictly increasing
      content[static_cast<std::size_t>(v - 1)] -= 1;
      grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      self(self, i + 1);
      grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
      content[static_cast<std::size_t>(v - 1)] += 1;
    }
  };
  step(step, 0);
}

} // namespace

ExactInt ssyt_count(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) return 0;
  std::vector<int> content(mu.parts());
  ExactInt count = 0;
  fill_cells(lambda, reading_order_cells(lambda, Partition{}), content,
             [&](const auto&) { count += 1; });
  return count;
}

ExactInt lr_count(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.weight() + mu.weight() != nu.weight()) return 0;
  for (int r = 0; r < lambda.length(); ++r)
    if (lambda.part(r) > nu.part(r)) return 0;

  std::vector<int> content(mu.parts());
  ExactInt count = 0;
  fill_cells(nu, reading_order_cells(nu, lambda), content, [&](const auto& grid) {
    // reverse reading word: right to left along each row, top to bottom
    std::vector<int> seen(static_cast<std::size_t>(mu.length()) + 1, 0);
    for (const auto& row : grid)
      for (auto it = row.rbegin(); it != row.rend(); ++it) {
        int v = *it;
        if (v == 0) continue;
        seen[static_cast<std::size_t>(v)] += 1;
        if (v > 1 && seen[static_cast<std::size_t>(v)] > seen[static_cast<std::size_t>(v - 1)])
          return; // not a lattice word
      }
    count += 1;
  });
  return count;
}

ExactInt pascal_multinomial(std::int64_t n, const std::vector<std::int64_t>& parts) {
  if (std::accumulate(parts.begin(), parts.end(), std::int64_t{0}) != n)
    throw std::invalid_argument("parts must sum to n");
  std::vector<std::vector<ExactInt>> pascal(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) {
    pascal[i].assign(i + 1, 1);
    for (std::size_t j = 1; j < i; ++j) pascal[i][j] = pascal[i - 1][j - 1] + pascal[i - 1][j];
  }
  ExactInt result = 1;
  std::int64_t used = 0;
  for (std::int64_t part : parts) {
    used += part;
    result *= pascal[static_cast<std::size_t>(used)][static_cast<std::size_t>(part)];
  }
  return result;
}

std::int64_t legendre_multinomial_valuation(std::int64_t n,
                                            const std::vector<std::int64_t>& parts,
                                            std::uint64_t p) {
  auto factorial_valuation = [&](std::int64_t x) {
    std::int64_t total = 0;
    for (std::int64_t power = static_cast<std::int64_t>(p); power <= x;) {
      total += x / power;
      if (power > x / static_cast<std::int64_t>(p)) break;
      power *= static_cast<std::int64_t>(p);
    }
    return total;
  };
  std::int64_t value = factorial_valuation(n);
  for (std::int64_t part : parts) value -= factorial_valuation(part);
  return value;
}

ExactInt pieri_column_count(const Partition& lambda, int r, const Partition& nu) {
  if (lambda.weight() + r != nu.weight()) return 0;
  int added = 0;
  int rows = std::max(lambda.length(), nu.length());
  for (int i = 0; i < rows; ++i) {
    int delta = nu.part(i) - lambda.part(i);
    if (delta < 0 || delta > 1) return 0; // vertical strip: at most one box per row
    added += delta;
  }
  return added == r ? 1 : 0;
}

BiElement leibniz_determinant(const std::vector<std::vector<BiElement>>& matrix) {
  std::size_t size = matrix.size();
  std::vector<std::size_t> perm(size);
  std::iota(perm.begin(), perm.end(), 0);
  BiElement total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = i + 1; j < size; ++j)
        if (perm[i] > perm[j]) ++inversions;

    BiElement product;
    product.add_term({Partition{}, Partition{}}, (inversions % 2 == 0) ? 1 : -1);
    bool zero = false;
    for (std::size_t i = 0; i < size && !zero; ++i) {
      const BiElement& entry = matrix[i][perm[i]];
      if (entry.is_zero()) {
        zero = true;
        break;
      }
      product = bielement_multiply(product, entry);
    }
    if (!zero)
      for (const auto& [label, coeff] : product.terms()) total.add_term(label, coeff);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::vector<std::vector<BiElement>> chern_sylvester_matrix(int m, int n) {
  int size = m + n;
  auto column = [](int h) { return Partition(std::vector<int>(static_cast<std::size_t>(h), 1)); };
  std::vector<std::vector<BiElement>> matrix(
      static_cast<std::size_t>(size), std::vector<BiElement>(static_cast<std::size_t>(size)));
  for (int row = 0; row < n; ++row)
    for (int offset = 0; offset <= m && row + offset < size; ++offset)
      matrix[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + offset)].add_term(
          {column(offset), Partition{}}, offset % 2 == 0 ? 1 : -1);
  for (int row = 0; row < m; ++row)
    for (int offset = 0; offset <= n && row + offset < size; ++offset)
      matrix[static_cast<std::size_t>(n + row)][static_cast<std::size_t>(row + offset)].add_term(
          {Partition{}, column(offset)}, 1);
  return matrix;
}

} // namespace schurforge::oracle
