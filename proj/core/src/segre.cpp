#include "schurforge/segre.hpp"

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "schurforge/lr.hpp"

namespace schurforge {

ExactInt BiElement::coefficient(const PartitionPair& label) const {
  auto it = terms_.find(label);
  return it == terms_.end() ? ExactInt(0) : it->second;
}

void BiElement::add_term(const PartitionPair& label, const ExactInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(label, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

BiElement bielement_multiply(const BiElement& a, const BiElement& b) {
  BiElement result;
  for (const auto& [pa, ca] : a.terms())
    for (const auto& [pb, cb] : b.terms()) {
      ExactInt scale = ca * cb;
      SchurExpansion left = lr_expand(pa.first, pb.first);
      SchurExpansion right = lr_expand(pa.second, pb.second);
      for (const auto& [nu1, m1] : left)
        for (const auto& [nu2, m2] : right)
          result.add_term({nu1, nu2}, scale * m1 * m2);
    }
  return result;
}

BiChowClass segre_pullback_sum(int m, int n) {
  ChowRingSpec first(m, m + n), second(n, m + n);
  BiChowClass out(first, second);
  Rectangle box(m, n);
  for (const Partition& lambda : enumerate_in_rect(box))
    out.add_term({lambda, transpose_complement(lambda, box)}, 1);
  return out;
}

namespace {

Partition single_column(int height) {
  return Partition(std::vector<int>(static_cast<std::size_t>(height), 1));
}

// Sylvester matrix of the two Chern polynomials: n rows of alternating
// sign single-column classes from the first factor (degree m), then m
// rows of plain single-column classes from the second factor (degree n).
std::vector<std::vector<BiElement>> sylvester_matrix(int m, int n) {
  int size = m + n;
  std::vector<std::vector<BiElement>> matrix(static_cast<std::size_t>(size),
                                             std::vector<BiElement>(static_cast<std::size_t>(size)));
  for (int row = 0; row < n; ++row)
    for (int offset = 0; offset <= m; ++offset) {
      int col = row + offset;
      if (col >= size) break;
      ExactInt sign = (offset % 2 == 0) ? 1 : -1;
      matrix[row][col].add_term({single_column(offset), Partition{}}, sign);
    }
  for (int row = 0; row < m; ++row)
    for (int offset = 0; offset <= n; ++offset) {
      int col = row + offset;
      if (col >= size) break;
      matrix[n + row][col].add_term({Partition{}, single_column(offset)}, 1);
    }
  return matrix;
}

// Laplace expansion along columns, memoized on the set of unused rows.
class DeterminantExpander {
public:
  explicit DeterminantExpander(std::vector<std::vector<BiElement>> matrix)
      : matrix_(std::move(matrix)), size_(matrix_.size()) {}

  BiElement run() { return expand((1ull << size_) - 1); }

private:
  BiElement expand(std::uint64_t row_mask) {
    if (row_mask == 0) {
      BiElement one;
      one.add_term({Partition{}, Partition{}}, 1);
      return one;
    }
    auto it = memo_.find(row_mask);
    if (it != memo_.end()) return it->second;

    std::size_t col = size_ - static_cast<std::size_t>(__builtin_popcountll(row_mask));
    BiElement total;
    int parity = 0;
    for (std::size_t row = 0; row < size_; ++row) {
      if (!(row_mask & (1ull << row))) continue;
      const BiElement& entry = matrix_[row][col];
      if (!entry.is_zero()) {
        BiElement minor = expand(row_mask & ~(1ull << row));
        BiElement product = bielement_multiply(entry, minor);
        ExactInt sign = (parity % 2 == 0) ? 1 : -1;
        for (const auto& [label, coeff] : product.terms()) total.add_term(label, sign * coeff);
      }
      ++parity;
    }
    memo_.emplace(row_mask, total);
    return total;
  }

  std::vector<std::vector<BiElement>> matrix_;
  std::size_t size_;
  std::unordered_map<std::uint64_t, BiElement> memo_;
};

} // namespace

BiElement segre_resultant_raw(int m, int n) {
  if (m < 1 || n < 1 || m + n > 16)
    throw std::invalid_argument("resultant expansion supported for 1 <= m, n with m + n <= 16");
  return DeterminantExpander(sylvester_matrix(m, n)).run();
}

BiChowClass segre_pullback_resultant(int m, int n) {
  BiElement raw = segre_resultant_raw(m, n);
  Rectangle box(m, n);
  // The determinant is stated only up to a unit; anchor the term pairing
  // the empty first factor with its rectangle dual at +1.
  PartitionPair anchor{Partition{}, transpose_complement(Partition{}, box)};
  ExactInt anchor_coeff = raw.coefficient(anchor);
  if (anchor_coeff != 1 && anchor_coeff != -1)
    throw std::logic_error("resultant anchor coefficient is not a unit");

  ChowRingSpec first(m, m + n), second(n, m + n);
  BiChowClass out(first, second);
  Rectangle box1 = first.box(), box2 = second.box();
  for (const auto& [label, coeff] : raw.terms())
    if (fits(label.first, box1) && fits(label.second, box2))
      out.add_term(label, anchor_coeff * coeff);
  return out;
}

} // namespace schurforge
