#pragma once

#include <map>

#include "schurforge/chow.hpp"
#include "schurforge/exact_int.hpp"
#include "schurforge/partition.hpp"

namespace schurforge {

// Element of the untruncated tensor square of the symmetric function
// ring. Used where truncation must not happen yet (the raw resultant
// expansion, whose column bounds are themselves an assertion under test).
class BiElement {
public:
  const std::map<PartitionPair, ExactInt>& terms() const { return terms_; }
  ExactInt coefficient(const PartitionPair& label) const;
  void add_term(const PartitionPair& label, const ExactInt& coeff);
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

private:
  std::map<PartitionPair, ExactInt> terms_;
};

BiElement bielement_multiply(const BiElement& a, const BiElement& b);

// Pullback of the top single-column class under the tensor-product
// embedding of G(m, m+n) x G(n, m+n), closed form: the sum over every
// lambda in the m x n rectangle of (lambda, transpose-complement of
// lambda) with coefficient one.
BiChowClass segre_pullback_sum(int m, int n);

// The same class from the Sylvester-determinant formula for the top Chern
// class of a tensor product of the dual tautological bundles, expanded in
// the untruncated tensor ring. No sign normalization, no truncation.
BiElement segre_resultant_raw(int m, int n);

// Determinant route, sign-normalized (the coefficient of the empty first
// factor paired with its rectangle dual is anchored at +1) and truncated
// to G(m, m+n) x G(n, m+n). Equals segre_pullback_sum.
BiChowClass segre_pullback_resultant(int m, int n);

} // namespace schurforge
