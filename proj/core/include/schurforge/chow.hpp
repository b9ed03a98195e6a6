#pragma once

#include <map>
#include <utility>

#include "schurforge/budget.hpp"
#include "schurforge/exact_int.hpp"
#include "schurforge/partition.hpp"

namespace schurforge {

// The Chow ring of G(m, N): Schubert classes sigma_lambda for lambda
// inside the m x (N - m) truncation rectangle, products being LR products
// with every class outside the rectangle deleted.
struct ChowRingSpec {
  int subspace_dim; // m
  int ambient_dim;  // N
  ChowRingSpec(int m, int N);
  Rectangle box() const { return Rectangle(subspace_dim, ambient_dim - subspace_dim); }
  Partition point_class() const { return box().as_partition(); }
  bool operator==(const ChowRingSpec&) const = default;
};

class ChowClass {
public:
  explicit ChowClass(ChowRingSpec spec) : spec_(spec) {}
  static ChowClass unit(ChowRingSpec spec, const Partition& label, ExactInt coeff = 1);
  static ChowClass one(ChowRingSpec spec) { return unit(spec, Partition{}); }

  const ChowRingSpec& spec() const { return spec_; }
  const std::map<Partition, ExactInt>& terms() const { return terms_; }
  ExactInt coefficient(const Partition& label) const;
  void add_term(const Partition& label, const ExactInt& coeff); // rejects labels outside the box
  std::size_t term_count() const { return terms_.size(); }

private:
  ChowRingSpec spec_;
  std::map<Partition, ExactInt> terms_;
};

ChowClass chow_multiply(const ChowClass& a, const ChowClass& b);
ChowClass chow_power(const ChowClass& base, int exponent);

// Coefficient of the point class sigma_{(N-m)^m}.
ExactInt point_coefficient(const ChowClass& a);

using PartitionPair = std::pair<Partition, Partition>;

// Chow ring of a product of two Grassmannians; both factor specs are
// carried explicitly so truncation at ambient-dimension boundaries is
// unambiguous.
class BiChowClass {
public:
  BiChowClass(ChowRingSpec first, ChowRingSpec second) : first_(first), second_(second) {}
  static BiChowClass one(ChowRingSpec first, ChowRingSpec second);

  const ChowRingSpec& first_spec() const { return first_; }
  const ChowRingSpec& second_spec() const { return second_; }
  const std::map<PartitionPair, ExactInt>& terms() const { return terms_; }
  ExactInt coefficient(const PartitionPair& label) const;
  void add_term(const PartitionPair& label, const ExactInt& coeff);
  std::size_t term_count() const { return terms_.size(); }

private:
  ChowRingSpec first_, second_;
  std::map<PartitionPair, ExactInt> terms_;
};

BiChowClass bichow_multiply(const BiChowClass& a, const BiChowClass& b,
                            const TermBudget* budget = nullptr);
BiChowClass bichow_power(const BiChowClass& base, int exponent,
                         const TermBudget* budget = nullptr);

// Coefficient of (point, point).
ExactInt bipoint_coefficient(const BiChowClass& a);

} // namespace schurforge
