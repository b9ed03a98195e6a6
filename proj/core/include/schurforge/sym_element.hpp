#pragma once

#include <map>
#include <string>

#include "schurforge/budget.hpp"
#include "schurforge/exact_int.hpp"
#include "schurforge/partition.hpp"

namespace schurforge {

enum class BasisTag { schur, elementary, monomial };

std::string basis_name(BasisTag tag);

// Sparse integer combination of basis-labeled partitions in one of the
// three bases. Canonical form: no zero coefficients. Addition and scaling
// stay inside one basis; products are only defined where the module
// provides them (Schur via the LR kernel, elementary via part union).
class SymElement {
public:
  explicit SymElement(BasisTag basis) : basis_(basis) {}
  static SymElement zero(BasisTag basis) { return SymElement(basis); }
  static SymElement unit(BasisTag basis, const Partition& label, ExactInt coeff = 1);
  static SymElement one(BasisTag basis) { return unit(basis, Partition{}); }

  BasisTag basis() const { return basis_; }
  const std::map<Partition, ExactInt>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  ExactInt coefficient(const Partition& label) const;

  void add_term(const Partition& label, const ExactInt& coeff);
  SymElement& operator+=(const SymElement& other);
  SymElement& operator*=(const ExactInt& scalar);

private:
  BasisTag basis_;
  std::map<Partition, ExactInt> terms_;
};

// Bilinear extension of s_lambda * s_mu = sum c^nu_{lambda mu} s_nu.
// Both operands must carry the Schur tag.
SymElement schur_multiply(const SymElement& a, const SymElement& b,
                          const TermBudget* budget = nullptr);

// Hall inner product with the Schur basis orthonormal.
ExactInt hall_inner(const SymElement& a, const SymElement& b);

// e_mu * e_nu = e_{mu union nu} extended bilinearly.
SymElement elementary_multiply(const SymElement& a, const SymElement& b);

// Multiset union of parts.
Partition union_parts(const Partition& a, const Partition& b);

} // namespace schurforge
