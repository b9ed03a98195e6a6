#include "schurforge/sym_element.hpp"

#include <algorithm>
#include <stdexcept>

#include "schurforge/lr.hpp"

namespace schurforge {

std::string basis_name(BasisTag tag) {
  switch (tag) {
    case BasisTag::schur: return "schur";
    case BasisTag::elementary: return "elementary";
    case BasisTag::monomial: return "monomial";
  }
  return "?";
}

SymElement SymElement::unit(BasisTag basis, const Partition& label, ExactInt coeff) {
  SymElement e(basis);
  e.add_term(label, coeff);
  return e;
}

ExactInt SymElement::coefficient(const Partition& label) const {
  auto it = terms_.find(label);
  return it == terms_.end() ? ExactInt(0) : it->second;
}

void SymElement::add_term(const Partition& label, const ExactInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(label, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

SymElement& SymElement::operator+=(const SymElement& other) {
  if (basis_ != other.basis_)
    throw std::invalid_argument("cannot add elements in different bases");
  for (const auto& [label, coeff] : other.terms_) add_term(label, coeff);
  return *this;
}

SymElement& SymElement::operator*=(const ExactInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [label, coeff] : terms_) coeff *= scalar;
  return *this;
}

SymElement schur_multiply(const SymElement& a, const SymElement& b,
                          const TermBudget* budget) {
  if (a.basis() != BasisTag::schur || b.basis() != BasisTag::schur)
    throw std::invalid_argument("schur_multiply requires Schur-basis operands");
  SymElement result(BasisTag::schur);
  for (const auto& [lambda, ca] : a.terms()) {
    for (const auto& [mu, cb] : b.terms()) {
      // the walker's cost scales with the added partition, so add the lighter one
      const Partition& base = lambda.weight() >= mu.weight() ? lambda : mu;
      const Partition& added = lambda.weight() >= mu.weight() ? mu : lambda;
      ExactInt scale = ca * cb;
      for (const auto& [nu, mult] : lr_expand(base, added))
        result.add_term(nu, scale * mult);
      if (budget) budget->check(result.term_count());
    }
  }
  return result;
}

ExactInt hall_inner(const SymElement& a, const SymElement& b) {
  if (a.basis() != BasisTag::schur || b.basis() != BasisTag::schur)
    throw std::invalid_argument("hall_inner requires Schur-basis operands");
  ExactInt total = 0;
  const auto& small = a.term_count() <= b.term_count() ? a : b;
  const auto& large = a.term_count() <= b.term_count() ? b : a;
  for (const auto& [label, coeff] : small.terms()) {
    auto it = large.terms().find(label);
    if (it != large.terms().end()) total += coeff * it->second;
  }
  return total;
}

Partition union_parts(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(a.length() + b.length()));
  parts.insert(parts.end(), a.parts().begin(), a.parts().end());
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

SymElement elementary_multiply(const SymElement& a, const SymElement& b) {
  if (a.basis() != BasisTag::elementary || b.basis() != BasisTag::elementary)
    throw std::invalid_argument("elementary_multiply requires elementary-basis operands");
  SymElement result(BasisTag::elementary);
  for (const auto& [mu, ca] : a.terms())
    for (const auto& [nu, cb] : b.terms())
      result.add_term(union_parts(mu, nu), ca * cb);
  return result;
}

} // namespace schurforge
