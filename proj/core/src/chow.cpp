#include "schurforge/chow.hpp"

#include <stdexcept>

#include "schurforge/lr.hpp"

namespace schurforge {

ChowRingSpec::ChowRingSpec(int m, int N) : subspace_dim(m), ambient_dim(N) {
  if (m < 1 || m >= N)
    throw std::invalid_argument("Chow ring spec requires 1 <= m < N");
}

ChowClass ChowClass::unit(ChowRingSpec spec, const Partition& label, ExactInt coeff) {
  ChowClass c(spec);
  c.add_term(label, coeff);
  return c;
}

ExactInt ChowClass::coefficient(const Partition& label) const {
  auto it = terms_.find(label);
  return it == terms_.end() ? ExactInt(0) : it->second;
}

void ChowClass::add_term(const Partition& label, const ExactInt& coeff) {
  if (!fits(label, spec_.box()))
    throw std::invalid_argument("class label outside the truncation rectangle");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(label, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

ChowClass chow_multiply(const ChowClass& a, const ChowClass& b) {
  if (!(a.spec() == b.spec()))
    throw std::invalid_argument("chow_multiply requires matching ring specs");
  ChowClass result(a.spec());
  Rectangle box = a.spec().box();
  for (const auto& [lambda, ca] : a.terms())
    for (const auto& [mu, cb] : b.terms()) {
      ExactInt scale = ca * cb;
      for (const auto& [nu, mult] : lr_expand(lambda, mu, box))
        result.add_term(nu, scale * mult);
    }
  return result;
}

ChowClass chow_power(const ChowClass& base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative chow power");
  ChowClass acc = ChowClass::one(base.spec());
  for (int i = 0; i < exponent; ++i) acc = chow_multiply(acc, base);
  return acc;
}

ExactInt point_coefficient(const ChowClass& a) {
  return a.coefficient(a.spec().point_class());
}

BiChowClass BiChowClass::one(ChowRingSpec first, ChowRingSpec second) {
  BiChowClass c(first, second);
  c.add_term({Partition{}, Partition{}}, 1);
  return c;
}

ExactInt BiChowClass::coefficient(const PartitionPair& label) const {
  auto it = terms_.find(label);
  return it == terms_.end() ? ExactInt(0) : it->second;
}

void BiChowClass::add_term(const PartitionPair& label, const ExactInt& coeff) {
  if (!fits(label.first, first_.box()) || !fits(label.second, second_.box()))
    throw std::invalid_argument("class label outside a factor rectangle");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(label, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

BiChowClass bichow_multiply(const BiChowClass& a, const BiChowClass& b,
                            const TermBudget* budget) {
  if (!(a.first_spec() == b.first_spec()) || !(a.second_spec() == b.second_spec()))
    throw std::invalid_argument("bichow_multiply requires matching ring specs");
  BiChowClass result(a.first_spec(), a.second_spec());
  Rectangle box1 = a.first_spec().box();
  Rectangle box2 = a.second_spec().box();
  for (const auto& [pa, ca] : a.terms()) {
    for (const auto& [pb, cb] : b.terms()) {
      SchurExpansion left = lr_expand(pa.first, pb.first, box1);
      if (left.empty()) continue;
      SchurExpansion right = lr_expand(pa.second, pb.second, box2);
      if (right.empty()) continue;
      ExactInt scale = ca * cb;
      for (const auto& [nu1, m1] : left)
        for (const auto& [nu2, m2] : right)
          result.add_term({nu1, nu2}, scale * m1 * m2);
      if (budget) budget->check(result.term_count());
    }
  }
  return result;
}

BiChowClass bichow_power(const BiChowClass& base, int exponent, const TermBudget* budget) {
  if (exponent < 0) throw std::invalid_argument("negative bichow power");
  BiChowClass acc = BiChowClass::one(base.first_spec(), base.second_spec());
  for (int i = 0; i < exponent; ++i) acc = bichow_multiply(acc, base, budget);
  return acc;
}

ExactInt bipoint_coefficient(const BiChowClass& a) {
  return a.coefficient({a.first_spec().point_class(), a.second_spec().point_class()});
}

} // namespace schurforge
