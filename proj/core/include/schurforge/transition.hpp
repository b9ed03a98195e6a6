#pragma once

#include <cstdint>
#include <vector>

#include "schurforge/exact_int.hpp"
#include "schurforge/partition.hpp"
#include "schurforge/sym_element.hpp"

namespace schurforge {

// One weight-homogeneous block of the transition-matrix machinery.
// Partitions of the weight are indexed in canonical order, which refines
// dominance, so the Kostka matrix K is upper unitriangular and K^T can be
// inverted by exact forward substitution. Blocks are built on demand and
// cached for the life of the process.
struct WeightBlock {
  std::int64_t weight = 0;
  std::vector<Partition> labels;
  std::vector<std::vector<ExactInt>> kostka_matrix;     // K[i][j] = K_{labels[i], labels[j]}
  std::vector<std::vector<ExactInt>> kostka_t_inverse;  // (K^T)^{-1}

  int position(const Partition& p) const; // -1 when p is not a partition of `weight`
};

const WeightBlock& weight_block(std::int64_t weight);

// All partitions of the given weight, canonical order.
std::vector<Partition> partitions_of(std::int64_t weight);

enum class TransitionKind { kostka, schur_to_elementary, elementary_to_schur };

// A nonzero entry of a transition matrix.
struct TransitionEntry {
  Partition source;
  Partition target;
  ExactInt value;
};

// The nonzero entries of one weight block, row-major in canonical order.
std::vector<TransitionEntry> sparse_block_entries(TransitionKind kind, std::int64_t weight);

// Entry of the Schur -> elementary transition matrix: the coefficient of
// e_mu in s_lambda. Zero on weight mismatch.
ExactInt m_se(const Partition& lambda, const Partition& mu);

// Entry of the elementary -> Schur transition matrix: the coefficient of
// s_lambda in e_mu. Equals the Kostka number of the transposed target,
// so no inversion is involved. Zero on weight mismatch.
ExactInt m_es(const Partition& mu, const Partition& lambda);

// Full row of M^{se}: s_lambda expanded in the elementary basis.
SymElement schur_to_elementary(const Partition& lambda);

// Exact change of basis between schur/elementary/monomial, processed per
// weight-homogeneous component. Round trips are the identity.
SymElement to_basis(const SymElement& element, BasisTag target);

} // namespace schurforge
