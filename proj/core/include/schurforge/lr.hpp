#pragma once

#include <map>
#include <optional>

#include "schurforge/exact_int.hpp"
#include "schurforge/partition.hpp"

namespace schurforge {

using SchurExpansion = std::map<Partition, ExactInt>;

// Expand s_lambda * s_mu in the Schur basis by lattice-word backtracking
// over horizontal-strip chains. When `box` is given, any intermediate
// shape leaving the box is pruned; this is exact in a box-truncated ring
// because shapes only grow along a chain.
SchurExpansion lr_expand(const Partition& lambda, const Partition& mu,
                         const std::optional<Rectangle>& box = std::nullopt);

// Littlewood-Richardson coefficient c^nu_{lambda mu}. Zero unless
// |lambda| + |mu| = |nu| and both lambda and mu are contained in nu.
// Memoized per (lambda, mu, nu) triple.
ExactInt lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// Kostka number: semistandard tableaux of shape lambda and content mu,
// counted by horizontal-strip peeling. Invariant under reordering of mu;
// zero on weight mismatch. Memoized per (lambda, mu).
ExactInt kostka(const Partition& lambda, const Partition& mu);

} // namespace schurforge
