#pragma once

#include <shared_mutex>
#include <unordered_map>

#include "schurforge/exact_int.hpp"
#include "schurforge/partition.hpp"

namespace schurforge::detail {

struct PairKey {
  Partition a, b;
  bool operator==(const PairKey&) const = default;
};

struct TripleKey {
  Partition a, b, c;
  bool operator==(const TripleKey&) const = default;
};

inline std::size_t mix(std::size_t h, std::size_t v) {
  return (h ^ v) * 1099511628211ull;
}

struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const { return mix(k.a.hash(), k.b.hash()); }
};

struct TripleKeyHash {
  std::size_t operator()(const TripleKey& k) const {
    return mix(mix(k.a.hash(), k.b.hash()), k.c.hash());
  }
};

// Process-wide memo tables for Kostka numbers and LR coefficients.
// Reads take a shared lock; inserts are idempotent (a key is only ever
// written with one value), so racing writers are harmless.
struct MemoTables {
  std::shared_mutex kostka_mutex;
  std::unordered_map<PairKey, ExactInt, PairKeyHash> kostka;
  std::shared_mutex lr_mutex;
  std::unordered_map<TripleKey, ExactInt, TripleKeyHash> lr;
};

MemoTables& memo_tables();

} // namespace schurforge::detail
