#include "schurforge/transition.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "schurforge/lr.hpp"

namespace schurforge {

namespace {

std::vector<Partition> enumerate_partitions(std::int64_t weight) {
  std::vector<Partition> out;
  std::vector<int> current;
  auto extend = [&](auto&& self, std::int64_t remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    int cap = static_cast<int>(std::min<std::int64_t>(max_part, remaining));
    for (int next = cap; next >= 1; --next) {
      current.push_back(next);
      self(self, remaining - next, next);
      current.pop_back();
    }
  };
  extend(extend, weight, static_cast<int>(weight));
  std::sort(out.begin(), out.end());
  return out;
}

WeightBlock build_block(std::int64_t weight) {
  WeightBlock block;
  block.weight = weight;
  block.labels = enumerate_partitions(weight);
  std::size_t n = block.labels.size();

  block.kostka_matrix.assign(n, std::vector<ExactInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) // upper triangular under dominance refinement
      block.kostka_matrix[i][j] = kostka(block.labels[i], block.labels[j]);

  // K^T is lower unitriangular; invert by forward substitution, column by
  // column, staying in exact integers throughout.
  block.kostka_t_inverse.assign(n, std::vector<ExactInt>(n, 0));
  auto lower = [&](std::size_t i, std::size_t t) -> const ExactInt& {
    return block.kostka_matrix[t][i]; // (K^T)[i][t]
  };
  for (std::size_t j = 0; j < n; ++j) {
    block.kostka_t_inverse[j][j] = 1;
    for (std::size_t i = j + 1; i < n; ++i) {
      ExactInt acc = 0;
      for (std::size_t t = j; t < i; ++t) {
        const ExactInt& l = lower(i, t);
        if (l != 0 && block.kostka_t_inverse[t][j] != 0)
          acc += l * block.kostka_t_inverse[t][j];
      }
      block.kostka_t_inverse[i][j] = -acc;
    }
  }
  return block;
}

} // namespace

int WeightBlock::position(const Partition& p) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), p);
  if (it == labels.end() || *it != p) return -1;
  return static_cast<int>(it - labels.begin());
}

const WeightBlock& weight_block(std::int64_t weight) {
  if (weight < 0) throw std::invalid_argument("weight must be nonnegative");
  static std::mutex mutex;
  static std::map<std::int64_t, std::unique_ptr<WeightBlock>> cache;
  std::unique_lock lock(mutex);
  auto it = cache.find(weight);
  if (it == cache.end()) {
    lock.unlock();
    auto block = std::make_unique<WeightBlock>(build_block(weight));
    lock.lock();
    it = cache.find(weight);
    if (it == cache.end()) it = cache.emplace(weight, std::move(block)).first;
  }
  return *it->second;
}

std::vector<Partition> partitions_of(std::int64_t weight) {
  return enumerate_partitions(weight);
}

std::vector<TransitionEntry> sparse_block_entries(TransitionKind kind, std::int64_t weight) {
  const WeightBlock& block = weight_block(weight);
  std::vector<TransitionEntry> entries;
  for (const Partition& source : block.labels)
    for (const Partition& target : block.labels) {
      ExactInt value;
      switch (kind) {
        case TransitionKind::kostka: value = kostka(source, target); break;
        case TransitionKind::schur_to_elementary: value = m_se(source, target); break;
        case TransitionKind::elementary_to_schur: value = m_es(source, target); break;
      }
      if (value != 0) entries.push_back(TransitionEntry{source, target, std::move(value)});
    }
  return entries;
}

ExactInt m_se(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) return 0;
  const WeightBlock& block = weight_block(lambda.weight());
  int row = block.position(transpose(lambda));
  int col = block.position(mu);
  return block.kostka_t_inverse[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
}

ExactInt m_es(const Partition& mu, const Partition& lambda) {
  if (lambda.weight() != mu.weight()) return 0;
  return kostka(transpose(lambda), mu);
}

SymElement schur_to_elementary(const Partition& lambda) {
  const WeightBlock& block = weight_block(lambda.weight());
  int row = block.position(transpose(lambda));
  SymElement out(BasisTag::elementary);
  for (std::size_t j = 0; j < block.labels.size(); ++j)
    out.add_term(block.labels[j],
                 block.kostka_t_inverse[static_cast<std::size_t>(row)][j]);
  return out;
}

namespace {

// coefficient vectors per weight block, in label order
using BlockVector = std::vector<ExactInt>;

std::map<std::int64_t, BlockVector> split_by_weight(const SymElement& element) {
  std::map<std::int64_t, BlockVector> blocks;
  for (const auto& [label, coeff] : element.terms()) {
    const WeightBlock& block = weight_block(label.weight());
    auto [it, inserted] = blocks.try_emplace(label.weight());
    if (inserted) it->second.assign(block.labels.size(), 0);
    it->second[static_cast<std::size_t>(block.position(label))] = coeff;
  }
  return blocks;
}

BlockVector to_schur_vector(const WeightBlock& block, const BlockVector& v, BasisTag from) {
  std::size_t n = block.labels.size();
  BlockVector u(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (from == BasisTag::elementary) {
      // coefficient of s_{labels[i]} in e_mu is a Kostka number of the transpose
      Partition flipped = transpose(block.labels[i]);
      for (std::size_t j = 0; j < n; ++j)
        if (v[j] != 0) u[i] += v[j] * kostka(flipped, block.labels[j]);
    } else { // monomial
      for (std::size_t j = 0; j < n; ++j)
        if (v[j] != 0) u[i] += v[j] * block.kostka_t_inverse[i][j];
    }
  }
  return u;
}

BlockVector from_schur_vector(const WeightBlock& block, const BlockVector& v, BasisTag to) {
  std::size_t n = block.labels.size();
  BlockVector u(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] == 0) continue;
      if (to == BasisTag::elementary) {
        int row = block.position(transpose(block.labels[i]));
        u[j] += v[i] * block.kostka_t_inverse[static_cast<std::size_t>(row)][j];
      } else { // monomial
        u[j] += v[i] * block.kostka_matrix[i][j];
      }
    }
  }
  return u;
}

} // namespace

SymElement to_basis(const SymElement& element, BasisTag target) {
  if (element.basis() == target) return element;
  SymElement out(target);
  for (auto& [weight, v] : split_by_weight(element)) {
    const WeightBlock& block = weight_block(weight);
    BlockVector schur =
        element.basis() == BasisTag::schur ? v : to_schur_vector(block, v, element.basis());
    BlockVector result =
        target == BasisTag::schur ? schur : from_schur_vector(block, schur, target);
    for (std::size_t j = 0; j < block.labels.size(); ++j)
      out.add_term(block.labels[j], result[j]);
  }
  return out;
}

} // namespace schurforge
