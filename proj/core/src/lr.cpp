#include "schurforge/lr.hpp"

#include <algorithm>
#include <mutex>
#include <vector>

#include "memo_tables.hpp"

namespace schurforge {

namespace detail {
MemoTables& memo_tables() {
  static MemoTables tables;
  return tables;
}
} // namespace detail

namespace {

using detail::memo_tables;
using detail::PairKey;
using detail::TripleKey;

// Lattice-word product kernel. An LR filling of content mu on top of
// lambda is a chain of horizontal strips, one per value v = 1..len(mu),
// whose labels satisfy the prefix criterion
//
//   #{v in rows <= r}  <=  #{v-1 in rows <= r-1}   for all v >= 2, r,
//
// which is the row-by-row form of the reverse reading word being a
// lattice word. Column strictness is automatic because strips are placed
// in increasing value order. The walker enumerates every chain once;
// the multiset of final shapes is exactly s_lambda * s_mu.
class ChainWalker {
public:
  ChainWalker(const Partition& lambda, const Partition& mu,
              const std::optional<Rectangle>& box, const Partition* target)
      : mu_(mu.parts()), box_(box), target_(target) {
    int max_rows = lambda.length() + static_cast<int>(mu_.size());
    shape_.assign(static_cast<std::size_t>(max_rows) + 1, 0);
    for (int i = 0; i < lambda.length(); ++i) shape_[static_cast<std::size_t>(i)] = lambda.part(i);
    // reserve the full depth: place() keeps references into these stacks
    // across recursive calls, so they must never reallocate
    base_stack_.reserve(mu_.size());
    prefix_stack_.reserve(mu_.size());
  }

  void run() {
    if (target_ && !target_fits_box()) return;
    next_value(0);
  }

  SchurExpansion take_expansion() { return std::move(out_); }
  ExactInt take_count() { return count_; }

private:
  bool target_fits_box() const {
    if (!box_) return true;
    return fits(*target_, *box_);
  }

  void next_value(std::size_t v) {
    if (v == mu_.size()) {
      emit();
      return;
    }
    // per-level snapshots: the strip condition reads the shape at entry of
    // this value, the lattice condition reads the previous level's prefix
    base_stack_.push_back(shape_);
    prefix_stack_.emplace_back(shape_.size(), 0);
    place(v, 0, mu_[v], 0);
    prefix_stack_.pop_back();
    base_stack_.pop_back();
  }

  // Distribute `remaining` boxes of value v over rows r, r+1, ...
  // `cum` is the number already placed in rows < r.
  void place(std::size_t v, std::size_t r, int remaining, int cum) {
    if (remaining == 0) {
      std::fill(prefix_stack_[v].begin() + static_cast<long>(r), prefix_stack_[v].end(), cum);
      next_value(v + 1);
      return;
    }
    if (r >= shape_.size()) return;

    const std::vector<int>& base = base_stack_[v];
    int cap = (r == 0) ? remaining : base[r - 1] - base[r];
    if (box_) {
      int box_cap = (static_cast<int>(r) < box_->rows) ? box_->cols - base[r] : 0;
      cap = std::min(cap, box_cap);
    }
    if (target_) cap = std::min(cap, target_->part(static_cast<int>(r)) - base[r]);
    if (v > 0) {
      int support = (r == 0) ? 0 : prefix_stack_[v - 1][r - 1];
      cap = std::min(cap, support - cum);
    }
    cap = std::min(cap, remaining);

    for (int add = cap; add >= 0; --add) {
      shape_[r] = base[r] + add;
      prefix_stack_[v][r] = cum + add;
      place(v, r + 1, remaining - add, cum + add);
    }
    shape_[r] = base[r];
  }

  void emit() {
    if (target_) {
      for (std::size_t r = 0; r < shape_.size(); ++r)
        if (shape_[r] != target_->part(static_cast<int>(r))) return;
      count_ += 1;
      return;
    }
    std::vector<int> parts(shape_.begin(),
                           std::find(shape_.begin(), shape_.end(), 0));
    out_[Partition(std::move(parts))] += 1;
  }

  std::vector<int> mu_;
  std::optional<Rectangle> box_;
  const Partition* target_;
  std::vector<int> shape_;
  std::vector<std::vector<int>> base_stack_;
  std::vector<std::vector<int>> prefix_stack_;
  SchurExpansion out_;
  ExactInt count_ = 0;
};

bool contains(const Partition& outer, const Partition& inner) {
  for (int i = 0; i < inner.length(); ++i)
    if (inner.part(i) > outer.part(i)) return false;
  return true;
}

// Peel the boxes holding the last (smallest) value of the content: they
// form a horizontal strip at the boundary, and what remains is a Kostka
// subproblem for the content prefix.
ExactInt kostka_by_peeling(const Partition& shape, const Partition& content);

ExactInt peel_strips(const Partition& shape, const Partition& content) {
  std::vector<int> prefix(content.parts().begin(), content.parts().end() - 1);
  Partition rest(std::move(prefix));
  int strip = content.parts().back();

  ExactInt total = 0;
  std::vector<int> kappa(shape.parts());
  // choose how many boxes the strip removes from each row
  auto choose = [&](auto&& self, int row, int remaining) -> void {
    if (row < 0) {
      if (remaining == 0) {
        std::vector<int> parts(kappa.begin(),
                               std::find(kappa.begin(), kappa.end(), 0));
        total += kostka_by_peeling(Partition(std::move(parts)), rest);
      }
      return;
    }
    int cap = std::min(remaining, shape.part(row) - shape.part(row + 1));
    for (int take = 0; take <= cap; ++take) {
      kappa[static_cast<std::size_t>(row)] = shape.part(row) - take;
      self(self, row - 1, remaining - take);
    }
    kappa[static_cast<std::size_t>(row)] = shape.part(row);
  };
  choose(choose, shape.length() - 1, strip);
  return total;
}

ExactInt kostka_by_peeling(const Partition& shape, const Partition& content) {
  if (content.empty()) return shape.empty() ? ExactInt(1) : ExactInt(0);
  if (shape.empty()) return 0;
  if (!dominates(shape, content)) return 0; // unitriangularity cutoff

  auto& tables = memo_tables();
  PairKey key{shape, content};
  {
    std::shared_lock lock(tables.kostka_mutex);
    auto it = tables.kostka.find(key);
    if (it != tables.kostka.end()) return it->second;
  }
  ExactInt value = peel_strips(shape, content);
  {
    std::unique_lock lock(tables.kostka_mutex);
    tables.kostka.emplace(std::move(key), value);
  }
  return value;
}

} // namespace

SchurExpansion lr_expand(const Partition& lambda, const Partition& mu,
                         const std::optional<Rectangle>& box) {
  ChainWalker walker(lambda, mu, box, nullptr);
  walker.run();
  return walker.take_expansion();
}

ExactInt lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.weight() + mu.weight() != nu.weight()) return 0;
  if (!contains(nu, lambda) || !contains(nu, mu)) return 0;

  auto& tables = memo_tables();
  TripleKey key{lambda, mu, nu};
  {
    std::shared_lock lock(tables.lr_mutex);
    auto it = tables.lr.find(key);
    if (it != tables.lr.end()) return it->second;
  }
  ChainWalker walker(lambda, mu, std::nullopt, &nu);
  walker.run();
  ExactInt value = walker.take_count();
  {
    std::unique_lock lock(tables.lr_mutex);
    tables.lr.emplace(std::move(key), value);
  }
  return value;
}

ExactInt kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) return 0;
  return kostka_by_peeling(lambda, mu);
}

} // namespace schurforge
