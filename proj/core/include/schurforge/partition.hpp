#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace schurforge {

// A partition: weakly decreasing sequence of positive integers, stored
// without trailing zeros so equal diagrams compare equal and can key
// sparse maps. The empty partition is allowed.
class Partition {
public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts); // zeros stripped; must be weakly decreasing

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  std::int64_t weight() const;
  int part(int i) const { return i < length() ? parts_[i] : 0; } // 0-based, 0 beyond length
  int first_part() const { return parts_.empty() ? 0 : parts_.front(); }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

  // Canonical order: by weight, then lexicographically with larger parts
  // first, so each fixed-weight segment is a linear extension of dominance.
  // All deterministic enumeration and serialization uses this order.
  friend bool operator<(const Partition& a, const Partition& b);

  // Bracket encoding, e.g. [3,1,1]; the empty partition is [].
  std::string to_string() const;
  static Partition parse(std::string_view text);

  std::size_t hash() const;

private:
  std::vector<int> parts_;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const { return p.hash(); }
};

// An m x c box of cells: rows across, cols down each row.
struct Rectangle {
  int rows = 1;
  int cols = 1;
  Rectangle(int r, int c);
  Rectangle transposed() const { return Rectangle(cols, rows); }
  Partition as_partition() const; // cols repeated rows times
};

bool fits(const Partition& p, const Rectangle& rect);

// Conjugate diagram (reflection across the main diagonal). Involutive.
Partition transpose(const Partition& p);

// 180-degree rotated complement within rect: result_i = cols - p_{rows+1-i}.
// Requires p to fit rect. Indexes the Poincare-dual Schubert class.
Partition complement(const Partition& p, const Rectangle& rect);

// transpose(complement(p, rect)); equals complement(transpose(p), rect^T).
Partition transpose_complement(const Partition& p, const Rectangle& rect);

// All partitions contained in rect, in canonical (graded lexicographic)
// order. The count is binomial(rows + cols, rows).
std::vector<Partition> enumerate_in_rect(const Rectangle& rect);

// Dominance: partial sums of a weakly dominate those of b. Requires equal
// weights.
bool dominates(const Partition& a, const Partition& b);

} // namespace schurforge
