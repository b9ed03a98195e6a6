#include "schurforge/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace schurforge {

namespace {

void validate(const std::vector<int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

} // namespace

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  validate(parts_);
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  validate(parts_);
}

std::int64_t Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

bool operator<(const Partition& a, const Partition& b) {
  std::int64_t wa = a.weight(), wb = b.weight();
  if (wa != wb) return wa < wb;
  // larger-first lexicographic within a weight
  return std::lexicographical_compare(b.parts_.begin(), b.parts_.end(),
                                      a.parts_.begin(), a.parts_.end());
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ']';
  return out;
}

Partition Partition::parse(std::string_view text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw std::invalid_argument("partition encoding must be bracketed, e.g. [3,1]");
  std::string_view body = text.substr(1, text.size() - 2);
  std::vector<int> parts;
  while (!body.empty()) {
    std::size_t comma = body.find(',');
    std::string_view token = body.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw std::invalid_argument("bad partition part: " + std::string(token));
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

std::size_t Partition::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (int part : parts_) {
    h ^= static_cast<std::size_t>(part);
    h *= 1099511628211ull;
  }
  return h;
}

Rectangle::Rectangle(int r, int c) : rows(r), cols(c) {
  if (r < 1 || c < 1) throw std::invalid_argument("rectangle sides must be >= 1");
}

Partition Rectangle::as_partition() const {
  return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
}

bool fits(const Partition& p, const Rectangle& rect) {
  return p.length() <= rect.rows && p.first_part() <= rect.cols;
}

Partition transpose(const Partition& p) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(p.first_part()));
  for (int col = 1; col <= p.first_part(); ++col) {
    int height = 0;
    for (int part : p.parts())
      if (part >= col) ++height;
    out.push_back(height);
  }
  return Partition(std::move(out));
}

Partition complement(const Partition& p, const Rectangle& rect) {
  if (!fits(p, rect)) throw std::invalid_argument("partition does not fit the rectangle");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(rect.rows));
  for (int i = 0; i < rect.rows; ++i) out.push_back(rect.cols - p.part(rect.rows - 1 - i));
  return Partition(std::move(out));
}

Partition transpose_complement(const Partition& p, const Rectangle& rect) {
  return transpose(complement(p, rect));
}

std::vector<Partition> enumerate_in_rect(const Rectangle& rect) {
  std::vector<Partition> out;
  std::vector<int> current;
  // depth-first over weakly decreasing part vectors bounded by the box
  auto extend = [&](auto&& self, int max_part) -> void {
    out.emplace_back(current);
    if (static_cast<int>(current.size()) == rect.rows) return;
    for (int next = 1; next <= max_part; ++next) {
      current.push_back(next);
      self(self, next);
      current.pop_back();
    }
  };
  extend(extend, rect.cols);
  std::sort(out.begin(), out.end());
  return out;
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight())
    throw std::invalid_argument("dominance compares partitions of equal weight");
  std::int64_t sum_a = 0, sum_b = 0;
  int len = std::max(a.length(), b.length());
  for (int i = 0; i < len; ++i) {
    sum_a += a.part(i);
    sum_b += b.part(i);
    if (sum_a < sum_b) return false;
  }
  return true;
}

} // namespace schurforge
