#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace schurforge {

// A p-adic valuation: either a nonnegative integer or the valuation of
// zero, which is a distinguished infinity larger than every finite value.
// Keeping infinity out of the integer range means a vanishing term can
// never be mistaken for a low-valuation term in a divisibility scan.
class Valuation {
public:
  static Valuation finite(std::int64_t amount) {
    if (amount < 0) throw std::invalid_argument("valuation must be nonnegative");
    return Valuation(amount, false);
  }
  static Valuation infinity() { return Valuation(0, true); }

  bool is_infinite() const { return infinite_; }
  std::int64_t amount() const {
    if (infinite_) throw std::logic_error("valuation of zero has no finite amount");
    return amount_;
  }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.amount_ == b.amount_);
  }
  friend bool operator<(const Valuation& a, const Valuation& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.amount_ < b.amount_;
  }
  friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }
  friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
  friend bool operator<=(const Valuation& a, const Valuation& b) { return !(b < a); }
  friend bool operator>=(const Valuation& a, const Valuation& b) { return !(a < b); }

  std::string to_string() const { return infinite_ ? "infinity" : std::to_string(amount_); }

private:
  Valuation(std::int64_t amount, bool infinite) : amount_(amount), infinite_(infinite) {}
  std::int64_t amount_;
  bool infinite_;
};

} // namespace schurforge
