#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace charvar {

/// Unoriented slope p/q: a primitive integer pair up to sign. The stored
/// representative has q > 0, or q == 0 and p == 1 (the class 1/0).
class Slope {
 public:
  /// Throws InputError unless gcd(|p|, |q|) == 1.
  Slope(std::int64_t p, std::int64_t q);

  /// Parses "p/q", e.g. "1/0", "-4/1".
  static Slope parse(std::string_view text);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  std::string to_string() const { return std::to_string(p_) + "/" + std::to_string(q_); }

  friend bool operator==(const Slope&, const Slope&) = default;
  friend auto operator<=>(const Slope& a, const Slope& b) {
    if (auto c = a.q_ <=> b.q_; c != 0) return c;
    return a.p_ <=> b.p_;
  }

 private:
  std::int64_t p_;
  std::int64_t q_;
};

}  // namespace charvar
