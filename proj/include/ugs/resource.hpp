#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "ugs/errors.hpp"

namespace ugs {

/// Fixed-point resource quantity stored as an integer count of hundredths of
/// a unit. The unit is abstract: bytes in the worked examples, slots in the
/// randomized evaluation. All scheduler state is kept in this type so grid
/// arithmetic stays exact.
class ResourceAmount {
 public:
  static constexpr std::int64_t kScale = 100;

  constexpr ResourceAmount() = default;

  static constexpr ResourceAmount hundredths(std::int64_t h) { return ResourceAmount{h}; }
  static constexpr ResourceAmount units(std::int64_t u) { return ResourceAmount{u * kScale}; }

  constexpr std::int64_t raw() const { return value_; }
  constexpr bool positive() const { return value_ > 0; }
  constexpr bool zero() const { return value_ == 0; }
  double as_units() const { return static_cast<double>(value_) / kScale; }

  constexpr ResourceAmount& operator+=(ResourceAmount o) {
    value_ += o.value_;
    return *this;
  }
  constexpr ResourceAmount& operator-=(ResourceAmount o) {
    value_ -= o.value_;
    return *this;
  }
  friend constexpr ResourceAmount operator+(ResourceAmount a, ResourceAmount b) { return a += b; }
  friend constexpr ResourceAmount operator-(ResourceAmount a, ResourceAmount b) { return a -= b; }
  friend constexpr ResourceAmount operator*(ResourceAmount a, std::int64_t k) {
    return ResourceAmount{a.value_ * k};
  }
  friend constexpr auto operator<=>(ResourceAmount, ResourceAmount) = default;

  /// Parses "12", "12.3" or "12.34". More than two fraction digits or a sign
  /// is rejected rather than rounded.
  static ResourceAmount parse(std::string_view text) {
    auto fail = [&] { return ScenarioError("invalid resource amount '" + std::string(text) + "'"); };
    if (text.empty()) throw fail();
    auto dot = text.find('.');
    auto whole = text.substr(0, dot);
    if (whole.empty()) throw fail();
    std::int64_t units = 0;
    auto [p, ec] = std::from_chars(whole.data(), whole.data() + whole.size(), units);
    if (ec != std::errc{} || p != whole.data() + whole.size() || units < 0) throw fail();
    std::int64_t frac = 0;
    if (dot != std::string_view::npos) {
      auto digits = text.substr(dot + 1);
      if (digits.empty() || digits.size() > 2) throw fail();
      for (char c : digits) {
        if (c < '0' || c > '9') throw fail();
      }
      frac = (digits[0] - '0') * 10 + (digits.size() == 2 ? digits[1] - '0' : 0);
    }
    return ResourceAmount{units * kScale + frac};
  }

  /// Decimal with exactly two fraction digits.
  std::string to_string() const {
    auto v = value_ < 0 ? -value_ : value_;
    std::string frac = std::to_string(v % kScale);
    if (frac.size() < 2) frac.insert(0, "0");
    return (value_ < 0 ? "-" : "") + std::to_string(v / kScale) + "." + frac;
  }

  friend std::ostream& operator<<(std::ostream& os, ResourceAmount a) { return os << a.to_string(); }

 private:
  constexpr explicit ResourceAmount(std::int64_t h) : value_(h) {}

  std::int64_t value_ = 0;
};

}  // namespace ugs
