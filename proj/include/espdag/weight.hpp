#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace espdag {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Non-negative exact rational extended with a single +infinity element.
///
/// Addition saturates at infinity, comparison places infinity strictly above
/// every finite value, and finite arithmetic is exact (no floating point).
class ExtendedWeight {
 public:
  ExtendedWeight() = default;  // zero

  ExtendedWeight(long long units);  // NOLINT: implicit by design
  explicit ExtendedWeight(Rational value);

  static ExtendedWeight infinity();
  static ExtendedWeight ratio(long long numerator, long long denominator);

  /// Accepts "inf", integers ("7"), fractions ("1/3") and decimals ("2.5").
  static ExtendedWeight parse(std::string_view text);

  bool is_infinite() const { return infinite_; }
  bool is_zero() const { return !infinite_ && value_ == 0; }

  /// Finite value accessor; throws std::logic_error when infinite.
  const Rational& value() const;

  ExtendedWeight& operator+=(const ExtendedWeight& rhs);
  friend ExtendedWeight operator+(ExtendedWeight lhs, const ExtendedWeight& rhs) {
    lhs += rhs;
    return lhs;
  }

  friend bool operator==(const ExtendedWeight& a, const ExtendedWeight& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const ExtendedWeight& a, const ExtendedWeight& b);

  /// Canonical text form: "inf", "7", or "5/2" (lowest terms).
  std::string str() const;

  /// Lossy conversion for display and stats only; never used on a cost path.
  double to_double() const;

 private:
  Rational value_{};
  bool infinite_ = false;
};

}  // namespace espdag
