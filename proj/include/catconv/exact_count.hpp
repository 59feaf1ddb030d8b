#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace catconv {

/// Nonnegative integer of unbounded size. Arithmetic never wraps: a result
/// that would be negative or an inexact quotient raises OverflowError.
class ExactCount {
 public:
  using Integer = boost::multiprecision::cpp_int;

  ExactCount() = default;
  ExactCount(std::uint64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  /// Throws OverflowError when `value` is negative.
  static ExactCount from_integer(Integer value);
  /// Parses a decimal string of digits only.
  static ExactCount from_decimal(const std::string& text);

  const Integer& value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_.is_zero(); }

  ExactCount& operator+=(const ExactCount& other);
  ExactCount& operator*=(const ExactCount& other);

  friend ExactCount operator+(ExactCount a, const ExactCount& b) { return a += b; }
  friend ExactCount operator*(ExactCount a, const ExactCount& b) { return a *= b; }

  /// a - b; throws OverflowError if b > a.
  friend ExactCount checked_sub(const ExactCount& a, const ExactCount& b);
  /// a / b; throws OverflowError on division by zero or nonzero remainder.
  friend ExactCount exact_div(const ExactCount& a, const ExactCount& b);

  friend bool operator==(const ExactCount&, const ExactCount&) = default;
  friend std::strong_ordering operator<=>(const ExactCount& a, const ExactCount& b) {
    return a.value_.compare(b.value_) <=> 0;
  }

  std::string to_string() const { return value_.str(); }
  /// Throws OverflowError if the value does not fit.
  std::uint64_t to_u64() const;

 private:
  explicit ExactCount(Integer value) : value_(std::move(value)) {}

  Integer value_{0};
};

ExactCount pow(const ExactCount& base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const ExactCount& c);

}  // namespace catconv
