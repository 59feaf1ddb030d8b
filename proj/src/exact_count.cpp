#include "catconv/exact_count.hpp"

#include <limits>
#include <ostream>

#include "catconv/errors.hpp"

namespace catconv {

ExactCount ExactCount::from_integer(Integer value) {
  if (value < 0) throw OverflowError("negative value " + value.str() + " is not a count");
  return ExactCount(std::move(value));
}

ExactCount ExactCount::from_decimal(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw OverflowError("not a decimal count: \"" + text + "\"");
  return ExactCount(Integer(text));
}

ExactCount& ExactCount::operator+=(const ExactCount& other) {
  value_ += other.value_;
  return *this;
}

ExactCount& ExactCount::operator*=(const ExactCount& other) {
  value_ *= other.value_;
  return *this;
}

ExactCount checked_sub(const ExactCount& a, const ExactCount& b) {
  if (b.value_ > a.value_)
    throw OverflowError("subtraction " + a.to_string() + " - " + b.to_string() + " is negative");
  return ExactCount(a.value_ - b.value_);
}

ExactCount exact_div(const ExactCount& a, const ExactCount& b) {
  if (b.value_.is_zero()) throw OverflowError("division of " + a.to_string() + " by zero");
  ExactCount::Integer q;
  ExactCount::Integer r;
  boost::multiprecision::divide_qr(a.value_, b.value_, q, r);
  if (!r.is_zero())
    throw OverflowError("division " + a.to_string() + " / " + b.to_string() + " is not exact");
  return ExactCount(std::move(q));
}

std::uint64_t ExactCount::to_u64() const {
  if (value_ > std::numeric_limits<std::uint64_t>::max())
    throw OverflowError(to_string() + " does not fit in 64 bits");
  return value_.convert_to<std::uint64_t>();
}

ExactCount pow(const ExactCount& base, unsigned exponent) {
  return ExactCount::from_integer(boost::multiprecision::pow(base.value(), exponent));
}

std::ostream& operator<<(std::ostream& os, const ExactCount& c) { return os << c.to_string(); }

}  // namespace catconv
