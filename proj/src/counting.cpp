#include "catconv/counting.hpp"

#include <string>

#include "catconv/errors.hpp"

namespace catconv {

ExactCount binom(std::uint64_t n, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
  std::uint64_t kk = static_cast<std::uint64_t>(k);
  if (kk > n - kk) kk = n - kk;
  // After step i the accumulator equals binom(n - kk + i, i), so each division is exact.
  ExactCount::Integer acc = 1;
  for (std::uint64_t i = 1; i <= kk; ++i) {
    acc *= n - kk + i;
    acc /= i;
  }
  return ExactCount::from_integer(std::move(acc));
}

ExactCount central_binom(std::uint64_t n) { return binom(2 * n, static_cast<std::int64_t>(n)); }

ExactCount catalan(std::uint64_t n) { return exact_div(central_binom(n), ExactCount(n + 1)); }

ExactCount shapiro_lhs(std::uint64_t n) {
  ExactCount sum;
  for (std::uint64_t i = 0; i <= n; ++i) sum += catalan(2 * i) * catalan(2 * (n - i));
  return sum;
}

ExactCount mixed_lhs(std::uint64_t n) {
  ExactCount sum;
  for (std::uint64_t i = 0; i <= n; ++i) sum += catalan(2 * i) * central_binom(2 * (n - i));
  return sum;
}

ExactCount alternating_lhs(std::uint64_t n) {
  ExactCount positive;
  ExactCount negative;
  for (std::uint64_t i = 0; i <= n; ++i) {
    const std::uint64_t j = n - i;
    positive += central_binom(2 * i) * central_binom(2 * j);
    if (j >= 1) negative += central_binom(2 * i + 1) * central_binom(2 * j - 1);
  }
  return checked_sub(positive, negative);
}

ExactCount triple_conv(std::uint64_t n) {
  ExactCount sum;
  for (std::uint64_t i = 0; i <= n; ++i)
    for (std::uint64_t j = 0; i + j <= n; ++j)
      sum += catalan(2 * i) * catalan(2 * j) * central_binom(2 * (n - i - j));
  return ExactCount(2) * sum;
}

std::vector<ExactCount> z_recursion(std::uint64_t last) {
  std::vector<ExactCount> z;
  z.reserve(last + 1);
  z.emplace_back(1);
  for (std::uint64_t n = 1; n <= last; ++n) {
    ExactCount sum;
    for (std::uint64_t k = 1; k <= n; ++k) sum += catalan(2 * k - 1) * z[n - k];
    z.push_back(ExactCount(2) * sum);
  }
  return z;
}

CorollarySides corollary10_sides(std::uint64_t n) {
  if (n == 0) throw DomainError("corollary sides need n >= 1", "n=0");
  CorollarySides sides;
  const auto s = [](std::uint64_t v) { return static_cast<std::int64_t>(v); };
  for (std::uint64_t i = 1; i <= n; ++i)
    sides.left += binom(4 * i, s(2 * i) - 1) * binom(4 * n - 4 * i, s(2 * n - 2 * i));
  for (std::uint64_t i = 0; i < n; ++i)
    sides.right += binom(4 * i + 2, s(2 * i + 1)) * binom(4 * n - 4 * i - 2, s(2 * n - 2 * i) - 1);
  return sides;
}

}  // namespace catconv
