#include "catconv/enumerate.hpp"

#include <algorithm>

#include "catconv/errors.hpp"

namespace catconv {
namespace detail {

std::optional<Path> FreePathGenerator::next() {
  if (next_ >= end_) return std::nullopt;
  std::vector<Step> steps(length_);
  // Most significant bit is the first step; a set bit is a down-step.
  for (std::size_t i = 0; i < length_; ++i)
    steps[i] = ((next_ >> (length_ - 1 - i)) & 1U) ? Step::Down : Step::Up;
  ++next_;
  return Path(std::move(steps));
}

BalancedGenerator::BalancedGenerator(std::size_t n) : steps_(2 * n, Step::Down) {
  std::fill_n(steps_.begin(), n, Step::Up);
}

std::optional<BalancedPath> BalancedGenerator::next() {
  if (done_) return std::nullopt;
  BalancedPath current{Path(steps_)};
  done_ = !std::next_permutation(steps_.begin(), steps_.end());
  return current;
}

DyckGenerator::DyckGenerator(std::size_t n) : n_(n), steps_(2 * n, Step::Down) {
  std::fill_n(steps_.begin(), n, Step::Up);
}

// Lexicographic successor: the rightmost up-step entered at height >= 1 becomes
// a down-step; the suffix is refilled with the smallest completion U^a D^b.
bool DyckGenerator::advance() {
  std::vector<int> h(steps_.size() + 1, 0);
  for (std::size_t t = 0; t < steps_.size(); ++t) h[t + 1] = h[t] + delta(steps_[t]);
  for (std::size_t i = steps_.size(); i-- > 0;) {
    if (steps_[i] != Step::Up || h[i] < 1) continue;
    steps_[i] = Step::Down;
    const auto ups = static_cast<std::size_t>(std::count(steps_.begin(), steps_.begin() + static_cast<std::ptrdiff_t>(i) + 1, Step::Up));
    auto it = steps_.begin() + static_cast<std::ptrdiff_t>(i) + 1;
    it = std::fill_n(it, n_ - ups, Step::Up);
    std::fill(it, steps_.end(), Step::Down);
    return true;
  }
  return false;
}

std::optional<DyckPath> DyckGenerator::next() {
  if (done_) return std::nullopt;
  if (started_ && !advance()) {
    done_ = true;
    return std::nullopt;
  }
  started_ = true;
  return DyckPath(Path(steps_));
}

}  // namespace detail

PathStream enumerate_paths(std::size_t length, const EnumerationCaps& caps) {
  if (length > caps.max_length || length > 62) throw CapExceeded("path length", length, caps.max_length);
  return PathStream(detail::FreePathGenerator(length));
}

BalancedStream enumerate_balanced(std::size_t n, const EnumerationCaps& caps) {
  if (n > caps.max_parameter) throw CapExceeded("balanced parameter", n, caps.max_parameter);
  return BalancedStream(detail::BalancedGenerator(n));
}

DyckStream enumerate_dyck(std::size_t n, const EnumerationCaps& caps) {
  if (n > caps.max_parameter) throw CapExceeded("Dyck parameter", n, caps.max_parameter);
  return DyckStream(detail::DyckGenerator(n));
}

}  // namespace catconv
