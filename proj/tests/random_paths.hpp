#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "catconv/path.hpp"

namespace catconv::testing {

inline BalancedPath random_balanced(std::size_t n, std::mt19937_64& rng) {
  std::vector<Step> steps(2 * n, Step::Down);
  std::fill_n(steps.begin(), n, Step::Up);
  std::shuffle(steps.begin(), steps.end(), rng);
  return BalancedPath(Path(std::move(steps)));
}

// Uniform Dyck path by the cycle lemma: shuffle n ups and n+1 downs, rotate to
// start just after the first minimum, drop the final down-step.
inline DyckPath random_dyck(std::size_t n, std::mt19937_64& rng) {
  std::vector<Step> steps(2 * n + 1, Step::Down);
  std::fill_n(steps.begin(), n, Step::Up);
  std::shuffle(steps.begin(), steps.end(), rng);
  int h = 0;
  int lowest = 0;
  std::size_t at = 0;
  for (std::size_t t = 0; t < steps.size(); ++t) {
    h += delta(steps[t]);
    if (h < lowest) {
      lowest = h;
      at = t + 1;
    }
  }
  std::rotate(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(at % steps.size()), steps.end());
  steps.pop_back();
  return DyckPath(Path(std::move(steps)));
}

}  // namespace catconv::testing
