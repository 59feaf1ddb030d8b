#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "catconv/exact_count.hpp"

namespace catconv {

/// binom(n, k), zero when k < 0 or k > n.
ExactCount binom(std::uint64_t n, std::int64_t k);
/// C_n = binom(2n, n) / (n + 1).
ExactCount catalan(std::uint64_t n);
/// B_n = binom(2n, n).
ExactCount central_binom(std::uint64_t n);

/// L_n = sum_{i+j=n} C_{2i} C_{2j}.
ExactCount shapiro_lhs(std::uint64_t n);
/// S_n = sum_{i+j=n} C_{2i} B_{2j}.
ExactCount mixed_lhs(std::uint64_t n);
/// sum_{i+j=n} B_{2i} B_{2j} - sum_{i+j=n, j>=1} B_{2i+1} B_{2j-1}.
ExactCount alternating_lhs(std::uint64_t n);
/// 2 * sum_{i+j+k=n} C_{2i} C_{2j} B_{2k}.
ExactCount triple_conv(std::uint64_t n);

/// Z_0..Z_last with Z_0 = 1 and Z_n = 2 sum_{k=1}^{n} C_{2k-1} Z_{n-k}.
std::vector<ExactCount> z_recursion(std::uint64_t last);

struct CorollarySides {
  ExactCount left;   // sum_{i=1}^{n} binom(4i, 2i-1) binom(4n-4i, 2n-2i)
  ExactCount right;  // sum_{i=0}^{n-1} binom(4i+2, 2i+1) binom(4n-4i-2, 2n-2i-1)
};

/// Both sides of the binomial form of the odd/even splice identity. Requires n >= 1.
CorollarySides corollary10_sides(std::uint64_t n);

}  // namespace catconv
