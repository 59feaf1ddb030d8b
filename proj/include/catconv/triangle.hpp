#pragma once

#include <cstddef>
#include <vector>

#include "json.hpp"

#include "catconv/exact_count.hpp"
#include "catconv/verify.hpp"

namespace catconv {

/// Number of even-zeroed paths from the origin to every node (t, h) with
/// 0 <= t <= depth, |h| <= t, t = h mod 2.
class TriangleGrid {
 public:
  static constexpr std::size_t kMaxDepth = 201;

  /// Rows t = 0..depth, built by dynamic programming. Throws CapExceeded past kMaxDepth.
  static TriangleGrid to_depth(std::size_t depth);

  std::size_t depth() const noexcept { return rows_.size() - 1; }
  /// Zero for nodes outside the grid or of the wrong parity.
  ExactCount label(std::size_t t, int h) const;
  ExactCount row_sum(std::size_t t) const;
  /// Row t ordered by h = -t, -t+2, ..., t.
  const std::vector<ExactCount>& row(std::size_t t) const { return rows_.at(t); }

  /// Height 0 at a position not divisible by 4.
  static constexpr bool is_forbidden(std::size_t t, int h) noexcept { return h == 0 && t % 4 != 0; }

 private:
  std::vector<std::vector<ExactCount>> rows_;
};

/// Grid with rows t = 0..4N; requires 4N <= 200.
TriangleGrid triangle(std::size_t blocks);

/// Closed-form claims for every n <= N (label(4n,0) = C_{2n}, label(4n+1,+-1) = L_n,
/// row sum 4n = S_n) and DP-vs-enumeration agreement on rows t <= min(16, 4N).
std::vector<VerificationReport> triangle_checks(std::size_t blocks, const Limits& limits = {});

/// {"depth": d, "rows": [{"t": t, "labels": [{"h": h, "label": "decimal"}, ...]}, ...]}
nlohmann::ordered_json to_json(const TriangleGrid& grid);

}  // namespace catconv
