#include "catconv/triangle.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <string>

#include "catconv/counting.hpp"
#include "catconv/enumerate.hpp"
#include "catconv/errors.hpp"

namespace catconv {
namespace {

constexpr std::size_t kBruteForceDepth = 16;

std::size_t slot(std::size_t t, int h) { return static_cast<std::size_t>((h + static_cast<int>(t)) / 2); }

bool on_grid(std::size_t t, int h, std::size_t depth) {
  const int ti = static_cast<int>(t);
  return t <= depth && h >= -ti && h <= ti && (ti - h) % 2 == 0;
}

template <typename Body>
VerificationReport timed(IdentityId id, std::uint64_t n, Mode mode, Body body) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.identity = id;
  r.n = n;
  r.mode = mode;
  body(r);
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

}  // namespace

TriangleGrid TriangleGrid::to_depth(std::size_t depth) {
  if (depth > kMaxDepth) throw CapExceeded("triangle depth", depth, kMaxDepth);
  TriangleGrid g;
  g.rows_.reserve(depth + 1);
  g.rows_.push_back({ExactCount(1)});
  for (std::size_t t = 1; t <= depth; ++t) {
    const auto& prev = g.rows_.back();
    std::vector<ExactCount> row(t + 1);
    for (std::size_t k = 0; k <= t; ++k) {
      const int h = -static_cast<int>(t) + 2 * static_cast<int>(k);
      if (is_forbidden(t, h)) continue;
      // in-neighbours (t-1, h-1) and (t-1, h+1) sit at slots k-1 and k of the previous row
      if (k >= 1) row[k] += prev[k - 1];
      if (k < t) row[k] += prev[k];
    }
    g.rows_.push_back(std::move(row));
  }
  return g;
}

ExactCount TriangleGrid::label(std::size_t t, int h) const {
  if (!on_grid(t, h, depth())) return 0;
  return rows_[t][slot(t, h)];
}

ExactCount TriangleGrid::row_sum(std::size_t t) const {
  ExactCount sum;
  for (const ExactCount& c : rows_.at(t)) sum += c;
  return sum;
}

TriangleGrid triangle(std::size_t blocks) {
  const std::size_t cap = TriangleGrid::kMaxDepth - 1;
  if (4 * blocks > cap) throw CapExceeded("triangle depth 4N", 4 * blocks, cap);
  return TriangleGrid::to_depth(4 * blocks);
}

std::vector<VerificationReport> triangle_checks(std::size_t blocks, const Limits& limits) {
  const TriangleGrid grid = TriangleGrid::to_depth(4 * blocks + 1);
  const std::size_t brute_depth = std::min({kBruteForceDepth, limits.max_path_length, 4 * blocks});

  std::vector<VerificationReport> out;
  for (std::uint64_t n = 0; n <= blocks; ++n) {
    out.push_back(timed(IdentityId::lemma3, n, Mode::numeric, [&](VerificationReport& r) {
      r.expected = catalan(2 * n);
      r.actual = grid.label(4 * n, 0);
      r.passed = r.expected == r.actual;
      if (!r.passed) r.witness = Witness{"label(4n,0) differs from C_{2n}", {}};
    }));
    out.push_back(timed(IdentityId::lemma6b, n, Mode::numeric, [&](VerificationReport& r) {
      r.expected = shapiro_lhs(n);
      r.actual = grid.label(4 * n + 1, 1);
      const bool symmetric = grid.label(4 * n + 1, -1) == r.actual;
      r.passed = r.expected == r.actual && symmetric;
      if (!r.passed) r.witness = Witness{"label(4n+1,+-1) differs from L_n", {}};
    }));
    out.push_back(timed(IdentityId::lemma6a, n, Mode::numeric, [&](VerificationReport& r) {
      r.expected = mixed_lhs(n);
      r.actual = grid.row_sum(4 * n);
      r.passed = r.expected == r.actual;
      if (!r.passed) r.witness = Witness{"row sum 4n differs from S_n", {}};
    }));

    const std::size_t first_row = n == 0 ? 0 : 4 * n - 3;
    const std::size_t last_row = 4 * n;
    if (last_row > brute_depth) continue;
    out.push_back(timed(IdentityId::lemma6a, n, Mode::exhaustive, [&](VerificationReport& r) {
      std::uint64_t nodes = 0;
      std::uint64_t agreeing = 0;
      for (std::size_t t = first_row; t <= last_row; ++t) {
        std::map<int, std::uint64_t> counted;
        std::map<int, std::string> example;
        for (const Path& p : enumerate_paths(t, limits.enumeration_caps())) {
          if (!is_even_zeroed(p)) continue;
          const int h = p.final_height();
          if (counted[h]++ == 0) example[h] = p.str();
        }
        for (int h = -static_cast<int>(t); h <= static_cast<int>(t); h += 2) {
          ++nodes;
          const ExactCount brute(counted.count(h) ? counted[h] : 0);
          if (brute == grid.label(t, h)) {
            ++agreeing;
          } else if (!r.witness) {
            r.witness = Witness{"node (" + std::to_string(t) + "," + std::to_string(h) + "): DP " +
                                    grid.label(t, h).to_string() + ", enumeration " + brute.to_string(),
                                example.count(h) ? std::vector<std::string>{example[h]} : std::vector<std::string>{}};
          }
        }
      }
      r.expected = nodes;
      r.actual = agreeing;
      r.passed = nodes == agreeing;
    }));
  }
  return out;
}

nlohmann::ordered_json to_json(const TriangleGrid& grid) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t t = 0; t <= grid.depth(); ++t) {
    nlohmann::ordered_json labels = nlohmann::ordered_json::array();
    const auto& row = grid.row(t);
    for (std::size_t k = 0; k < row.size(); ++k) {
      nlohmann::ordered_json node;
      node["h"] = -static_cast<int>(t) + 2 * static_cast<int>(k);
      node["label"] = row[k].to_string();
      labels.push_back(std::move(node));
    }
    nlohmann::ordered_json r;
    r["t"] = t;
    r["labels"] = std::move(labels);
    rows.push_back(std::move(r));
  }
  nlohmann::ordered_json j;
  j["depth"] = grid.depth();
  j["rows"] = std::move(rows);
  return j;
}

}  // namespace catconv
