#include "doctest.h"

#include <algorithm>
#include <map>

#include "catconv/counting.hpp"
#include "catconv/enumerate.hpp"
#include "catconv/errors.hpp"
#include "catconv/triangle.hpp"

using namespace catconv;

TEST_CASE("triangle labels") {
  const TriangleGrid g = triangle(1);
  CHECK(g.depth() == 4);
  CHECK(g.label(0, 0) == ExactCount(1));
  CHECK(g.label(4, 0) == ExactCount(2));
  CHECK(g.label(2, 0) == ExactCount(0));
  CHECK(g.row_sum(4) == ExactCount(8));
  CHECK(g.label(4, 1) == ExactCount(0));   // wrong parity
  CHECK(g.label(4, 6) == ExactCount(0));   // off grid
  CHECK(g.label(9, 1) == ExactCount(0));   // past depth

  const TriangleGrid deeper = TriangleGrid::to_depth(5);
  CHECK(deeper.label(5, 1) == ExactCount(4));
  CHECK(deeper.label(5, -1) == ExactCount(4));
  // frozen from brute-force enumeration of all 2^8 paths
  const TriangleGrid eight = TriangleGrid::to_depth(8);
  const std::vector<std::uint64_t> row8 = {1, 6, 16, 18, 14, 18, 16, 6, 1};
  for (std::size_t k = 0; k < row8.size(); ++k) CHECK(eight.row(8)[k] == ExactCount(row8[k]));

  CHECK(triangle(0).depth() == 0);
  CHECK_THROWS_AS(triangle(51), CapExceeded);
  CHECK_NOTHROW(triangle(50));
}

TEST_CASE("every label is the sum of its left neighbours") {
  const TriangleGrid g = TriangleGrid::to_depth(40);
  for (std::size_t t = 1; t <= 40; ++t) {
    for (int h = -static_cast<int>(t); h <= static_cast<int>(t); h += 2) {
      const ExactCount sum = g.label(t - 1, h - 1) + g.label(t - 1, h + 1);
      CHECK(g.label(t, h) == (TriangleGrid::is_forbidden(t, h) ? ExactCount(0) : sum));
    }
  }
}

TEST_CASE("DP agrees with enumeration for t <= 16") {
  const TriangleGrid g = TriangleGrid::to_depth(16);
  for (std::size_t t = 0; t <= 16; ++t) {
    std::map<int, std::uint64_t> counts;
    for (const Path& p : enumerate_paths(t))
      if (is_even_zeroed(p)) ++counts[p.final_height()];
    for (int h = -static_cast<int>(t); h <= static_cast<int>(t); h += 2) CHECK(g.label(t, h) == ExactCount(counts[h]));
  }
}

TEST_CASE("triangle_checks") {
  const auto three = triangle_checks(3);
  CHECK(three.size() == 4 * 3 + 4);
  for (const auto& r : three) CHECK(r.passed);

  const auto one = triangle_checks(1);
  const auto brute = std::find_if(one.begin(), one.end(),
                                  [](const auto& r) { return r.mode == Mode::exhaustive && r.n == 1; });
  REQUIRE(brute != one.end());
  CHECK(brute->expected == ExactCount(2 + 3 + 4 + 5));  // nodes in rows 1..4
  CHECK(brute->passed);

  for (const auto& r : triangle_checks(12)) CHECK(r.passed);
}

TEST_CASE("triangle JSON") {
  const auto j = to_json(triangle(1));
  CHECK(j["depth"] == 4);
  CHECK(j["rows"].size() == 5);
  CHECK(j["rows"][4]["labels"][2]["h"] == 0);
  CHECK(j["rows"][4]["labels"][2]["label"] == "2");
}
