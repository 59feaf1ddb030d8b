#include "catconv/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <map>
#include <thread>
#include <utility>

#include "catconv/bijections.hpp"
#include "catconv/counting.hpp"
#include "catconv/errors.hpp"

namespace catconv {
namespace {

constexpr std::array<std::string_view, kAllIdentities.size()> kIdentityNames = {
    "thm1",   "thm2",    "thm8",    "thm9",  "lemma3",    "lemma4",      "lemma5",           "lemma6a",
    "lemma6b", "lemma7", "cor10",   "equiv-1-2", "z-recursion", "sixteen-recursion", "wrong-extensions",
};

constexpr std::size_t kSampleSize = 3;

ExactCount four_pow(std::uint64_t n) { return pow(ExactCount(4), static_cast<unsigned>(n)); }

CheckOutcome compare(ExactCount expected, ExactCount actual, std::string what) {
  CheckOutcome out{std::move(expected), std::move(actual), false, std::nullopt};
  out.passed = out.expected == out.actual;
  if (!out.passed)
    out.witness = Witness{what + ": expected " + out.expected.to_string() + ", got " + out.actual.to_string(), {}};
  return out;
}

// Records the first failure only; later failures do not overwrite the witness.
void fail(CheckOutcome& out, std::string note, std::vector<std::string> paths = {}) {
  if (out.passed || !out.witness) out.witness = Witness{std::move(note), std::move(paths)};
  out.passed = false;
}

void finish(CheckOutcome& out, const std::string& what, const std::vector<std::string>& sample) {
  if (out.expected != out.actual)
    fail(out, what + ": expected " + out.expected.to_string() + ", counted " + out.actual.to_string(), sample);
}

// Single path as (steps << 6) | length; lengths are bounded by the enumeration caps.
std::uint64_t pack(const Path& p) {
  std::uint64_t bits = 0;
  for (Step s : p.steps()) bits = (bits << 1) | (s == Step::Down ? 1U : 0U);
  return (bits << 6) | p.length();
}

using PairKey = std::pair<std::uint64_t, std::uint64_t>;

template <typename Pair>
PairKey pack_pair(const Pair& pr) {
  return {pack(pr.first().path()), pack(pr.second().path())};
}

template <typename Key>
bool sort_and_find_duplicate(std::vector<Key>& keys) {
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) != keys.end();
}

bool ends_at(const Path& p, int height) { return p.final_height() == height; }

std::int64_t as_max(std::size_t budget, std::size_t offset, std::size_t divisor) {
  if (budget < offset) return -1;
  return static_cast<std::int64_t>((budget - offset) / divisor);
}

// ---------------------------------------------------------------- numeric

CheckOutcome thm1_numeric(std::uint64_t n, const Limits&) {
  return compare(four_pow(n) * catalan(n), shapiro_lhs(n), "sum C_{2i}C_{2j} vs 4^n C_n");
}

CheckOutcome thm2_numeric(std::uint64_t n, const Limits&) {
  return compare(four_pow(n) * central_binom(n), mixed_lhs(n), "sum C_{2i}B_{2j} vs 4^n B_n");
}

CheckOutcome thm8_numeric(std::uint64_t n, const Limits&) {
  return compare(four_pow(n) * central_binom(n), alternating_lhs(n), "alternating B convolution vs 4^n B_n");
}

CheckOutcome thm9_numeric(std::uint64_t n, const Limits&) {
  ExactCount lhs;
  ExactCount rhs;
  for (std::uint64_t i = 0; i <= n; ++i) {
    const std::uint64_t j = n - i;
    lhs += checked_sub(central_binom(2 * i), catalan(2 * i)) * central_binom(2 * j);
    if (j >= 1) rhs += central_binom(2 * i + 1) * central_binom(2 * j - 1);
  }
  CheckOutcome out = compare(rhs, lhs, "sum (B_{2i}-C_{2i})B_{2j} vs sum B_{2i+1}B_{2j-1}");
  if (alternating_lhs(n) != mixed_lhs(n)) fail(out, "alternating B convolution differs from sum C_{2i}B_{2j}");
  return out;
}

CheckOutcome lemma4_numeric(std::uint64_t n, const Limits&) {
  return compare(binom(4 * n + 2, static_cast<std::int64_t>(2 * n + 1)), triple_conv(n),
                 "2 sum C_{2i}C_{2j}B_{2k} vs B_{2n+1}");
}

CheckOutcome cor10_numeric(std::uint64_t n, const Limits&) {
  CorollarySides sides = corollary10_sides(n);
  return compare(std::move(sides.right), std::move(sides.left), "binomial sides");
}

CheckOutcome equiv_numeric(std::uint64_t n, const Limits&) {
  return compare(ExactCount(n + 1) * shapiro_lhs(n), mixed_lhs(n), "S_n vs (n+1) L_n");
}

CheckOutcome z_numeric(std::uint64_t n, const Limits&) {
  return compare(catalan(2 * n), z_recursion(n).back(), "Z_n vs C_{2n}");
}

CheckOutcome sixteen_numeric(std::uint64_t n, const Limits&) {
  ExactCount sum;
  for (std::uint64_t i = 0; i <= n; ++i) sum += mixed_lhs(i) * mixed_lhs(n - i);
  return compare(pow(ExactCount(16), static_cast<unsigned>(n)), sum, "sum S_i S_j vs 16^n");
}

// ------------------------------------------------------------- exhaustive

struct Tally {
  ExactCount count;
  std::vector<std::string> sample;

  void add(const Path& p) {
    count += 1;
    if (sample.size() < kSampleSize) sample.push_back(p.str());
  }
};

template <typename Pred>
Tally tally_paths(std::size_t length, const Limits& limits, Pred pred) {
  Tally t;
  for (const Path& p : enumerate_paths(length, limits.enumeration_caps()))
    if (pred(p)) t.add(p);
  return t;
}

Tally even_zeroed_of_length(std::size_t length, const Limits& limits) {
  return tally_paths(length, limits, [](const Path& p) { return is_even_zeroed(p); });
}

Tally even_zeroed_to_height_one(std::size_t length, const Limits& limits) {
  return tally_paths(length, limits, [](const Path& p) { return ends_at(p, 1) && is_even_zeroed(p); });
}

CheckOutcome thm1_exhaustive(std::uint64_t n, const Limits& limits) {
  Tally t = even_zeroed_to_height_one(4 * n + 1, limits);
  CheckOutcome out{four_pow(n) * catalan(n), t.count, true, std::nullopt};
  finish(out, "even-zeroed paths to (4n+1,1)", t.sample);
  return out;
}

CheckOutcome thm2_exhaustive(std::uint64_t n, const Limits& limits) {
  Tally t = even_zeroed_of_length(4 * n, limits);
  CheckOutcome out{four_pow(n) * central_binom(n), t.count, true, std::nullopt};
  finish(out, "even-zeroed paths of length 4n", t.sample);
  return out;
}

CheckOutcome lemma3_exhaustive(std::uint64_t n, const Limits& limits) {
  const EnumerationCaps caps = limits.enumeration_caps();
  std::vector<std::uint64_t> domain;
  Tally t;
  for (const BalancedPath& b : enumerate_balanced(2 * n, caps)) {
    if (!is_even_zeroed(b.path())) continue;
    t.add(b.path());
    domain.push_back(pack(b.path()));
  }
  CheckOutcome out{catalan(2 * n), t.count, true, std::nullopt};

  std::vector<std::uint64_t> images;
  for (const DyckPath& d : enumerate_dyck(2 * n, caps)) {
    const BalancedPath image = even_zeroed_from_dyck(d);
    if (image.parameter() != 2 * n || !is_even_zeroed(image.path())) {
      fail(out, "image is not an even-zeroed balanced 2n-path", {d.str(), image.str()});
      continue;
    }
    if (dyck_from_even_zeroed(image) != d) fail(out, "round-trip failed", {d.str(), image.str()});
    images.push_back(pack(image.path()));
  }
  if (sort_and_find_duplicate(images)) fail(out, "map is not injective");
  std::sort(domain.begin(), domain.end());
  if (images != domain) fail(out, "image differs from the enumerated even-zeroed set", t.sample);
  finish(out, "even-zeroed balanced 2n-paths", t.sample);
  return out;
}

CheckOutcome lemma4_exhaustive(std::uint64_t n, const Limits& limits) {
  // cell (i, j): leftmost odd-parameter excursion starts at 4i and has parameter 2j+1
  std::map<std::pair<std::uint64_t, std::uint64_t>, Tally> cells;
  CheckOutcome out{binom(4 * n + 2, static_cast<std::int64_t>(2 * n + 1)), 0, true, std::nullopt};
  Tally all;
  for (const BalancedPath& b : enumerate_balanced(2 * n + 1, limits.enumeration_caps())) {
    all.add(b.path());
    const auto exs = excursions(b);
    const auto odd = std::find_if(exs.begin(), exs.end(),
                                  [](const Excursion& e) { return ((e.end - e.start) / 2) % 2 == 1; });
    if (odd == exs.end()) {
      fail(out, "no odd-parameter excursion", {b.str()});
      continue;
    }
    if (odd->start % 4 != 0 || !is_even_zeroed(b.path().slice(0, odd->start))) {
      fail(out, "prefix before the leftmost odd excursion is not even-zeroed", {b.str()});
      continue;
    }
    const std::uint64_t j = ((odd->end - odd->start) / 2 - 1) / 2;
    cells[{odd->start / 4, j}].add(b.path());
  }
  out.actual = all.count;
  for (std::uint64_t i = 0; i <= n; ++i) {
    for (std::uint64_t j = 0; i + j <= n; ++j) {
      const ExactCount want = catalan(2 * i) * ExactCount(2) * catalan(2 * j) * central_binom(2 * (n - i - j));
      const auto it = cells.find({i, j});
      const ExactCount got = it == cells.end() ? ExactCount(0) : it->second.count;
      if (got != want) {
        fail(out,
             "group (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ") has " + got.to_string() +
                 " paths, expected " + want.to_string(),
             it == cells.end() ? std::vector<std::string>{} : it->second.sample);
      }
    }
  }
  finish(out, "balanced (2n+1)-paths", all.sample);
  return out;
}

CheckOutcome lemma5_exhaustive(std::uint64_t n, const Limits& limits) {
  Tally t = tally_paths(2 * n, limits, [](const Path& p) {
    const auto xs = x_intercepts(p);
    return xs.size() == 1;
  });
  CheckOutcome out{central_binom(n), t.count, true, std::nullopt};
  finish(out, "paths of length 2n never returning to the axis", t.sample);
  return out;
}

// Groups paths by their rightmost x-intercept 4i and compares against cell(i).
template <typename Pred, typename Cell>
CheckOutcome grouped_by_last_intercept(std::uint64_t n, std::size_t length, ExactCount expected_total,
                                       const Limits& limits, Pred pred, Cell cell, const std::string& what) {
  std::map<std::uint64_t, Tally> groups;
  Tally all;
  CheckOutcome out{std::move(expected_total), 0, true, std::nullopt};
  for (const Path& p : enumerate_paths(length, limits.enumeration_caps())) {
    if (!pred(p)) continue;
    all.add(p);
    const std::size_t last = x_intercepts(p).back();
    if (last % 4 != 0) {
      fail(out, "rightmost x-intercept not divisible by 4", {p.str()});
      continue;
    }
    groups[last / 4].add(p);
  }
  out.actual = all.count;
  for (std::uint64_t i = 0; i <= n; ++i) {
    const auto it = groups.find(i);
    const ExactCount got = it == groups.end() ? ExactCount(0) : it->second.count;
    const ExactCount want = cell(i);
    if (got != want) {
      fail(out,
           "group with rightmost intercept " + std::to_string(4 * i) + " has " + got.to_string() +
               " paths, expected " + want.to_string(),
           it == groups.end() ? std::vector<std::string>{} : it->second.sample);
    }
  }
  finish(out, what, all.sample);
  return out;
}

CheckOutcome lemma6a_exhaustive(std::uint64_t n, const Limits& limits) {
  return grouped_by_last_intercept(
      n, 4 * n, mixed_lhs(n), limits, [](const Path& p) { return is_even_zeroed(p); },
      [n](std::uint64_t i) { return catalan(2 * i) * central_binom(2 * (n - i)); }, "even-zeroed paths of length 4n");
}

CheckOutcome lemma6b_exhaustive(std::uint64_t n, const Limits& limits) {
  return grouped_by_last_intercept(
      n, 4 * n + 1, shapiro_lhs(n), limits,
      [](const Path& p) { return ends_at(p, 1) && is_even_zeroed(p); },
      [n](std::uint64_t i) { return catalan(2 * i) * catalan(2 * (n - i)); }, "even-zeroed paths to (4n+1,1)");
}

CheckOutcome lemma7_exhaustive(std::uint64_t n, const Limits& limits) {
  Tally current = even_zeroed_of_length(4 * n, limits);
  CheckOutcome out{four_pow(n) * central_binom(n), current.count, true, std::nullopt};
  if (n >= 1) {
    const ExactCount s_prev = even_zeroed_of_length(4 * n - 4, limits).count;
    const ExactCount l_prev = even_zeroed_to_height_one(4 * n - 3, limits).count;
    const ExactCount accounted = checked_sub(ExactCount(16) * s_prev, ExactCount(8) * l_prev);
    if (accounted != current.count) {
      fail(out,
           "16 S_{n-1} - 8 L_{n-1} = " + accounted.to_string() + " but enumeration gives " +
               current.count.to_string(),
           current.sample);
    }
  }
  finish(out, "even-zeroed paths of length 4n", current.sample);
  return out;
}

const std::array<std::array<Step, 2>, 4> kTwoSteps = {{
    {Step::Up, Step::Up}, {Step::Up, Step::Down}, {Step::Down, Step::Up}, {Step::Down, Step::Down}}};

CheckOutcome wrong_extensions_exhaustive(std::uint64_t n, const Limits& limits) {
  const EnumerationCaps caps = limits.enumeration_caps();
  if (4 * n + 4 > caps.max_length) throw CapExceeded("path length", 4 * n + 4, caps.max_length);

  std::vector<std::uint64_t> wrong;
  for (const Path& p : enumerate_paths(4 * n, caps)) {
    if (!is_even_zeroed(p)) continue;
    for (const Path& ext : enumerate_paths(4)) {
      Path extended = concat(p, ext);
      if (!is_even_zeroed(extended)) wrong.push_back(pack(extended));
    }
  }
  std::vector<std::uint64_t> predicted;
  for (const Path& q : enumerate_paths(4 * n + 1, caps)) {
    if (!ends_at(q, 1) || !is_even_zeroed(q)) continue;
    for (const auto& tail : kTwoSteps) {
      Path w = concat(q, Path({Step::Down, tail[0], tail[1]}));
      predicted.push_back(pack(w));
      predicted.push_back(pack(reflect(w)));
    }
  }
  CheckOutcome out{ExactCount(8) * shapiro_lhs(n), ExactCount(wrong.size()), true, std::nullopt};
  if (sort_and_find_duplicate(wrong)) fail(out, "duplicate wrong extension");
  if (sort_and_find_duplicate(predicted)) fail(out, "predicted wrong extensions overlap");
  if (wrong != predicted) {
    std::vector<std::uint64_t> diff;
    std::set_symmetric_difference(wrong.begin(), wrong.end(), predicted.begin(), predicted.end(),
                                  std::back_inserter(diff));
    std::vector<std::string> sample;
    for (std::size_t k = 0; k < diff.size() && k < kSampleSize; ++k) {
      const std::size_t len = diff[k] & 63U;
      std::vector<Step> steps(len);
      for (std::size_t s = 0; s < len; ++s)
        steps[s] = ((diff[k] >> (6 + len - 1 - s)) & 1U) ? Step::Down : Step::Up;
      sample.push_back(Path(std::move(steps)).str());
    }
    fail(out, "wrong extensions differ from the predicted set", sample);
  }
  finish(out, "wrong extensions", {});
  return out;
}

CheckOutcome thm9_exhaustive(std::uint64_t n, const Limits& limits) {
  const EnumerationCaps caps = limits.enumeration_caps();
  std::vector<std::vector<BalancedPath>> balanced(2 * n + 1);
  for (std::size_t k = 0; k <= 2 * n; ++k) balanced[k] = collect(enumerate_balanced(k, caps));

  CheckOutcome out{0, 0, true, std::nullopt};
  std::vector<PairKey> e_keys;
  std::vector<PairKey> o_keys;
  std::vector<PairKey> forward_images;
  std::vector<PairKey> backward_images;

  for (std::uint64_t i = 0; i <= n; ++i) {
    for (const BalancedPath& e1 : balanced[2 * i]) {
      const auto xs = x_intercepts(e1.path());
      if (std::none_of(xs.begin(), xs.end(), [](std::size_t t) { return t % 4 == 2; })) continue;
      for (const BalancedPath& e2 : balanced[2 * (n - i)]) {
        const PairE e(e1, e2);
        e_keys.push_back(pack_pair(e));
        try {
          const PairO o = theorem9_forward(e);
          forward_images.push_back(pack_pair(o));
          if (theorem9_backward(o) != e) fail(out, "backward(forward(e)) != e", {e.str(), o.str()});
        } catch (const DomainError& err) {
          fail(out, std::string("forward map left its codomain: ") + err.what(), {e.str()});
        }
      }
    }
  }
  for (std::uint64_t i = 0; i < n; ++i) {
    for (const BalancedPath& o1 : balanced[2 * i + 1]) {
      for (const BalancedPath& o2 : balanced[2 * (n - i) - 1]) {
        const PairO o(o1, o2);
        o_keys.push_back(pack_pair(o));
        try {
          const PairE e = theorem9_backward(o);
          backward_images.push_back(pack_pair(e));
          if (theorem9_forward(e) != o) fail(out, "forward(backward(o)) != o", {o.str(), e.str()});
        } catch (const DomainError& err) {
          fail(out, std::string("backward map left its codomain: ") + err.what(), {o.str()});
        }
      }
    }
  }
  out.expected = ExactCount(o_keys.size());
  out.actual = ExactCount(e_keys.size());
  if (sort_and_find_duplicate(forward_images)) fail(out, "forward map is not injective");
  if (sort_and_find_duplicate(backward_images)) fail(out, "backward map is not injective");
  std::sort(e_keys.begin(), e_keys.end());
  std::sort(o_keys.begin(), o_keys.end());
  if (forward_images != o_keys) fail(out, "forward image differs from the enumerated O set");
  if (backward_images != e_keys) fail(out, "backward image differs from the enumerated E set");
  finish(out, "|E| vs |O|", {});
  return out;
}

// ------------------------------------------------------------- registry

CheckSpec numeric(CheckFn fn, std::uint64_t min_n = 0) {
  return CheckSpec{std::move(fn), [](const Limits& l) { return static_cast<std::int64_t>(l.max_numeric_n); },
                   min_n};
}

CheckSpec exhaustive(CheckFn fn, std::function<std::int64_t(const Limits&)> max_n) {
  return CheckSpec{std::move(fn), std::move(max_n), 0};
}

std::size_t index_of(IdentityId id) { return static_cast<std::size_t>(id); }

std::size_t env_or(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') return fallback;
  return static_cast<std::size_t>(v);
}

}  // namespace

std::string_view to_string(IdentityId id) noexcept { return kIdentityNames[index_of(id)]; }

std::optional<IdentityId> parse_identity(std::string_view text) noexcept {
  for (IdentityId id : kAllIdentities)
    if (to_string(id) == text) return id;
  return std::nullopt;
}

std::string_view to_string(Mode mode) noexcept {
  switch (mode) {
    case Mode::numeric: return "numeric";
    case Mode::exhaustive: return "exhaustive";
    case Mode::both: return "both";
  }
  return "?";
}

std::optional<Mode> parse_mode(std::string_view text) noexcept {
  for (Mode m : {Mode::numeric, Mode::exhaustive, Mode::both})
    if (to_string(m) == text) return m;
  return std::nullopt;
}

bool VerificationReport::same_outcome(const VerificationReport& o) const {
  return identity == o.identity && n == o.n && mode == o.mode && expected == o.expected && actual == o.actual &&
         passed == o.passed && witness == o.witness;
}

nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["identity"] = std::string(to_string(r.identity));
  j["n"] = r.n;
  j["mode"] = std::string(to_string(r.mode));
  j["expected"] = r.expected.to_string();
  j["actual"] = r.actual.to_string();
  j["passed"] = r.passed;
  if (r.witness) {
    j["witness"] = {{"note", r.witness->note}, {"paths", r.witness->paths}};
  }
  j["elapsed_ms"] = std::round(r.elapsed.count() * 1000.0) / 1000.0;
  return j;
}

Limits Limits::from_environment() {
  Limits l;
  l.max_path_length = env_or("CATCONV_MAX_PATH_LENGTH", l.max_path_length);
  l.max_balanced_parameter = env_or("CATCONV_MAX_BALANCED_PARAMETER", l.max_balanced_parameter);
  l.max_dyck_parameter = env_or("CATCONV_MAX_DYCK_PARAMETER", l.max_dyck_parameter);
  l.max_numeric_n = env_or("CATCONV_MAX_NUMERIC_N", l.max_numeric_n);
  return l;
}

EnumerationCaps Limits::enumeration_caps() const {
  return EnumerationCaps{max_path_length, std::max(max_balanced_parameter, max_dyck_parameter)};
}

Registry Registry::standard(Limits limits) {
  Registry r;
  r.limits_ = limits;
  const auto free_len = [](std::size_t offset, std::size_t divisor) {
    return [=](const Limits& l) { return as_max(l.max_path_length, offset, divisor); };
  };
  r.set(IdentityId::thm1, Mode::numeric, numeric(thm1_numeric));
  r.set(IdentityId::thm1, Mode::exhaustive, exhaustive(thm1_exhaustive, free_len(1, 4)));
  r.set(IdentityId::thm2, Mode::numeric, numeric(thm2_numeric));
  r.set(IdentityId::thm2, Mode::exhaustive, exhaustive(thm2_exhaustive, free_len(0, 4)));
  r.set(IdentityId::thm8, Mode::numeric, numeric(thm8_numeric));
  r.set(IdentityId::thm9, Mode::numeric, numeric(thm9_numeric));
  r.set(IdentityId::thm9, Mode::exhaustive, exhaustive(thm9_exhaustive, [](const Limits& l) {
          return as_max(l.max_balanced_parameter, 0, 2);
        }));
  r.set(IdentityId::lemma3, Mode::exhaustive, exhaustive(lemma3_exhaustive, [](const Limits& l) {
          return as_max(std::min(l.max_balanced_parameter, l.max_dyck_parameter), 0, 2);
        }));
  r.set(IdentityId::lemma4, Mode::numeric, numeric(lemma4_numeric));
  r.set(IdentityId::lemma4, Mode::exhaustive, exhaustive(lemma4_exhaustive, [](const Limits& l) {
          return as_max(l.max_balanced_parameter, 1, 2);
        }));
  r.set(IdentityId::lemma5, Mode::exhaustive, exhaustive(lemma5_exhaustive, free_len(0, 2)));
  r.set(IdentityId::lemma6a, Mode::exhaustive, exhaustive(lemma6a_exhaustive, free_len(0, 4)));
  r.set(IdentityId::lemma6b, Mode::exhaustive, exhaustive(lemma6b_exhaustive, free_len(1, 4)));
  r.set(IdentityId::lemma7, Mode::exhaustive, exhaustive(lemma7_exhaustive, free_len(0, 4)));
  r.set(IdentityId::cor10, Mode::numeric, numeric(cor10_numeric, 1));
  r.set(IdentityId::equiv_1_2, Mode::numeric, numeric(equiv_numeric));
  r.set(IdentityId::z_recursion, Mode::numeric, numeric(z_numeric));
  r.set(IdentityId::sixteen_recursion, Mode::numeric, numeric(sixteen_numeric));
  r.set(IdentityId::wrong_extensions, Mode::exhaustive, exhaustive(wrong_extensions_exhaustive, free_len(4, 4)));
  return r;
}

void Registry::set(IdentityId id, Mode mode, CheckSpec spec) {
  Entry& e = entries_[index_of(id)];
  switch (mode) {
    case Mode::numeric: e.numeric = std::move(spec); break;
    case Mode::exhaustive: e.exhaustive = std::move(spec); break;
    case Mode::both: e.numeric = spec; e.exhaustive = std::move(spec); break;
  }
}

const Registry::Entry& Registry::entry(IdentityId id) const { return entries_[index_of(id)]; }

bool Registry::supports(IdentityId id, Mode mode) const {
  const Entry& e = entry(id);
  switch (mode) {
    case Mode::numeric: return e.numeric.has_value();
    case Mode::exhaustive: return e.exhaustive.has_value();
    case Mode::both: return e.numeric.has_value() || e.exhaustive.has_value();
  }
  return false;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> Registry::index_domain(IdentityId id, Mode mode) const {
  if (!supports(id, mode)) return std::nullopt;
  const Entry& e = entry(id);
  std::uint64_t lo = 0;
  std::int64_t hi = std::numeric_limits<std::int64_t>::max();
  const auto narrow = [&](const std::optional<CheckSpec>& spec) {
    if (!spec) return;
    lo = std::max(lo, spec->min_n);
    hi = std::min(hi, spec->max_n(limits_));
  };
  if (mode != Mode::exhaustive) narrow(e.numeric);
  if (mode != Mode::numeric) narrow(e.exhaustive);
  if (hi < 0 || lo > static_cast<std::uint64_t>(hi)) return std::nullopt;
  return std::pair{lo, static_cast<std::uint64_t>(hi)};
}

void Registry::check_domain(IdentityId id, std::uint64_t n, Mode mode) const {
  if (!supports(id, mode)) {
    throw UnsupportedMode(std::string(to_string(id)) + " has no " + std::string(to_string(mode)) + " check");
  }
  const Entry& e = entry(id);
  const auto check = [&](const std::optional<CheckSpec>& spec, Mode m) {
    if (!spec) return;
    if (n < spec->min_n) {
      throw DomainError(std::string(to_string(id)) + " needs n >= " + std::to_string(spec->min_n),
                        "n=" + std::to_string(n));
    }
    const std::int64_t max_n = spec->max_n(limits_);
    if (max_n < 0 || n > static_cast<std::uint64_t>(max_n)) {
      throw CapExceeded(std::string(to_string(id)) + " " + std::string(to_string(m)) + " index", n,
                        max_n < 0 ? 0 : static_cast<std::size_t>(max_n));
    }
  };
  if (mode != Mode::exhaustive) check(e.numeric, Mode::numeric);
  if (mode != Mode::numeric) check(e.exhaustive, Mode::exhaustive);
}

VerificationReport Registry::verify(IdentityId id, std::uint64_t n, Mode mode) const {
  check_domain(id, n, mode);
  const auto start = std::chrono::steady_clock::now();
  const Entry& e = entry(id);

  CheckOutcome outcome;
  if (mode == Mode::numeric) {
    outcome = e.numeric->run(n, limits_);
  } else if (mode == Mode::exhaustive) {
    outcome = e.exhaustive->run(n, limits_);
  } else if (e.numeric && e.exhaustive) {
    CheckOutcome num = e.numeric->run(n, limits_);
    CheckOutcome exh = e.exhaustive->run(n, limits_);
    outcome.expected = num.expected;
    outcome.actual = exh.actual;
    outcome.passed = num.passed && exh.passed && outcome.expected == outcome.actual;
    if (!num.passed) {
      outcome.witness = num.witness;
    } else if (!exh.passed) {
      outcome.witness = exh.witness;
    } else if (!outcome.passed) {
      outcome.witness = Witness{"numeric and exhaustive modes disagree", {}};
    }
  } else {
    outcome = (e.numeric ? e.numeric : e.exhaustive)->run(n, limits_);
  }
  if (!outcome.passed && !outcome.witness) outcome.witness = Witness{"check failed", {}};
  if (outcome.passed) outcome.witness.reset();

  VerificationReport report;
  report.identity = id;
  report.n = n;
  report.mode = mode;
  report.expected = std::move(outcome.expected);
  report.actual = std::move(outcome.actual);
  report.passed = outcome.passed;
  report.witness = std::move(outcome.witness);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

std::vector<VerificationReport> Registry::verify_range(IdentityId id, std::uint64_t from, std::uint64_t to, Mode mode,
                                                       unsigned threads) const {
  if (from > to) {
    throw DomainError("empty index range", std::to_string(from) + ".." + std::to_string(to));
  }
  for (std::uint64_t n = from; n <= to; ++n) check_domain(id, n, mode);

  const std::size_t count = static_cast<std::size_t>(to - from + 1);
  std::vector<VerificationReport> reports(count);
  std::vector<std::exception_ptr> errors(count);
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t k = next++; k < count; k = next++) {
      try {
        reports[k] = verify(id, from + k, mode);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);
  return reports;
}

VerificationReport verify(IdentityId id, std::uint64_t n, Mode mode, const Limits& limits) {
  return Registry::standard(limits).verify(id, n, mode);
}

std::vector<VerificationReport> verify_range(IdentityId id, std::uint64_t from, std::uint64_t to, Mode mode,
                                             const Limits& limits) {
  return Registry::standard(limits).verify_range(id, from, to, mode);
}

}  // namespace catconv
