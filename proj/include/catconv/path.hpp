#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace catconv {

/// Up < Down, which makes the lexicographic order on paths the order of
/// their UD-strings.
enum class Step : std::uint8_t { Up, Down };

constexpr char to_char(Step s) noexcept { return s == Step::Up ? 'U' : 'D'; }
constexpr Step flipped(Step s) noexcept { return s == Step::Up ? Step::Down : Step::Up; }
constexpr int delta(Step s) noexcept { return s == Step::Up ? 1 : -1; }

/// A finite sequence of +1/-1 steps starting at the origin. Immutable.
class Path {
 public:
  Path() = default;
  explicit Path(std::vector<Step> steps) : steps_(std::move(steps)) {}

  std::size_t length() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }
  std::span<const Step> steps() const noexcept { return steps_; }
  Step operator[](std::size_t i) const { return steps_[i]; }

  std::size_t up_count() const noexcept;
  /// height(t) for t = 0..length.
  std::vector<int> heights() const;
  int final_height() const noexcept;

  /// Steps [from, to).
  Path slice(std::size_t from, std::size_t to) const;

  /// Canonical UD-string.
  std::string str() const;

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;

 private:
  std::vector<Step> steps_;
};

std::ostream& operator<<(std::ostream& os, const Path& p);

/// Parses a UD-string. Throws ParseError with the position of the first
/// character that is neither 'U' nor 'D'.
Path parse_path(std::string_view text);

/// Every t in 0..=length with height(t) = 0, ascending. Always starts with 0.
std::vector<std::size_t> x_intercepts(const Path& p);
bool is_even_zeroed(const Path& p);
bool is_balanced(const Path& p);
bool is_dyck(const Path& p);
Path reflect(const Path& p);
Path concat(const Path& p, const Path& q);

/// Path with as many up-steps as down-steps.
class BalancedPath {
 public:
  BalancedPath() = default;
  /// Throws DomainError if `p` is not balanced.
  explicit BalancedPath(Path p);

  const Path& path() const noexcept { return path_; }
  std::size_t parameter() const noexcept { return path_.length() / 2; }
  std::string str() const { return path_.str(); }

  friend bool operator==(const BalancedPath&, const BalancedPath&) = default;
  friend auto operator<=>(const BalancedPath&, const BalancedPath&) = default;

 private:
  Path path_;
};

/// Balanced path that never falls below the axis.
class DyckPath {
 public:
  DyckPath() = default;
  /// Throws DomainError if `p` is not a Dyck path.
  explicit DyckPath(Path p);

  const Path& path() const noexcept { return path_; }
  std::size_t parameter() const noexcept { return path_.length() / 2; }
  std::string str() const { return path_.str(); }
  BalancedPath balanced() const { return BalancedPath(path_); }

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  Path path_;
};

inline std::size_t parameter(const BalancedPath& p) noexcept { return p.parameter(); }
inline std::size_t parameter(const DyckPath& p) noexcept { return p.parameter(); }

enum class Sign : std::uint8_t { Plus, Minus };

constexpr char to_char(Sign s) noexcept { return s == Sign::Plus ? '+' : '-'; }

struct SignedDyckPath {
  Sign sign = Sign::Plus;
  DyckPath path;

  std::size_t parameter() const noexcept { return path.parameter(); }
  /// `+(UD)`, `-()`.
  std::string str() const;

  friend bool operator==(const SignedDyckPath&, const SignedDyckPath&) = default;
  friend auto operator<=>(const SignedDyckPath&, const SignedDyckPath&) = default;
};

inline std::size_t parameter(const SignedDyckPath& p) noexcept { return p.parameter(); }

/// Ordered sequence of signed Dyck paths. Weight is the sum of (parameter + 1).
class SignedSeq {
 public:
  SignedSeq() = default;
  explicit SignedSeq(std::vector<SignedDyckPath> items) : items_(std::move(items)) {}

  std::span<const SignedDyckPath> items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const SignedDyckPath& operator[](std::size_t i) const { return items_[i]; }

  std::size_t weight() const noexcept;
  bool all_parameters_odd() const noexcept;

  /// Items joined by single spaces; the empty sequence renders as "".
  std::string str() const;

  friend bool operator==(const SignedSeq&, const SignedSeq&) = default;

 private:
  std::vector<SignedDyckPath> items_;
};

std::ostream& operator<<(std::ostream& os, const SignedSeq& s);

/// Inverse of SignedSeq::str. Whitespace between items is free-form.
SignedSeq parse_signed_seq(std::string_view text);

}  // namespace catconv
