#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "catconv/enumerate.hpp"
#include "catconv/exact_count.hpp"

namespace catconv {

enum class IdentityId {
  thm1,
  thm2,
  thm8,
  thm9,
  lemma3,
  lemma4,
  lemma5,
  lemma6a,
  lemma6b,
  lemma7,
  cor10,
  equiv_1_2,
  z_recursion,
  sixteen_recursion,
  wrong_extensions,
};

inline constexpr std::array<IdentityId, 15> kAllIdentities = {
    IdentityId::thm1,    IdentityId::thm2,      IdentityId::thm8,        IdentityId::thm9,
    IdentityId::lemma3,  IdentityId::lemma4,    IdentityId::lemma5,      IdentityId::lemma6a,
    IdentityId::lemma6b, IdentityId::lemma7,    IdentityId::cor10,       IdentityId::equiv_1_2,
    IdentityId::z_recursion, IdentityId::sixteen_recursion, IdentityId::wrong_extensions,
};

/// "thm1", "equiv-1-2", "wrong-extensions", ...
std::string_view to_string(IdentityId id) noexcept;
std::optional<IdentityId> parse_identity(std::string_view text) noexcept;

enum class Mode { numeric, exhaustive, both };

std::string_view to_string(Mode mode) noexcept;
std::optional<Mode> parse_mode(std::string_view text) noexcept;

struct Witness {
  std::string note;
  std::vector<std::string> paths;  // canonical UD-strings or "(a) (b)" pairs

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct VerificationReport {
  IdentityId identity = IdentityId::thm1;
  std::uint64_t n = 0;
  Mode mode = Mode::numeric;
  ExactCount expected;
  ExactCount actual;
  bool passed = false;
  std::optional<Witness> witness;  // present iff !passed
  std::chrono::duration<double, std::milli> elapsed{0};

  /// Equality ignoring `elapsed`.
  bool same_outcome(const VerificationReport& other) const;
};

/// {identity, n, mode, expected, actual, passed, witness?, elapsed_ms}; counts as decimal strings.
nlohmann::ordered_json to_json(const VerificationReport& report);

/// Resource caps for verification.
struct Limits {
  std::size_t max_path_length = 20;        // free enumeration
  std::size_t max_balanced_parameter = 10;
  std::size_t max_dyck_parameter = 12;
  std::uint64_t max_numeric_n = 20;

  /// Defaults overridden by CATCONV_MAX_PATH_LENGTH, CATCONV_MAX_BALANCED_PARAMETER,
  /// CATCONV_MAX_DYCK_PARAMETER and CATCONV_MAX_NUMERIC_N.
  static Limits from_environment();

  EnumerationCaps enumeration_caps() const;
};

/// Result of a single check before it is wrapped into a report.
struct CheckOutcome {
  ExactCount expected;
  ExactCount actual;
  bool passed = false;
  std::optional<Witness> witness;
};

using CheckFn = std::function<CheckOutcome(std::uint64_t n, const Limits& limits)>;

/// One check procedure per mode.
struct CheckSpec {
  CheckFn run;
  /// Largest index the check accepts under the given limits.
  std::function<std::int64_t(const Limits&)> max_n;  // negative: no index fits
  std::uint64_t min_n = 0;
};

/// Maps every identity to its numeric and exhaustive checks.
class Registry {
 public:
  /// Every identity with its built-in checks.
  static Registry standard(Limits limits = {});

  void set(IdentityId id, Mode mode, CheckSpec spec);
  bool supports(IdentityId id, Mode mode) const;

  /// Inclusive [min, max] of accepted indices; nullopt when the mode is unsupported
  /// or no index fits under the limits.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> index_domain(IdentityId id, Mode mode) const;

  /// Throws UnsupportedMode, CapExceeded or DomainError (index below the identity's range).
  void check_domain(IdentityId id, std::uint64_t n, Mode mode) const;

  VerificationReport verify(IdentityId id, std::uint64_t n, Mode mode) const;
  /// One report per index in [from, to], ascending. Indices may run on several
  /// threads; the result equals serial execution. Every index is validated first.
  std::vector<VerificationReport> verify_range(IdentityId id, std::uint64_t from, std::uint64_t to, Mode mode,
                                               unsigned threads = 0) const;

  const Limits& limits() const noexcept { return limits_; }

 private:
  struct Entry {
    std::optional<CheckSpec> numeric;
    std::optional<CheckSpec> exhaustive;
  };
  const Entry& entry(IdentityId id) const;

  Limits limits_;
  std::array<Entry, kAllIdentities.size()> entries_;
};

VerificationReport verify(IdentityId id, std::uint64_t n, Mode mode, const Limits& limits = {});
std::vector<VerificationReport> verify_range(IdentityId id, std::uint64_t from, std::uint64_t to, Mode mode,
                                             const Limits& limits = {});

}  // namespace catconv
