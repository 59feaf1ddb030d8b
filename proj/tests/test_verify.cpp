#include "doctest.h"

#include <algorithm>
#include <set>

#include "catconv/errors.hpp"
#include "catconv/verify.hpp"

using namespace catconv;

TEST_CASE("identity names round-trip") {
  std::set<std::string_view> names;
  for (IdentityId id : kAllIdentities) {
    names.insert(to_string(id));
    CHECK(parse_identity(to_string(id)) == id);
  }
  CHECK(names.size() == 15);
  CHECK(parse_identity("equiv-1-2") == IdentityId::equiv_1_2);
  CHECK_FALSE(parse_identity("thm3").has_value());
  CHECK(parse_mode("both") == Mode::both);
}

TEST_CASE("verify examples") {
  auto r = verify(IdentityId::thm2, 1, Mode::numeric);
  CHECK(r.expected == ExactCount(8));
  CHECK(r.actual == ExactCount(8));
  CHECK(r.passed);
  CHECK_FALSE(r.witness.has_value());

  r = verify(IdentityId::lemma3, 1, Mode::exhaustive);
  CHECK(r.expected == ExactCount(2));
  CHECK(r.actual == ExactCount(2));
  CHECK(r.passed);

  r = verify(IdentityId::thm1, 0, Mode::numeric);
  CHECK(r.expected == ExactCount(1));
  CHECK(r.actual == ExactCount(1));

  r = verify(IdentityId::lemma7, 1, Mode::exhaustive);
  CHECK(r.expected == ExactCount(8));
  CHECK(r.actual == ExactCount(8));
  CHECK(r.passed);
}

TEST_CASE("verify_range examples") {
  const auto thm2 = verify_range(IdentityId::thm2, 0, 12, Mode::numeric);
  CHECK(thm2.size() == 13);
  for (const auto& r : thm2) CHECK(r.passed);

  const auto thm9 = verify_range(IdentityId::thm9, 0, 2, Mode::exhaustive);
  REQUIRE(thm9.size() == 3);
  CHECK(thm9[0].expected == ExactCount(0));
  CHECK(thm9[1].expected == ExactCount(4));
  CHECK(thm9[2].expected == ExactCount(80));
  for (const auto& r : thm9) CHECK(r.passed);

  const auto lemma5 = verify_range(IdentityId::lemma5, 0, 6, Mode::exhaustive);
  CHECK(lemma5.size() == 7);
  for (std::size_t k = 0; k < lemma5.size(); ++k) CHECK(lemma5[k].n == k);

  CHECK_THROWS_AS(verify_range(IdentityId::thm2, 3, 2, Mode::numeric), DomainError);
}

TEST_CASE("every identity passes in every mode it implements, and modes agree") {
  const Registry reg = Registry::standard();
  for (IdentityId id : kAllIdentities) {
    CAPTURE(to_string(id));
    for (Mode mode : {Mode::numeric, Mode::exhaustive, Mode::both}) {
      const auto domain = reg.index_domain(id, mode);
      if (!domain) continue;
      // keep the unit suite quick; the acceptance suite runs the full ranges
      const std::uint64_t hi = std::min<std::uint64_t>(domain->second, 3);
      for (std::uint64_t n = domain->first; n <= hi; ++n) {
        const auto r = reg.verify(id, n, mode);
        CAPTURE(n);
        CHECK(r.passed);
        CHECK(r.expected == r.actual);
      }
    }
  }
}

TEST_CASE("mode support and domain errors") {
  const Registry reg = Registry::standard();
  CHECK_THROWS_AS(reg.verify(IdentityId::thm8, 1, Mode::exhaustive), UnsupportedMode);
  CHECK_THROWS_AS(reg.verify(IdentityId::lemma5, 1, Mode::numeric), UnsupportedMode);
  CHECK_NOTHROW(reg.verify(IdentityId::lemma5, 1, Mode::both));
  CHECK_THROWS_AS(reg.verify(IdentityId::cor10, 0, Mode::numeric), DomainError);
  CHECK_THROWS_AS(reg.verify(IdentityId::thm2, 21, Mode::numeric), CapExceeded);
  CHECK_THROWS_AS(reg.verify(IdentityId::thm2, 6, Mode::exhaustive), CapExceeded);
  CHECK_THROWS_AS(reg.verify(IdentityId::thm1, 5, Mode::exhaustive), CapExceeded);
  CHECK_THROWS_AS(reg.verify(IdentityId::wrong_extensions, 5, Mode::exhaustive), CapExceeded);
  CHECK_THROWS_AS(reg.verify(IdentityId::thm9, 6, Mode::exhaustive), CapExceeded);
  // the range is validated before any index runs
  CHECK_THROWS_AS(reg.verify_range(IdentityId::thm2, 0, 21, Mode::numeric), CapExceeded);

  CHECK(reg.index_domain(IdentityId::cor10, Mode::numeric) == std::pair<std::uint64_t, std::uint64_t>{1, 20});
  CHECK(reg.index_domain(IdentityId::thm1, Mode::both) == std::pair<std::uint64_t, std::uint64_t>{0, 4});
  CHECK_FALSE(reg.index_domain(IdentityId::thm8, Mode::exhaustive).has_value());

  Limits small;
  small.max_path_length = 3;
  const Registry tight = Registry::standard(small);
  CHECK_FALSE(tight.index_domain(IdentityId::wrong_extensions, Mode::exhaustive).has_value());
  CHECK_THROWS_AS(tight.verify(IdentityId::wrong_extensions, 0, Mode::exhaustive), CapExceeded);
}

TEST_CASE("raised limits reach further") {
  Limits wide;
  wide.max_numeric_n = 40;
  CHECK(verify(IdentityId::thm1, 40, Mode::numeric, wide).passed);
}

TEST_CASE("parallel verify_range equals serial execution") {
  const Registry reg = Registry::standard();
  const auto serial = reg.verify_range(IdentityId::lemma6a, 0, 4, Mode::exhaustive, 1);
  const auto parallel = reg.verify_range(IdentityId::lemma6a, 0, 4, Mode::exhaustive, 4);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t k = 0; k < serial.size(); ++k) CHECK(serial[k].same_outcome(parallel[k]));
}

TEST_CASE("failures are collected with witnesses, not thrown") {
  Registry reg = Registry::standard();
  reg.set(IdentityId::thm2, Mode::numeric,
          CheckSpec{[](std::uint64_t n, const Limits&) {
                      CheckOutcome o{ExactCount(n), ExactCount(n == 2 ? 99 : n), n != 2, std::nullopt};
                      return o;
                    },
                    [](const Limits&) { return std::int64_t{20}; }, 0});
  const auto reports = reg.verify_range(IdentityId::thm2, 0, 4, Mode::numeric);
  REQUIRE(reports.size() == 5);
  for (const auto& r : reports) {
    CHECK(r.passed == (r.n != 2));
    CHECK(r.witness.has_value() == !r.passed);
  }
}

TEST_CASE("report JSON has the fixed field order") {
  const auto r = verify(IdentityId::thm2, 3, Mode::numeric);
  const auto j = to_json(r);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"identity", "n", "mode", "expected", "actual", "passed", "elapsed_ms"});
  CHECK(j["expected"] == "1280");
  CHECK(j["identity"] == "thm2");
  CHECK(j["elapsed_ms"].is_number());

  VerificationReport failed = r;
  failed.passed = false;
  failed.witness = Witness{"forced", {"UUDD"}};
  const auto jf = to_json(failed);
  CHECK(jf["witness"]["note"] == "forced");
  CHECK(jf["witness"]["paths"][0] == "UUDD");
}
