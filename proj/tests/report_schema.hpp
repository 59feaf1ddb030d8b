#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace catconv::testing {

inline bool is_decimal(const nlohmann::ordered_json& v) {
  if (!v.is_string()) return false;
  const auto& s = v.get_ref<const std::string&>();
  if (s.empty() || (s.size() > 1 && s[0] == '0')) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

// Returns an empty string when `j` is a well-formed report object, otherwise a reason.
inline std::string report_schema_violation(const nlohmann::ordered_json& j) {
  if (!j.is_object()) return "not an object";
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  const std::vector<std::string> plain = {"identity", "n", "mode", "expected", "actual", "passed", "elapsed_ms"};
  const std::vector<std::string> with_witness = {"identity", "n",       "mode",   "expected",
                                                 "actual",   "passed", "witness", "elapsed_ms"};
  if (keys != plain && keys != with_witness) return "unexpected keys or key order";
  if (!j["identity"].is_string()) return "identity is not a string";
  if (!j["n"].is_number_unsigned()) return "n is not an unsigned integer";
  const auto mode = j["mode"];
  if (mode != "numeric" && mode != "exhaustive" && mode != "both") return "bad mode";
  if (!is_decimal(j["expected"]) || !is_decimal(j["actual"])) return "counts are not decimal strings";
  if (!j["passed"].is_boolean()) return "passed is not a boolean";
  if (!j["elapsed_ms"].is_number() || j["elapsed_ms"].get<double>() < 0) return "bad elapsed_ms";
  if (j.contains("witness")) {
    const auto& w = j["witness"];
    if (!w.is_object() || !w["note"].is_string() || !w["paths"].is_array()) return "bad witness";
    for (const auto& p : w["paths"])
      if (!p.is_string() || p.get<std::string>().find_first_not_of("UD") != std::string::npos) return "bad witness path";
  }
  if (j["passed"].get<bool>() == j.contains("witness")) return "witness present iff failed is violated";
  return {};
}

}  // namespace catconv::testing
