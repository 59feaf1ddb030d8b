#include "catconv/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "catconv/bijections.hpp"
#include "catconv/enumerate.hpp"
#include "catconv/errors.hpp"
#include "catconv/render.hpp"
#include "catconv/triangle.hpp"

namespace catconv::cli {
namespace {

struct VerifyArgs {
  std::string identity;
  std::uint64_t n = 0;
  std::string range;
  std::string mode = "numeric";
  std::string format = "table";
  unsigned threads = 0;
};

struct EnumerateArgs {
  std::string family;
  std::size_t n = 0;
  std::size_t limit = 0;  // 0 = unlimited
};

struct DecomposeArgs {
  std::string map;
  std::vector<std::string> inputs;
  bool invert = false;
};

struct TriangleArgs {
  std::size_t rows = 0;
  std::string format = "table";
};

struct RenderArgs {
  std::string what;
  std::string input;
  std::string map = "chi";
  std::size_t rows = 0;
  std::string out;
  bool omit_forbidden = false;
};

// "UUDD", "(UUDD)" and "()" are all accepted as path tokens.
Path parse_path_token(std::string_view token) {
  if (token.size() >= 2 && token.front() == '(' && token.back() == ')') token = token.substr(1, token.size() - 2);
  return parse_path(token);
}

std::string pair_text(const BalancedPath& a, const BalancedPath& b) { return "(" + a.str() + ") (" + b.str() + ")"; }

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  const auto parse_u64 = [&](std::string_view part) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size())
      throw ParseError("invalid range \"" + text + "\"", 0);
    return v;
  };
  if (dots == std::string::npos) throw ParseError("range must look like A..B, got \"" + text + "\"", 0);
  const std::string_view view(text);
  const auto from = parse_u64(view.substr(0, dots));
  const auto to = parse_u64(view.substr(dots + 2));
  if (from > to) throw ParseError("range start exceeds end in \"" + text + "\"", 0);
  return {from, to};
}

std::size_t env_or(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  return static_cast<std::size_t>(std::strtoull(raw, nullptr, 10));
}

EnumerationCaps enumeration_caps_from_environment() {
  EnumerationCaps caps;
  caps.max_length = env_or("CATCONV_ENUM_MAX_LENGTH", caps.max_length);
  caps.max_parameter = env_or("CATCONV_ENUM_MAX_PARAMETER", caps.max_parameter);
  return caps;
}

std::string fixed_ms(const VerificationReport& r) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << r.elapsed.count();
  return os.str();
}

void print_table(const std::vector<VerificationReport>& reports, std::ostream& out) {
  const std::vector<std::string> header = {"identity", "n", "mode", "expected", "actual", "result", "ms"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : reports) {
    rows.push_back({std::string(to_string(r.identity)), std::to_string(r.n), std::string(to_string(r.mode)),
                    r.expected.to_string(), r.actual.to_string(), r.passed ? "PASS" : "FAIL", fixed_ms(r)});
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
  }
  const auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      const bool numeric_column = c == 1 || c == 3 || c == 4 || c == 6;
      out << (c ? "  " : "") << (numeric_column ? std::right : std::left) << std::setw(static_cast<int>(width[c]))
          << row[c];
    }
    out << std::left << '\n';
  };
  emit(header);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    emit(rows[k]);
    if (const auto& w = reports[k].witness) {
      out << "    witness: " << w->note;
      for (const auto& p : w->paths) out << " [" << p << "]";
      out << '\n';
    }
  }
}

void print_csv(const std::vector<VerificationReport>& reports, std::ostream& out) {
  out << "identity,n,mode,expected,actual,passed,elapsed_ms\n";
  for (const auto& r : reports) {
    out << to_string(r.identity) << ',' << r.n << ',' << to_string(r.mode) << ',' << r.expected << ',' << r.actual
        << ',' << (r.passed ? "true" : "false") << ',' << fixed_ms(r) << '\n';
  }
}

int run_verify(const VerifyArgs& a, const Registry& registry, std::ostream& out) {
  const Mode mode = *parse_mode(a.mode);
  std::uint64_t from = a.n;
  std::uint64_t to = a.n;
  if (!a.range.empty()) std::tie(from, to) = parse_range(a.range);

  std::vector<std::pair<IdentityId, std::pair<std::uint64_t, std::uint64_t>>> plan;
  if (a.identity == "all") {
    // every identity implementing the mode, clipped to its own index domain
    for (IdentityId id : kAllIdentities) {
      const auto domain = registry.index_domain(id, mode);
      if (!domain) continue;
      const std::uint64_t lo = std::max(from, domain->first);
      const std::uint64_t hi = std::min(to, domain->second);
      if (lo <= hi) plan.push_back({id, {lo, hi}});
    }
  } else {
    const auto id = parse_identity(a.identity);
    if (!id) throw ParseError("unknown identity \"" + a.identity + "\"", 0);
    for (std::uint64_t n = from; n <= to; ++n) registry.check_domain(*id, n, mode);
    plan.push_back({*id, {from, to}});
  }

  std::vector<VerificationReport> reports;
  for (const auto& [id, span] : plan) {
    auto part = registry.verify_range(id, span.first, span.second, mode, a.threads);
    reports.insert(reports.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }

  if (a.format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    out << arr.dump(2) << '\n';
  } else if (a.format == "csv") {
    print_csv(reports, out);
  } else {
    print_table(reports, out);
  }
  const bool all_passed = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
  return all_passed ? kOk : kCheckFailed;
}

int run_enumerate(const EnumerateArgs& a, std::ostream& out) {
  const EnumerationCaps caps = enumeration_caps_from_environment();
  std::size_t emitted = 0;
  const auto emit = [&](const Path& p) {
    if (a.limit != 0 && emitted >= a.limit) return false;
    out << p.str() << '\n';
    ++emitted;
    return true;
  };
  if (a.family == "paths") {
    for (const Path& p : enumerate_paths(a.n, caps))
      if (!emit(p)) break;
  } else if (a.family == "balanced") {
    for (const BalancedPath& b : enumerate_balanced(a.n, caps))
      if (!emit(b.path())) break;
  } else if (a.family == "dyck") {
    for (const DyckPath& d : enumerate_dyck(a.n, caps))
      if (!emit(d.path())) break;
  } else {
    for (const BalancedPath& b : enumerate_balanced(2 * a.n, caps)) {
      if (!is_even_zeroed(b.path())) continue;
      if (!emit(b.path())) break;
    }
  }
  return kOk;
}

std::string joined(const std::vector<std::string>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " " : "") + parts[i];
  return s;
}

int run_decompose(const DecomposeArgs& a, std::ostream& out) {
  if (a.map == "theorem9") {
    if (a.inputs.size() != 2) throw ParseError("theorem9 takes exactly two paths", 0);
    BalancedPath first(parse_path_token(a.inputs[0]));
    BalancedPath second(parse_path_token(a.inputs[1]));
    if (a.invert) {
      const PairE e = theorem9_backward(PairO(std::move(first), std::move(second)));
      out << pair_text(e.first(), e.second()) << '\n';
    } else {
      const PairO o = theorem9_forward(PairE(std::move(first), std::move(second)));
      out << pair_text(o.first(), o.second()) << '\n';
    }
    return kOk;
  }
  if (a.invert) {
    const SignedSeq seq = parse_signed_seq(joined(a.inputs));
    out << (a.map == "chi" ? chi_inv(seq).str() : psi_inv(seq).str()) << '\n';
    return kOk;
  }
  for (const auto& token : a.inputs) {
    Path p = parse_path_token(token);
    out << (a.map == "chi" ? chi(BalancedPath(std::move(p))) : psi(DyckPath(std::move(p)))).str() << '\n';
  }
  return kOk;
}

int run_triangle(const TriangleArgs& a, std::ostream& out) {
  const TriangleGrid grid = triangle(a.rows);
  if (a.format == "json") {
    out << to_json(grid).dump(2) << '\n';
    return kOk;
  }
  for (std::size_t t = 0; t <= grid.depth(); ++t) {
    out << "t=" << t << ':';
    for (const ExactCount& c : grid.row(t)) out << ' ' << c;
    out << '\n';
  }
  return kOk;
}

int run_render(const RenderArgs& a, std::ostream& out, std::ostream& err) {
  std::string svg;
  if (a.what == "triangle") {
    svg = render_triangle(a.rows, TriangleRenderOptions{a.omit_forbidden});
  } else {
    svg = render_decomposition(parse_path_token(a.input), a.map == "psi" ? DecompositionMap::psi : DecompositionMap::chi);
  }
  if (a.out.empty()) {
    out << svg;
    return kOk;
  }
  std::ofstream file(a.out, std::ios::binary);
  if (!file || !(file << svg) || !file.flush()) {
    err << "error: cannot write " << a.out << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return run(args, out, err, Registry::standard(Limits::from_environment()));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Registry& registry) {
  CLI::App app{"Exact lattice-path toolkit for even-index Catalan convolutions", "catconv"};
  app.require_subcommand(1, 1);

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Check identities at an index or range");
  verify_cmd->add_option("--identity", va.identity, "Identity id, or 'all'")->required();
  auto* n_opt = verify_cmd->add_option("--n", va.n, "Single index");
  auto* range_opt = verify_cmd->add_option("--range", va.range, "Inclusive index range A..B");
  n_opt->excludes(range_opt);
  verify_cmd->add_option("--mode", va.mode)->check(CLI::IsMember({"numeric", "exhaustive", "both"}));
  verify_cmd->add_option("--format", va.format)->check(CLI::IsMember({"json", "csv", "table"}));
  verify_cmd->add_option("--threads", va.threads, "Worker threads (0 = hardware)");

  EnumerateArgs ea;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List paths of a family in lexicographic order");
  enumerate_cmd->add_option("--family", ea.family)
      ->required()
      ->check(CLI::IsMember({"paths", "balanced", "dyck", "even-zeroed"}));
  enumerate_cmd->add_option("--n", ea.n, "Length for 'paths', parameter otherwise")->required();
  enumerate_cmd->add_option("--limit", ea.limit, "Stop after this many paths");

  DecomposeArgs da;
  auto* decompose_cmd = app.add_subcommand("decompose", "Apply chi, psi or the theorem9 splice");
  decompose_cmd->add_option("--map", da.map)->required()->check(CLI::IsMember({"chi", "psi", "theorem9"}));
  decompose_cmd->add_option("--input", da.inputs, "UD-string(s), or a SignedSeq with --invert")
      ->required()
      ->allow_extra_args()
      ->expected(1, -1);
  decompose_cmd->add_flag("--invert", da.invert, "Apply the inverse map");
  // SignedSeq items such as "-(UD)" look like short options to the parser
  decompose_cmd->allow_extras();

  TriangleArgs ta;
  auto* triangle_cmd = app.add_subcommand("triangle", "Even-zeroed path counts per node, rows 0..4N");
  triangle_cmd->add_option("--rows", ta.rows, "N")->required();
  triangle_cmd->add_option("--format", ta.format)->check(CLI::IsMember({"table", "json"}));

  RenderArgs ra;
  auto* render_cmd = app.add_subcommand("render", "Write an SVG drawing");
  render_cmd->add_option("--what", ra.what)->required()->check(CLI::IsMember({"decomposition", "triangle"}));
  render_cmd->add_option("--input", ra.input, "Path for --what decomposition");
  render_cmd->add_option("--map", ra.map)->check(CLI::IsMember({"chi", "psi"}));
  render_cmd->add_option("--rows", ra.rows, "N for --what triangle");
  render_cmd->add_option("--out", ra.out, "Output file (default stdout)");
  render_cmd->add_flag("--omit-forbidden", ra.omit_forbidden, "Leave out nodes at height 0 off multiples of 4");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (verify_cmd->parsed() && n_opt->count() == 0 && range_opt->count() == 0)
      throw CLI::ValidationError("verify needs --n or --range");
    if (render_cmd->parsed() && ra.what == "decomposition" && render_cmd->count("--input") == 0)
      throw CLI::ValidationError("render --what decomposition needs --input");
    if (render_cmd->parsed() && ra.what == "triangle" && render_cmd->count("--rows") == 0)
      throw CLI::ValidationError("render --what triangle needs --rows");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (decompose_cmd->parsed()) {
      for (const auto& extra : decompose_cmd->remaining()) da.inputs.push_back(extra);
    }
    if (verify_cmd->parsed()) return run_verify(va, registry, out);
    if (enumerate_cmd->parsed()) return run_enumerate(ea, out);
    if (decompose_cmd->parsed()) return run_decompose(da, out);
    if (triangle_cmd->parsed()) return run_triangle(ta, out);
    return run_render(ra, out, err);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kResource;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace catconv::cli
