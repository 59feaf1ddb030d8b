#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "catconv/bijections.hpp"
#include "catconv/counting.hpp"
#include "catconv/enumerate.hpp"
#include "catconv/errors.hpp"
#include "catconv/render.hpp"
#include "catconv/triangle.hpp"
#include "catconv/verify.hpp"

namespace py = pybind11;
using namespace catconv;

namespace {

// Counts cross the boundary as Python ints via their decimal form.
py::int_ to_py(const ExactCount& c) { return py::int_(py::str(c.to_string())); }

using PyItem = std::pair<std::string, std::string>;  // ("+" | "-", UD-string)

std::vector<PyItem> to_py(const SignedSeq& s) {
  std::vector<PyItem> out;
  for (const auto& item : s.items()) out.emplace_back(std::string(1, to_char(item.sign)), item.path.str());
  return out;
}

SignedSeq from_py(const std::vector<PyItem>& items) {
  std::vector<SignedDyckPath> out;
  for (const auto& [sign, path] : items) {
    if (sign != "+" && sign != "-") throw ParseError("sign must be '+' or '-'", 0);
    out.push_back({sign == "+" ? Sign::Plus : Sign::Minus, DyckPath(parse_path(path))});
  }
  return SignedSeq(std::move(out));
}

template <typename S>
std::vector<std::string> strings(S&& stream) {
  std::vector<std::string> out;
  for (const auto& p : stream) out.push_back(p.str());
  return out;
}

py::dict report_dict(const VerificationReport& r) {
  py::dict d;
  d["identity"] = std::string(to_string(r.identity));
  d["n"] = r.n;
  d["mode"] = std::string(to_string(r.mode));
  d["expected"] = to_py(r.expected);
  d["actual"] = to_py(r.actual);
  d["passed"] = r.passed;
  if (r.witness) {
    py::dict w;
    w["note"] = r.witness->note;
    w["paths"] = r.witness->paths;
    d["witness"] = w;
  } else {
    d["witness"] = py::none();
  }
  d["elapsed_ms"] = r.elapsed.count();
  return d;
}

IdentityId identity_arg(const std::string& name) {
  const auto id = parse_identity(name);
  if (!id) throw ParseError("unknown identity \"" + name + "\"", 0);
  return *id;
}

Mode mode_arg(const std::string& name) {
  const auto m = parse_mode(name);
  if (!m) throw ParseError("unknown mode \"" + name + "\"", 0);
  return *m;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact lattice-path toolkit for even-index Catalan convolutions";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());
  py::register_exception<OverflowError>(m, "OverflowError", base.ptr());
  py::register_exception<UnsupportedMode>(m, "UnsupportedMode", base.ptr());

  // paths
  m.def("x_intercepts", [](const std::string& p) { return x_intercepts(parse_path(p)); });
  m.def("is_even_zeroed", [](const std::string& p) { return is_even_zeroed(parse_path(p)); });
  m.def("is_dyck", [](const std::string& p) { return is_dyck(parse_path(p)); });
  m.def("parameter", [](const std::string& p) { return BalancedPath(parse_path(p)).parameter(); });
  m.def("reflect", [](const std::string& p) { return reflect(parse_path(p)).str(); });
  m.def("enumerate_paths", [](std::size_t length) { return strings(enumerate_paths(length)); });
  m.def("enumerate_balanced", [](std::size_t n) { return strings(enumerate_balanced(n)); });
  m.def("enumerate_dyck", [](std::size_t n) { return strings(enumerate_dyck(n)); });

  // counting
  m.def("binom", [](std::uint64_t n, std::int64_t k) { return to_py(binom(n, k)); });
  m.def("catalan", [](std::uint64_t n) { return to_py(catalan(n)); });
  m.def("central_binom", [](std::uint64_t n) { return to_py(central_binom(n)); });
  m.def("shapiro_lhs", [](std::uint64_t n) { return to_py(shapiro_lhs(n)); });
  m.def("mixed_lhs", [](std::uint64_t n) { return to_py(mixed_lhs(n)); });
  m.def("alternating_lhs", [](std::uint64_t n) { return to_py(alternating_lhs(n)); });
  m.def("triple_conv", [](std::uint64_t n) { return to_py(triple_conv(n)); });
  m.def("z_recursion", [](std::uint64_t last) {
    py::list out;
    for (const auto& z : z_recursion(last)) out.append(to_py(z));
    return out;
  });
  m.def("corollary10_sides", [](std::uint64_t n) {
    const auto s = corollary10_sides(n);
    return py::make_tuple(to_py(s.left), to_py(s.right));
  });

  // bijections; signed sequences are lists of (sign, path) tuples
  m.def("chi", [](const std::string& p) { return to_py(chi(BalancedPath(parse_path(p)))); });
  m.def("chi_inv", [](const std::vector<PyItem>& s) { return chi_inv(from_py(s)).str(); });
  m.def("psi", [](const std::string& p) { return to_py(psi(DyckPath(parse_path(p)))); });
  m.def("psi_inv", [](const std::vector<PyItem>& s) { return psi_inv(from_py(s)).str(); });
  m.def("even_zeroed_from_dyck", [](const std::string& p) { return even_zeroed_from_dyck(DyckPath(parse_path(p))).str(); });
  m.def("dyck_from_even_zeroed",
        [](const std::string& p) { return dyck_from_even_zeroed(BalancedPath(parse_path(p))).str(); });
  m.def("theorem9_forward", [](const std::string& a, const std::string& b) {
    const PairO o = theorem9_forward(PairE(BalancedPath(parse_path(a)), BalancedPath(parse_path(b))));
    return py::make_tuple(o.first().str(), o.second().str());
  });
  m.def("theorem9_backward", [](const std::string& a, const std::string& b) {
    const PairE e = theorem9_backward(PairO(BalancedPath(parse_path(a)), BalancedPath(parse_path(b))));
    return py::make_tuple(e.first().str(), e.second().str());
  });

  // verification
  m.def("identities", [] {
    std::vector<std::string> out;
    for (IdentityId id : kAllIdentities) out.emplace_back(to_string(id));
    return out;
  });
  m.def(
      "verify",
      [](const std::string& identity, std::uint64_t n, const std::string& mode) {
        std::optional<VerificationReport> r;
        {
          py::gil_scoped_release release;
          r = verify(identity_arg(identity), n, mode_arg(mode));
        }
        return report_dict(*r);
      },
      py::arg("identity"), py::arg("n"), py::arg("mode") = "numeric");
  m.def(
      "verify_range",
      [](const std::string& identity, std::uint64_t from, std::uint64_t to, const std::string& mode) {
        std::vector<VerificationReport> reports;
        {
          py::gil_scoped_release release;
          reports = verify_range(identity_arg(identity), from, to, mode_arg(mode));
        }
        py::list out;
        for (const auto& r : reports) out.append(report_dict(r));
        return out;
      },
      py::arg("identity"), py::arg("n_from"), py::arg("n_to"), py::arg("mode") = "numeric");
  m.def("triangle", [](std::size_t blocks) {
    const TriangleGrid grid = triangle(blocks);
    py::list rows;
    for (std::size_t t = 0; t <= grid.depth(); ++t) {
      py::list row;
      for (const auto& c : grid.row(t)) row.append(to_py(c));
      rows.append(row);
    }
    return rows;
  });

  // rendering
  m.def(
      "render_decomposition",
      [](const std::string& p, const std::string& map) {
        if (map != "chi" && map != "psi") throw ParseError("map must be 'chi' or 'psi'", 0);
        return render_decomposition(parse_path(p), map == "psi" ? DecompositionMap::psi : DecompositionMap::chi);
      },
      py::arg("path"), py::arg("map") = "chi");
  m.def(
      "render_triangle",
      [](std::size_t blocks, bool omit_forbidden) { return render_triangle(blocks, {omit_forbidden}); },
      py::arg("blocks"), py::arg("omit_forbidden") = false);
}
