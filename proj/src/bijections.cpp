#include "catconv/bijections.hpp"

#include <algorithm>

#include "catconv/errors.hpp"

namespace catconv {
namespace {

std::vector<Step> wrapped(Step open, const Path& inner, Step close) {
  std::vector<Step> steps;
  steps.reserve(inner.length() + 2);
  steps.push_back(open);
  steps.insert(steps.end(), inner.steps().begin(), inner.steps().end());
  steps.push_back(close);
  return steps;
}

void append(std::vector<Step>& out, const Path& p) {
  out.insert(out.end(), p.steps().begin(), p.steps().end());
}

std::string pair_str(const BalancedPath& a, const BalancedPath& b) {
  return "(" + a.str() + ") (" + b.str() + ")";
}

}  // namespace

DyckSplit dyck_split(const DyckPath& d) {
  const Path& p = d.path();
  if (p.empty()) throw DomainError("cannot split the empty Dyck path", "");
  int h = 0;
  std::size_t first_return = 0;
  for (std::size_t t = 0; t < p.length(); ++t) {
    h += delta(p[t]);
    if (h == 0) {
      first_return = t + 1;
      break;
    }
  }
  return DyckSplit{DyckPath(p.slice(1, first_return - 1)), DyckPath(p.slice(first_return, p.length()))};
}

std::vector<Excursion> excursions(const BalancedPath& b) {
  std::vector<Excursion> out;
  const Path& p = b.path();
  int h = 0;
  std::size_t start = 0;
  for (std::size_t t = 0; t < p.length(); ++t) {
    h += delta(p[t]);
    if (h == 0) {
      out.push_back({start, t + 1, p[start] == Step::Up ? Sign::Plus : Sign::Minus});
      start = t + 1;
    }
  }
  return out;
}

SignedSeq chi(const BalancedPath& b) {
  const Path& p = b.path();
  std::vector<SignedDyckPath> items;
  for (const Excursion& ex : excursions(b)) {
    Path inner = p.slice(ex.start + 1, ex.end - 1);
    if (ex.sign == Sign::Minus) inner = reflect(inner);
    items.push_back({ex.sign, DyckPath(std::move(inner))});
  }
  return SignedSeq(std::move(items));
}

BalancedPath chi_inv(const SignedSeq& s) {
  std::vector<Step> steps;
  steps.reserve(2 * s.weight());
  for (const SignedDyckPath& item : s.items()) {
    if (item.sign == Sign::Plus) {
      append(steps, Path(wrapped(Step::Up, item.path.path(), Step::Down)));
    } else {
      append(steps, Path(wrapped(Step::Down, reflect(item.path.path()), Step::Up)));
    }
  }
  return BalancedPath(Path(std::move(steps)));
}

// Iterative: the recursion depth of the textbook form is bounded only by the parameter.
std::vector<PsiStep> psi_trace(const DyckPath& d) {
  if (d.parameter() % 2 != 0) throw DomainError("psi needs an even parameter", d.str());
  std::vector<PsiStep> trace;
  DyckPath current = d;
  std::size_t offset = 0;
  while (!current.path().empty()) {
    DyckSplit split = dyck_split(current);
    const std::size_t left_offset = offset + 1;
    const std::size_t right_offset = offset + 2 + split.left.path().length();
    PsiStep step{offset, split, {}, 0};
    if (split.left.parameter() % 2 == 1) {
      step.emitted = {Sign::Minus, split.left};
      step.emitted_offset = left_offset;
      current = split.right;
      offset = right_offset;
    } else {
      step.emitted = {Sign::Plus, split.right};
      step.emitted_offset = right_offset;
      current = split.left;
      offset = left_offset;
    }
    trace.push_back(std::move(step));
  }
  return trace;
}

SignedSeq psi(const DyckPath& d) {
  std::vector<SignedDyckPath> items;
  for (PsiStep& step : psi_trace(d)) items.push_back(std::move(step.emitted));
  return SignedSeq(std::move(items));
}

DyckPath psi_inv(const SignedSeq& s) {
  for (const SignedDyckPath& item : s.items())
    if (item.parameter() % 2 == 0) throw DomainError("psi_inv needs odd-parameter items", s.str());
  Path tail;
  for (auto it = s.items().rbegin(); it != s.items().rend(); ++it) {
    const Path& p = it->path.path();
    std::vector<Step> steps;
    steps.reserve(p.length() + tail.length() + 2);
    steps.push_back(Step::Up);
    append(steps, it->sign == Sign::Minus ? p : tail);
    steps.push_back(Step::Down);
    append(steps, it->sign == Sign::Minus ? tail : p);
    tail = Path(std::move(steps));
  }
  return DyckPath(std::move(tail));
}

BalancedPath even_zeroed_from_dyck(const DyckPath& d) { return chi_inv(psi(d)); }

DyckPath dyck_from_even_zeroed(const BalancedPath& b) {
  if (b.parameter() % 2 != 0) throw DomainError("expected an even parameter", b.str());
  if (!is_even_zeroed(b.path())) throw DomainError("path is not even-zeroed", b.str());
  return psi_inv(chi(b));
}

InterceptSplit split_at_first_2mod4_intercept(const BalancedPath& p) {
  for (std::size_t t : x_intercepts(p.path())) {
    if (t % 4 == 2) {
      return InterceptSplit{BalancedPath(p.path().slice(0, t)),
                            BalancedPath(p.path().slice(t, p.path().length()))};
    }
  }
  throw DomainError("no x-intercept of the form 4t+2", p.str());
}

namespace {

bool has_2mod4_intercept(const Path& p) {
  const auto xs = x_intercepts(p);
  return std::any_of(xs.begin(), xs.end(), [](std::size_t t) { return t % 4 == 2; });
}

}  // namespace

PairE::PairE(BalancedPath first, BalancedPath second)
    : first_(std::move(first)), second_(std::move(second)), parameter_sum_(first_.parameter() + second_.parameter()) {
  if (first_.parameter() % 2 != 0 || second_.parameter() % 2 != 0)
    throw DomainError("E pair needs even parameters", str());
  if (!has_2mod4_intercept(first_.path()))
    throw DomainError("E pair first path needs an x-intercept 4t+2", str());
}

std::string PairE::str() const { return pair_str(first_, second_); }

PairO::PairO(BalancedPath first, BalancedPath second)
    : first_(std::move(first)), second_(std::move(second)), parameter_sum_(first_.parameter() + second_.parameter()) {
  if (first_.parameter() % 2 != 1 || second_.parameter() % 2 != 1)
    throw DomainError("O pair needs odd parameters", str());
}

std::string PairO::str() const { return pair_str(first_, second_); }

PairO theorem9_forward(const PairE& e) {
  InterceptSplit cut = split_at_first_2mod4_intercept(e.first());
  return PairO(BalancedPath(concat(cut.head.path(), e.second().path())), std::move(cut.tail));
}

PairE theorem9_backward(const PairO& o) {
  InterceptSplit cut = split_at_first_2mod4_intercept(o.first());
  return PairE(BalancedPath(concat(cut.head.path(), o.second().path())), std::move(cut.tail));
}

}  // namespace catconv
