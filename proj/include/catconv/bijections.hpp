#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "catconv/path.hpp"

namespace catconv {

/// First-return decomposition D = U L D R.
struct DyckSplit {
  DyckPath left;
  DyckPath right;

  friend bool operator==(const DyckSplit&, const DyckSplit&) = default;
};

/// Throws DomainError on the empty path.
DyckSplit dyck_split(const DyckPath& d);

/// Maximal subpath between consecutive x-intercepts: steps [start, end).
struct Excursion {
  std::size_t start = 0;
  std::size_t end = 0;
  Sign sign = Sign::Plus;  // Minus when the excursion lies below the axis
};

std::vector<Excursion> excursions(const BalancedPath& b);

/// Cuts `b` at the axis into signed Dyck paths; chi of the empty path is [].
SignedSeq chi(const BalancedPath& b);
/// Inverse of chi; the parameter of the result equals the weight of `s`.
BalancedPath chi_inv(const SignedSeq& s);

/// One step of the psi recursion applied to the subpath starting at `offset`
/// of the original Dyck path.
struct PsiStep {
  std::size_t offset = 0;
  DyckSplit split;
  SignedDyckPath emitted;       // -L when par(L) is odd, otherwise +R
  std::size_t emitted_offset = 0;  // where the emitted path sits in the original
};

/// Sequence of splits performed by psi. Throws DomainError on odd parameter.
std::vector<PsiStep> psi_trace(const DyckPath& d);
/// Even-parameter Dyck path to a sequence of odd-parameter signed Dyck paths.
SignedSeq psi(const DyckPath& d);
/// Throws DomainError if any item has even parameter.
DyckPath psi_inv(const SignedSeq& s);

/// chi_inv(psi(d)): even-parameter Dyck path to an even-zeroed balanced path.
BalancedPath even_zeroed_from_dyck(const DyckPath& d);
/// psi_inv(chi(b)). Throws DomainError unless b has even parameter and is even-zeroed.
DyckPath dyck_from_even_zeroed(const BalancedPath& b);

struct InterceptSplit {
  BalancedPath head;  // ends at the leftmost x-intercept of the form 4t + 2
  BalancedPath tail;
};

/// Throws DomainError when `p` has no x-intercept congruent to 2 mod 4.
InterceptSplit split_at_first_2mod4_intercept(const BalancedPath& p);

/// Pair of even-parameter balanced paths whose first component touches the
/// axis at some 4t + 2.
class PairE {
 public:
  /// Throws DomainError on a violated invariant.
  PairE(BalancedPath first, BalancedPath second);

  const BalancedPath& first() const noexcept { return first_; }
  const BalancedPath& second() const noexcept { return second_; }
  std::size_t parameter_sum() const noexcept { return parameter_sum_; }
  std::string str() const;

  friend bool operator==(const PairE& a, const PairE& b) {
    return a.first_ == b.first_ && a.second_ == b.second_;
  }

 private:
  BalancedPath first_;
  BalancedPath second_;
  std::size_t parameter_sum_;
};

/// Pair of odd-parameter balanced paths.
class PairO {
 public:
  PairO(BalancedPath first, BalancedPath second);

  const BalancedPath& first() const noexcept { return first_; }
  const BalancedPath& second() const noexcept { return second_; }
  std::size_t parameter_sum() const noexcept { return parameter_sum_; }
  std::string str() const;

  friend bool operator==(const PairO& a, const PairO& b) {
    return a.first_ == b.first_ && a.second_ == b.second_;
  }

 private:
  BalancedPath first_;
  BalancedPath second_;
  std::size_t parameter_sum_;
};

/// (E1, E2) -> (L E2, R) where E1 = L R is cut at its leftmost 4t+2 intercept.
PairO theorem9_forward(const PairE& e);
/// (O1, O2) -> (L O2, E2) where O1 = L E2 is cut at its leftmost 4t+2 intercept.
PairE theorem9_backward(const PairO& o);

}  // namespace catconv
