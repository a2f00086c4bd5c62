#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "sumcolour/stepup.hpp"

namespace sumcolour {

/// Well-order on basis indices {0..n-1}: i W j iff priority[i] < priority[j].
class WellOrder {
 public:
  /// Throws Error(InvalidArgument) unless priority is a permutation.
  explicit WellOrder(std::vector<std::size_t> priority);
  static WellOrder random(std::size_t n, std::uint64_t seed);

  std::size_t size() const { return priority_.size(); }
  std::size_t rank(std::size_t i) const { return priority_.at(i); }
  bool before(std::size_t i, std::size_t j) const { return rank(i) < rank(j); }
  const std::vector<std::size_t>& priority() const { return priority_; }

 private:
  std::vector<std::size_t> priority_;
};

/// Vector over an explicit finite basis: index -> nonzero coefficient.
using HVec = FinSeq;

/// Sorted support i_1 < ... < i_m; returns the 1-based position of the
/// W-greatest index, mod 2. psi(0) = 0. Throws Error(IndexOutOfRange) for
/// indices >= W.size().
std::uint8_t psi_support(const HVec& x, const WellOrder& W);

struct QuadrupleReport {
  bool separated = false;
  std::uint8_t psi_xy = 0;   // psi(b + x + y)
  std::uint8_t psi_wz = 0;   // psi(b + w + z)
  std::size_t left_xy = 0;   // support of b+x+y strictly left of i(y,l)
  std::size_t left_wz = 0;   // support of b+w+z strictly left of i(w,l)
};

/// Runs the four-element separation on a normalized family. `fixed` holds
/// the k-2 extra summands b = x_1 + ... + x_{k-2}. Throws
/// Error(PreconditionViolated) naming the first failed hypothesis:
/// "fixed-count", "membership", "distinct", "support-size", "separators",
/// "argmax-position", "slot-pattern", "shared-signs", "order-xy",
/// "order-wz", "fixed-order", "fixed-W-below".
QuadrupleReport quadruple_check(std::span<const HVec> family, const HVec& x, const HVec& y,
                                const HVec& w, const HVec& z, const WellOrder& W, std::uint64_t k,
                                std::span<const HVec> fixed);

struct FamilySpec {
  std::size_t n = 0;          // index space {0..n-1}
  std::size_t m = 0;          // support size
  std::size_t l = 1;          // 1-based slot holding each member's W-maximum
  std::set<std::size_t> shared;  // 1-based slots shared by all members
  std::uint64_t k = 2;
  std::size_t count = 0;
};

/// Family in the normalized position: slots occupy consecutive index
/// ranges (so the separators exist), shared slots use one index with a
/// sign-constant coefficient, the other slots use distinct indices, and
/// every member's W-maximum sits in slot l. Members are ordered by their
/// slot-l index. Throws Error(PreconditionViolated) when l is shared or
/// out of range, and Error(TooSmallIndexSpace) when the index space (under
/// this W) cannot host the family.
std::vector<HVec> family_generator(const FamilySpec& shape, std::uint64_t seed, const WellOrder& W);

/// {e_i + e_j} for the `count` smallest i > j with i W j. All k-fold sums of
/// distinct members have psi = 1 (j is both the natural minimum and the
/// W-maximum of their support). Throws Error(NotEnoughPredecessors).
std::vector<HVec> positive_family(const WellOrder& W, std::size_t j, std::uint64_t k, std::size_t count);

}  // namespace sumcolour
