#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sumcolour/rational.hpp"

namespace sumcolour {

/// Band index j of q for the base k^(1/u): the unique j with
/// k^j <= q^u < k^(j+1). Exact integer comparisons only.
using BandIndex = std::int64_t;

/// Throws Error(NonPositiveInput) for q <= 0 and Error(InvalidArgument)
/// for k < 2 or u < 1.
BandIndex flog(std::uint64_t k, unsigned u, const Rational& q);

/// Open interval (lo, hi), lo < hi.
struct Interval {
  Rational lo;
  Rational hi;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of open intervals with rational endpoints, stored sorted and
/// pairwise disjoint. Intervals that only touch at an endpoint stay separate,
/// since the shared endpoint is not a member.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> intervals);

  static IntervalSet open(const Rational& lo, const Rational& hi);

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  std::size_t size() const { return intervals_.size(); }

  bool contains(const Rational& q) const;
  /// [lo, hi] lies inside one component.
  bool contains_closed(const Rational& lo, const Rational& hi) const;
  /// (lo, hi) lies inside one component.
  bool contains_open(const Rational& lo, const Rational& hi) const;

  IntervalSet transform(const Rational& scale, const Rational& shift) const;
  IntervalSet intersect(const IntervalSet& other) const;
  IntervalSet unite(const IntervalSet& other) const;
  /// Removes finitely many points by splitting the intervals containing them.
  IntervalSet remove_points(std::span<const Rational> points) const;

  Rational length() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  const Interval* component_of(const Rational& q) const;

  std::vector<Interval> intervals_;
};

/// {scale*z + shift : z in Z}. Throws Error(ZeroScale) when scale == 0.
IntervalSet transform(const IntervalSet& z, const Rational& scale, const Rational& shift);
IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);
bool contains(const IntervalSet& z, const Rational& q);

/// Y = -x/k + X; every k-fold sum over Y is -x plus the matching sum over X.
std::vector<Rational> translate_witness(std::span<const Rational> xs, const Rational& x,
                                        std::uint64_t k);

}  // namespace sumcolour
