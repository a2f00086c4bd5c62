#include "sumcolour/exact_core.hpp"

#include <algorithm>

#include "sumcolour/errors.hpp"

namespace sumcolour {

namespace {

// k^j <= a/b for a, b > 0.
bool band_at_most(const Integer& k, std::int64_t j, const Integer& a, const Integer& b) {
  if (j >= 0) return pow(k, static_cast<unsigned long>(j)) * b <= a;
  return b <= a * pow(k, static_cast<unsigned long>(-j));
}

}  // namespace

BandIndex flog(std::uint64_t k, unsigned u, const Rational& q) {
  if (k < 2) throw Error(Errc::InvalidArgument, "flog base k must be >= 2");
  if (u < 1) throw Error(Errc::InvalidArgument, "flog root u must be >= 1");
  if (q.sign() <= 0) throw Error(Errc::NonPositiveInput, "flog of " + q.str());

  const Integer base = from_u64(k);
  const Integer a = pow(q.num(), u);
  const Integer b = pow(q.den(), u);

  // Bracket [lo, hi) with band_at_most(lo) true and band_at_most(hi) false.
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  if (band_at_most(base, 0, a, b)) {
    std::int64_t step = 1;
    while (band_at_most(base, lo + step, a, b)) {
      lo += step;
      step *= 2;
    }
    hi = lo + step;
  } else {
    std::int64_t step = 1;
    while (!band_at_most(base, hi - step, a, b)) {
      hi -= step;
      step *= 2;
    }
    lo = hi - step;
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (band_at_most(base, mid, a, b)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

IntervalSet::IntervalSet(std::vector<Interval> intervals) {
  for (const auto& iv : intervals) {
    if (!(iv.lo < iv.hi)) {
      throw Error(Errc::InvalidArgument, "interval (" + iv.lo.str() + "," + iv.hi.str() + ") is empty");
    }
  }
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  for (auto& iv : intervals) {
    if (!intervals_.empty() && iv.lo < intervals_.back().hi) {
      if (intervals_.back().hi < iv.hi) intervals_.back().hi = std::move(iv.hi);
    } else {
      intervals_.push_back(std::move(iv));
    }
  }
}

IntervalSet IntervalSet::open(const Rational& lo, const Rational& hi) {
  return IntervalSet({Interval{lo, hi}});
}

const Interval* IntervalSet::component_of(const Rational& q) const {
  // First interval whose right end exceeds q.
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), q,
                             [](const Rational& v, const Interval& iv) { return v < iv.hi; });
  if (it == intervals_.end() || !(it->lo < q)) return nullptr;
  return &*it;
}

bool IntervalSet::contains(const Rational& q) const { return component_of(q) != nullptr; }

bool IntervalSet::contains_closed(const Rational& lo, const Rational& hi) const {
  const Interval* c = component_of(lo);
  return c != nullptr && hi < c->hi;
}

bool IntervalSet::contains_open(const Rational& lo, const Rational& hi) const {
  if (!(lo < hi)) return true;
  for (const auto& iv : intervals_) {
    if (iv.lo <= lo && hi <= iv.hi) return true;
  }
  return false;
}

IntervalSet IntervalSet::transform(const Rational& scale, const Rational& shift) const {
  if (scale.is_zero()) throw Error(Errc::ZeroScale, "transform with scale 0");
  std::vector<Interval> out;
  out.reserve(intervals_.size());
  for (const auto& iv : intervals_) {
    Rational a = scale * iv.lo + shift;
    Rational b = scale * iv.hi + shift;
    if (scale.sign() < 0) std::swap(a, b);
    out.push_back({std::move(a), std::move(b)});
  }
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  std::vector<Interval> out;
  std::size_t i = 0;
  std::size_t j = 0;
  const auto& a = intervals_;
  const auto& b = other.intervals_;
  while (i < a.size() && j < b.size()) {
    const Rational& lo = std::max(a[i].lo, b[j].lo);
    const Rational& hi = std::min(a[i].hi, b[j].hi);
    if (lo < hi) out.push_back({lo, hi});
    if (a[i].hi < b[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  std::vector<Interval> all = intervals_;
  all.insert(all.end(), other.intervals_.begin(), other.intervals_.end());
  return IntervalSet(std::move(all));
}

IntervalSet IntervalSet::remove_points(std::span<const Rational> points) const {
  std::vector<Rational> cuts(points.begin(), points.end());
  std::sort(cuts.begin(), cuts.end());
  std::vector<Interval> out;
  for (const auto& iv : intervals_) {
    Rational lo = iv.lo;
    for (const auto& c : cuts) {
      if (lo < c && c < iv.hi) {
        out.push_back({lo, c});
        lo = c;
      }
    }
    out.push_back({lo, iv.hi});
  }
  return IntervalSet(std::move(out));
}

Rational IntervalSet::length() const {
  Rational total;
  for (const auto& iv : intervals_) total += iv.hi - iv.lo;
  return total;
}

IntervalSet transform(const IntervalSet& z, const Rational& scale, const Rational& shift) {
  return z.transform(scale, shift);
}

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) { return a.intersect(b); }

bool contains(const IntervalSet& z, const Rational& q) { return z.contains(q); }

std::vector<Rational> translate_witness(std::span<const Rational> xs, const Rational& x,
                                        std::uint64_t k) {
  if (k < 1) throw Error(Errc::InvalidArgument, "translate_witness needs k >= 1");
  const Rational shift = -x / Rational(from_u64(k));
  std::vector<Rational> out;
  out.reserve(xs.size());
  for (const auto& t : xs) out.push_back(t + shift);
  return out;
}

}  // namespace sumcolour
