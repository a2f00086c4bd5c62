#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "sumcolour/rational.hpp"

namespace sumcolour {

/// Seeded generator with platform-stable draws (mt19937_64 is fully
/// specified; the std distributions are not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  /// In [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }
  bool coin() { return (engine_() >> 63) != 0; }

  /// a/b with |a| <= max_num and 1 <= b <= max_den.
  Rational rational(std::int64_t max_num, std::int64_t max_den) {
    const std::int64_t a = between(-max_num, max_num);
    const std::int64_t b = between(1, max_den);
    return Rational(Integer(static_cast<long>(a)), Integer(static_cast<long>(b)));
  }
  Rational nonzero_rational(std::int64_t max_num, std::int64_t max_den) {
    for (;;) {
      Rational q = rational(max_num, max_den);
      if (!q.is_zero()) return q;
    }
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sumcolour
