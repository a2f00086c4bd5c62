#include <gtest/gtest.h>

#include "frozen_values.hpp"
#include "sumcolour/exact_core.hpp"
#include "test_util.hpp"

using namespace sumcolour;
using testutil::Q;

TEST(Rational, CanonicalForm) {
  const Rational a(Integer(6), Integer(-4));
  EXPECT_EQ(a.num(), -3);
  EXPECT_EQ(a.den(), 2);
  EXPECT_EQ(Rational(0).str(), "0/1");
  EXPECT_EQ(Q("-10/4").str(), "-5/2");
  EXPECT_EQ(Q("7").str(), "7/1");
  EXPECT_ERRC(Rational(Integer(1), Integer(0)), InvalidArgument);
  EXPECT_ERRC(Q("1/0"), InvalidArgument);
  EXPECT_ERRC(Q("x/3"), InvalidArgument);
  EXPECT_ERRC(Q("1") / Q("0"), InvalidArgument);
}

TEST(Rational, ArithmeticAndOrder) {
  EXPECT_EQ(Q("1/3") + Q("1/6"), Q("1/2"));
  EXPECT_EQ(Q("1/3") * Q("-3/5"), Q("-1/5"));
  EXPECT_LT(Q("-1/2"), Q("-1/3"));
  EXPECT_GT(Q("22/7"), Q("3"));
}

TEST(Flog, FrozenValues) {
  for (const auto& c : frozen::kFlog) {
    EXPECT_EQ(flog(c.k, c.u, Q(c.q)), c.j) << c.k << " " << c.u << " " << c.q;
  }
}

TEST(Flog, Examples) {
  EXPECT_EQ(flog(2, 1, Q("1")), 0);
  EXPECT_EQ(flog(2, 2, Q("3")), 3);
  EXPECT_EQ(flog(2, 2, Q("5/6")), -1);
  EXPECT_ERRC(flog(2, 1, Q("0")), NonPositiveInput);
  EXPECT_ERRC(flog(2, 1, Q("-1/3")), NonPositiveInput);
  EXPECT_ERRC(flog(1, 1, Q("2")), InvalidArgument);
}

TEST(Flog, ExtremeMagnitudes) {
  const Rational huge(Integer(pow(Integer(3), 400) + 1));
  EXPECT_EQ(flog(3, 1, huge), 400);
  const Rational tiny(Integer(1), pow(Integer(2), 1000));
  EXPECT_EQ(flog(2, 1, tiny), -1000);
  EXPECT_EQ(flog(2, 3, tiny), -3000);
}

TEST(Flog, DefiningInequalityAndLaws) {
  Rng rng(11);
  for (int i = 0; i < 10000; ++i) {
    const std::uint64_t k = 2 + rng.below(9);
    const unsigned u = 1 + static_cast<unsigned>(rng.below(4));
    const Rational q1 = Rational(Integer(static_cast<long>(1 + rng.below(100000))),
                                 Integer(static_cast<long>(1 + rng.below(100000))));
    const Rational q2 = Rational(Integer(static_cast<long>(1 + rng.below(100000))),
                                 Integer(static_cast<long>(1 + rng.below(100000))));
    const BandIndex j = flog(k, u, q1);
    // k^j <= q^u < k^(j+1), checked with exact rationals.
    Rational qu(1);
    for (unsigned t = 0; t < u; ++t) qu *= q1;
    const Rational kj = j >= 0 ? Rational(pow(Integer(k), j)) : Rational(Integer(1), pow(Integer(k), -j));
    ASSERT_LE(kj, qu);
    ASSERT_LT(qu, kj * Rational(static_cast<long>(k)));
    // Monotone.
    if (q1 <= q2) {
      ASSERT_LE(j, flog(k, u, q2));
    } else {
      ASSERT_GE(j, flog(k, u, q2));
    }
    // Shift law.
    ASSERT_EQ(flog(k, u, q1 * Rational(static_cast<long>(k))), j + u);
  }
}

TEST(IntervalSet, NormalizesAndKeepsTouchingIntervalsApart) {
  IntervalSet z({{Q("1/2"), Q("1")}, {Q("0"), Q("1/2")}, {Q("1/4"), Q("1/3")}});
  ASSERT_EQ(z.size(), 2U);
  EXPECT_EQ(z.intervals()[0], (Interval{Q("0"), Q("1/2")}));
  EXPECT_FALSE(z.contains(Q("1/2")));
  IntervalSet w({{Q("0"), Q("1/2")}, {Q("1/3"), Q("1")}});
  ASSERT_EQ(w.size(), 1U);
  EXPECT_EQ(w.intervals()[0], (Interval{Q("0"), Q("1")}));
  EXPECT_ERRC(IntervalSet::open(Q("1"), Q("1")), InvalidArgument);
}

TEST(IntervalSet, TransformExamples) {
  const auto unit = IntervalSet::open(Q("0"), Q("1"));
  EXPECT_EQ(transform(unit, Q("1/2"), Q("0")), IntervalSet::open(Q("0"), Q("1/2")));
  EXPECT_EQ(transform(unit, Q("-1"), Q("0")), IntervalSet::open(Q("-1"), Q("0")));
  const IntervalSet z({{Q("1/4"), Q("1/2")}, {Q("3/4"), Q("1")}});
  EXPECT_EQ(transform(z, Q("1"), Q("-1/4")), IntervalSet({{Q("0"), Q("1/4")}, {Q("1/2"), Q("3/4")}}));
  EXPECT_ERRC(transform(z, Q("0"), Q("1")), ZeroScale);
}

TEST(IntervalSet, IntersectAndContainsExamples) {
  EXPECT_EQ(intersect(IntervalSet::open(Q("0"), Q("1/2")), IntervalSet::open(Q("1/4"), Q("3/4"))),
            IntervalSet::open(Q("1/4"), Q("1/2")));
  EXPECT_TRUE(intersect(IntervalSet::open(Q("0"), Q("1/4")), IntervalSet()).empty());
  EXPECT_FALSE(contains(IntervalSet::open(Q("1/4"), Q("1/2")), Q("1/4")));
  EXPECT_TRUE(IntervalSet::open(Q("1/4"), Q("1/2")).contains_closed(Q("5/16"), Q("3/8")));
  EXPECT_FALSE(IntervalSet::open(Q("1/4"), Q("1/2")).contains_closed(Q("1/4"), Q("3/8")));
}

namespace {

IntervalSet random_set(Rng& rng) {
  std::vector<Interval> ivs;
  const std::size_t n = rng.below(4);
  for (std::size_t i = 0; i < n; ++i) {
    Rational a = rng.rational(20, 8);
    Rational b = rng.rational(20, 8);
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    ivs.push_back({a, b});
  }
  return IntervalSet(std::move(ivs));
}

// Membership straight from the raw interval list, no normalization.
bool raw_member(const std::vector<Interval>& ivs, const Rational& q) {
  for (const auto& iv : ivs) {
    if (iv.lo < q && q < iv.hi) return true;
  }
  return false;
}

}  // namespace

TEST(IntervalSet, AgreesWithMembershipOracle) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const IntervalSet a = random_set(rng);
    const IntervalSet b = random_set(rng);
    const Rational scale = rng.nonzero_rational(5, 5);
    const Rational shift = rng.rational(10, 6);
    const IntervalSet inter = a.intersect(b);
    const IntervalSet uni = a.unite(b);
    const IntervalSet moved = a.transform(scale, shift);
    for (int p = 0; p < 1000; ++p) {
      const Rational q = p < 50 && !a.empty() ? a.intervals()[p % a.size()].lo : rng.rational(25, 16);
      const bool in_a = raw_member(a.intervals(), q);
      const bool in_b = raw_member(b.intervals(), q);
      ASSERT_EQ(inter.contains(q), in_a && in_b);
      // Union of open sets keeps shared endpoints out, which the oracle agrees with.
      ASSERT_EQ(uni.contains(q), in_a || in_b);
      ASSERT_EQ(moved.contains(q * scale + shift), in_a);
    }
  }
}

TEST(TranslateWitness, Examples) {
  const auto xs = testutil::Qs({"1/4", "1/3"});
  EXPECT_EQ(translate_witness(xs, Q("1"), 2), testutil::Qs({"-1/4", "-1/6"}));
  EXPECT_EQ(translate_witness(xs, Q("0"), 3), xs);
  const auto zero = testutil::Qs({"0"});
  EXPECT_EQ(translate_witness(zero, Q("2"), 2), testutil::Qs({"-1"}));
}

TEST(TranslateWitness, KFoldSumsShiftByMinusX) {
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint64_t k = 1 + rng.below(4);
    std::vector<Rational> xs;
    for (int i = 0; i < 4; ++i) xs.push_back(rng.rational(30, 12));
    const Rational x = rng.rational(30, 12);
    const auto ys = translate_witness(xs, x, k);
    // Every index tuple of length k.
    std::vector<std::size_t> idx(k, 0);
    for (;;) {
      Rational sx, sy;
      for (std::size_t i : idx) {
        sx += xs[i];
        sy += ys[i];
      }
      ASSERT_EQ(sy, sx - x);
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == xs.size() - 1) idx[--pos] = 0;
      if (pos == 0) break;
      ++idx[pos - 1];
    }
  }
}
