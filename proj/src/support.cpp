#include "sumcolour/support.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sumcolour/errors.hpp"
#include "sumcolour/rng.hpp"

namespace sumcolour {

WellOrder::WellOrder(std::vector<std::size_t> priority) : priority_(std::move(priority)) {
  std::vector<bool> hit(priority_.size(), false);
  for (std::size_t r : priority_) {
    if (r >= priority_.size() || hit[r]) throw Error(Errc::InvalidArgument, "priority is not a permutation");
    hit[r] = true;
  }
}

WellOrder WellOrder::random(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> priority(n);
  std::iota(priority.begin(), priority.end(), 0);
  Rng rng(seed);
  rng.shuffle(priority);
  return WellOrder(std::move(priority));
}

std::uint8_t psi_support(const HVec& x, const WellOrder& W) {
  if (x.is_zero()) return 0;
  std::size_t position = 0;
  std::size_t best_rank = 0;
  std::size_t t = 0;
  for (const auto& [i, coeff] : x.entries()) {
    if (i >= W.size()) {
      throw Error(Errc::IndexOutOfRange, "index " + std::to_string(i) + " outside basis of size " +
                                             std::to_string(W.size()));
    }
    ++t;
    if (t == 1 || W.rank(i) > best_rank) {
      best_rank = W.rank(i);
      position = t;
    }
  }
  return static_cast<std::uint8_t>(position % 2);
}

namespace {

[[noreturn]] void violated(const char* what) { throw Error(Errc::PreconditionViolated, what); }

// Support indices in increasing order.
std::vector<std::size_t> slots(const HVec& v) {
  std::vector<std::size_t> out;
  out.reserve(v.support_size());
  for (const auto& [i, c] : v.entries()) out.push_back(i);
  return out;
}

// 1-based slot of the W-maximum.
std::size_t argmax_slot(const HVec& v, const WellOrder& W) {
  const auto idx = slots(v);
  std::size_t best = 0;
  for (std::size_t t = 1; t < idx.size(); ++t) {
    if (W.rank(idx[t]) > W.rank(idx[best])) best = t;
  }
  return best + 1;
}

}  // namespace

QuadrupleReport quadruple_check(std::span<const HVec> family, const HVec& x, const HVec& y,
                                const HVec& w, const HVec& z, const WellOrder& W, std::uint64_t k,
                                std::span<const HVec> fixed) {
  if (k < 2 || fixed.size() != k - 2) violated("fixed-count");

  auto member = [&](const HVec& v) { return std::find(family.begin(), family.end(), v) != family.end(); };
  for (const HVec* v : {&x, &y, &w, &z}) {
    if (!member(*v)) violated("membership");
  }
  for (const auto& f : fixed) {
    if (!member(f)) violated("membership");
  }
  if (x == y || w == z) violated("distinct");
  for (std::size_t s = 0; s < fixed.size(); ++s) {
    for (const HVec* v : {&x, &y, &w, &z}) {
      if (fixed[s] == *v) violated("distinct");
    }
    for (std::size_t r = 0; r < s; ++r) {
      if (fixed[r] == fixed[s]) violated("distinct");
    }
  }

  for (const auto& v : family) {
    for (const auto& [i, c] : v.entries()) {
      if (i >= W.size()) throw Error(Errc::IndexOutOfRange, "index " + std::to_string(i));
    }
  }
  if (family.empty() || family.front().is_zero()) violated("support-size");
  const std::size_t m = family.front().support_size();
  for (const auto& v : family) {
    if (v.support_size() != m) violated("support-size");
  }

  std::vector<std::vector<std::size_t>> idx;
  idx.reserve(family.size());
  for (const auto& v : family) idx.push_back(slots(v));

  for (std::size_t t = 0; t + 1 < m; ++t) {
    std::size_t max_here = 0;
    std::size_t min_next = static_cast<std::size_t>(-1);
    for (const auto& s : idx) {
      max_here = std::max(max_here, s[t]);
      min_next = std::min(min_next, s[t + 1]);
    }
    if (!(max_here < min_next)) violated("separators");
  }

  const std::size_t l = argmax_slot(family.front(), W);
  for (const auto& v : family) {
    if (argmax_slot(v, W) != l) violated("argmax-position");
  }

  std::vector<bool> is_shared(m + 1, false);
  for (std::size_t t = 0; t < m; ++t) {
    std::vector<std::size_t> column;
    for (const auto& s : idx) column.push_back(s[t]);
    std::sort(column.begin(), column.end());
    const bool all_equal = column.front() == column.back();
    const bool all_distinct = std::adjacent_find(column.begin(), column.end()) == column.end();
    if (family.size() > 1 && !all_equal && !all_distinct) violated("slot-pattern");
    is_shared[t + 1] = family.size() > 1 && all_equal;
  }
  if (is_shared[l]) violated("slot-pattern");

  for (std::size_t t = 1; t <= m; ++t) {
    if (!is_shared[t]) continue;
    const std::size_t index = idx.front()[t - 1];
    const int sign = family.front().at(index).sign();
    for (const auto& v : family) {
      if (v.at(index).sign() != sign) violated("shared-signs");
    }
  }

  auto at_l = [&](const HVec& v) { return slots(v)[l - 1]; };
  const std::size_t xl = at_l(x);
  const std::size_t yl = at_l(y);
  const std::size_t wl = at_l(w);
  const std::size_t zl = at_l(z);
  if (!(xl < yl && W.before(xl, yl))) violated("order-xy");
  if (!(wl < zl && W.before(zl, wl))) violated("order-wz");

  const std::size_t lowest = std::min({xl, yl, wl, zl});
  for (std::size_t s = 0; s < fixed.size(); ++s) {
    const std::size_t fl = at_l(fixed[s]);
    if (s > 0 && !(at_l(fixed[s - 1]) < fl)) violated("fixed-order");
    if (!(fl < lowest)) violated("fixed-order");
  }
  for (const auto& f : fixed) {
    if (!(W.before(at_l(f), yl) && W.before(at_l(f), wl))) violated("fixed-W-below");
  }

  HVec b;
  for (const auto& f : fixed) b += f;
  const HVec sum_xy = b + x + y;
  const HVec sum_wz = b + w + z;

  QuadrupleReport report;
  report.psi_xy = psi_support(sum_xy, W);
  report.psi_wz = psi_support(sum_wz, W);
  for (const auto& [i, c] : sum_xy.entries()) report.left_xy += i < yl ? 1 : 0;
  for (const auto& [i, c] : sum_wz.entries()) report.left_wz += i < wl ? 1 : 0;
  report.separated = report.psi_xy != report.psi_wz;
  return report;
}

std::vector<HVec> family_generator(const FamilySpec& shape, std::uint64_t seed, const WellOrder& W) {
  const std::size_t m = shape.m;
  if (m < 1 || shape.l < 1 || shape.l > m) violated("slot l out of range");
  if (shape.shared.contains(shape.l)) violated("slot l is shared");
  for (std::size_t t : shape.shared) {
    if (t < 1 || t > m) violated("shared slot out of range");
  }
  if (shape.count < 1) throw Error(Errc::InvalidArgument, "count must be >= 1");
  if (W.size() != shape.n) throw Error(Errc::InvalidArgument, "well-order size differs from n");

  std::vector<std::size_t> width(m + 1, 0);
  std::size_t need = 0;
  for (std::size_t t = 1; t <= m; ++t) {
    width[t] = shape.shared.contains(t) ? 1 : shape.count;
    need += width[t];
  }
  if (need > shape.n) {
    throw Error(Errc::TooSmallIndexSpace,
                "need " + std::to_string(need) + " indices, have " + std::to_string(shape.n));
  }

  Rng rng(seed);
  auto by_rank = [&](std::size_t a, std::size_t b) { return W.rank(a) < W.rank(b); };

  for (int attempt = 0; attempt < 256; ++attempt) {
    // Spread the slack over the m slot ranges and a trailing gap.
    std::vector<std::size_t> extra(m + 2, 0);
    for (std::size_t s = need; s < shape.n; ++s) ++extra[1 + rng.below(m + 1)];

    std::vector<std::vector<std::size_t>> chosen(m + 1);  // per slot, ascending by rank
    std::size_t start = 0;
    for (std::size_t t = 1; t <= m; ++t) {
      std::vector<std::size_t> range(width[t] + extra[t]);
      std::iota(range.begin(), range.end(), start);
      start += range.size();
      std::sort(range.begin(), range.end(), by_rank);
      if (t == shape.l) {
        chosen[t].assign(range.end() - static_cast<std::ptrdiff_t>(width[t]), range.end());
      } else {
        chosen[t].assign(range.begin(), range.begin() + static_cast<std::ptrdiff_t>(width[t]));
      }
    }

    // Pair the r-th lowest slot-l index with the r-th lowest index of every
    // other slot; each member then needs its slot-l index to outrank them.
    bool ok = true;
    for (std::size_t r = 0; r < shape.count && ok; ++r) {
      const std::size_t lead = chosen[shape.l][r];
      for (std::size_t t = 1; t <= m && ok; ++t) {
        if (t == shape.l) continue;
        const std::size_t other = chosen[t][width[t] == 1 ? 0 : r];
        ok = W.rank(other) < W.rank(lead);
      }
    }
    if (!ok) continue;

    std::vector<int> shared_sign(m + 1, 1);
    for (std::size_t t : shape.shared) shared_sign[t] = rng.coin() ? 1 : -1;

    std::vector<HVec> out;
    out.reserve(shape.count);
    for (std::size_t r = 0; r < shape.count; ++r) {
      HVec v;
      for (std::size_t t = 1; t <= m; ++t) {
        const std::size_t index = chosen[t][width[t] == 1 ? 0 : r];
        if (shape.shared.contains(t)) {
          const Rational magnitude(Integer(static_cast<long>(rng.between(1, 9))),
                                   Integer(static_cast<long>(rng.between(1, 9))));
          v.set(index, shared_sign[t] > 0 ? magnitude : -magnitude);
        } else {
          v.set(index, rng.nonzero_rational(9, 9));
        }
      }
      out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end(), [&](const HVec& a, const HVec& b) {
      return slots(a)[shape.l - 1] < slots(b)[shape.l - 1];
    });
    return out;
  }
  throw Error(Errc::TooSmallIndexSpace, "index space cannot host the family under this well-order");
}

std::vector<HVec> positive_family(const WellOrder& W, std::size_t j, std::uint64_t k, std::size_t count) {
  if (k < 2) throw Error(Errc::InvalidArgument, "k must be >= 2");
  if (j >= W.size()) throw Error(Errc::IndexOutOfRange, "index " + std::to_string(j));
  std::vector<HVec> out;
  for (std::size_t i = j + 1; i < W.size() && out.size() < count; ++i) {
    if (W.before(i, j)) out.push_back(HVec{{i, Rational(1)}, {j, Rational(1)}});
  }
  if (out.size() < count) {
    throw Error(Errc::NotEnoughPredecessors, "only " + std::to_string(out.size()) +
                                                 " one-sided W-predecessors of " + std::to_string(j));
  }
  return out;
}

}  // namespace sumcolour
