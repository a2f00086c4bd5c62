#include "sumcolour/digits.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <set>
#include <string>
#include <thread>

#include "sumcolour/errors.hpp"

namespace sumcolour {

DigitSeq::DigitSeq(unsigned m, std::vector<unsigned> prefix, std::map<std::size_t, unsigned> sparse)
    : m_(m), prefix_(std::move(prefix)), sparse_(std::move(sparse)) {
  if (m < 2) throw Error(Errc::InvalidArgument, "digit base must be >= 2");
  for (unsigned d : prefix_) {
    if (d >= m) throw Error(Errc::InvalidArgument, "digit " + std::to_string(d) + " >= base");
  }
  for (const auto& [pos, d] : sparse_) {
    if (pos <= prefix_.size()) throw Error(Errc::InvalidArgument, "sparse position inside prefix");
    if (d >= m) throw Error(Errc::InvalidArgument, "digit " + std::to_string(d) + " >= base");
  }
}

unsigned DigitSeq::digit(std::size_t position) const {
  if (position >= 1 && position <= prefix_.size()) return prefix_[position - 1];
  auto it = sparse_.find(position);
  return it == sparse_.end() ? 0U : it->second;
}

Rational psi_real(const DigitSeq& d) {
  // Horner over the prefix, then the sparse tail term by term.
  Integer numerator = 0;
  for (unsigned digit : d.prefix()) numerator = numerator * d.base() + digit;
  Rational value(numerator, pow_u(d.base(), d.prefix().size()));
  for (const auto& [pos, digit] : d.sparse()) {
    if (digit != 0) value += Rational(Integer(digit), pow_u(d.base(), pos));
  }
  return value;
}

std::pair<Rational, Rational> cylinder_interval(std::span<const unsigned> word, unsigned m) {
  const Rational lo = psi_real(DigitSeq(m, std::vector<unsigned>(word.begin(), word.end())));
  return {lo, lo + Rational(1, pow_u(m, word.size()))};
}

CylinderHit find_cylinder_in(const IntervalSet& Z, unsigned m, std::size_t max_depth) {
  if (m < 2) throw Error(Errc::InvalidArgument, "digit base must be >= 2");
  if (Z.empty()) throw Error(Errc::NoCylinder, "Z is empty");
  for (std::size_t n = 0; n <= max_depth; ++n) {
    const Integer scale = pow_u(m, n);
    for (const auto& iv : Z.intervals()) {
      // Least c with c/scale > lo.
      Integer c;
      const Integer scaled_num = iv.lo.num() * scale;
      mpz_fdiv_q(c.get_mpz_t(), scaled_num.get_mpz_t(), iv.lo.den().get_mpz_t());
      c += 1;
      if (c < 0) c = 0;
      if (c >= scale) continue;
      if (!(Rational(c + 1, scale) < iv.hi)) continue;
      CylinderHit hit;
      hit.depth = n;
      hit.prefix.assign(n, 0);
      Integer rest = c;
      for (std::size_t i = n; i > 0; --i) {
        hit.prefix[i - 1] = static_cast<unsigned>(mpz_fdiv_ui(rest.get_mpz_t(), m));
        rest /= m;
      }
      return hit;
    }
  }
  throw Error(Errc::NoCylinder, "no cylinder inside Z up to depth " + std::to_string(max_depth));
}

Integer multiset_count(std::uint64_t n, std::uint64_t k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n + k - 1, k);
  return out;
}

namespace {

// Lexicographically least escaping multiset whose first index is `first`.
bool escape_from(std::span<const Rational> H, std::uint64_t k, const IntervalSet& Z,
                 std::vector<std::size_t>& chosen, const Rational& partial) {
  if (chosen.size() == k) return !Z.contains(partial);
  for (std::size_t i = chosen.back(); i < H.size(); ++i) {
    chosen.push_back(i);
    if (escape_from(H, k, Z, chosen, partial + H[i])) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> first_escaping_multiset(std::span<const Rational> H,
                                                                std::uint64_t k, const IntervalSet& Z,
                                                                unsigned threads) {
  if (k < 1) throw Error(Errc::InvalidArgument, "k must be >= 1");
  const std::size_t n = H.size();
  std::vector<std::optional<std::vector<std::size_t>>> found(n);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_bad{std::numeric_limits<std::size_t>::max()};

  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      if (i > first_bad.load()) continue;
      std::vector<std::size_t> chosen{i};
      if (escape_from(H, k, Z, chosen, H[i])) {
        found[i] = std::move(chosen);
        std::size_t cur = first_bad.load();
        while (i < cur && !first_bad.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  threads = std::max(1U, threads);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  for (auto& f : found) {
    if (f) return f;
  }
  return std::nullopt;
}

namespace {

std::string describe(std::span<const Rational> H, const std::vector<std::size_t>& multiset) {
  std::string out = "{";
  Rational sum;
  for (std::size_t i = 0; i < multiset.size(); ++i) {
    if (i > 0) out += ", ";
    out += H[multiset[i]].str();
    sum += H[multiset[i]];
  }
  return out + "} sums to " + sum.str();
}

}  // namespace

ConstructionCert build_H(std::span<const unsigned> alpha_prefix, std::size_t n,
                         std::span<const std::size_t> X, std::uint64_t k, const IntervalSet& Z,
                         unsigned threads) {
  if (k < 1) throw Error(Errc::PreconditionViolated, "k must be >= 1");
  const unsigned m = static_cast<unsigned>(k + 2);
  if (alpha_prefix.size() != n) throw Error(Errc::PreconditionViolated, "prefix length differs from n");
  for (unsigned d : alpha_prefix) {
    if (d >= m) throw Error(Errc::PreconditionViolated, "prefix digit >= base");
  }
  const auto [lo, hi] = cylinder_interval(alpha_prefix, m);
  if (!Z.contains_closed(lo, hi)) {
    throw Error(Errc::PreconditionViolated, "cylinder [" + lo.str() + "," + hi.str() + "] not inside Z");
  }
  std::set<std::size_t> seen;
  for (std::size_t pos : X) {
    if (pos <= n) throw Error(Errc::PreconditionViolated, "position " + std::to_string(pos) + " <= n");
    if (!seen.insert(pos).second) throw Error(Errc::PreconditionViolated, "repeated position");
  }
  if (X.size() > 24) throw Error(Errc::PreconditionViolated, "more than 24 positions");

  ConstructionCert cert;
  cert.method = "cylinder";
  cert.k = k;
  cert.m = m;
  cert.alpha_prefix.assign(alpha_prefix.begin(), alpha_prefix.end());
  cert.X.assign(X.begin(), X.end());
  cert.Z = Z;

  const Rational base = lo / Rational(from_u64(k));
  std::vector<Rational> bit;
  for (std::size_t pos : X) bit.emplace_back(Integer(1), pow_u(m, pos));
  const std::size_t size = std::size_t{1} << X.size();
  cert.H.reserve(size);
  for (std::size_t mask = 0; mask < size; ++mask) {
    Rational v = base;
    for (std::size_t t = 0; t < X.size(); ++t) {
      if ((mask >> t) & 1U) v += bit[t];
    }
    cert.H.push_back(std::move(v));
  }

  if (auto bad = first_escaping_multiset(cert.H, k, Z, threads)) {
    throw Error(Errc::SumEscapedZ, describe(cert.H, *bad));
  }
  cert.checked_sums = to_u64(multiset_count(cert.H.size(), k));
  return cert;
}

std::optional<Rational> greedy_delta(const IntervalSet& Z, std::uint64_t k) {
  for (const auto& iv : Z.intervals()) {
    if (iv.lo.sign() <= 0 && iv.hi.sign() > 0) return iv.hi / Rational(from_u64(k));
  }
  return std::nullopt;
}

namespace {

// All sums of r-multisets from ys (r >= 1), deduplicated.
std::vector<Rational> multiset_sums(const std::vector<Rational>& ys, std::size_t r) {
  std::set<Rational> out;
  std::vector<std::size_t> idx(r, 0);
  if (ys.empty()) return {};
  for (;;) {
    Rational s;
    for (std::size_t i : idx) s += ys[i];
    out.insert(std::move(s));
    // Next nondecreasing index tuple.
    std::size_t pos = r;
    while (pos > 0 && idx[pos - 1] == ys.size() - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < r; ++i) idx[i] = idx[pos - 1];
  }
  return {out.begin(), out.end()};
}

// Least denominator, then least numerator, rational in the open set C
// outside `taken`. C must be bounded and nonempty.
Rational simplest_in(const IntervalSet& C, const std::set<Rational>& taken) {
  for (Integer q = 1;; ++q) {
    for (const auto& iv : C.intervals()) {
      Integer p;
      const Integer scaled = iv.lo.num() * q;
      mpz_fdiv_q(p.get_mpz_t(), scaled.get_mpz_t(), iv.lo.den().get_mpz_t());
      for (p += 1; Rational(p, q) < iv.hi; ++p) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
        if (g != 1) continue;
        Rational cand(p, q);
        if (!taken.contains(cand)) return cand;
      }
    }
  }
}

}  // namespace

std::vector<Rational> greedy_baire(const IntervalSet& Z, std::uint64_t k, std::size_t T,
                                   std::span<const Rational> forbidden) {
  if (k < 2) throw Error(Errc::PreconditionViolated, "k must be >= 2");
  const auto delta = greedy_delta(Z, k);
  if (!delta) throw Error(Errc::PreconditionViolated, "no delta > 0 with (0, k*delta) inside Z");
  const IntervalSet zp = Z.remove_points(forbidden);
  const Rational kq(from_u64(k));
  const IntervalSet window = IntervalSet::open(Rational(0), *delta);

  std::vector<Rational> ys;
  std::set<Rational> taken;
  for (std::size_t step = 0; step < T; ++step) {
    IntervalSet B = zp.transform(Rational(1) / kq, Rational(0)).intersect(window);
    for (std::uint64_t r = 1; r < k && !B.empty(); ++r) {
      const Rational inv_r = Rational(1) / Rational(from_u64(r));
      for (const auto& a : multiset_sums(ys, k - r)) {
        B = B.intersect(zp.transform(inv_r, -a * inv_r));
        if (B.empty()) break;
      }
    }
    if (B.empty()) throw Error(Errc::EmptyB, "B is empty at step " + std::to_string(step));
    Rational y = simplest_in(B, taken);
    taken.insert(y);
    ys.push_back(std::move(y));
  }

  if (auto bad = first_escaping_multiset(ys, k, zp)) throw Error(Errc::SumEscapedZ, describe(ys, *bad));
  return ys;
}

// ---------------------------------------------------------------------------
// Cylinder unions

CylinderUnion CylinderUnion::from_codes(unsigned m, std::size_t depth, std::vector<std::uint64_t> codes) {
  if (m < 2) throw Error(Errc::InvalidArgument, "digit base must be >= 2");
  const Integer total = pow_u(m, depth);
  if (!fits_u64(total) || to_u64(total) > (1ULL << 62)) {
    throw Error(Errc::InvalidArgument, "cylinder depth too large for base");
  }
  for (std::uint64_t c : codes) {
    if (c >= to_u64(total)) throw Error(Errc::InvalidArgument, "cylinder code out of range");
  }
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  CylinderUnion out;
  out.m_ = m;
  out.depth_ = depth;
  out.codes_ = std::move(codes);
  return out;
}

CylinderUnion::CylinderUnion(unsigned m, std::size_t depth, const std::vector<std::vector<unsigned>>& words) {
  std::vector<std::uint64_t> codes;
  codes.reserve(words.size());
  for (const auto& w : words) {
    if (w.size() != depth) throw Error(Errc::InvalidArgument, "word length differs from depth");
    std::uint64_t c = 0;
    for (unsigned d : w) {
      if (d >= m) throw Error(Errc::InvalidArgument, "digit >= base");
      c = c * m + d;
    }
    codes.push_back(c);
  }
  *this = from_codes(m, depth, std::move(codes));
}

std::uint64_t CylinderUnion::digit_weight(std::size_t position) const {
  std::uint64_t w = 1;
  for (std::size_t i = position; i < depth_; ++i) w *= m_;
  return w;
}

std::vector<std::vector<unsigned>> CylinderUnion::words() const {
  std::vector<std::vector<unsigned>> out;
  out.reserve(codes_.size());
  for (std::uint64_t c : codes_) {
    std::vector<unsigned> w(depth_);
    for (std::size_t i = depth_; i > 0; --i) {
      w[i - 1] = static_cast<unsigned>(c % m_);
      c /= m_;
    }
    out.push_back(std::move(w));
  }
  return out;
}

Rational CylinderUnion::measure() const {
  return Rational(from_u64(codes_.size()), pow_u(m_, depth_));
}

CylinderUnion CylinderUnion::refine(std::size_t depth) const {
  if (depth <= depth_) return *this;
  std::uint64_t factor = 1;
  for (std::size_t i = depth_; i < depth; ++i) factor *= m_;
  std::vector<std::uint64_t> codes;
  codes.reserve(codes_.size() * factor);
  for (std::uint64_t c : codes_) {
    for (std::uint64_t r = 0; r < factor; ++r) codes.push_back(c * factor + r);
  }
  return from_codes(m_, depth, std::move(codes));
}

bool CylinderUnion::contains_word(std::span<const unsigned> word) const {
  if (word.size() < depth_) throw Error(Errc::InvalidArgument, "word shorter than depth");
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < depth_; ++i) c = c * m_ + word[i];
  return std::binary_search(codes_.begin(), codes_.end(), c);
}

CylinderUnion CylinderUnion::translate(std::span<const unsigned> eta) const {
  const CylinderUnion base = refine(eta.size());
  std::vector<std::uint64_t> codes;
  codes.reserve(base.codes_.size());
  for (std::uint64_t c : base.codes_) {
    std::uint64_t out = 0;
    std::uint64_t rest = c;
    std::uint64_t weight = 1;
    for (std::size_t pos = base.depth_; pos > 0; --pos) {
      const std::uint64_t d = rest % m_;
      rest /= m_;
      const std::uint64_t shift = pos <= eta.size() ? eta[pos - 1] % m_ : 0;
      out += ((d + shift) % m_) * weight;
      weight *= m_;
    }
    codes.push_back(out);
  }
  return from_codes(m_, base.depth_, std::move(codes));
}

CylinderUnion CylinderUnion::robust_core(std::size_t position) const {
  if (position < 1) throw Error(Errc::InvalidArgument, "positions start at 1");
  if (position > depth_) return *this;  // membership ignores this digit
  const std::uint64_t weight = digit_weight(position);
  std::vector<std::uint64_t> codes;
  for (std::uint64_t c : codes_) {
    const std::uint64_t digit = c / weight % m_;
    const std::uint64_t stem = c - digit * weight;
    bool all = true;
    for (std::uint64_t v = 0; v < m_ && all; ++v) {
      all = std::binary_search(codes_.begin(), codes_.end(), stem + v * weight);
    }
    if (all) codes.push_back(c);
  }
  return from_codes(m_, depth_, std::move(codes));
}

CylinderUnion CylinderUnion::intersect(const CylinderUnion& other) const {
  const std::size_t d = std::max(depth_, other.depth_);
  const CylinderUnion a = refine(d);
  const CylinderUnion b = other.refine(d);
  std::vector<std::uint64_t> codes;
  std::set_intersection(a.codes_.begin(), a.codes_.end(), b.codes_.begin(), b.codes_.end(),
                        std::back_inserter(codes));
  return from_codes(m_, d, std::move(codes));
}

bool CylinderUnion::subset_of(const CylinderUnion& other) const {
  const std::size_t d = std::max(depth_, other.depth_);
  const CylinderUnion a = refine(d);
  const CylinderUnion b = other.refine(d);
  return std::includes(b.codes_.begin(), b.codes_.end(), a.codes_.begin(), a.codes_.end());
}

bool operator==(const CylinderUnion& a, const CylinderUnion& b) {
  if (a.m_ != b.m_) return false;
  const std::size_t d = std::max(a.depth_, b.depth_);
  return a.refine(d).codes_ == b.refine(d).codes_;
}

Rational measure(const CylinderUnion& S) { return S.measure(); }

CylinderUnion translate_digit(const CylinderUnion& S, std::span<const unsigned> eta) {
  return S.translate(eta);
}

CylinderUnion robust_core(const CylinderUnion& S, std::size_t position) { return S.robust_core(position); }

ShrinkResult shrink_iterate(const CylinderUnion& P, std::size_t steps, std::optional<std::size_t> start) {
  const Rational mu = P.measure();
  if (mu.is_zero()) throw Error(Errc::ZeroMeasure, "P has measure 0");
  const Rational threshold = mu - mu / Rational(2);

  ShrinkResult out{P, {}, false};
  std::size_t prev = start ? (*start > 0 ? *start - 1 : 0) : P.depth();
  for (std::size_t step = 0; step < steps; ++step) {
    std::size_t n = prev + 1;
    for (;;) {
      bool holds = true;
      for (std::size_t q = n; q <= out.core.depth() && holds; ++q) {
        holds = out.core.robust_core(q).measure() > threshold;
      }
      if (holds) break;
      ++n;
    }
    out.core = out.core.robust_core(n);
    out.positions.push_back(n);
    prev = n;
  }

  // Exhaustive check at finite depth: vary the chosen positions freely.
  const std::size_t depth = std::max({P.depth(), out.core.depth(), prev});
  const CylinderUnion core = out.core.refine(depth);
  const CylinderUnion target = P.refine(depth);
  const unsigned m = P.base();
  std::uint64_t variants = 1;
  for (std::size_t i = 0; i < out.positions.size(); ++i) variants *= m;
  bool stable = true;
  for (const auto& word : core.words()) {
    for (std::uint64_t v = 0; v < variants && stable; ++v) {
      std::vector<unsigned> beta = word;
      std::uint64_t rest = v;
      for (std::size_t pos : out.positions) {
        beta[pos - 1] = static_cast<unsigned>(rest % m);
        rest /= m;
      }
      stable = target.contains_word(beta);
    }
    if (!stable) break;
  }
  out.stable = stable;
  return out;
}

}  // namespace sumcolour
