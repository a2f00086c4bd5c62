#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sumcolour/exact_core.hpp"
#include "sumcolour/rational.hpp"

namespace sumcolour {

/// Finitely supported base-m digit sequence: an explicit prefix (positions
/// 1..prefix.size()), sparse digits beyond it, zeros elsewhere.
class DigitSeq {
 public:
  DigitSeq(unsigned m, std::vector<unsigned> prefix, std::map<std::size_t, unsigned> sparse = {});

  unsigned base() const { return m_; }
  const std::vector<unsigned>& prefix() const { return prefix_; }
  const std::map<std::size_t, unsigned>& sparse() const { return sparse_; }
  unsigned digit(std::size_t position) const;

 private:
  unsigned m_;
  std::vector<unsigned> prefix_;
  std::map<std::size_t, unsigned> sparse_;
};

/// sum digit(n) / m^n.
Rational psi_real(const DigitSeq& d);

/// Closed image [psi(w), psi(w) + m^-|w|] of the cylinder headed by w.
std::pair<Rational, Rational> cylinder_interval(std::span<const unsigned> word, unsigned m);

struct CylinderHit {
  std::vector<unsigned> prefix;
  std::size_t depth = 0;
};

/// Shortest, then lexicographically least, word whose closed cylinder
/// interval lies inside Z. Throws Error(NoCylinder) if none exists up to
/// max_depth.
CylinderHit find_cylinder_in(const IntervalSet& Z, unsigned m, std::size_t max_depth = 48);

/// Record of a finite construction of H with every k-multiset sum in Z.
/// method "cylinder": H = psi(alpha)/k + {sum of m^-j over subsets of X}.
/// method "greedy":   H chosen step by step inside (0, delta).
struct ConstructionCert {
  std::string method;
  std::uint64_t k = 2;
  unsigned m = 4;
  std::vector<unsigned> alpha_prefix;
  std::vector<std::size_t> X;
  IntervalSet Z;
  std::vector<Rational> H;
  std::uint64_t checked_sums = 0;
};

/// C(n + k - 1, k), the number of k-multisets from n elements.
Integer multiset_count(std::uint64_t n, std::uint64_t k);

/// Lexicographically least k-multiset (as nondecreasing indices into H)
/// whose sum leaves Z, or nullopt. `threads` workers split the first index.
std::optional<std::vector<std::size_t>> first_escaping_multiset(std::span<const Rational> H,
                                                                std::uint64_t k, const IntervalSet& Z,
                                                                unsigned threads = 1);

/// Builds H from a prefix of length n whose cylinder lies in Z and 1-bits
/// at positions X (all > n), base m = k + 2, and verifies all k-multiset
/// sums exactly. Throws Error(PreconditionViolated) on bad inputs and
/// Error(SumEscapedZ) if verification fails.
ConstructionCert build_H(std::span<const unsigned> alpha_prefix, std::size_t n,
                         std::span<const std::size_t> X, std::uint64_t k, const IntervalSet& Z,
                         unsigned threads = 1);

/// Finite run of the greedy uncountable-H recursion: needs delta > 0 with
/// (0, k delta) inside Z. At each step picks, in (0, delta) intersected with
/// B = (1/k)Z' and every (1/r)(-a + Z') for a in (k-r)Y, the rational of
/// least denominator (then least numerator) not yet chosen. Z' is Z with
/// the `forbidden` points removed. Throws Error(PreconditionViolated),
/// Error(EmptyB) or Error(SumEscapedZ).
std::vector<Rational> greedy_baire(const IntervalSet& Z, std::uint64_t k, std::size_t T,
                                   std::span<const Rational> forbidden = {});

/// delta of the greedy construction: hi/k for the component of Z with lo <= 0 < hi.
std::optional<Rational> greedy_delta(const IntervalSet& Z, std::uint64_t k);

/// Finite union of depth-N cylinders in {0..m-1}^N, stored as sorted codes
/// (code = word read as a base-m numeral, so code order is word order).
class CylinderUnion {
 public:
  CylinderUnion(unsigned m, std::size_t depth, const std::vector<std::vector<unsigned>>& words);
  static CylinderUnion from_codes(unsigned m, std::size_t depth, std::vector<std::uint64_t> codes);
  static CylinderUnion full(unsigned m) { return from_codes(m, 0, {0}); }
  static CylinderUnion none(unsigned m) { return from_codes(m, 0, {}); }

  unsigned base() const { return m_; }
  std::size_t depth() const { return depth_; }
  const std::vector<std::uint64_t>& codes() const { return codes_; }
  std::size_t size() const { return codes_.size(); }
  bool empty() const { return codes_.empty(); }
  std::vector<std::vector<unsigned>> words() const;

  Rational measure() const;
  CylinderUnion refine(std::size_t depth) const;
  /// Whether every sequence starting with `word` (|word| >= depth) is a member.
  bool contains_word(std::span<const unsigned> word) const;
  /// Digit-wise addition mod m of eta (eta[0] is position 1).
  CylinderUnion translate(std::span<const unsigned> eta) const;
  /// Sequences all of whose m variants at `position` are members.
  CylinderUnion robust_core(std::size_t position) const;
  CylinderUnion intersect(const CylinderUnion& other) const;
  bool subset_of(const CylinderUnion& other) const;

  friend bool operator==(const CylinderUnion& a, const CylinderUnion& b);

 private:
  CylinderUnion() = default;
  std::uint64_t digit_weight(std::size_t position) const;  // m^(depth - position)

  unsigned m_ = 2;
  std::size_t depth_ = 0;
  std::vector<std::uint64_t> codes_;
};

Rational measure(const CylinderUnion& S);
CylinderUnion translate_digit(const CylinderUnion& S, std::span<const unsigned> eta);
CylinderUnion robust_core(const CylinderUnion& S, std::size_t position);

struct ShrinkResult {
  CylinderUnion core;
  std::vector<std::size_t> positions;
  /// Every beta agreeing with a member of `core` off `positions` lies in P.
  bool stable = false;
};

/// Iterated robust cores at increasing positions n_1 < n_2 < ... (starting
/// at `start`, default depth + 1), each chosen least such that the core keeps
/// measure above mu(P)/2 at every position from there on. Throws
/// Error(ZeroMeasure) when mu(P) = 0.
ShrinkResult shrink_iterate(const CylinderUnion& P, std::size_t steps,
                            std::optional<std::size_t> start = std::nullopt);

}  // namespace sumcolour
