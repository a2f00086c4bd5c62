#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>

#include "sumcolour/product.hpp"
#include "sumcolour/rational.hpp"

namespace sumcolour {

/// Finitely supported rational sequence; zero entries are never stored.
class FinSeq {
 public:
  FinSeq() = default;
  FinSeq(std::initializer_list<std::pair<const std::size_t, Rational>> entries);
  explicit FinSeq(const QVec& v);

  const std::map<std::size_t, Rational>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }

  Rational at(std::size_t index) const;
  void set(std::size_t index, const Rational& value);

  FinSeq& operator+=(const FinSeq& o);
  friend FinSeq operator+(FinSeq a, const FinSeq& b) { return a += b; }
  FinSeq scaled(const Rational& c) const;

  /// Coordinates 0..last as a vector of dimension last + 1.
  QVec truncate(std::size_t last) const;

  friend bool operator==(const FinSeq&, const FinSeq&) = default;
  friend auto operator<=>(const FinSeq& a, const FinSeq& b) { return a.entries_ <=> b.entries_; }

 private:
  std::map<std::size_t, Rational> entries_;
};

/// xi(t) = floor(log_k |t|) mod 2, so xi(t) != xi(k t).
/// Throws Error(ZeroInput) for t = 0.
std::uint8_t xi(const Rational& t, std::uint64_t k);

/// Largest occupied index and its value; throws Error(ZeroVector).
std::pair<std::size_t, Rational> mu_eta(const FinSeq& x);

/// 144-colour stepped-up colouring (gamma at dimension mu+1, xi(eta)).
struct TauColour {
  std::uint32_t inner = 0;  // gamma index in [0, 72)
  std::uint8_t xi = 0;

  std::uint32_t index() const { return inner * 2U + xi; }

  friend bool operator==(const TauColour&, const TauColour&) = default;
};

inline constexpr std::uint32_t kTauColours = 144;

/// tau of the zero sequence is (0, 0).
TauColour tau(const FinSeq& x, std::uint64_t k);

/// For k sequences with strictly increasing mu, whether the xi part of
/// tau(sum) differs from that of tau(k x_k). Throws
/// Error(ChainNotIncreasing), or Error(InvalidArgument) when |xs| != k.
bool chain_check(std::span<const FinSeq> xs, std::uint64_t k);

}  // namespace sumcolour
