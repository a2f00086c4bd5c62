#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sumcolour/rational.hpp"

namespace sumcolour {

/// Element of the direct sum of m copies of Q.
class QVec {
 public:
  QVec() = default;
  explicit QVec(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  QVec(std::initializer_list<Rational> coords) : coords_(coords) {}

  static QVec zero(std::size_t m) { return QVec(std::vector<Rational>(m)); }

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }
  bool is_zero() const;

  /// Coordinate-wise; throws Error(InvalidArgument) on a dimension mismatch.
  QVec& operator+=(const QVec& o);
  friend QVec operator+(QVec a, const QVec& b) { return a += b; }
  QVec scaled(const Rational& c) const;

  friend bool operator==(const QVec&, const QVec&) = default;
  friend auto operator<=>(const QVec& a, const QVec& b) { return a.coords_ <=> b.coords_; }

 private:
  std::vector<Rational> coords_;
};

/// Support statistics S, M, ell, N, L, sigma of a vector.
struct SupportStats {
  std::vector<std::uint64_t> primes;  // S, ascending
  std::uint64_t max_prime = 0;        // M, 0 when S is empty
  std::optional<std::size_t> ell;     // largest coordinate with n_M > 0
  unsigned N = 0;                     // max n_p over primes not dividing k
  unsigned L = 0;                     // max floor(n_p / m_p) over primes dividing k
  Rational sigma;                     // sum of |x_i|
};

SupportStats support_stats(const QVec& x, std::uint64_t k);

/// The 72-colour product colouring (f, g, h, theta).
struct GammaColour {
  std::uint8_t f = 0;      // {0,1,2}
  std::uint8_t g = 0;      // {0,1,2}
  std::uint8_t h = 0;      // {0,1}
  std::uint8_t theta = 0;  // {0,1,2,3}

  std::uint32_t index() const { return f * 24U + g * 8U + h * 4U + theta; }
  static GammaColour from_index(std::uint32_t index);

  friend bool operator==(const GammaColour&, const GammaColour&) = default;
};

inline constexpr std::uint32_t kGammaColours = 72;

/// theta of the zero vector is fixed to 0.
GammaColour gamma(const QVec& x, std::uint64_t k);

/// First x in X with gamma(u + x) != gamma(k x). Throws Error(NoWitness)
/// when none exists and Error(InvalidArgument) on mixed dimensions.
QVec separate(const QVec& u, std::span<const QVec> X, std::uint64_t k);

enum class GammaCase { I, II, III, IV };

/// Deterministic families driving each case of the separation argument:
///   I   q + t_i e_0 with a seeded base q and t_i = 8^i - 1;
///   II  e_j / p for successive primes p > 2k;
///   III e_j / p^n, n = 1, 2, ..., for the least prime p not dividing k;
///   IV  e_j / p^(n m_p), n = 1, 2, ..., for the least prime p dividing k.
/// In II-IV the coordinate j is drawn from the seed (always 0 when m = 1).
std::vector<QVec> case_generator(GammaCase which, std::size_t m, std::uint64_t k, std::size_t size,
                                 std::uint64_t seed);

}  // namespace sumcolour
