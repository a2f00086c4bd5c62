#pragma once

#include <cstdint>
#include <span>

#include "sumcolour/exact_core.hpp"
#include "sumcolour/rational.hpp"

namespace sumcolour {

enum class BandBranch { K1, KGt1 };

/// Parameters of the band colouring separating k-fold from m-fold sums.
///
/// K1 (k = 1): colour by floor(log_m x) mod 2.
/// KGt1 (k >= 2): with alpha = k^(1/u), u least such that k^(u+1) <= m^u,
/// v such that alpha^v <= m < alpha^(v+1), and l = v + 2 - u, colour by
/// floor(log_alpha x) mod l. alpha is never materialized.
struct BandParams {
  std::uint64_t k = 1;
  std::uint64_t m = 2;
  BandBranch branch = BandBranch::K1;
  unsigned u = 1;
  std::int64_t v = 1;
  std::int64_t l = 2;

  /// Base and root exponent handed to flog.
  std::uint64_t base() const { return branch == BandBranch::K1 ? m : k; }
  unsigned root() const { return branch == BandBranch::K1 ? 1U : u; }
  std::int64_t modulus() const { return branch == BandBranch::K1 ? 2 : l; }
};

/// Throws Error(BadOrder) unless 1 <= k < m.
BandParams band_params(std::uint64_t k, std::uint64_t m);

/// Band of a positive x.
BandIndex band_of(const BandParams& params, const Rational& x);

/// Colour in [0, modulus); x < 0 takes the colour of |x|, and 0 gets 0.
std::uint32_t band_colour(const BandParams& params, const Rational& x);

/// For m distinct elements F of band t and a k-subset H of F, whether
/// sum(H) and sum(F) get different colours (which the construction forces).
/// Throws Error(BandMismatch) if an element of F lies outside band t or is
/// not positive, and Error(InvalidArgument) for wrong sizes, repeated
/// elements, or H not contained in F.
bool band_property_check(const BandParams& params, BandIndex t, std::span<const Rational> F,
                         std::span<const Rational> H);

}  // namespace sumcolour
