#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sumcolour/rational.hpp"

namespace sumcolour {

bool is_prime(std::uint64_t n);

/// Prime factorization of n >= 1 by trial division over a cached sieve.
/// Factors are returned in increasing order of p.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(const Integer& n);

/// One term a/p^n of the fractional-part decomposition.
struct PrimePowerPart {
  std::uint64_t p = 0;
  unsigned n = 0;
  Integer a;

  friend bool operator==(const PrimePowerPart&, const PrimePowerPart&) = default;
};

/// x ≡ sum a/p^n (mod Z), one part per prime factor of den(x), sorted by p.
struct PhiDecomp {
  std::vector<PrimePowerPart> parts;
  Rational value;

  const PrimePowerPart* find(std::uint64_t p) const;
};

PhiDecomp decompose(const Rational& x);

/// n_p(x): exponent of p in den(x); 0 when p does not divide it.
/// Throws Error(NotPrime) when p is not prime.
unsigned n_p(const Rational& x, std::uint64_t p);
/// a_p(x) in [1, p^n_p(x) - 1], or 0 when p does not divide den(x).
Integer a_p(const Rational& x, std::uint64_t p);

/// Valuation of an integer at a prime (v_p(0) is reported as 0).
unsigned valuation(const Integer& z, std::uint64_t p);

}  // namespace sumcolour
