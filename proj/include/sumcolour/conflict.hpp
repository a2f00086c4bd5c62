#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "sumcolour/rational.hpp"

namespace sumcolour {

/// Self-map of {0, ..., n-1} without fixed points.
class FpfFunction {
 public:
  /// Throws Error(FixedPointFound) if image[i] == i for some i, and
  /// Error(InvalidArgument) if an image lies outside the domain.
  explicit FpfFunction(std::vector<std::size_t> image);

  std::size_t size() const { return image_.size(); }
  std::size_t operator()(std::size_t i) const { return image_[i]; }
  std::span<const std::size_t> image() const { return image_; }

 private:
  std::vector<std::size_t> image_;
};

/// Proper 3-colouring of the graph with edges {x, f(x)}.
///
/// Components are handled in domain order. In each component the unique
/// cycle is coloured first, starting at its earliest vertex and following f:
/// alternating 0/1, with colour 2 on the last vertex when the cycle is odd.
/// The trees hanging off the cycle are then coloured breadth-first (cycle
/// vertices seed the queue in cycle order, preimages are visited in domain
/// order), each vertex taking the least colour unused by its coloured
/// neighbours.
std::vector<std::uint8_t> nofix_colour(const FpfFunction& f);

/// Same colouring for a function on an arbitrary finite domain.
template <class T, class Fn>
std::map<T, std::uint8_t> nofix_colour_of(const std::vector<T>& domain, Fn&& f) {
  std::map<T, std::size_t> position;
  for (std::size_t i = 0; i < domain.size(); ++i) position.emplace(domain[i], i);
  std::vector<std::size_t> image(domain.size());
  for (std::size_t i = 0; i < domain.size(); ++i) image[i] = position.at(f(domain[i]));
  const auto colours = nofix_colour(FpfFunction(std::move(image)));
  std::map<T, std::uint8_t> out;
  for (std::size_t i = 0; i < domain.size(); ++i) out.emplace(domain[i], colours[i]);
  return out;
}

/// r_p = least t >= 1 with p^t > k.
unsigned r_p(std::uint64_t p, std::uint64_t k);

/// P1 = primes dividing k, P2 = all other primes.
struct PrimeSplit {
  std::uint64_t k;

  bool in_p1(std::uint64_t p) const { return k % p == 0; }
  bool in_p2(std::uint64_t p) const { return k % p != 0; }
};

PrimeSplit prime_split(std::uint64_t k);

/// p-adic valuation of k; throws Error(NotInP1) when p does not divide k.
unsigned m_p(std::uint64_t p, std::uint64_t k);

/// The residue 3-colouring psi_p: psi_p(a) != psi_p(k*a mod p^r) on units.
class PsiTable {
 public:
  /// Throws Error(NotPrime), Error(PInDividesK), or Error(InvalidArgument)
  /// for k < 2.
  static PsiTable build(std::uint64_t p, std::uint64_t k);

  /// Memoized build shared across threads.
  static std::shared_ptr<const PsiTable> shared(std::uint64_t p, std::uint64_t k);

  std::uint64_t p() const { return p_; }
  std::uint64_t k() const { return k_; }
  unsigned r() const { return r_; }
  std::uint64_t modulus() const { return modulus_; }

  /// Colour of the residue class of a; throws Error(NotCoprime) if p | a.
  std::uint8_t eval(const Integer& a) const;
  std::uint8_t eval(std::uint64_t a) const;

  /// (residue, colour) for every unit residue, ascending.
  std::map<std::uint64_t, std::uint8_t> table() const;

  nlohmann::json to_json() const;

 private:
  PsiTable() = default;

  std::uint64_t p_ = 0;
  std::uint64_t k_ = 0;
  unsigned r_ = 0;
  std::uint64_t modulus_ = 0;
  std::vector<std::uint8_t> colour_;  // indexed by residue; kNoColour for non-units
};

std::shared_ptr<const PsiTable> psi_p(std::uint64_t p, std::uint64_t k);
std::uint8_t psi_p_eval(const PsiTable& table, const Integer& a);

}  // namespace sumcolour
