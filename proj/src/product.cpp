#include "sumcolour/product.hpp"

#include <algorithm>
#include <string>

#include "sumcolour/conflict.hpp"
#include "sumcolour/errors.hpp"
#include "sumcolour/exact_core.hpp"
#include "sumcolour/phi.hpp"
#include "sumcolour/rng.hpp"

namespace sumcolour {

bool QVec::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q.is_zero(); });
}

QVec& QVec::operator+=(const QVec& o) {
  if (o.dim() != dim()) {
    throw Error(Errc::InvalidArgument,
                "dimension mismatch " + std::to_string(dim()) + " vs " + std::to_string(o.dim()));
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

QVec QVec::scaled(const Rational& c) const {
  QVec out = *this;
  for (auto& q : out.coords_) q *= c;
  return out;
}

GammaColour GammaColour::from_index(std::uint32_t index) {
  if (index >= kGammaColours) throw Error(Errc::InvalidArgument, "gamma index out of range");
  GammaColour c;
  c.f = static_cast<std::uint8_t>(index / 24);
  c.g = static_cast<std::uint8_t>(index / 8 % 3);
  c.h = static_cast<std::uint8_t>(index / 4 % 2);
  c.theta = static_cast<std::uint8_t>(index % 4);
  return c;
}

namespace {

struct Analysis {
  std::vector<PhiDecomp> parts;  // per coordinate
  SupportStats stats;
  std::uint64_t g_prime = 0;     // largest P2 prime attaining N
  std::size_t g_coord = 0;       // largest coordinate attaining N at g_prime
};

Analysis analyse(const QVec& x, std::uint64_t k) {
  const PrimeSplit split = prime_split(k);
  Analysis a;
  a.parts.reserve(x.dim());
  for (const auto& q : x.coords()) a.parts.push_back(decompose(q));

  SupportStats& s = a.stats;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    s.sigma += x[i].abs();
    for (const auto& part : a.parts[i].parts) {
      s.primes.push_back(part.p);
      if (split.in_p2(part.p)) {
        // Ties on N resolve to the largest prime, then the largest coordinate.
        if (part.n > s.N || (part.n == s.N && (part.p > a.g_prime || (part.p == a.g_prime && i > a.g_coord)))) {
          s.N = part.n;
          a.g_prime = part.p;
          a.g_coord = i;
        }
      } else {
        s.L = std::max(s.L, part.n / m_p(part.p, k));
      }
    }
  }
  std::sort(s.primes.begin(), s.primes.end());
  s.primes.erase(std::unique(s.primes.begin(), s.primes.end()), s.primes.end());
  if (!s.primes.empty()) {
    s.max_prime = s.primes.back();
    for (std::size_t i = 0; i < x.dim(); ++i) {
      if (a.parts[i].find(s.max_prime) != nullptr) s.ell = i;
    }
  }
  return a;
}

}  // namespace

SupportStats support_stats(const QVec& x, std::uint64_t k) { return analyse(x, k).stats; }

GammaColour gamma(const QVec& x, std::uint64_t k) {
  const Analysis a = analyse(x, k);
  const SupportStats& s = a.stats;
  GammaColour c;
  if (s.max_prime != 0 && k % s.max_prime != 0) {
    const auto* part = a.parts[*s.ell].find(s.max_prime);
    c.f = psi_p(s.max_prime, k)->eval(part->a);
  }
  if (s.N > 0) {
    const auto* part = a.parts[a.g_coord].find(a.g_prime);
    c.g = psi_p(a.g_prime, k)->eval(part->a);
  }
  c.h = static_cast<std::uint8_t>(s.L % 2);
  if (s.sigma.sign() > 0) {
    const BandIndex j = flog(k, 2, s.sigma);
    c.theta = static_cast<std::uint8_t>(((j % 4) + 4) % 4);
  }
  return c;
}

QVec separate(const QVec& u, std::span<const QVec> X, std::uint64_t k) {
  const Rational kq(from_u64(k));
  for (const auto& x : X) {
    if (gamma(u + x, k) != gamma(x.scaled(kq), k)) return x;
  }
  throw Error(Errc::NoWitness, "no element of X separates u (|X|=" + std::to_string(X.size()) + ")");
}

std::vector<QVec> case_generator(GammaCase which, std::size_t m, std::uint64_t k, std::size_t size,
                                 std::uint64_t seed) {
  if (m < 1) throw Error(Errc::InvalidArgument, "dimension must be >= 1");
  if (size < 1) throw Error(Errc::InvalidArgument, "size must be >= 1");
  if (k < 2) throw Error(Errc::InvalidArgument, "k must be >= 2");
  Rng rng(seed);
  std::vector<QVec> out;
  out.reserve(size);
  auto unit = [&](const Rational& value) {
    QVec v = QVec::zero(m);
    v[m == 1 ? 0 : rng.below(m)] = value;
    return v;
  };

  switch (which) {
    case GammaCase::I: {
      QVec base = QVec::zero(m);
      for (std::size_t i = 0; i < m; ++i) base[i] = rng.rational(20, 20);
      Integer offset = 0;
      Integer power = 1;
      for (std::size_t i = 0; i < size; ++i) {
        QVec v = base;
        v[0] += Rational(offset);
        out.push_back(std::move(v));
        power *= 8;
        offset = power - 1;
      }
      break;
    }
    case GammaCase::II: {
      std::uint64_t p = 2 * k;
      while (out.size() < size) {
        ++p;
        if (is_prime(p)) out.push_back(unit(Rational(1, from_u64(p))));
      }
      break;
    }
    case GammaCase::III: {
      std::uint64_t p = 2;
      while (k % p == 0 || !is_prime(p)) ++p;
      for (std::size_t n = 1; n <= size; ++n) out.push_back(unit(Rational(1, pow_u(p, n))));
      break;
    }
    case GammaCase::IV: {
      std::uint64_t p = 2;
      while (k % p != 0 || !is_prime(p)) ++p;
      const unsigned mp = m_p(p, k);
      for (std::size_t n = 1; n <= size; ++n) out.push_back(unit(Rational(1, pow_u(p, n * mp))));
      break;
    }
  }
  return out;
}

}  // namespace sumcolour
