#include "sumcolour/phi.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>

#include "sumcolour/errors.hpp"

namespace sumcolour {

namespace {

constexpr std::uint64_t kSieveCeiling = 1ULL << 26;

// Append-only table of primes, grown by doubling the sieve bound.
class PrimeTable {
 public:
  // Primes up to at least `bound` (capped at kSieveCeiling).
  std::vector<std::uint64_t> upto(std::uint64_t bound) {
    bound = std::min(bound, kSieveCeiling);
    {
      std::shared_lock lock(mu_);
      if (limit_ >= bound) return primes_;
    }
    std::unique_lock lock(mu_);
    if (limit_ < bound) {
      std::uint64_t next = std::max<std::uint64_t>(limit_ * 2, 1024);
      while (next < bound) next *= 2;
      sieve(std::min(next, kSieveCeiling));
    }
    return primes_;
  }

 private:
  void sieve(std::uint64_t n) {
    std::vector<bool> composite(n + 1, false);
    primes_.clear();
    for (std::uint64_t i = 2; i <= n; ++i) {
      if (composite[i]) continue;
      primes_.push_back(i);
      for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
    }
    limit_ = n;
  }

  std::shared_mutex mu_;
  std::vector<std::uint64_t> primes_;
  std::uint64_t limit_ = 0;
};

PrimeTable& prime_table() {
  static PrimeTable table;
  return table;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize_small(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  // Wheel mod 30 for the rest.
  static constexpr std::uint64_t kGaps[] = {4, 2, 4, 2, 4, 6, 2, 6};
  std::uint64_t p = 7;
  std::size_t gi = 0;
  while (p <= n / p) {
    if (n % p == 0) {
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
    p += kGaps[gi];
    gi = (gi + 1) % 8;
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// Pollard-Brent rho; n composite and odd.
Integer rho_divisor(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1, q = 1, ys;
    auto step = [&](Integer& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    for (unsigned long r = 1; d == 1; r *= 2) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      for (unsigned long k = 0; k < r && d == 1; k += 128) {
        ys = y;
        for (unsigned long i = 0; i < std::min(128UL, r - k); ++i) {
          step(y);
          Integer diff = x - y;
          q = q * abs(diff) % n;
        }
        mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (d == n) {
      do {
        step(ys);
        Integer diff = x - ys;
        mpz_gcd(d.get_mpz_t(), Integer(abs(diff)).get_mpz_t(), n.get_mpz_t());
      } while (d == 1);
    }
    if (d != n) return d;
  }
}

void split_cofactor(const Integer& n, std::vector<Integer>& primes) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
    primes.push_back(n);
    return;
  }
  const Integer d = rho_divisor(n);
  split_cofactor(d, primes);
  split_cofactor(Integer(n / d), primes);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  const auto f = factorize_small(n);
  return f.size() == 1 && f.front().second == 1;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(const Integer& n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "factorize needs n >= 1");
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 40) return factorize_small(to_u64(n));

  std::vector<std::pair<std::uint64_t, unsigned>> out;
  Integer rest = n;
  const auto primes = prime_table().upto(1ULL << 16);
  bool rest_is_prime = false;
  for (std::uint64_t p : primes) {
    if (fits_u64(rest) && p > to_u64(rest) / p) {
      rest_is_prime = true;
      break;
    }
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        ++e;
      }
      out.emplace_back(p, e);
      if (mpz_sizeinbase(rest.get_mpz_t(), 2) <= 40) {
        for (auto& f : factorize_small(to_u64(rest))) out.push_back(f);
        return out;
      }
    }
  }
  if (rest > 1) {
    std::vector<Integer> big;
    if (rest_is_prime) big.push_back(rest); else split_cofactor(rest, big);
    std::sort(big.begin(), big.end());
    for (std::size_t i = 0; i < big.size();) {
      if (!fits_u64(big[i])) throw Error(Errc::InvalidArgument, "prime factor exceeds 64 bits");
      std::size_t j = i;
      while (j < big.size() && big[j] == big[i]) ++j;
      out.emplace_back(to_u64(big[i]), static_cast<unsigned>(j - i));
      i = j;
    }
  }
  return out;
}

const PrimePowerPart* PhiDecomp::find(std::uint64_t p) const {
  auto it = std::lower_bound(parts.begin(), parts.end(), p,
                             [](const PrimePowerPart& part, std::uint64_t q) { return part.p < q; });
  if (it == parts.end() || it->p != p) return nullptr;
  return &*it;
}

PhiDecomp decompose(const Rational& x) {
  PhiDecomp out;
  if (x.is_integer()) return out;
  const Integer& den = x.den();
  for (const auto& [p, n] : factorize(den)) {
    const Integer pn = pow_u(p, n);
    const Integer cofactor = den / pn;
    // a * cofactor ≡ num (mod p^n)
    Integer inv;
    mpz_invert(inv.get_mpz_t(), cofactor.get_mpz_t(), pn.get_mpz_t());
    Integer a = x.num() * inv;
    mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), pn.get_mpz_t());
    out.value += Rational(a, pn);
    out.parts.push_back({p, n, std::move(a)});
  }
  return out;
}

unsigned n_p(const Rational& x, std::uint64_t p) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  return valuation(x.den(), p);
}

Integer a_p(const Rational& x, std::uint64_t p) {
  const unsigned n = n_p(x, p);
  if (n == 0) return 0;
  const Integer pn = pow_u(p, n);
  const Integer cofactor = x.den() / pn;
  Integer inv;
  mpz_invert(inv.get_mpz_t(), cofactor.get_mpz_t(), pn.get_mpz_t());
  Integer a = x.num() * inv;
  mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), pn.get_mpz_t());
  return a;
}

unsigned valuation(const Integer& z, std::uint64_t p) {
  if (z == 0) return 0;
  Integer rest = z;
  unsigned e = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    ++e;
  }
  return e;
}

}  // namespace sumcolour
