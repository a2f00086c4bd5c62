#include "sumcolour/band.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "sumcolour/errors.hpp"

namespace sumcolour {

BandParams band_params(std::uint64_t k, std::uint64_t m) {
  if (k < 1 || k >= m) {
    throw Error(Errc::BadOrder, "need 1 <= k < m, got k=" + std::to_string(k) + " m=" + std::to_string(m));
  }
  BandParams out;
  out.k = k;
  out.m = m;
  if (k == 1) return out;

  out.branch = BandBranch::KGt1;
  const Integer kz = from_u64(k);
  const Integer mz = from_u64(m);
  unsigned u = 1;
  while (pow(kz, u + 1) > pow(mz, u)) ++u;
  out.u = u;
  out.v = flog(k, u, Rational(mz));
  out.l = out.v + 2 - static_cast<std::int64_t>(u);
  return out;
}

BandIndex band_of(const BandParams& params, const Rational& x) {
  return flog(params.base(), params.root(), x);
}

std::uint32_t band_colour(const BandParams& params, const Rational& x) {
  if (x.is_zero()) return 0;
  const BandIndex j = band_of(params, x.abs());
  const std::int64_t mod = params.modulus();
  return static_cast<std::uint32_t>(((j % mod) + mod) % mod);
}

bool band_property_check(const BandParams& params, BandIndex t, std::span<const Rational> F,
                         std::span<const Rational> H) {
  if (F.size() != params.m) {
    throw Error(Errc::InvalidArgument, "F must have m=" + std::to_string(params.m) + " elements");
  }
  if (H.size() != params.k) {
    throw Error(Errc::InvalidArgument, "H must have k=" + std::to_string(params.k) + " elements");
  }
  std::vector<Rational> sorted_f(F.begin(), F.end());
  std::sort(sorted_f.begin(), sorted_f.end());
  if (std::adjacent_find(sorted_f.begin(), sorted_f.end()) != sorted_f.end()) {
    throw Error(Errc::InvalidArgument, "F has repeated elements");
  }
  for (const auto& x : F) {
    if (x.sign() <= 0 || band_of(params, x) != t) {
      throw Error(Errc::BandMismatch, x.str() + " is not in band " + std::to_string(t));
    }
  }
  std::vector<Rational> sorted_h(H.begin(), H.end());
  std::sort(sorted_h.begin(), sorted_h.end());
  if (std::adjacent_find(sorted_h.begin(), sorted_h.end()) != sorted_h.end()) {
    throw Error(Errc::InvalidArgument, "H has repeated elements");
  }
  if (!std::includes(sorted_f.begin(), sorted_f.end(), sorted_h.begin(), sorted_h.end())) {
    throw Error(Errc::InvalidArgument, "H is not a subset of F");
  }
  Rational sum_h;
  for (const auto& x : H) sum_h += x;
  Rational sum_f;
  for (const auto& x : F) sum_f += x;
  return band_colour(params, sum_h) != band_colour(params, sum_f);
}

}  // namespace sumcolour
