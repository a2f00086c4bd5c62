#include "sumcolour/stepup.hpp"

#include <string>

#include "sumcolour/errors.hpp"
#include "sumcolour/exact_core.hpp"

namespace sumcolour {

FinSeq::FinSeq(std::initializer_list<std::pair<const std::size_t, Rational>> entries) {
  for (const auto& [i, v] : entries) set(i, v);
}

FinSeq::FinSeq(const QVec& v) {
  for (std::size_t i = 0; i < v.dim(); ++i) set(i, v[i]);
}

Rational FinSeq::at(std::size_t index) const {
  auto it = entries_.find(index);
  return it == entries_.end() ? Rational() : it->second;
}

void FinSeq::set(std::size_t index, const Rational& value) {
  if (value.is_zero()) {
    entries_.erase(index);
  } else {
    entries_[index] = value;
  }
}

FinSeq& FinSeq::operator+=(const FinSeq& o) {
  for (const auto& [i, v] : o.entries_) set(i, at(i) + v);
  return *this;
}

FinSeq FinSeq::scaled(const Rational& c) const {
  FinSeq out;
  for (const auto& [i, v] : entries_) out.set(i, v * c);
  return out;
}

QVec FinSeq::truncate(std::size_t last) const {
  QVec out = QVec::zero(last + 1);
  for (const auto& [i, v] : entries_) {
    if (i <= last) out[i] = v;
  }
  return out;
}

std::uint8_t xi(const Rational& t, std::uint64_t k) {
  if (t.is_zero()) throw Error(Errc::ZeroInput, "xi is undefined at 0");
  const BandIndex j = flog(k, 1, t.abs());
  return static_cast<std::uint8_t>(((j % 2) + 2) % 2);
}

std::pair<std::size_t, Rational> mu_eta(const FinSeq& x) {
  if (x.is_zero()) throw Error(Errc::ZeroVector, "mu/eta of the zero sequence");
  const auto& last = *x.entries().rbegin();
  return {last.first, last.second};
}

TauColour tau(const FinSeq& x, std::uint64_t k) {
  if (k < 2) throw Error(Errc::InvalidArgument, "k must be >= 2");
  if (x.is_zero()) return {};
  const auto [mu, eta] = mu_eta(x);
  return TauColour{gamma(x.truncate(mu), k).index(), xi(eta, k)};
}

bool chain_check(std::span<const FinSeq> xs, std::uint64_t k) {
  if (xs.size() != k) {
    throw Error(Errc::InvalidArgument, "chain must have k=" + std::to_string(k) + " elements");
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i].is_zero()) throw Error(Errc::ChainNotIncreasing, "zero sequence in chain");
    if (i > 0 && !(mu_eta(xs[i - 1]).first < mu_eta(xs[i]).first)) {
      throw Error(Errc::ChainNotIncreasing, "mu not strictly increasing at position " + std::to_string(i));
    }
  }
  FinSeq sum;
  for (const auto& x : xs) sum += x;
  const FinSeq multiple = xs.back().scaled(Rational(from_u64(k)));
  return tau(sum, k).xi != tau(multiple, k).xi;
}

}  // namespace sumcolour
