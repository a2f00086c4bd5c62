#include "sumcolour/rational.hpp"

#include <cctype>
#include <ostream>

#include "sumcolour/errors.hpp"

namespace sumcolour {

namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(Errc::InvalidArgument, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!valid_integer_text(num_text)) {
    throw Error(Errc::InvalidArgument, "malformed rational '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rational(parse_integer(num_text));
  const auto den_text = text.substr(slash + 1);
  if (!valid_integer_text(den_text)) {
    throw Error(Errc::InvalidArgument, "malformed rational '" + std::string(text) + "'");
  }
  return Rational(parse_integer(num_text), parse_integer(den_text));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(Errc::InvalidArgument, "division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const { return num().get_str() + "/" + den().get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Integer pow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Integer pow_u(std::uint64_t base, unsigned long exponent) { return pow(from_u64(base), exponent); }

bool fits_u64(const Integer& z) {
  return sgn(z) >= 0 && mpz_sizeinbase(z.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const Integer& z) {
  if (!fits_u64(z)) throw Error(Errc::InvalidArgument, "integer does not fit 64 bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, z.get_mpz_t());
  return out;
}

Integer from_u64(std::uint64_t v) {
  Integer out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

std::size_t RationalHash::operator()(const Rational& q) const noexcept {
  const std::size_t a = mpz_get_ui(q.num().get_mpz_t());
  const std::size_t b = mpz_get_ui(q.den().get_mpz_t());
  return a * 0x9e3779b97f4a7c15ULL ^ (b + (a << 6) + (a >> 2)) ^ static_cast<std::size_t>(q.sign() + 1);
}

}  // namespace sumcolour
