#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sumcolour {

using Integer = mpz_class;

/// Reduced fraction num/den with den > 0; zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const Integer& value) : v_(value) {}
  Rational(const Integer& num, const Integer& den);

  /// Accepts "a/b" or "a" with an optional leading sign; throws
  /// Error(InvalidArgument) on malformed text or a zero denominator.
  static Rational parse(std::string_view text);

  const Integer& num() const { return v_.get_num(); }
  const Integer& den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return den() == 1; }
  Rational abs() const;

  /// Always "a/b", including "0/1" and "5/1".
  std::string str() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.v_, b.v_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return v_; }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// Integer power with a non-negative exponent.
Integer pow(const Integer& base, unsigned long exponent);
Integer pow_u(std::uint64_t base, unsigned long exponent);

/// Fits-check and conversion helpers for small integers.
bool fits_u64(const Integer& z);
std::uint64_t to_u64(const Integer& z);
Integer from_u64(std::uint64_t v);

struct RationalHash {
  std::size_t operator()(const Rational& q) const noexcept;
};

}  // namespace sumcolour
