#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace gumbel {

/// Exact arbitrary-precision rational number.
///
/// Always held in canonical form: numerator and denominator coprime,
/// denominator strictly positive. Backed by GMP's mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpz_class& integer) : v_(integer) {}
  explicit Rational(mpq_class value);

  /// Parses an exact rational from text. Accepts integers ("-3"), decimals
  /// ("2.25", ".5"), scientific notation ("1.5e-3") and fractions ("7/21").
  /// Decimal and scientific forms are converted exactly (2.25 -> 9/4).
  /// Throws Error(ParseError) on malformed input.
  static Rational parse(std::string_view text);

  /// Exact value of a finite double (every finite double is a dyadic rational).
  static Rational from_double(double value);

  const mpq_class& raw() const noexcept { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  int sign() const noexcept { return sgn(v_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  double to_double() const { return v_.get_d(); }

  /// gcd(|num|, den) == 1 and den > 0.
  bool is_canonical() const;

  /// "p/q", or "p" when the denominator is one.
  std::string str() const;

  /// Exact terminating decimal when the denominator has only factors 2 and 5,
  /// otherwise the same as str().
  std::string decimal() const;

  /// Exact square root when both numerator and denominator are perfect squares.
  std::optional<Rational> exact_sqrt() const;

  Rational abs() const;
  Rational pow(unsigned exponent) const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

}  // namespace gumbel
