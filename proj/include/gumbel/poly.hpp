#pragma once

#include <complex>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "gumbel/rational.hpp"

namespace gumbel {

/// Dense univariate polynomial in θ with exact rational coefficients.
///
/// coeffs()[k] is the coefficient of θ^k. The leading coefficient is never
/// zero; the zero polynomial is the empty coefficient list and has no degree.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs) : Poly(std::vector<Rational>(coeffs)) {}

  static Poly constant(const Rational& c) { return Poly({c}); }
  /// θ - root
  static Poly linear_root(const Rational& root) { return Poly({-root, Rational(1)}); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  /// Throws Error(ZeroPolynomial) for the zero polynomial.
  int degree() const;

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of θ^k; zero beyond the degree.
  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  const Rational& leading() const;

  Poly derivative() const;
  /// Scaled so the leading coefficient is one. Throws on the zero polynomial.
  Poly monic() const;

  Rational eval(const Rational& t) const;
  double eval(double t) const;
  std::complex<double> eval(std::complex<double> t) const;

  std::vector<double> to_double() const;
  std::vector<std::string> to_strings() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivResult {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division; deg(remainder) < deg(divisor). Throws DivisionByZero.
DivResult divmod(const Poly& dividend, const Poly& divisor);

/// Exact quotient; the caller asserts divisibility (checked, throws otherwise).
Poly exact_div(const Poly& dividend, const Poly& divisor);

/// Monic greatest common divisor. Throws ZeroPolynomial if both are zero.
Poly gcd(const Poly& a, const Poly& b);

/// Sturm sequence p, p', -rem(...), ... with each element rescaled by a
/// positive constant (integer, primitive coefficients).
std::vector<Poly> sturm_sequence(const Poly& p);

/// p / gcd(p, p'), monic. Throws ZeroPolynomial for p = 0.
Poly squarefree_part(const Poly& p);

/// Yun decomposition p = lc · Π a_k^k with each a_k monic, squarefree and
/// pairwise coprime. Returns the nonconstant (a_k, k) in increasing k.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

/// Resultant of a and b; zero exactly when they share a complex root.
/// Throws ZeroPolynomial on zero input.
Rational resultant(const Poly& a, const Poly& b);

/// Total multiplicity in p of the roots of the squarefree polynomial w:
/// Σ over roots α of w of mult_p(α). Throws ConstantPolynomial for constant w.
int multiplicity_in(const Poly& p, const Poly& w);

/// p with every root of the squarefree w removed completely, together with
/// the number of root factors removed (equal to multiplicity_in(p, w)).
std::pair<Poly, int> strip_roots(const Poly& p, const Poly& w);

}  // namespace gumbel
