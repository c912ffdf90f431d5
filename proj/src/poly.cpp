#include "gumbel/poly.hpp"

#include <algorithm>

#include "gumbel/error.hpp"

namespace gumbel {

namespace {

// Integer polynomials for remainder sequences, ascending and trimmed.
using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Divides out the positive content.
void make_primitive(ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (g == 0 || g == 1) return;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Positive multiple of p with integer coefficients, made primitive.
ZPoly to_primitive(const Poly& p) {
  mpz_class den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.raw().get_den_mpz_t());
  ZPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.raw().get_num() * (den / c.raw().get_den()));
  make_primitive(out);
  return out;
}

Poly from_integer(const ZPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& v : p) c.emplace_back(v);
  return Poly(std::move(c));
}

// Pseudo-remainder: returns r with lc(b)^steps * a = q b + r.
ZPoly pseudo_remainder(ZPoly r, const ZPoly& b, int& steps) {
  steps = 0;
  const std::size_t db = b.size() - 1;
  const mpz_class& lcb = b.back();
  while (!r.empty() && r.size() - 1 >= db) {
    const mpz_class lr = r.back();
    const std::size_t shift = r.size() - 1 - db;
    for (auto& c : r) c *= lcb;
    for (std::size_t j = 0; j <= db; ++j) r[shift + j] -= lr * b[j];
    ztrim(r);
    ++steps;
  }
  return r;
}

}  // namespace

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

int Poly::degree() const {
  if (is_zero()) throw Error(Errc::ZeroPolynomial, "degree of the zero polynomial");
  return static_cast<int>(coeffs_.size()) - 1;
}

const Rational& Poly::leading() const {
  if (is_zero()) throw Error(Errc::ZeroPolynomial, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out;
  out.reserve(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    out.push_back(coeffs_[k] * Rational(static_cast<long>(k)));
  }
  return Poly(std::move(out));
}

Poly Poly::monic() const {
  const Rational lc = leading();
  if (lc == 1) return *this;
  Poly out = *this;
  const Rational inv = Rational(1) / lc;
  for (auto& c : out.coeffs_) c *= inv;
  return out;
}

Rational Poly::eval(const Rational& t) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

double Poly::eval(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->to_double();
  return acc;
}

std::complex<double> Poly::eval(std::complex<double> t) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->to_double();
  return acc;
}

std::vector<double> Poly::to_double() const {
  std::vector<double> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.to_double());
  return out;
}

std::vector<std::string> Poly::to_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.str());
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (std::size_t k = p.coeffs_.size(); k-- > 0;) {
    const Rational& c = p.coeffs_[k];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    const Rational mag = c.abs();
    if (k == 0 || mag != 1) os << mag;
    if (k >= 1) os << (k == 0 || mag != 1 ? "*" : "") << "t";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os;
}

DivResult divmod(const Poly& dividend, const Poly& divisor) {
  if (divisor.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  if (dividend.is_zero() || dividend.degree() < divisor.degree()) return {Poly{}, dividend};

  const int db = divisor.degree();
  const Rational inv_lc = Rational(1) / divisor.leading();
  std::vector<Rational> rem = dividend.coeffs();
  std::vector<Rational> quot(rem.size() - static_cast<std::size_t>(db));
  for (std::size_t k = rem.size(); k-- > static_cast<std::size_t>(db);) {
    if (rem[k].is_zero()) continue;
    const Rational q = rem[k] * inv_lc;
    const std::size_t shift = k - static_cast<std::size_t>(db);
    quot[shift] = q;
    for (int j = 0; j <= db; ++j) rem[shift + static_cast<std::size_t>(j)] -= q * divisor.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& dividend, const Poly& divisor) {
  DivResult r = divmod(dividend, divisor);
  if (!r.remainder.is_zero()) {
    throw Error(Errc::InternalDisagreement, "exact_div: divisor does not divide dividend");
  }
  return std::move(r.quotient);
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(Errc::ZeroPolynomial, "gcd of two zero polynomials");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  // Primitive remainder sequence over the integers.
  ZPoly x = to_primitive(a);
  ZPoly y = to_primitive(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    int steps = 0;
    ZPoly r = pseudo_remainder(x, y, steps);
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  return from_integer(x).monic();
}

std::vector<Poly> sturm_sequence(const Poly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "Sturm sequence of the zero polynomial");
  std::vector<ZPoly> chain{to_primitive(p)};
  if (!p.is_constant()) chain.push_back(to_primitive(p.derivative()));
  while (chain.size() >= 2 && chain.back().size() > 1) {
    const ZPoly& b = chain.back();
    int steps = 0;
    ZPoly r = pseudo_remainder(chain[chain.size() - 2], b, steps);
    if (r.empty()) break;
    make_primitive(r);
    // r carries lc(b)^steps; the next element is -rem up to a positive factor.
    const bool flip = !(b.back() < 0 && steps % 2 == 1);
    if (flip) {
      for (auto& c : r) c = -c;
    }
    chain.push_back(std::move(r));
  }
  std::vector<Poly> out;
  out.reserve(chain.size());
  for (const auto& z : chain) out.push_back(from_integer(z));
  return out;
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "squarefree part of the zero polynomial");
  if (p.is_constant()) return Poly::constant(1);
  return exact_div(p, gcd(p, p.derivative())).monic();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "squarefree decomposition of zero");
  std::vector<std::pair<Poly, int>> out;
  if (p.is_constant()) return out;

  // Yun's algorithm over a field of characteristic zero.
  const Poly dp = p.derivative();
  Poly a = gcd(p, dp);
  Poly b = exact_div(p, a);
  Poly c = exact_div(dp, a);
  Poly d = c - b.derivative();
  for (int k = 1; !b.is_constant(); ++k) {
    Poly ak = gcd(b, d);
    b = exact_div(b, ak);
    c = exact_div(d, ak);
    d = c - b.derivative();
    if (!ak.is_constant()) out.emplace_back(ak.monic(), k);
  }
  return out;
}

Rational resultant(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) throw Error(Errc::ZeroPolynomial, "resultant with a zero polynomial");

  // Euclidean recurrence: res(a, b) = (-1)^(deg a · deg b) lc(b)^(deg a - deg r) res(b, r).
  Poly x = a;
  Poly y = b;
  Rational acc(1);
  while (true) {
    const int m = x.degree();
    const int n = y.degree();
    if (n == 0) return acc * y.leading().pow(static_cast<unsigned>(m));
    Poly r = divmod(x, y).remainder;
    if (r.is_zero()) return Rational(0);
    const int p = r.degree();
    if ((m % 2 == 1) && (n % 2 == 1)) acc = -acc;
    acc *= y.leading().pow(static_cast<unsigned>(m - p));
    x = std::move(y);
    y = std::move(r);
  }
}

std::pair<Poly, int> strip_roots(const Poly& p, const Poly& w) {
  if (w.is_zero() || w.is_constant()) {
    throw Error(Errc::ConstantPolynomial, "root set polynomial must be nonconstant");
  }
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "cannot strip roots from the zero polynomial");
  Poly rest = p;
  int total = 0;
  while (true) {
    Poly h = gcd(rest, w);
    if (h.is_constant()) break;
    total += h.degree();
    rest = exact_div(rest, h);
  }
  return {std::move(rest), total};
}

int multiplicity_in(const Poly& p, const Poly& w) { return strip_roots(p, w).second; }

}  // namespace gumbel
