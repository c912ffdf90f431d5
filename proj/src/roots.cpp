#include "gumbel/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gumbel/error.hpp"

namespace gumbel {

namespace {

using cd = std::complex<double>;

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Horner for p and p' together.
std::pair<cd, cd> eval_with_derivative(const std::vector<double>& a, cd z) {
  cd p = 0.0;
  cd dp = 0.0;
  for (std::size_t k = a.size(); k-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[k];
  }
  return {p, dp};
}

cd newton_polish(const std::vector<double>& a, cd z, int steps) {
  for (int i = 0; i < steps; ++i) {
    auto [p, dp] = eval_with_derivative(a, z);
    if (dp == 0.0) break;
    const cd next = z - p / dp;
    if (std::abs(eval_with_derivative(a, next).first) > std::abs(p)) break;
    z = next;
  }
  return z;
}

bool root_less(const ComplexRoot& x, const ComplexRoot& y) {
  if (x.value.real() != y.value.real()) return x.value.real() < y.value.real();
  return x.value.imag() < y.value.imag();
}

// Forces the exact real-root count and conjugate symmetry onto the numeric
// roots of one real squarefree factor.
void impose_real_structure(std::vector<cd>& roots, int real_count, const std::vector<double>& a) {
  std::vector<std::size_t> order(roots.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return std::abs(roots[i].imag()) / (1.0 + std::abs(roots[i].real())) <
           std::abs(roots[j].imag()) / (1.0 + std::abs(roots[j].real()));
  });

  std::vector<bool> done(roots.size(), false);
  for (int k = 0; k < real_count && k < static_cast<int>(order.size()); ++k) {
    const std::size_t i = order[static_cast<std::size_t>(k)];
    roots[i] = newton_polish(a, cd(roots[i].real(), 0.0), 3);
    roots[i] = cd(roots[i].real(), 0.0);
    done[i] = true;
  }

  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (done[i] || roots[i].imag() < 0.0) continue;
    std::size_t best = roots.size();
    double best_dist = INFINITY;
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (j == i || done[j]) continue;
      const double dist = std::abs(roots[j] - std::conj(roots[i]));
      if (dist < best_dist) {
        best_dist = dist;
        best = j;
      }
    }
    if (best == roots.size()) continue;
    const double re = 0.5 * (roots[i].real() + roots[best].real());
    const double im = 0.5 * (std::abs(roots[i].imag()) + std::abs(roots[best].imag()));
    roots[i] = cd(re, im);
    roots[best] = cd(re, -im);
    done[i] = done[best] = true;
  }
}

}  // namespace

int count_distinct_real_roots(const Poly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "real root count of the zero polynomial");
  if (p.is_constant()) return 0;
  const std::vector<Poly> chain = sturm_sequence(p);
  std::vector<int> at_neg_inf;
  std::vector<int> at_pos_inf;
  for (const Poly& q : chain) {
    if (q.is_zero()) continue;
    const int lc = q.leading().sign();
    at_pos_inf.push_back(lc);
    at_neg_inf.push_back(q.degree() % 2 == 0 ? lc : -lc);
  }
  return sign_changes(at_neg_inf) - sign_changes(at_pos_inf);
}

std::vector<cd> aberth_roots(const std::vector<double>& coeffs, double tol) {
  std::vector<double> a = coeffs;
  while (!a.empty() && a.back() == 0.0) a.pop_back();
  if (a.size() < 2) throw Error(Errc::ConstantPolynomial, "no roots for a constant polynomial");
  const std::size_t n = a.size() - 1;
  const double lead = a.back();
  for (double& c : a) c /= lead;

  if (n == 1) return {cd(-a[0], 0.0)};

  // Start on a circle at the geometric mean of the root moduli, rotated off
  // the real axis so conjugate pairs separate.
  double radius = std::pow(std::abs(a[0]), 1.0 / static_cast<double>(n));
  if (!(radius > 0.0) || !std::isfinite(radius)) radius = 1.0;
  std::vector<cd> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
    z[k] = std::polar(radius, angle);
  }

  std::vector<bool> converged(n, false);
  for (int iter = 0; iter < 1000; ++iter) {
    bool all = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (converged[k]) continue;
      auto [p, dp] = eval_with_derivative(a, z[k]);
      if (p == 0.0) {
        converged[k] = true;
        continue;
      }
      const cd ratio = p / dp;
      cd repulsion = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      }
      const cd step = ratio / (1.0 - ratio * repulsion);
      z[k] -= step;
      if (std::abs(step) <= tol * (1.0 + std::abs(z[k]))) converged[k] = true;
      else all = false;
    }
    if (all) break;
  }
  for (auto& root : z) root = newton_polish(a, root, 2);
  return z;
}

double relative_residual(const Poly& p, std::complex<double> z) {
  double scale = 0.0;
  double power = 1.0;
  for (const Rational& c : p.coeffs()) {
    scale += std::abs(c.to_double()) * power;
    power *= std::abs(z);
  }
  if (scale == 0.0) return 0.0;
  return std::abs(p.eval(z)) / scale;
}

std::vector<ComplexRoot> complex_roots(const Poly& p, double tol) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "roots of the zero polynomial");
  if (p.is_constant()) throw Error(Errc::ConstantPolynomial, "roots of a constant polynomial");

  std::vector<ComplexRoot> out;
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    std::vector<cd> values;
    if (factor.degree() == 1) {
      values.emplace_back((-factor.coeff(0) / factor.coeff(1)).to_double(), 0.0);
    } else {
      const std::vector<double> a = factor.to_double();
      values = aberth_roots(a, std::min(tol, 1e-14));
      impose_real_structure(values, count_distinct_real_roots(factor), a);
    }
    for (const cd& v : values) out.push_back({v, mult});
  }
  std::sort(out.begin(), out.end(), root_less);
  return out;
}

}  // namespace gumbel
