#include "gumbel/mle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gumbel/error.hpp"
#include "gumbel/roots.hpp"

namespace gumbel {

namespace {

double polish_real(const Poly& squarefree, double t) {
  const Poly dp = squarefree.derivative();
  for (int i = 0; i < 4; ++i) {
    const double d = dp.eval(t);
    if (d == 0.0) break;
    const double next = t - squarefree.eval(t) / d;
    if (!std::isfinite(next) || std::abs(squarefree.eval(next)) > std::abs(squarefree.eval(t))) break;
    t = next;
  }
  return t;
}

}  // namespace

MleResult solve_mle(const Dataset& ds, const MlDegreeReport& report, double tol) {
  MleResult out;

  if (!report.solutions.is_constant()) {
    const Poly sqfree = squarefree_part(report.solutions);
    for (const ComplexRoot& r : complex_roots(report.solutions, tol)) {
      const double re = r.value.real();
      if (std::abs(r.value.imag()) > kRealRootFilter * (1.0 + std::abs(re))) continue;
      const double t = polish_real(sqfree, re);
      if (t < 0.0 || t > 1.0) continue;
      ++out.real_root_count_in_unit;
      if (t == 0.0 || t == 1.0) continue;
      if (report.score.g.eval(t) == 0.0) continue;
      if (relative_residual(report.score.f, {t, 0.0}) > tol) continue;
      out.interior_candidates.push_back(t);
    }
  }
  std::sort(out.interior_candidates.begin(), out.interior_candidates.end());

  std::vector<double> candidates;
  candidates.push_back(0.0);
  candidates.insert(candidates.end(), out.interior_candidates.begin(), out.interior_candidates.end());
  candidates.push_back(1.0);

  std::vector<double> values;
  values.reserve(candidates.size());
  for (double t : candidates) values.push_back(log_likelihood(ds, t));
  const double best = *std::max_element(values.begin(), values.end());
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (values[k] >= best - kLoglikTie) {
      out.theta_hat = candidates[k];
      out.loglik_at_hat = values[k];
      break;
    }
  }
  out.at_boundary = out.theta_hat == 0.0 || out.theta_hat == 1.0;
  return out;
}

CurveSeries likelihood_curve(const Dataset& ds, int points) {
  if (points < 2) throw Error(Errc::InvalidArgument, "curve needs at least 2 points, got " + std::to_string(points));
  CurveSeries out;
  out.grid.reserve(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) {
    const double theta = k == points - 1 ? 1.0 : static_cast<double>(k) / static_cast<double>(points - 1);
    const double ll = log_likelihood(ds, theta);
    out.grid.push_back({theta, ll, std::exp(ll)});
  }

  const auto& grid = out.grid;
  for (std::size_t k = 1; k < grid.size(); ++k) {
    if (grid[k].loglik > grid[out.argmax].loglik) out.argmax = k;
  }
  bool up_before = true;
  bool down_after = true;
  out.increasing = true;
  out.decreasing = true;
  for (std::size_t k = 1; k < grid.size(); ++k) {
    const bool up = grid[k].loglik > grid[k - 1].loglik;
    const bool down = grid[k].loglik < grid[k - 1].loglik;
    out.increasing = out.increasing && up;
    out.decreasing = out.decreasing && down;
    if (k <= out.argmax) up_before = up_before && up;
    else down_after = down_after && down;
  }
  out.unimodal = out.argmax > 0 && out.argmax + 1 < grid.size() && up_before && down_after;
  return out;
}

}  // namespace gumbel
