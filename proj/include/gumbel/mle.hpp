#pragma once

#include <cstddef>
#include <vector>

#include "gumbel/ml_degree.hpp"
#include "gumbel/model.hpp"

namespace gumbel {

/// A root counts as real when |Im| ≤ kRealRootFilter · (1 + |Re|).
inline constexpr double kRealRootFilter = 1e-8;
/// Log-likelihood values closer than this are ties; the smaller θ wins.
inline constexpr double kLoglikTie = 1e-12;

struct MleResult {
  double theta_hat = 0.0;
  bool at_boundary = true;
  std::vector<double> interior_candidates;  // real score roots in (0, 1), ascending
  double loglik_at_hat = 0.0;
  int real_root_count_in_unit = 0;          // real score roots in [0, 1]
};

/// Maximizes ℓ over {0, 1} and the real solutions of the score equation
/// inside (0, 1). The solutions come from report.solutions, the numerator f
/// with every common zero of f and g removed.
MleResult solve_mle(const Dataset& ds, const MlDegreeReport& report, double tol = kDefaultRootTol);

struct CurvePoint {
  double theta = 0.0;
  double loglik = 0.0;
  double likelihood_shape = 0.0;  // exp(-θ Σc) g(θ), proportional to L(θ)
};

struct CurveSeries {
  std::vector<CurvePoint> grid;
  std::size_t argmax = 0;
  bool increasing = false;  // strictly, over the whole grid
  bool decreasing = false;  // strictly, over the whole grid
  bool unimodal = false;    // strict interior peak
};

/// ℓ and the likelihood shape on a uniform grid of `points` values covering
/// [0, 1]. Throws InvalidArgument for points < 2.
CurveSeries likelihood_curve(const Dataset& ds, int points);

}  // namespace gumbel
