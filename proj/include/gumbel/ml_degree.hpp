#pragma once

#include <string>
#include <vector>

#include "gumbel/model.hpp"
#include "gumbel/roots.hpp"
#include "gumbel/variety.hpp"

namespace gumbel {

struct DirectDegree {
  int ml_degree = 0;
  std::vector<CommonZeroRecord> common_zeros;
  /// f with every common zero of f and g removed; its roots are exactly the
  /// solutions of the score equation and its degree is ml_degree.
  Poly solutions;
};

/// deg f minus the total multiplicity in f of the distinct common zeros of f
/// and g, counted with an exact gcd chain. Throws InternalDisagreement if the
/// per-zero records do not add up to the chain count.
DirectDegree ml_degree_direct(const Poly& f, const Poly& g, double tol = kDefaultRootTol);

/// ML-degree predicted from the zero-sharing configuration alone.
int ml_degree_structural(const ZeroConfiguration& cfg);

/// Checks m ≤ 2n - l and l ≤ 2n/3 for double-anchored configurations; other
/// cases pass trivially. Throws BoundViolation.
void ml_degree_bounds_check(const ZeroConfiguration& cfg);
void ml_degree_bounds_check(int n, int l, int m);

struct MlDegreeReport {
  std::size_t n = 0;
  int degree_f = 0;
  ScorePair score;
  std::vector<ComplexRoot> roots_f;
  std::vector<ComplexRoot> roots_g;
  std::vector<CommonZeroRecord> common_zeros;
  ZeroConfiguration config;
  Poly solutions;
  int ml_degree_direct = 0;
  int ml_degree_structural = 0;
  bool agreement = false;
  std::vector<std::string> diagnostics;
};

/// Runs both methods and records whether they agree; never throws on disagreement.
MlDegreeReport build_report(const Dataset& ds, double tol = kDefaultRootTol);

/// build_report, then throws InternalDisagreement when the two methods differ.
MlDegreeReport analyze(const Dataset& ds, double tol = kDefaultRootTol);

}  // namespace gumbel
