#include "gumbel/ml_degree.hpp"

#include <string>

#include "gumbel/error.hpp"

namespace gumbel {

DirectDegree ml_degree_direct(const Poly& f, const Poly& g, double tol) {
  DirectDegree out;
  const int deg_f = f.degree();
  const Poly common = gcd(f, g);
  if (common.is_constant()) {
    out.ml_degree = deg_f;
    out.solutions = f;
    return out;
  }

  auto [rest, removed] = strip_roots(f, squarefree_part(common));
  out.ml_degree = deg_f - removed;
  out.solutions = std::move(rest);
  out.common_zeros = common_zeros_with_multiplicity(f, g, tol);

  int per_zero = 0;
  for (const auto& rec : out.common_zeros) per_zero += rec.mult_in_f;
  if (per_zero != removed) {
    throw Error(Errc::InternalDisagreement, "common-zero multiplicities sum to " + std::to_string(per_zero) +
                                                " but the gcd chain removed " + std::to_string(removed));
  }
  return out;
}

int ml_degree_structural(const ZeroConfiguration& cfg) {
  const int n = static_cast<int>(cfg.n);
  switch (cfg.config_case) {
    case ConfigCase::GenericDisjoint: return 2 * n;
    case ConfigCase::SimpleDoublesOnly: return 2 * n - cfg.n1;
    case ConfigCase::AllPairsShareNoDouble: return n + 1;
    case ConfigCase::AllPairsShareOneDouble: return n;
    case ConfigCase::RepeatedGroupsNoDouble: return 2 * n + cfg.l - cfg.m;
    case ConfigCase::DoubleAnchoredGroups: return 2 * n - cfg.m;
    case ConfigCase::N3Triangle: return cfg.triple_common ? 4 : 3;
    case ConfigCase::Mixed: {
      int removed = 0;
      for (const auto& group : cfg.groups) removed += group.predicted_mult_in_f();
      return 2 * n - removed;
    }
  }
  throw Error(Errc::InternalDisagreement, "unhandled configuration case");
}

void ml_degree_bounds_check(int n, int l, int m) {
  if (m > 2 * n - l) {
    throw Error(Errc::BoundViolation, "m = " + std::to_string(m) + " exceeds 2n - l = " + std::to_string(2 * n - l));
  }
  if (3 * l > 2 * n) {
    throw Error(Errc::BoundViolation, "l = " + std::to_string(l) + " exceeds 2n/3 for n = " + std::to_string(n));
  }
}

void ml_degree_bounds_check(const ZeroConfiguration& cfg) {
  if (cfg.config_case != ConfigCase::DoubleAnchoredGroups) return;
  ml_degree_bounds_check(static_cast<int>(cfg.n), cfg.l, cfg.m);
}

MlDegreeReport build_report(const Dataset& ds, double tol) {
  MlDegreeReport r;
  r.n = ds.size();
  r.score = build_score_pair(ds);
  r.degree_f = r.score.f.degree();
  r.roots_f = complex_roots(r.score.f, tol);
  r.roots_g = complex_roots(r.score.g, tol);

  DirectDegree direct = ml_degree_direct(r.score.f, r.score.g, tol);
  r.ml_degree_direct = direct.ml_degree;
  r.common_zeros = std::move(direct.common_zeros);
  r.solutions = std::move(direct.solutions);

  r.config = classify(ds);
  ml_degree_bounds_check(r.config);
  r.ml_degree_structural = ml_degree_structural(r.config);
  r.agreement = r.ml_degree_direct == r.ml_degree_structural;

  r.diagnostics = r.config.diagnostics;
  const int two_n = 2 * static_cast<int>(r.n);
  if (r.degree_f != two_n) {
    r.diagnostics.push_back("deg f = " + std::to_string(r.degree_f) + " differs from 2n = " + std::to_string(two_n));
  }
  if (r.ml_degree_direct < 1 || r.ml_degree_direct > two_n) {
    r.diagnostics.push_back("ML-degree " + std::to_string(r.ml_degree_direct) + " outside [1, 2n]");
  }
  return r;
}

MlDegreeReport analyze(const Dataset& ds, double tol) {
  MlDegreeReport r = build_report(ds, tol);
  if (!r.agreement) {
    throw Error(Errc::InternalDisagreement,
                "direct ML-degree " + std::to_string(r.ml_degree_direct) + " != structural " +
                    std::to_string(r.ml_degree_structural) + " for configuration " +
                    std::string(config_case_name(r.config.config_case)));
  }
  return r;
}

}  // namespace gumbel
