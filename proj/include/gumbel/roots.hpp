#pragma once

#include <complex>
#include <vector>

#include "gumbel/poly.hpp"

namespace gumbel {

inline constexpr double kDefaultRootTol = 1e-10;
inline constexpr double kClusterTol = 1e-8;

struct ComplexRoot {
  std::complex<double> value;
  int multiplicity = 1;
};

/// Number of distinct real roots of p, exact (Sturm sequence over ℚ).
int count_distinct_real_roots(const Poly& p);

/// All complex roots of p with multiplicities.
///
/// Multiplicities come from the exact squarefree decomposition; each
/// squarefree factor is solved by Aberth–Ehrlich iteration and polished with
/// Newton steps. The number of real roots of each factor is fixed exactly by a
/// Sturm count, so real roots carry an exactly zero imaginary part and complex
/// roots come in symmetric conjugate pairs. Sorted by (real, imaginary).
/// Throws for zero or constant p.
std::vector<ComplexRoot> complex_roots(const Poly& p, double tol = kDefaultRootTol);

/// Roots of a squarefree polynomial with double coefficients (no exact
/// structure). Used by complex_roots and by numeric cross-checks.
std::vector<std::complex<double>> aberth_roots(const std::vector<double>& coeffs, double tol = 1e-14);

/// |p(z)| divided by Σ|a_k||z|^k; the backward-error scale of an evaluation.
double relative_residual(const Poly& p, std::complex<double> z);

}  // namespace gumbel
