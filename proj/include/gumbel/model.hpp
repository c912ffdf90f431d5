#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gumbel/poly.hpp"
#include "gumbel/rational.hpp"

namespace gumbel {

/// One bivariate observation (x, y) from the positive quadrant.
///
/// The likelihood depends on the observation only through its moments
/// c = x·y and d = x + y - 1, which are always held exactly. The coordinates
/// themselves are exact when given exactly or when they are rational; a
/// sample built from moments whose coordinates are irrational (the roots of
/// t² - (d+1)t + c) keeps only floating-point coordinates.
class Sample {
 public:
  /// Throws Error(NonPositiveCoordinate) unless x > 0 and y > 0.
  static Sample from_xy(Rational x, Rational y);

  /// Sample whose coordinates are the roots of t² - (d+1)t + c. Throws
  /// Error(NonPositiveCoordinate) unless both roots are real and positive,
  /// i.e. c > 0, d + 1 > 0 and (d+1)² ≥ 4c.
  static Sample from_moments(Rational c, Rational d);

  const Rational& c() const noexcept { return c_; }
  const Rational& d() const noexcept { return d_; }

  bool has_exact_xy() const noexcept { return x_.has_value(); }
  const std::optional<Rational>& x() const noexcept { return x_; }
  const std::optional<Rational>& y() const noexcept { return y_; }
  double x_approx() const;
  double y_approx() const;

 private:
  Sample(Rational c, Rational d, std::optional<Rational> x, std::optional<Rational> y)
      : c_(std::move(c)), d_(std::move(d)), x_(std::move(x)), y_(std::move(y)) {}

  Rational c_;
  Rational d_;
  std::optional<Rational> x_;
  std::optional<Rational> y_;
};

/// Nonempty list of samples with no repeated and no swapped observations.
class Dataset {
 public:
  /// Checks, in order: nonempty input, then each pair i < j for an exact
  /// repeat (DuplicateSample) or a coordinate swap (SwappedDuplicate).
  /// Samples whose coordinates are not known exactly are compared through
  /// their moments, which coincide exactly for repeats and swaps.
  static Dataset validate(std::vector<Sample> samples);

  /// Builds samples from exact (x, y) pairs, then validates.
  static Dataset from_xy(std::span<const std::pair<Rational, Rational>> pairs);
  /// Builds samples from exact (c, d) moment pairs, then validates.
  static Dataset from_moments(std::span<const std::pair<Rational, Rational>> pairs);

  std::size_t size() const noexcept { return samples_.size(); }
  const std::vector<Sample>& samples() const noexcept { return samples_; }
  const Sample& operator[](std::size_t i) const { return samples_[i]; }

  /// True when every sample has exact coordinates.
  bool all_exact_xy() const;

 private:
  explicit Dataset(std::vector<Sample> samples) : samples_(std::move(samples)) {}
  std::vector<Sample> samples_;
};

/// Per-sample quadratics of the score equation.
struct SampleCoeffs {
  Rational c;
  Rational d;
  Poly f;  // c²θ² + c(d-2)θ + (c-d)
  Poly g;  // cθ² + dθ + 1
};

SampleCoeffs coeffs(const Sample& s);
std::vector<SampleCoeffs> coeffs(const Dataset& ds);

/// Numerator and denominator of the score equation after clearing
/// denominators: f = Σ f_i Π_{j≠i} g_j and g = Π g_i, both of degree 2n.
struct ScorePair {
  Poly f;
  Poly g;
  Rational sum_c;
  Rational sum_xy;
};

ScorePair build_score_pair(const Dataset& ds);

/// ℓ(θ) = -θ Σ c_i + Σ log g_i(θ), each g_i evaluated exactly.
/// Throws InvalidTheta outside [0, 1], NonPositiveBracket if some g_i(θ) ≤ 0.
double log_likelihood(const Dataset& ds, double theta);

/// f(θ)/g(θ) = Σ f_i(θ)/g_i(θ) = -ℓ'(θ), evaluated exactly then rounded.
/// Defined for any real θ; throws DenominatorZero when g(θ) = 0.
double score(const Dataset& ds, double theta);

}  // namespace gumbel
