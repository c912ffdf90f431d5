#include "gumbel/model.hpp"

#include <cmath>
#include <map>
#include <string>

#include "gumbel/error.hpp"

namespace gumbel {

namespace {

std::string sample_label(std::size_t i) { return "sample " + std::to_string(i + 1); }

// Roots of t² - s t + p for s² ≥ 4p, larger first.
std::pair<double, double> real_roots_of_moments(const Rational& c, const Rational& d) {
  const double s = (d + Rational(1)).to_double();
  const double disc = std::max(0.0, ((d + Rational(1)) * (d + Rational(1)) - Rational(4) * c).to_double());
  const double big = 0.5 * (s + std::sqrt(disc));
  // c / big avoids cancellation in the smaller root.
  return {big, c.to_double() / big};
}

}  // namespace

Sample Sample::from_xy(Rational x, Rational y) {
  if (x.sign() <= 0 || y.sign() <= 0) {
    throw Error(Errc::NonPositiveCoordinate,
                "coordinates must be positive, got (" + x.decimal() + ", " + y.decimal() + ")");
  }
  Rational c = x * y;
  Rational d = x + y - Rational(1);
  return Sample(std::move(c), std::move(d), std::move(x), std::move(y));
}

Sample Sample::from_moments(Rational c, Rational d) {
  const Rational s = d + Rational(1);
  const Rational disc = s * s - Rational(4) * c;
  if (c.sign() <= 0 || s.sign() <= 0 || disc.sign() < 0) {
    throw Error(Errc::NonPositiveCoordinate,
                "moments (c=" + c.str() + ", d=" + d.str() + ") do not come from a positive (x, y)");
  }
  std::optional<Rational> x;
  std::optional<Rational> y;
  if (auto root = disc.exact_sqrt()) {
    x = (s + *root) / Rational(2);
    y = (s - *root) / Rational(2);
  }
  return Sample(std::move(c), std::move(d), std::move(x), std::move(y));
}

double Sample::x_approx() const {
  return x_ ? x_->to_double() : real_roots_of_moments(c_, d_).first;
}

double Sample::y_approx() const {
  return y_ ? y_->to_double() : real_roots_of_moments(c_, d_).second;
}

Dataset Dataset::validate(std::vector<Sample> samples) {
  if (samples.empty()) throw Error(Errc::EmptyInput, "dataset has no samples");
  // Equal moments means the same unordered {x, y}, so a repeat or a swap.
  std::map<std::pair<Rational, Rational>, std::size_t> seen;
  for (std::size_t j = 0; j < samples.size(); ++j) {
    const auto [it, inserted] = seen.try_emplace({samples[j].c(), samples[j].d()}, j);
    if (inserted) continue;
    const std::size_t i = it->second;
    const Sample& a = samples[i];
    const Sample& b = samples[j];
    if (a.has_exact_xy() && b.has_exact_xy()) {
      if (*a.x() == *b.x()) throw Error(Errc::DuplicateSample, sample_label(j) + " repeats " + sample_label(i));
      throw Error(Errc::SwappedDuplicate, sample_label(j) + " is " + sample_label(i) + " with x and y swapped");
    }
    throw Error(Errc::DuplicateSample,
                sample_label(j) + " has the same moments as " + sample_label(i) + " (repeat or swap)");
  }
  return Dataset(std::move(samples));
}

Dataset Dataset::from_xy(std::span<const std::pair<Rational, Rational>> pairs) {
  std::vector<Sample> samples;
  samples.reserve(pairs.size());
  for (const auto& [x, y] : pairs) samples.push_back(Sample::from_xy(x, y));
  return validate(std::move(samples));
}

Dataset Dataset::from_moments(std::span<const std::pair<Rational, Rational>> pairs) {
  std::vector<Sample> samples;
  samples.reserve(pairs.size());
  for (const auto& [c, d] : pairs) samples.push_back(Sample::from_moments(c, d));
  return validate(std::move(samples));
}

bool Dataset::all_exact_xy() const {
  for (const auto& s : samples_) {
    if (!s.has_exact_xy()) return false;
  }
  return true;
}

SampleCoeffs coeffs(const Sample& s) {
  const Rational& c = s.c();
  const Rational& d = s.d();
  return SampleCoeffs{
      c,
      d,
      Poly({c - d, c * (d - Rational(2)), c * c}),
      Poly({Rational(1), d, c}),
  };
}

std::vector<SampleCoeffs> coeffs(const Dataset& ds) {
  std::vector<SampleCoeffs> out;
  out.reserve(ds.size());
  for (const auto& s : ds.samples()) out.push_back(coeffs(s));
  return out;
}

ScorePair build_score_pair(const Dataset& ds) {
  const std::vector<SampleCoeffs> sc = coeffs(ds);
  const std::size_t n = sc.size();

  // prefix[i] = Π_{j<i} g_j, suffix[i] = Π_{j≥i} g_j
  std::vector<Poly> prefix(n + 1, Poly::constant(1));
  std::vector<Poly> suffix(n + 1, Poly::constant(1));
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] * sc[i].g;
  for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] * sc[i].g;

  ScorePair out;
  for (std::size_t i = 0; i < n; ++i) {
    out.f += sc[i].f * (prefix[i] * suffix[i + 1]);
    out.sum_c += sc[i].c;
    out.sum_xy += sc[i].d + Rational(1);
  }
  out.g = prefix[n];
  return out;
}

double log_likelihood(const Dataset& ds, double theta) {
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw Error(Errc::InvalidTheta, "theta must lie in [0, 1], got " + std::to_string(theta));
  }
  const Rational t = Rational::from_double(theta);
  Rational linear;
  double logs = 0.0;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const Sample& s = ds[i];
    const Rational bracket = (s.c() * t + s.d()) * t + Rational(1);
    if (bracket.sign() <= 0) {
      throw Error(Errc::NonPositiveBracket, "density bracket of " + sample_label(i) + " is not positive");
    }
    logs += std::log(bracket.to_double());
    linear += s.c();
  }
  return -(linear * t).to_double() + logs;
}

double score(const Dataset& ds, double theta) {
  if (!std::isfinite(theta)) throw Error(Errc::InvalidTheta, "theta must be finite");
  const Rational t = Rational::from_double(theta);
  Rational total;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const SampleCoeffs sc = coeffs(ds[i]);
    const Rational gi = sc.g.eval(t);
    if (gi.is_zero()) {
      throw Error(Errc::DenominatorZero, "g vanishes at theta for " + sample_label(i));
    }
    total += sc.f.eval(t) / gi;
  }
  return total.to_double();
}

}  // namespace gumbel
