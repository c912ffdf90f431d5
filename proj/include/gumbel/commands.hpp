#pragma once

#include <cstdint>
#include <string>

#include "gumbel/error.hpp"
#include "gumbel/sampler.hpp"
#include "gumbel/variety.hpp"

namespace gumbel::cli {

enum class Format { Json, Text };

/// Process exit code for a library error: 2 for input errors, 3 for an
/// internal disagreement, 4 for an unrealizable fixture, 1 otherwise.
int exit_code_for(const Error& e) noexcept;

/// Analysis document for a dataset (JSON or text). Throws InternalDisagreement
/// when the direct and structural ML-degrees differ.
std::string analyze(const Dataset& ds, double tol, Format format);

/// Curve CSV over `points` grid values in [0, 1].
std::string curve(const Dataset& ds, int points);

struct SimulateOptions {
  int n = 3;
  double theta = 0.5;
  int reps = 10;
  std::uint64_t seed = 1;
  double tol = kDefaultRootTol;
  int jobs = 1;
  Format format = Format::Text;
};

/// One row per replicate (seed, ML-degree, real score roots in [0,1], MLE)
/// followed by an ML-degree histogram. Output order follows the replicate
/// index regardless of `jobs`.
std::string simulate(const SimulateOptions& opts);

struct FixtureOutput {
  std::string csv;
  ConfigCase config_case = ConfigCase::GenericDisjoint;
  int predicted_ml_degree = 0;
};

/// Builds the fixture, classifies it and renders the dataset CSV with the
/// configuration and predicted structural ML-degree as leading comments.
FixtureOutput fixture(const FixtureSpec& spec);

}  // namespace gumbel::cli
