#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "gumbel/model.hpp"
#include "gumbel/rational.hpp"

namespace gumbel {

/// Draws n observations from GBED-I(θ). X ~ Exp(1); given X = x and
/// a = 1 + θx, Y is Exp(a) with probability (a - θ)/a and Gamma(2, rate a)
/// with probability θ/a. Coordinates are rounded to 12 significant digits
/// and held exactly. Deterministic for a given seed; repeated draws are
/// redrawn. Throws InvalidTheta unless θ ∈ [0, 1], InvalidArgument for n < 1.
Dataset sample_gbed(int n, double theta, std::uint64_t seed);

/// Conditional density of Y given X = x: e^{-ay}(a - θ + aθy), a = 1 + θx.
double conditional_density(double y, double x, double theta);

/// Moments (c, d) of the sample whose g has zeros r1 and r2:
/// c = 1/(r1 r2), d = -(r1 + r2)/(r1 r2). Throws UnrealizableRoots unless
/// some positive (x, y) produces them.
std::pair<Rational, Rational> moments_from_roots(const Rational& r1, const Rational& r2);

/// A zero shared by `members` samples; with anchor_double one of them has it
/// as a double zero.
struct GroupSpec {
  Rational shared_root;
  int members = 2;
  bool anchor_double = false;
};

/// Describes a dataset by the zero structure of its g_i. Group members get
/// random partner zeros; `pinned` samples have both zeros given (equal zeros
/// make a double); `singles` are random samples sharing nothing.
struct FixtureSpec {
  std::vector<GroupSpec> groups;
  std::vector<std::pair<Rational, Rational>> pinned;
  int singles = 0;
  std::uint64_t seed = 0;
};

/// Builds a dataset realizing the spec exactly and verifies the result by
/// classifying it. Throws UnrealizableRoots for impossible zeros and
/// ValidationCollision if no collision-free draw is found.
Dataset build_fixture(const FixtureSpec& spec);

/// Per-replicate seed derived from a base seed (splitmix64 of seed + index).
std::uint64_t replicate_seed(std::uint64_t base, std::uint64_t index);

}  // namespace gumbel
