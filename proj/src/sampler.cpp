#include "gumbel/sampler.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <string>

#include "gumbel/error.hpp"
#include "gumbel/variety.hpp"

namespace gumbel {

namespace {

Rational round_to_decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return Rational::parse(buf);
}

// Positive exponential draw that survives 12-digit rounding.
Rational positive_draw(std::mt19937_64& rng, double rate, bool gamma2) {
  std::exponential_distribution<double> expo(1.0);
  while (true) {
    double v = expo(rng);
    if (gamma2) v += expo(rng);
    const Rational r = round_to_decimal(v / rate);
    if (r.sign() > 0) return r;
  }
}

Rational draw_partner(const Rational& root, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> numer(1, 97);
  std::uniform_int_distribution<long> denom(1, 5);
  std::uniform_int_distribution<long> offset(0, 40);
  if (root.sign() < 0) {
    // Two negative zeros are always realizable.
    while (true) {
      Rational partner = -Rational(numer(rng), denom(rng));
      if (partner != root) return partner;
    }
  }
  // Positive zeros r1, r2 need 1/r2 ≤ (1 - 1/√r1)², so r1 > 1 and r2 large enough.
  const double u = (Rational(1) / root).to_double();
  if (u >= 1.0) {
    throw Error(Errc::UnrealizableRoots, "a positive shared zero must exceed 1, got " + root.str());
  }
  const double vmax = (1.0 - std::sqrt(u)) * (1.0 - std::sqrt(u));
  const double lower = std::ceil(1.0 / vmax);
  if (!std::isfinite(lower) || lower > 1e12) {
    throw Error(Errc::UnrealizableRoots, "shared zero " + root.str() + " is too close to 1 to realize");
  }
  for (int attempt = 0; attempt < 100; ++attempt) {
    const Rational partner(static_cast<long>(lower) + 1 + offset(rng));
    if (partner == root) continue;
    try {
      moments_from_roots(root, partner);
      return partner;
    } catch (const Error&) {
    }
  }
  throw Error(Errc::UnrealizableRoots, "no realizable partner zero for " + root.str());
}

struct ExpectedGroup {
  int members = 0;
  bool has_double = false;
};

}  // namespace

double conditional_density(double y, double x, double theta) {
  const double a = 1.0 + theta * x;
  return std::exp(-a * y) * (a - theta + a * theta * y);
}

Dataset sample_gbed(int n, double theta, std::uint64_t seed) {
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw Error(Errc::InvalidTheta, "theta must lie in [0, 1], got " + std::to_string(theta));
  }
  if (n < 1) throw Error(Errc::InvalidArgument, "sample size must be at least 1");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<Sample> samples;
  std::set<std::pair<Rational, Rational>> seen;
  while (static_cast<int>(samples.size()) < n) {
    const Rational x = positive_draw(rng, 1.0, false);
    const double a = 1.0 + theta * x.to_double();
    const bool gamma_branch = unif(rng) < theta / a;
    const Rational y = positive_draw(rng, a, gamma_branch);
    Sample s = Sample::from_xy(x, y);
    if (seen.emplace(s.c(), s.d()).second) samples.push_back(std::move(s));
  }
  return Dataset::validate(std::move(samples));
}

std::pair<Rational, Rational> moments_from_roots(const Rational& r1, const Rational& r2) {
  if (r1.is_zero() || r2.is_zero()) {
    throw Error(Errc::UnrealizableRoots, "g_i(0) = 1, so no g_i has a zero at 0");
  }
  const Rational p = Rational(1) / (r1 * r2);
  const Rational d = -(r1 + r2) * p;
  const Rational s = d + Rational(1);
  if (p.sign() <= 0 || s.sign() <= 0 || (s * s - Rational(4) * p).sign() < 0) {
    throw Error(Errc::UnrealizableRoots,
                "zeros (" + r1.str() + ", " + r2.str() + ") need a non-positive or complex (x, y)");
  }
  return {p, d};
}

Dataset build_fixture(const FixtureSpec& spec) {
  for (const auto& g : spec.groups) {
    if (g.shared_root.is_zero()) throw Error(Errc::UnrealizableRoots, "g_i(0) = 1, so no g_i has a zero at 0");
    if (g.members < (g.anchor_double ? 1 : 2)) {
      throw Error(Errc::InvalidArgument, "group at " + g.shared_root.str() + " has too few members");
    }
    if (g.anchor_double) moments_from_roots(g.shared_root, g.shared_root);
  }
  for (const auto& [r1, r2] : spec.pinned) moments_from_roots(r1, r2);
  if (spec.singles < 0) throw Error(Errc::InvalidArgument, "singles must be nonnegative");

  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<long> coord(1, 100);

  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<std::pair<Rational, Rational>> zero_pairs;
    for (const auto& g : spec.groups) {
      int remaining = g.members;
      if (g.anchor_double) {
        zero_pairs.emplace_back(g.shared_root, g.shared_root);
        --remaining;
      }
      for (int k = 0; k < remaining; ++k) zero_pairs.emplace_back(g.shared_root, draw_partner(g.shared_root, rng));
    }
    zero_pairs.insert(zero_pairs.end(), spec.pinned.begin(), spec.pinned.end());

    std::map<Rational, ExpectedGroup> expected;
    for (const auto& [r1, r2] : zero_pairs) {
      if (r1 == r2) {
        expected[r1].members += 1;
        expected[r1].has_double = true;
      } else {
        expected[r1].members += 1;
        expected[r2].members += 1;
      }
    }
    std::erase_if(expected, [](const auto& kv) { return kv.second.members < 2 && !kv.second.has_double; });

    std::vector<Sample> samples;
    for (const auto& [r1, r2] : zero_pairs) {
      auto [c, d] = moments_from_roots(r1, r2);
      samples.push_back(Sample::from_moments(c, d));
    }
    for (int k = 0; k < spec.singles; ++k) {
      samples.push_back(Sample::from_xy(Rational(coord(rng), 20), Rational(coord(rng), 20)));
    }

    std::optional<Dataset> ds;
    try {
      ds = Dataset::validate(std::move(samples));
    } catch (const Error& e) {
      if (e.code() == Errc::DuplicateSample || e.code() == Errc::SwappedDuplicate) continue;
      throw;
    }

    const ZeroConfiguration cfg = classify(*ds);
    bool matches = cfg.groups.size() == expected.size();
    if (matches) {
      auto it = expected.begin();
      for (const auto& g : cfg.groups) {
        matches = matches && g.root == it->first && static_cast<int>(g.members.size()) == it->second.members &&
                  g.has_double_member == it->second.has_double;
        ++it;
      }
    }
    if (matches) return std::move(*ds);
  }
  throw Error(Errc::ValidationCollision, "could not draw a fixture free of unintended coincidences");
}

std::uint64_t replicate_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace gumbel
