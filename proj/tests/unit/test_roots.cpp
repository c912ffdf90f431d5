#include <doctest.h>

#include <algorithm>
#include <complex>
#include <random>
#include <set>

#include "gumbel/roots.hpp"
#include "oracles.hpp"

using gumbel::Poly;
using gumbel::Rational;

TEST_CASE("Sturm count of distinct real roots") {
  const Poly p = Poly::linear_root(Rational(1)) * Poly::linear_root(Rational(1)) * Poly::linear_root(Rational(-2)) *
                 Poly{Rational(1), Rational(0), Rational(1)};
  CHECK(gumbel::count_distinct_real_roots(p) == 2);
  CHECK(gumbel::count_distinct_real_roots(Poly{Rational(1), Rational(0), Rational(1)}) == 0);
  CHECK(gumbel::count_distinct_real_roots(Poly{Rational(5)}) == 0);
}

TEST_CASE("complex roots with multiplicities") {
  // (θ - 3)² (θ - 7)(θ - 6)(2θ² + 2θ + 1)
  const Poly p = Poly::linear_root(Rational(3)) * Poly::linear_root(Rational(3)) * Poly::linear_root(Rational(7)) *
                 Poly::linear_root(Rational(6)) * Poly{Rational(1), Rational(2), Rational(2)};
  const auto roots = gumbel::complex_roots(p);
  REQUIRE(roots.size() == 5);
  int total = 0;
  for (const auto& r : roots) total += r.multiplicity;
  CHECK(total == 6);
  auto find = [&](std::complex<double> z) {
    return std::find_if(roots.begin(), roots.end(), [&](const auto& r) { return std::abs(r.value - z) < 1e-9; });
  };
  REQUIRE(find({3, 0}) != roots.end());
  CHECK(find({3, 0})->multiplicity == 2);
  CHECK(find({-0.5, 0.5}) != roots.end());
  CHECK(find({-0.5, -0.5}) != roots.end());
  CHECK(find({6, 0}) != roots.end());
  CHECK(find({7, 0}) != roots.end());
  // Real roots carry an exactly zero imaginary part.
  CHECK(find({3, 0})->value.imag() == 0.0);
}

TEST_CASE("Aberth roots have small residuals (random)") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    const Poly p = oracle::random_poly(rng, 2 + t % 11);
    const auto roots = gumbel::complex_roots(p);
    int total = 0;
    for (const auto& r : roots) {
      total += r.multiplicity;
      if (r.multiplicity == 1) CHECK(gumbel::relative_residual(p, r.value) < 1e-10);
    }
    CHECK(total == p.degree());
    int real = 0;
    for (const auto& r : roots) real += r.value.imag() == 0.0 ? 1 : 0;
    CHECK(real == gumbel::count_distinct_real_roots(p));
  }
}

TEST_CASE("Sturm count on polynomials with known real roots (random)") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 100; ++t) {
    std::set<Rational> roots;
    const int k = 1 + t % 6;
    while (static_cast<int>(roots.size()) < k) roots.insert(oracle::random_rational(rng, 30, 7));
    Rational scale = oracle::random_rational(rng, 9, 4);
    if (scale.is_zero()) scale = Rational(-3, 2);
    Poly p = Poly::constant(scale);
    int extra = 0;
    for (const auto& r : roots) {
      p = p * Poly::linear_root(r);
      if (t % 3 == 0 && extra++ < 2) p = p * Poly::linear_root(r);  // repeated roots count once
    }
    if (t % 2 == 0) p = p * Poly{Rational(5), Rational(-2), Rational(1)};  // no real roots
    CAPTURE(p);
    CHECK(gumbel::count_distinct_real_roots(p) == k);
    CHECK(gumbel::count_distinct_real_roots(-p) == k);
  }
}
