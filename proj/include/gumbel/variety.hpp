#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gumbel/model.hpp"
#include "gumbel/roots.hpp"

namespace gumbel {

/// Whether g_i = cθ² + dθ + 1 has a repeated zero (d² - 4c = 0), and where.
struct DoubleZeroFlag {
  std::size_t index = 0;
  bool is_double = false;
  std::optional<Rational> location;  // -d / (2c) when is_double
};

DoubleZeroFlag detect_double(const SampleCoeffs& sc, std::size_t index = 0);

/// Common-zero test for one pair (g_i, g_j), i < j.
struct PairSharing {
  std::size_t i = 0;
  std::size_t j = 0;
  bool shared = false;                 // resultant(g_i, g_j) == 0
  std::optional<Rational> exact_root;  // the shared zero (always rational for valid data)
  std::optional<ComplexRoot> witness;  // numeric value of the shared zero
};

/// Exact resultant test over every unordered pair; empty for fewer than two samples.
std::vector<PairSharing> pair_sharing(std::span<const SampleCoeffs> sc);

enum class ConfigCase {
  GenericDisjoint,          // no shared zeros, no double zeros: 2n
  SimpleDoublesOnly,        // n1 isolated double zeros: 2n - n1
  AllPairsShareNoDouble,    // n ≥ 4, one global common zero: n + 1
  AllPairsShareOneDouble,   // global common zero anchored by a double: n
  RepeatedGroupsNoDouble,   // l repeated zeros of g with total multiplicity m: 2n + l - m
  DoubleAnchoredGroups,     // l double zeros each shared, Σ n_k = m: 2n - m
  N3Triangle,               // n = 3, all pairs share, no double: 4 or 3
  Mixed,                    // none of the above exactly; per-zero additive rule
};

std::string_view config_case_name(ConfigCase c) noexcept;

/// A zero of g that is repeated in g: shared by several g_i, or a double zero
/// of one g_i, or both.
struct ZeroGroup {
  Rational root;
  std::vector<std::size_t> members;  // samples whose g_i vanishes at root
  bool has_double_member = false;
  int mult_in_g = 0;

  /// Multiplicity of root in f predicted by the per-zero laws: an isolated
  /// double zero gives 1, k sharing members without a double give k - 1,
  /// and k members including a double give k.
  int predicted_mult_in_f() const;
};

struct ZeroConfiguration {
  std::size_t n = 0;
  std::vector<PairSharing> pairs;
  std::vector<DoubleZeroFlag> doubles;
  std::vector<ZeroGroup> groups;  // sorted by root
  ConfigCase config_case = ConfigCase::GenericDisjoint;
  int n1 = 0;                  // SimpleDoublesOnly
  int l = 0;                   // RepeatedGroupsNoDouble, DoubleAnchoredGroups
  int m = 0;                   // RepeatedGroupsNoDouble, DoubleAnchoredGroups
  bool triple_common = false;  // N3Triangle: all three g_i share one zero
  std::vector<std::string> diagnostics;

  int double_count() const;
  bool any_pair_shares() const;
  bool all_pairs_share() const;
};

/// Classifies the zero-sharing structure of {g_i}. Group identity is decided
/// by exact rational roots, never by comparing floating-point values.
ZeroConfiguration classify(std::span<const SampleCoeffs> sc);
ZeroConfiguration classify(const Dataset& ds);

/// One distinct common zero of f and g.
struct CommonZeroRecord {
  ComplexRoot root;                // multiplicity field holds mult_in_f
  std::optional<Rational> exact;   // when the zero is rational
  int mult_in_g = 0;
  int mult_in_f = 0;
};

/// Distinct common zeros of f and g with their multiplicities in each,
/// computed from exact squarefree decompositions of f and g. Depends only on
/// f and g, not on any classification.
std::vector<CommonZeroRecord> common_zeros_with_multiplicity(const Poly& f, const Poly& g,
                                                             double tol = kDefaultRootTol);

}  // namespace gumbel
