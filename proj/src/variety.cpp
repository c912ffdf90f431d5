#include "gumbel/variety.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "gumbel/error.hpp"

namespace gumbel {

namespace {

// Continued-fraction convergents of a double, tested exactly against p.
// Recovers rational roots whose height fits in double precision.
std::optional<Rational> recover_rational_root(const Poly& p, double value) {
  if (!std::isfinite(value)) return std::nullopt;
  mpz_class h_prev(1), h_prev2(0), k_prev(0), k_prev2(1);
  double x = value;
  for (int step = 0; step < 40; ++step) {
    const double fl = std::floor(x);
    if (std::abs(fl) > 1e15) break;
    const mpz_class a(fl);
    const mpz_class h = a * h_prev + h_prev2;
    const mpz_class k = a * k_prev + k_prev2;
    const Rational candidate(mpq_class(h, k));
    if (p.eval(candidate).is_zero()) return candidate;
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    const double frac = x - fl;
    if (frac < 1e-300) break;
    x = 1.0 / frac;
  }
  return std::nullopt;
}

std::optional<Rational> linear_root(const Poly& monic_linear) {
  if (monic_linear.is_zero() || monic_linear.degree() != 1) return std::nullopt;
  return -monic_linear.coeff(0) / monic_linear.coeff(1);
}

}  // namespace

DoubleZeroFlag detect_double(const SampleCoeffs& sc, std::size_t index) {
  DoubleZeroFlag flag;
  flag.index = index;
  flag.is_double = (sc.d * sc.d - Rational(4) * sc.c).is_zero();
  if (flag.is_double) flag.location = -sc.d / (Rational(2) * sc.c);
  return flag;
}

std::vector<PairSharing> pair_sharing(std::span<const SampleCoeffs> sc) {
  std::vector<PairSharing> out;
  for (std::size_t i = 0; i < sc.size(); ++i) {
    for (std::size_t j = i + 1; j < sc.size(); ++j) {
      PairSharing ps;
      ps.i = i;
      ps.j = j;
      ps.shared = resultant(sc[i].g, sc[j].g).is_zero();
      if (ps.shared) {
        const Poly common = gcd(sc[i].g, sc[j].g);
        ps.exact_root = linear_root(common);
        ps.witness = complex_roots(common).front();
      }
      out.push_back(std::move(ps));
    }
  }
  return out;
}

std::string_view config_case_name(ConfigCase c) noexcept {
  switch (c) {
    case ConfigCase::GenericDisjoint: return "GENERIC_DISJOINT";
    case ConfigCase::SimpleDoublesOnly: return "SIMPLE_DOUBLES_ONLY";
    case ConfigCase::AllPairsShareNoDouble: return "ALL_PAIRS_SHARE_NO_DOUBLE";
    case ConfigCase::AllPairsShareOneDouble: return "ALL_PAIRS_SHARE_ONE_DOUBLE";
    case ConfigCase::RepeatedGroupsNoDouble: return "REPEATED_GROUPS_NO_DOUBLE";
    case ConfigCase::DoubleAnchoredGroups: return "DOUBLE_ANCHORED_GROUPS";
    case ConfigCase::N3Triangle: return "N3_TRIANGLE";
    case ConfigCase::Mixed: return "MIXED";
  }
  return "UNKNOWN";
}

int ZeroGroup::predicted_mult_in_f() const {
  const int k = static_cast<int>(members.size());
  return has_double_member ? k : k - 1;
}

int ZeroConfiguration::double_count() const {
  return static_cast<int>(std::count_if(doubles.begin(), doubles.end(),
                                        [](const DoubleZeroFlag& f) { return f.is_double; }));
}

bool ZeroConfiguration::any_pair_shares() const {
  return std::any_of(pairs.begin(), pairs.end(), [](const PairSharing& p) { return p.shared; });
}

bool ZeroConfiguration::all_pairs_share() const {
  return n >= 2 && std::all_of(pairs.begin(), pairs.end(), [](const PairSharing& p) { return p.shared; });
}

ZeroConfiguration classify(std::span<const SampleCoeffs> sc) {
  ZeroConfiguration cfg;
  cfg.n = sc.size();
  cfg.pairs = pair_sharing(sc);
  for (std::size_t i = 0; i < sc.size(); ++i) cfg.doubles.push_back(detect_double(sc[i], i));

  // Candidate repeated zeros of g: every shared pair zero and every double zero.
  std::map<Rational, ZeroGroup> by_root;
  for (const auto& p : cfg.pairs) {
    if (!p.shared) continue;
    if (!p.exact_root) {
      cfg.diagnostics.push_back("g_" + std::to_string(p.i + 1) + " and g_" + std::to_string(p.j + 1) +
                                " share more than one zero");
      continue;
    }
    by_root[*p.exact_root].root = *p.exact_root;
  }
  for (const auto& d : cfg.doubles) {
    if (d.is_double) by_root[*d.location].root = *d.location;
  }
  for (auto& [root, group] : by_root) {
    for (std::size_t i = 0; i < sc.size(); ++i) {
      if (!sc[i].g.eval(root).is_zero()) continue;
      group.members.push_back(i);
      const bool double_here = cfg.doubles[i].is_double && *cfg.doubles[i].location == root;
      group.has_double_member = group.has_double_member || double_here;
      group.mult_in_g += double_here ? 2 : 1;
    }
    cfg.groups.push_back(group);
  }

  const int doubles = cfg.double_count();
  const std::size_t n = cfg.n;
  auto group_members_total = [&] {
    int total = 0;
    for (const auto& g : cfg.groups) total += static_cast<int>(g.members.size());
    return total;
  };

  if (!cfg.any_pair_shares()) {
    if (doubles == 0) {
      cfg.config_case = ConfigCase::GenericDisjoint;
    } else {
      cfg.config_case = ConfigCase::SimpleDoublesOnly;
      cfg.n1 = doubles;
    }
    return cfg;
  }

  if (cfg.all_pairs_share()) {
    if (doubles > 1) {
      cfg.diagnostics.push_back("all pairs share a zero but more than one g_i has a double zero");
    }
    if (doubles == 1) {
      if (cfg.groups.empty() || cfg.groups.size() != 1 || cfg.groups.front().members.size() != n) {
        cfg.diagnostics.push_back("double-anchored all-pairs configuration without a single global zero");
      } else {
        cfg.config_case = ConfigCase::AllPairsShareOneDouble;
        return cfg;
      }
    } else if (doubles == 0 && n >= 4) {
      if (cfg.groups.size() != 1 || cfg.groups.front().members.size() != n) {
        cfg.diagnostics.push_back("all pairs share a zero for n >= 4 but there is no single global zero");
      } else {
        cfg.config_case = ConfigCase::AllPairsShareNoDouble;
        return cfg;
      }
    } else if (doubles == 0 && n == 3) {
      cfg.config_case = ConfigCase::N3Triangle;
      cfg.triple_common = std::any_of(cfg.groups.begin(), cfg.groups.end(),
                                      [](const ZeroGroup& g) { return g.members.size() == 3; });
      return cfg;
    }
  }

  if (doubles == 0) {
    cfg.config_case = ConfigCase::RepeatedGroupsNoDouble;
    cfg.l = static_cast<int>(cfg.groups.size());
    cfg.m = group_members_total();
    return cfg;
  }

  const bool every_group_anchored_and_shared =
      std::all_of(cfg.groups.begin(), cfg.groups.end(),
                  [](const ZeroGroup& g) { return g.has_double_member && g.members.size() >= 2; });
  if (every_group_anchored_and_shared && static_cast<int>(cfg.groups.size()) == doubles) {
    cfg.config_case = ConfigCase::DoubleAnchoredGroups;
    cfg.l = doubles;
    cfg.m = group_members_total();
    return cfg;
  }

  cfg.config_case = ConfigCase::Mixed;
  return cfg;
}

ZeroConfiguration classify(const Dataset& ds) {
  const std::vector<SampleCoeffs> sc = coeffs(ds);
  return classify(std::span<const SampleCoeffs>(sc));
}

std::vector<CommonZeroRecord> common_zeros_with_multiplicity(const Poly& f, const Poly& g, double tol) {
  std::vector<CommonZeroRecord> out;
  if (gcd(f, g).is_constant()) return out;

  const auto f_parts = squarefree_decomposition(f);
  const auto g_parts = squarefree_decomposition(g);
  for (const auto& [fa, kf] : f_parts) {
    for (const auto& [gb, kg] : g_parts) {
      const Poly h = gcd(fa, gb);
      if (h.is_constant()) continue;
      for (const ComplexRoot& r : complex_roots(h, tol)) {
        CommonZeroRecord rec;
        rec.root = ComplexRoot{r.value, kf};
        rec.mult_in_f = kf;
        rec.mult_in_g = kg;
        rec.exact = h.degree() == 1 ? linear_root(h) : std::nullopt;
        if (!rec.exact && r.value.imag() == 0.0) rec.exact = recover_rational_root(h, r.value.real());
        if (rec.exact) rec.root.value = {rec.exact->to_double(), 0.0};
        out.push_back(std::move(rec));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const CommonZeroRecord& a, const CommonZeroRecord& b) {
    if (a.root.value.real() != b.root.value.real()) return a.root.value.real() < b.root.value.real();
    return a.root.value.imag() < b.root.value.imag();
  });
  return out;
}

}  // namespace gumbel
