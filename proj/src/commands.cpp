#include "gumbel/commands.hpp"

#include <future>
#include <map>
#include <sstream>
#include <vector>

#include "gumbel/io.hpp"
#include "gumbel/ml_degree.hpp"
#include "gumbel/mle.hpp"

namespace gumbel::cli {

using nlohmann::json;

namespace {

struct ReplicateRow {
  std::uint64_t seed = 0;
  int ml_degree = 0;
  int real_roots_in_unit = 0;
  double theta_hat = 0.0;
};

ReplicateRow run_replicate(const SimulateOptions& opts, int index) {
  ReplicateRow row;
  row.seed = replicate_seed(opts.seed, static_cast<std::uint64_t>(index));
  const Dataset ds = sample_gbed(opts.n, opts.theta, row.seed);
  const MlDegreeReport report = gumbel::analyze(ds, opts.tol);
  const MleResult mle = solve_mle(ds, report, opts.tol);
  row.ml_degree = report.ml_degree_direct;
  row.real_roots_in_unit = mle.real_root_count_in_unit;
  row.theta_hat = mle.theta_hat;
  return row;
}

}  // namespace

int exit_code_for(const Error& e) noexcept {
  if (e.is_input_error()) return 2;
  switch (e.code()) {
    case Errc::InternalDisagreement: return 3;
    case Errc::UnrealizableRoots:
    case Errc::ValidationCollision: return 4;
    default: return 1;
  }
}

std::string analyze(const Dataset& ds, double tol, Format format) {
  const MlDegreeReport report = gumbel::analyze(ds, tol);
  const MleResult mle = solve_mle(ds, report, tol);
  const json doc = io::analysis_document(ds, report, mle, tol);
  return format == Format::Json ? doc.dump(2) + "\n" : io::analysis_text(doc);
}

std::string curve(const Dataset& ds, int points) { return io::curve_csv(likelihood_curve(ds, points)); }

std::string simulate(const SimulateOptions& opts) {
  if (!(opts.theta >= 0.0 && opts.theta <= 1.0)) {
    throw Error(Errc::InvalidTheta, "theta must lie in [0, 1], got " + std::to_string(opts.theta));
  }
  if (opts.reps < 1 || opts.n < 1) throw Error(Errc::InvalidArgument, "n and reps must be positive");

  std::vector<ReplicateRow> rows(static_cast<std::size_t>(opts.reps));
  const int jobs = std::max(1, std::min(opts.jobs, opts.reps));
  if (jobs == 1) {
    for (int r = 0; r < opts.reps; ++r) rows[static_cast<std::size_t>(r)] = run_replicate(opts, r);
  } else {
    std::vector<std::future<void>> workers;
    for (int w = 0; w < jobs; ++w) {
      workers.push_back(std::async(std::launch::async, [&, w] {
        for (int r = w; r < opts.reps; r += jobs) rows[static_cast<std::size_t>(r)] = run_replicate(opts, r);
      }));
    }
    for (auto& f : workers) f.get();
  }

  std::map<int, int> histogram;
  for (const auto& row : rows) ++histogram[row.ml_degree];

  if (opts.format == Format::Json) {
    json reps = json::array();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      reps.push_back(json{{"replicate", r},
                          {"seed", rows[r].seed},
                          {"ml_degree", rows[r].ml_degree},
                          {"real_roots_in_unit", rows[r].real_roots_in_unit},
                          {"theta_hat", rows[r].theta_hat}});
    }
    json hist = json::object();
    for (const auto& [deg, count] : histogram) hist[std::to_string(deg)] = count;
    const json doc{{"n", opts.n}, {"theta", opts.theta}, {"reps", opts.reps}, {"seed", opts.seed},
                   {"replicates", reps}, {"ml_degree_histogram", hist}};
    return doc.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "# simulate n=" << opts.n << " theta=" << opts.theta << " reps=" << opts.reps << " seed=" << opts.seed << "\n";
  out << "replicate,seed,ml_degree,real_roots_in_unit,theta_hat\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out << r << "," << rows[r].seed << "," << rows[r].ml_degree << "," << rows[r].real_roots_in_unit << ","
        << io::format_double(rows[r].theta_hat) << "\n";
  }
  out << "# ml_degree histogram\n";
  for (const auto& [deg, count] : histogram) out << "# " << deg << ": " << count << "\n";
  return out.str();
}

FixtureOutput fixture(const FixtureSpec& spec) {
  const Dataset ds = build_fixture(spec);
  const ZeroConfiguration cfg = classify(ds);
  FixtureOutput out;
  out.config_case = cfg.config_case;
  out.predicted_ml_degree = ml_degree_structural(cfg);

  std::ostringstream summary;
  summary << "configuration=" << config_case_name(cfg.config_case);
  if (cfg.config_case == ConfigCase::SimpleDoublesOnly) summary << " n1=" << cfg.n1;
  if (cfg.config_case == ConfigCase::RepeatedGroupsNoDouble || cfg.config_case == ConfigCase::DoubleAnchoredGroups) {
    summary << " l=" << cfg.l << " m=" << cfg.m;
  }
  out.csv = io::dataset_to_csv(ds, {"fixture seed=" + std::to_string(spec.seed), summary.str(),
                                    "predicted_ml_degree=" + std::to_string(out.predicted_ml_degree)});
  return out;
}

}  // namespace gumbel::cli
