#include "gumbel/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gumbel/error.hpp"

namespace gumbel::io {

using nlohmann::json;

namespace {

std::string trim(std::string s) {
  auto not_space = [](unsigned char ch) { return !std::isspace(ch); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
  return s;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::string where(int line) { return "line " + std::to_string(line); }

json root_json(const ComplexRoot& r) {
  return json{{"re", r.value.real()}, {"im", r.value.imag()}, {"multiplicity", r.multiplicity}};
}

json poly_json(const Poly& p) { return json{{"exact", p.to_strings()}, {"float", p.to_double()}}; }

json config_json(const ZeroConfiguration& cfg) {
  json params = json::object();
  switch (cfg.config_case) {
    case ConfigCase::SimpleDoublesOnly: params["n1"] = cfg.n1; break;
    case ConfigCase::RepeatedGroupsNoDouble:
    case ConfigCase::DoubleAnchoredGroups:
      params["l"] = cfg.l;
      params["m"] = cfg.m;
      break;
    case ConfigCase::N3Triangle: params["triple_common"] = cfg.triple_common; break;
    default: break;
  }

  json shared = json::array();
  for (const auto& p : cfg.pairs) {
    if (!p.shared) continue;
    json item{{"i", p.i + 1}, {"j", p.j + 1}};
    item["root"] = p.exact_root ? json(p.exact_root->str()) : json(nullptr);
    if (p.witness) item["witness"] = root_json(*p.witness);
    shared.push_back(std::move(item));
  }
  json doubles = json::array();
  for (const auto& d : cfg.doubles) {
    if (d.is_double) doubles.push_back(json{{"sample", d.index + 1}, {"location", d.location->str()}});
  }
  json groups = json::array();
  for (const auto& g : cfg.groups) {
    std::vector<std::size_t> members;
    for (std::size_t i : g.members) members.push_back(i + 1);
    groups.push_back(json{{"root", g.root.str()},
                          {"root_float", g.root.to_double()},
                          {"members", members},
                          {"has_double_member", g.has_double_member},
                          {"mult_in_g", g.mult_in_g},
                          {"predicted_mult_in_f", g.predicted_mult_in_f()}});
  }
  return json{{"case", std::string(config_case_name(cfg.config_case))},
              {"params", params},
              {"shared_pairs", shared},
              {"double_zeros", doubles},
              {"groups", groups}};
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

CsvTable parse_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    const std::vector<std::string> fields = split_fields(line);
    const bool looks_like_header = std::any_of(line.begin(), line.end(), [](unsigned char ch) {
      return std::isalpha(ch) && ch != 'e' && ch != 'E';
    });
    if (!header_seen && table.rows.empty() && looks_like_header) {
      header_seen = true;
      const std::string h = fields.size() == 2 ? lower(fields[0]) + "," + lower(fields[1]) : lower(line);
      if (h == "x,y") table.form = InputForm::XY;
      else if (h == "c,d") table.form = InputForm::Moments;
      else throw Error(Errc::ParseError, where(line_no) + ": unknown header '" + line + "' (expected x,y or c,d)");
      continue;
    }
    if (fields.size() != 2) {
      throw Error(Errc::ParseError,
                  where(line_no) + ": expected 2 columns, found " + std::to_string(fields.size()));
    }
    std::pair<Rational, Rational> row;
    for (int col = 0; col < 2; ++col) {
      try {
        (col == 0 ? row.first : row.second) = Rational::parse(fields[static_cast<std::size_t>(col)]);
      } catch (const Error& e) {
        throw Error(Errc::ParseError, where(line_no) + ", column " + std::to_string(col + 1) + ": " + e.detail());
      }
    }
    table.rows.push_back(std::move(row));
    table.line_numbers.push_back(line_no);
  }
  return table;
}

Dataset read_dataset(std::istream& in) {
  const CsvTable table = parse_csv(in);
  std::vector<Sample> samples;
  samples.reserve(table.rows.size());
  for (std::size_t k = 0; k < table.rows.size(); ++k) {
    const auto& [a, b] = table.rows[k];
    try {
      samples.push_back(table.form == InputForm::XY ? Sample::from_xy(a, b) : Sample::from_moments(a, b));
    } catch (const Error& e) {
      throw Error(e.code(), where(table.line_numbers[k]) + ": " + e.detail());
    }
  }
  try {
    return Dataset::validate(std::move(samples));
  } catch (const Error& e) {
    throw Error(e.code(), e.detail() + " (samples numbered by data row)");
  }
}

Dataset read_dataset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  return read_dataset(in);
}

std::string dataset_to_csv(const Dataset& ds, const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const auto& c : comments) out << "# " << c << "\n";
  if (ds.all_exact_xy()) {
    out << "x,y\n";
    for (const auto& s : ds.samples()) out << s.x()->decimal() << "," << s.y()->decimal() << "\n";
  } else {
    out << "c,d\n";
    for (const auto& s : ds.samples()) out << s.c().str() << "," << s.d().str() << "\n";
  }
  return out.str();
}

json analysis_document(const Dataset& ds, const MlDegreeReport& report, const MleResult& mle, double tol) {
  json samples = json::array();
  json coefficients = json::array();
  for (const auto& s : ds.samples()) {
    json sample;
    if (s.has_exact_xy()) {
      sample = json{{"x", s.x()->decimal()}, {"y", s.y()->decimal()}};
    } else {
      sample = json{{"x", nullptr}, {"y", nullptr}, {"x_float", s.x_approx()}, {"y_float", s.y_approx()}};
    }
    samples.push_back(std::move(sample));
    coefficients.push_back(
        json{{"c", s.c().str()}, {"d", s.d().str()}, {"c_float", s.c().to_double()}, {"d_float", s.d().to_double()}});
  }

  json roots_f = json::array();
  for (const auto& r : report.roots_f) roots_f.push_back(root_json(r));
  json roots_g = json::array();
  for (const auto& r : report.roots_g) roots_g.push_back(root_json(r));

  json common = json::array();
  for (const auto& rec : report.common_zeros) {
    common.push_back(json{{"re", rec.root.value.real()},
                          {"im", rec.root.value.imag()},
                          {"exact", rec.exact ? json(rec.exact->str()) : json(nullptr)},
                          {"mult_in_f", rec.mult_in_f},
                          {"mult_in_g", rec.mult_in_g}});
  }

  return json{
      {"n", report.n},
      {"tol", tol},
      {"samples", samples},
      {"coefficients", coefficients},
      {"f", poly_json(report.score.f)},
      {"g", poly_json(report.score.g)},
      {"sum_c", report.score.sum_c.str()},
      {"sum_xy", report.score.sum_xy.str()},
      {"roots_f", roots_f},
      {"roots_g", roots_g},
      {"common_zeros", common},
      {"configuration", config_json(report.config)},
      {"ml_degree",
       {{"direct", report.ml_degree_direct},
        {"structural", report.ml_degree_structural},
        {"agreement", report.agreement}}},
      {"score_solutions", poly_json(report.solutions)},
      {"mle",
       {{"theta_hat", mle.theta_hat},
        {"at_boundary", mle.at_boundary},
        {"interior_candidates", mle.interior_candidates},
        {"loglik_at_hat", mle.loglik_at_hat},
        {"real_root_count_in_unit", mle.real_root_count_in_unit}}},
      {"diagnostics", report.diagnostics},
  };
}

std::string analysis_text(const json& doc) {
  std::ostringstream out;
  auto fmt_root = [](const json& r) {
    std::ostringstream s;
    s.precision(6);
    const double im = r.at("im").get<double>();
    s << r.at("re").get<double>();
    if (im != 0.0) s << (im < 0 ? " - " : " + ") << std::abs(im) << "i";
    return s.str();
  };

  out << "samples: " << doc.at("n").get<int>() << "\n";
  std::size_t k = 0;
  for (const auto& c : doc.at("coefficients")) {
    out << "  " << ++k << ": c = " << c.at("c").get<std::string>() << ", d = " << c.at("d").get<std::string>() << "\n";
  }
  for (const char* name : {"f", "g"}) {
    out << name << " (ascending powers):";
    for (double v : doc.at(name).at("float")) out << " " << v;
    out << "\n";
  }
  for (const char* name : {"roots_f", "roots_g"}) {
    out << (std::string(name) == "roots_f" ? "V(f):" : "V(g):");
    for (const auto& r : doc.at(name)) {
      out << " " << fmt_root(r);
      if (r.at("multiplicity").get<int>() > 1) out << " (x" << r.at("multiplicity").get<int>() << ")";
    }
    out << "\n";
  }
  out << "V(f,g):";
  if (doc.at("common_zeros").empty()) out << " empty";
  for (const auto& r : doc.at("common_zeros")) {
    out << " " << fmt_root(r) << " [mult in f " << r.at("mult_in_f").get<int>() << ", in g "
        << r.at("mult_in_g").get<int>() << "]";
  }
  out << "\n";
  const auto& cfg = doc.at("configuration");
  out << "configuration: " << cfg.at("case").get<std::string>();
  for (const auto& [key, value] : cfg.at("params").items()) out << " " << key << "=" << value.dump();
  out << "\n";
  const auto& ml = doc.at("ml_degree");
  out << "ML-degree: " << ml.at("direct").get<int>() << " (direct), " << ml.at("structural").get<int>()
      << " (structural), " << (ml.at("agreement").get<bool>() ? "agree" : "DISAGREE") << "\n";
  const auto& mle = doc.at("mle");
  out << "MLE: theta = " << mle.at("theta_hat").get<double>()
      << (mle.at("at_boundary").get<bool>() ? " (boundary)" : " (interior)")
      << ", loglik = " << mle.at("loglik_at_hat").get<double>()
      << ", real score roots in [0,1]: " << mle.at("real_root_count_in_unit").get<int>() << "\n";
  for (const auto& d : doc.at("diagnostics")) out << "diagnostic: " << d.get<std::string>() << "\n";
  return out.str();
}

std::string curve_csv(const CurveSeries& curve) {
  std::string out = "theta,loglik,likelihood_shape\n";
  for (const auto& p : curve.grid) {
    out += format_double(p.theta) + "," + format_double(p.loglik) + "," + format_double(p.likelihood_shape) + "\n";
  }
  return out;
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number()) return Rational::parse(j.dump());
  throw Error(Errc::ParseError, "expected a number or numeric string, got " + j.dump());
}

FixtureSpec fixture_spec_from_json(const json& j) {
  if (!j.is_object()) throw Error(Errc::ParseError, "fixture spec must be a JSON object");
  FixtureSpec spec;
  try {
    for (const auto& g : j.value("groups", json::array())) {
      GroupSpec gs;
      gs.shared_root = rational_from_json(g.at("root"));
      gs.members = g.value("members", 2);
      gs.anchor_double = g.value("anchor_double", false);
      spec.groups.push_back(std::move(gs));
    }
    for (const auto& p : j.value("pinned", json::array())) {
      if (!p.is_array() || p.size() != 2) throw Error(Errc::ParseError, "pinned entries are [r1, r2] pairs");
      spec.pinned.emplace_back(rational_from_json(p[0]), rational_from_json(p[1]));
    }
    spec.singles = j.value("singles", 0);
    spec.seed = j.value("seed", std::uint64_t{0});
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("fixture spec: ") + e.what());
  }
  return spec;
}

}  // namespace gumbel::io
