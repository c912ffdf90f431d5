#pragma once

#include <istream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gumbel/ml_degree.hpp"
#include "gumbel/mle.hpp"
#include "gumbel/model.hpp"
#include "gumbel/sampler.hpp"

namespace gumbel::io {

/// Column meaning of an input CSV: observed coordinates (header "x,y", also
/// the default without a header) or exact moments (header "c,d").
enum class InputForm { XY, Moments };

struct CsvTable {
  InputForm form = InputForm::XY;
  std::vector<std::pair<Rational, Rational>> rows;
  std::vector<int> line_numbers;  // 1-based source line of each row
};

/// Parses a two-column CSV. Blank lines and lines starting with '#' are
/// skipped. Numbers are read exactly (decimal, scientific or p/q).
/// Throws Error(ParseError) citing the line and column.
CsvTable parse_csv(std::istream& in);

/// parse_csv followed by sample construction and validation; errors name the
/// offending line.
Dataset read_dataset(std::istream& in);
Dataset read_dataset_file(const std::string& path);

/// Writes a dataset as CSV: "x,y" with exact decimals when every sample has
/// exact coordinates, otherwise "c,d" with exact rationals. Each comment
/// string becomes a leading "# ..." line.
std::string dataset_to_csv(const Dataset& ds, const std::vector<std::string>& comments = {});

/// Full machine-readable analysis. Exact quantities are "p/q" strings.
nlohmann::json analysis_document(const Dataset& ds, const MlDegreeReport& report, const MleResult& mle, double tol);

/// Human-readable rendering of an analysis document.
std::string analysis_text(const nlohmann::json& doc);

/// "theta,loglik,likelihood_shape" rows with 17 significant digits.
std::string curve_csv(const CurveSeries& curve);

/// Reads {"groups": [{"root", "members", "anchor_double"}], "pinned": [[r1, r2]],
/// "singles", "seed"}; roots may be JSON numbers or exact strings.
FixtureSpec fixture_spec_from_json(const nlohmann::json& j);

/// Exact rational from a JSON string or number. Throws ParseError.
Rational rational_from_json(const nlohmann::json& j);

/// printf("%.16e"), the fixed 17-significant-digit rendering used in CSV output.
std::string format_double(double v);

}  // namespace gumbel::io
