#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "cmvrmt/core.hpp"
#include "cmvrmt/measure.hpp"
#include "cmvrmt/spectra.hpp"
#include "cmvrmt/stats.hpp"

namespace cmvrmt {

using nlohmann::json;

/// %.17g, with "inf", "-inf" and "nan" for non-finite values.
std::string format_double(double x);
/// Inverse of format_double.
double parse_double(const std::string& s);

/// '#'-prefixed provenance lines, a "rep,re,im" header, one row per eigenvalue.
void write_clouds_csv(std::ostream& os, const std::vector<EigenCloud>& clouds);
std::vector<EigenCloud> read_clouds_csv(std::istream& is);

json cloud_to_json(const EigenCloud& cloud);
EigenCloud cloud_from_json(const json& j);
json clouds_to_json(const std::vector<EigenCloud>& clouds);
std::vector<EigenCloud> clouds_from_json(const json& j);

/// {"rows": r, "cols": c, "data": [[[re, im], ...], ...]} with row-major data.
json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const json& j);

json measure_to_json(const PointMeasure& mu);
json measure_to_json(const MatrixMeasure2& mu);

json report_to_json(const TestReport& r);

/// Non-finite values become the strings of format_double.
json number_json(double x);

}  // namespace cmvrmt
