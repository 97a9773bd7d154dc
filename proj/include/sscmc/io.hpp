#ifndef SSCMC_IO_HPP
#define SSCMC_IO_HPP

#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sscmc/leaf.hpp"
#include "sscmc/verify.hpp"

// CSV and JSON serialization of curves and verification reports.  The curve
// CSV layout is fixed: one sample per row, columns region,r,t,U,V,X,T, with
// t written as "inf"/"-inf" at horizon crossings.
namespace sscmc {

namespace detail {

inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string format_time(double t) {
  if (std::isinf(t)) return t > 0 ? "inf" : "-inf";
  return format_double(t);
}

inline double parse_time(const std::string& s) {
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  return std::stod(s);
}

}  // namespace detail

inline constexpr const char* kCurveCsvHeader = "region,r,t,U,V,X,T";

// Write curve samples, optionally rescaling lengths by `unit` (the mass in
// physical units when the computation ran at M = 1): r and t columns scale
// with the unit, the Kruskal coordinates are left as computed.
inline void write_curve_csv(std::ostream& os, const std::vector<CurveSample>& points,
                            double unit = 1.0) {
  os << kCurveCsvHeader << '\n';
  for (const CurveSample& s : points) {
    os << region_name(s.region) << ',' << detail::format_double(s.r * unit) << ','
       << detail::format_time(s.t * unit) << ',' << detail::format_double(s.U) << ','
       << detail::format_double(s.V) << ',' << detail::format_double(s.X) << ','
       << detail::format_double(s.T) << '\n';
  }
}

inline std::vector<CurveSample> read_curve_csv(std::istream& is, double unit = 1.0) {
  std::vector<CurveSample> points;
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("curve csv: empty stream");
  if (line != kCurveCsvHeader)
    throw std::runtime_error("curve csv: unexpected header '" + line + "'");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 7) throw std::runtime_error("curve csv: malformed row '" + line + "'");
    CurveSample s;
    s.region = parse_region(fields[0]);
    s.r = std::stod(fields[1]) / unit;
    s.t = detail::parse_time(fields[2]);
    if (std::isfinite(s.t)) s.t /= unit;
    s.U = std::stod(fields[3]);
    s.V = std::stod(fields[4]);
    s.X = std::stod(fields[5]);
    s.T = std::stod(fields[6]);
    points.push_back(s);
  }
  return points;
}

inline nlohmann::json curve_to_json(const LeafCurve& curve, double unit = 1.0) {
  nlohmann::json j;
  j["spec"] = {{"M", curve.spec.M * unit},
               {"H", curve.spec.H / unit},
               {"family", family_name(curve.spec.family)},
               {"c", curve.spec.c * unit * unit},
               {"R", curve.spec.R * unit},
               {"samples", curve.spec.samples}};
  j["t_intercept"] = curve.t_intercept;
  j["cylinder"] = curve.cylinder;
  nlohmann::json rows = nlohmann::json::array();
  for (const CurveSample& s : curve.points) {
    rows.push_back({{"region", region_name(s.region)},
                    {"r", s.r * unit},
                    {"t", std::isfinite(s.t) ? nlohmann::json(s.t * unit)
                                             : nlohmann::json(s.t > 0 ? "inf" : "-inf")},
                    {"U", s.U},
                    {"V", s.V},
                    {"X", s.X},
                    {"T", s.T}});
  }
  j["points"] = rows;
  return j;
}

inline nlohmann::json checks_to_json(const CurveChecks& c) {
  return {{"max_uv_residual", c.max_uv_residual},
          {"monotone", c.monotone},
          {"reflect_hausdorff", c.reflect_hausdorff},
          {"max_horizon_kink", c.max_horizon_kink}};
}

inline nlohmann::json coverage_to_json(const CoverageReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const CoverageFailure& f : r.failures)
    failures.push_back({{"X", f.X}, {"T", f.T}, {"reason", f.reason}});
  return {{"n_total", r.n_total},
          {"n_covered", r.n_covered},
          {"n_excluded", r.n_excluded},
          {"n_uncovered", r.n_uncovered},
          {"max_residual", r.max_residual},
          {"exploratory", r.exploratory},
          {"failures", failures}};
}

}  // namespace sscmc

#endif
