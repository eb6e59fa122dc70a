#pragma once

#include "checks.hpp"
#include "presets.hpp"
#include "scenario.hpp"

#include <sstream>

namespace vbgeo::cli::detail {

inline CheckOutcome at_most(double value, double tol, std::string detail = {}) {
  return {value <= tol, value, tol, std::move(detail)};
}

inline CheckOutcome at_least(double value, double tol, std::string detail = {}) {
  return {value >= tol, value, tol, std::move(detail)};
}

inline CheckOutcome equals(int value, int expected, std::string detail = {}) {
  return {value == expected, double(value), double(expected), std::move(detail)};
}

inline TotalSpace preset_space(const std::string& name) { return parse_scenario(preset(name)).space; }

// Point with x in the chart box (10% margin) and r below min(0.8 r_max, r_cap).
inline TotalPoint random_point(const TotalSpace& s, Rng& rng, double r_cap = 1.0) {
  const double rmax = std::min(0.8 * s.weights().r_max(), r_cap);
  const Vec y = rng.unit_vec(s.rank());
  return {s.base().domain().sample(rng, 0.1), y * std::sqrt(rng.uniform(0.05, 1.0) * rmax)};
}

inline SplitVector random_split(const TotalSpace& s, Rng& rng) {
  return {rng.uniform_vec(s.base_dim(), -1, 1), rng.uniform_vec(s.rank(), -1, 1)};
}

inline std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

void add_weights_checks(std::vector<CheckCase>& out);
void add_base_checks(std::vector<CheckCase>& out);
void add_total_space_checks(std::vector<CheckCase>& out);
void add_geodesic_checks(std::vector<CheckCase>& out);
void add_curvature_checks(std::vector<CheckCase>& out);
void add_holonomy_checks(std::vector<CheckCase>& out);
void add_hermitian_checks(std::vector<CheckCase>& out);

}  // namespace vbgeo::cli::detail
