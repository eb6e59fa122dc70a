#pragma once

#include "json_io.hpp"
#include "scenario.hpp"

#include <ostream>
#include <string>

namespace vbgeo::cli {

Json scenario_header(const Scenario& s);

Json cmd_coeffs(const Scenario& s, double r);
Json cmd_metric(const Scenario& s, const TotalPoint& p);
// Writes the CSV trajectory to `csv` and returns a summary.
Json cmd_geodesic(const Scenario& s, const Json& init, double t_end, double step, std::ostream& csv);
// at = "zero-section" (uses p.x) or "point" (flat bundles, any p)
Json cmd_curvature(const Scenario& s, const std::string& at, const TotalPoint& p, bool oracle);
Json cmd_ricci(const Scenario& s, const Vec& x);
Json cmd_holonomy(const Scenario& s, const Vec& x, bool subspaces);
Json cmd_fiber(const Scenario& s, const Vec& y);
Json cmd_conformal(const Scenario& s, const TotalPoint& p, const std::string& deformation);
Json cmd_hermitian(const Scenario& s, const TotalPoint& p, bool domega);

}  // namespace vbgeo::cli
