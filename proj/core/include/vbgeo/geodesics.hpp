#pragma once

#include "vbgeo/total_space.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace vbgeo {

// (gamma, y, dgamma, z) with z^beta = dy^beta + dgamma^i y^alpha Gamma^{E,beta}_{i alpha}.
struct GeodesicState {
  Vec gamma, y, dgamma, z;

  TotalPoint point() const { return {gamma, y}; }
  Vec stacked() const;
  static GeodesicState from_stacked(const Vec& s, int m, int k);
};

struct GeodesicDerivative {
  Vec dgamma, dy, ddgamma, dz;
};

GeodesicDerivative geodesic_rhs(const TotalSpace& space, const GeodesicState& s);

// Builds a state from the coordinate velocity (dgamma, dy).
GeodesicState state_from_velocity(const TotalSpace& space, const Vec& gamma, const Vec& y,
                                  const Vec& dgamma, const Vec& dy);
Vec fibre_velocity(const TotalSpace& space, const GeodesicState& s);  // dy
double speed(const TotalSpace& space, const GeodesicState& s);

enum class TrajectoryStatus { completed, boundary_exit, non_finite };
std::string to_string(TrajectoryStatus s);

struct Trajectory {
  std::vector<double> t;
  std::vector<GeodesicState> states;
  std::vector<double> speeds;
  TrajectoryStatus status = TrajectoryStatus::completed;
  double max_relative_speed_drift = 0;

  const GeodesicState& final_state() const { return states.back(); }
};

// Fixed-step classical RK4. Stops with a status flag when the next state leaves the
// chart box or r >= r_max, or turns non-finite; the partial trajectory is kept.
Trajectory integrate(const TotalSpace& space, const GeodesicState& initial, double t_end,
                     double step);

// y'' for the metric e^{2 phi2(r)} sum (dy)^2 on R^k.
Vec fiber_geodesic_rhs(const Vec& y, const Vec& ydot, const WeightProfile& w);

// columns: t, gamma_i, y_alpha, dgamma_i, z_beta, speed
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

}  // namespace vbgeo
