#include "vbgeo/geodesics.hpp"

#include "vbgeo/errors.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace vbgeo {

Vec GeodesicState::stacked() const {
  Vec s(2 * (gamma.size() + y.size()));
  s << gamma, y, dgamma, z;
  return s;
}

GeodesicState GeodesicState::from_stacked(const Vec& s, int m, int k) {
  return {s.segment(0, m), s.segment(m, k), s.segment(m + k, m), s.segment(2 * m + k, k)};
}

namespace {

// dy = z - dgamma^i y^alpha Gamma^{E,beta}_{i alpha}
Vec fibre_velocity_from(const std::vector<Mat>& gamE, const GeodesicState& s) {
  Vec dy = s.z;
  for (std::size_t i = 0; i < gamE.size(); ++i) dy -= s.dgamma(i) * (gamE[i].transpose() * s.y);
  return dy;
}

}  // namespace

GeodesicDerivative geodesic_rhs(const TotalSpace& space, const GeodesicState& s) {
  const int m = space.base_dim(), k = space.rank();
  if (s.gamma.size() != m || s.dgamma.size() != m || s.y.size() != k || s.z.size() != k)
    throw InvalidArgument("geodesic state has inconsistent lengths");
  const PointGeometry pg = space.at(s.point());
  const ConnectionCoefficients& c = pg.coeffs();
  const WeightValues& w = pg.weights();
  const Mat& g = pg.base_metric();
  const auto& gam = pg.base_christoffel();
  const auto& gamE = pg.bundle_gamma();
  const Vec& y = s.y;
  const Vec& z = s.z;
  const Vec& v = s.dgamma;
  const double zy = z.dot(y);

  GeodesicDerivative d;
  d.dgamma = v;
  d.dy = fibre_velocity_from(gamE, s);

  d.ddgamma = Vec::Zero(m);
  for (int p = 0; p < m; ++p) d.ddgamma(p) = -v.dot(gam[p] * v);
  d.ddgamma -= 2 * c.a * zy * v;
  // e^{2phi2-2phi1} g^{qp} <R^E(dgamma, d_q) y, z>
  Vec lowered(m);
  for (int q = 0; q < m; ++q) {
    Vec eq = Vec::Zero(m);
    eq(q) = 1;
    lowered(q) = pg.bundle_curvature_apply(v, eq, y).dot(z);
  }
  d.ddgamma -= std::exp(2 * (w.phi2 - w.phi1)) * (pg.base_metric_inverse() * lowered);

  d.dz = -c.c1 * v.dot(g * v) * y + c.b * z.squaredNorm() * y - 2 * c.b * zy * z;
  for (int i = 0; i < m; ++i) d.dz -= v(i) * (gamE[i].transpose() * z);
  return d;
}

GeodesicState state_from_velocity(const TotalSpace& space, const Vec& gamma, const Vec& y,
                                  const Vec& dgamma, const Vec& dy) {
  GeodesicState s{gamma, y, dgamma, dy};
  const auto gamE = space.bundle().gamma(gamma);
  for (std::size_t i = 0; i < gamE.size(); ++i) s.z += dgamma(i) * (gamE[i].transpose() * y);
  return s;
}

Vec fibre_velocity(const TotalSpace& space, const GeodesicState& s) {
  return fibre_velocity_from(space.bundle().gamma(s.gamma), s);
}

double speed(const TotalSpace& space, const GeodesicState& s) {
  const WeightValues w = space.weights().evaluate(s.point().r());
  const Mat g = space.base().metric(s.gamma);
  const double q = std::exp(2 * w.phi1) * s.dgamma.dot(g * s.dgamma) +
                   std::exp(2 * w.phi2) * s.z.squaredNorm();
  return std::sqrt(std::max(q, 0.0));
}

std::string to_string(TrajectoryStatus s) {
  switch (s) {
    case TrajectoryStatus::completed: return "completed";
    case TrajectoryStatus::boundary_exit: return "boundary_exit";
    case TrajectoryStatus::non_finite: return "non_finite";
  }
  return "unknown";
}

namespace {

Vec rhs_stacked(const TotalSpace& space, const Vec& s) {
  const int m = space.base_dim(), k = space.rank();
  const GeodesicDerivative d = geodesic_rhs(space, GeodesicState::from_stacked(s, m, k));
  Vec out(s.size());
  out << d.dgamma, d.dy, d.ddgamma, d.dz;
  return out;
}

}  // namespace

Trajectory integrate(const TotalSpace& space, const GeodesicState& initial, double t_end,
                     double step) {
  if (!(step > 0)) throw InvalidArgument("integration step must be positive");
  if (!(t_end >= 0)) throw InvalidArgument("t_end must be non-negative");
  space.require_inside(initial.point());
  const int m = space.base_dim(), k = space.rank();

  Trajectory tr;
  tr.t.push_back(0.0);
  tr.states.push_back(initial);
  const double v0 = speed(space, initial);
  tr.speeds.push_back(v0);

  const long n = static_cast<long>(std::ceil(t_end / step - 1e-9));
  Vec s = initial.stacked();
  for (long i = 0; i < n; ++i) {
    const double t = i * step;
    const double h = std::min(step, t_end - t);
    Vec next;
    try {
      const Vec k1 = rhs_stacked(space, s);
      const Vec k2 = rhs_stacked(space, s + 0.5 * h * k1);
      const Vec k3 = rhs_stacked(space, s + 0.5 * h * k2);
      const Vec k4 = rhs_stacked(space, s + h * k3);
      next = s + (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4);
    } catch (const DomainError&) {
      tr.status = TrajectoryStatus::boundary_exit;
      break;
    }
    if (!next.allFinite()) {
      tr.status = TrajectoryStatus::non_finite;
      break;
    }
    const GeodesicState st = GeodesicState::from_stacked(next, m, k);
    if (!space.contains(st.point())) {
      tr.status = TrajectoryStatus::boundary_exit;
      break;
    }
    s = next;
    const double sp = speed(space, st);
    tr.t.push_back(i + 1 == n ? t_end : (i + 1) * step);
    tr.states.push_back(st);
    tr.speeds.push_back(sp);
    if (v0 > 0)
      tr.max_relative_speed_drift = std::max(tr.max_relative_speed_drift, std::abs(sp - v0) / v0);
  }
  return tr;
}

Vec fiber_geodesic_rhs(const Vec& y, const Vec& ydot, const WeightProfile& w) {
  if (y.size() != ydot.size()) throw InvalidArgument("fibre position and velocity lengths differ");
  const double b = 2 * w.evaluate(y.squaredNorm()).dphi2;
  return -2 * b * ydot.dot(y) * ydot + b * ydot.squaredNorm() * y;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
  if (traj.states.empty()) return;
  const auto& s0 = traj.states.front();
  const int m = static_cast<int>(s0.gamma.size()), k = static_cast<int>(s0.y.size());
  out << "t";
  for (int i = 0; i < m; ++i) out << ",gamma_" << i;
  for (int a = 0; a < k; ++a) out << ",y_" << a;
  for (int i = 0; i < m; ++i) out << ",dgamma_" << i;
  for (int a = 0; a < k; ++a) out << ",z_" << a;
  out << ",speed\n";
  char buf[32];
  auto put = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << buf;
  };
  for (std::size_t n = 0; n < traj.states.size(); ++n) {
    const auto& s = traj.states[n];
    put(traj.t[n]);
    for (const Vec* v : {&s.gamma, &s.y, &s.dgamma, &s.z})
      for (Eigen::Index i = 0; i < v->size(); ++i) {
        out << ',';
        put((*v)(i));
      }
    out << ',';
    put(traj.speeds[n]);
    out << '\n';
  }
}

}  // namespace vbgeo
