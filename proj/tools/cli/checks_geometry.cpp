#include "checks_internal.hpp"

#include <cmath>

namespace vbgeo::cli::detail {

namespace {

std::vector<std::pair<std::string, TotalSpace>> sample_spaces() {
  std::vector<std::pair<std::string, TotalSpace>> out;
  for (const auto& p : builtin_presets()) {
    const Scenario s = parse_scenario(p.doc);
    out.emplace_back(s.name, s.space);
  }
  const BaseChart s3 = model_chart(ChartKind::sphere, 3, 1.0);
  out.emplace_back("tangent_s3", TotalSpace(s3, tangent_bundle(s3),
                                            expression_profile("0.2*r - 0.05*r^2", "0.1 - 0.3*r")));
  const BaseChart h3 = model_chart(ChartKind::hyperbolic, 3, 0.7);
  out.emplace_back("trivial_h3", TotalSpace(h3, trivial_bundle(h3, 2), kahler_disk_profile(1.5, 0.8)));
  return out;
}

// d/dt g(z + t X)(Y, Z) at t = 0, coordinates
double fd_metric_along(const TotalSpace& s, const Vec& z, const Vec& X, const Vec& Y, const Vec& Z) {
  const double h = 1e-5;
  const Mat d = (s.coordinate_metric(z + h * X) - s.coordinate_metric(z - h * X)) / (2 * h);
  return Y.dot(d * Z);
}

VectorField constant_coordinate(const Vec& c) {
  return VectorField::coordinate(c, Mat::Zero(c.size(), c.size()));
}

}  // namespace

void add_total_space_checks(std::vector<CheckCase>& out) {
  out.push_back({"total_space", "metric_compatibility", [](Rng& rng) {
                   double worst = 0;
                   for (const auto& [name, s] : sample_spaces())
                     for (int i = 0; i < 50; ++i) {
                       const TotalPoint p = random_point(s, rng, 0.8);
                       const PointGeometry pg = s.at(p);
                       const int n = s.dim();
                       const Vec Xc = rng.uniform_vec(n, -1, 1), Yc = rng.uniform_vec(n, -1, 1),
                                 Zc = rng.uniform_vec(n, -1, 1);
                       const SplitVector X = pg.split(Xc), Y = pg.split(Yc), Z = pg.split(Zc);
                       const double lhs = fd_metric_along(s, p.coords(), Xc, Yc, Zc);
                       const double rhs = pg.inner(pg.levi_civita(X, constant_coordinate(Yc)), Z) +
                                          pg.inner(Y, pg.levi_civita(X, constant_coordinate(Zc)));
                       worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
                     }
                   return at_most(worst, 1e-5);
                 }});
  out.push_back({"total_space", "torsion_free", [](Rng& rng) {
                   double worst = 0;
                   for (const auto& [name, s] : sample_spaces())
                     for (int i = 0; i < 20; ++i) {
                       const TotalPoint p = random_point(s, rng);
                       const PointGeometry pg = s.at(p);
                       const Vec A = rng.uniform_vec(s.dim(), -1, 1), B = rng.uniform_vec(s.dim(), -1, 1);
                       const SplitVector t = pg.levi_civita(pg.split(A), constant_coordinate(B)) -
                                             pg.levi_civita(pg.split(B), constant_coordinate(A));
                       worst = std::max(worst, t.max_abs());
                     }
                   return at_most(worst, 1e-6);
                 }});
  out.push_back({"total_space", "auxiliary_torsion_is_bundle_curvature", [](Rng& rng) {
                   double worst = 0;
                   for (const auto& [name, s] : sample_spaces())
                     for (int i = 0; i < 20; ++i) {
                       const TotalPoint p = random_point(s, rng);
                       const PointGeometry pg = s.at(p);
                       const Vec A = rng.uniform_vec(s.dim(), -1, 1), B = rng.uniform_vec(s.dim(), -1, 1);
                       const SplitVector a = pg.split(A), b = pg.split(B);
                       const SplitVector t = pg.d_tilde(a, constant_coordinate(B)) -
                                             pg.d_tilde(b, constant_coordinate(A)) - pg.calR(a, b);
                       worst = std::max(worst, t.max_abs());
                     }
                   return at_most(worst, 1e-10);
                 }});
  out.push_back({"total_space", "dr_equals_twice_xi_flat", [](Rng& rng) {
                   double worst = 0;
                   for (const auto& [name, s] : sample_spaces())
                     for (int i = 0; i < 20; ++i) {
                       const TotalPoint p = random_point(s, rng);
                       const PointGeometry pg = s.at(p);
                       const Vec Xc = rng.uniform_vec(s.dim(), -1, 1);
                       const double h = 1e-6;
                       const Vec z = p.coords();
                       const double fd = ((z + h * Xc).tail(s.rank()).squaredNorm() -
                                          (z - h * Xc).tail(s.rank()).squaredNorm()) / (2 * h);
                       worst = std::max(worst, std::abs(fd - 2 * p.y.dot(pg.split(Xc).v)));
                     }
                   return at_most(worst, 1e-8);
                 }});
  out.push_back({"total_space", "A_minus_half_R_skew_adjoint", [](Rng& rng) {
                   double worst = 0;
                   for (const auto& [name, s] : sample_spaces())
                     for (int i = 0; i < 20; ++i) {
                       const TotalPoint p = random_point(s, rng);
                       const PointGeometry pg = s.at(p);
                       const SplitVector X = random_split(s, rng), Y = random_split(s, rng),
                                         Z = random_split(s, rng);
                       auto T = [&](const SplitVector& u, const SplitVector& v) {
                         return pg.tensor_A(u, v) - pg.calR(u, v) * 0.5;
                       };
                       worst = std::max(worst, std::abs(pg.inner(T(X, Y), Z) + pg.inner(Y, T(X, Z))));
                     }
                   return at_most(worst, 1e-10);
                 }});
  out.push_back({"total_space", "nabla_xi_identity", [](Rng& rng) {
                   double worst = 0;
                   const auto spaces = sample_spaces();
                   for (int i = 0; i < 50; ++i) {
                     const auto& s = spaces[i % spaces.size()].second;
                     const TotalPoint p = random_point(s, rng);
                     const PointGeometry pg = s.at(p);
                     const SplitVector X = random_split(s, rng);
                     const double r = p.r(), a = pg.coeffs().a, b = pg.coeffs().b;
                     const SplitVector lhs =
                         pg.levi_civita(X, VectorField::tautological(s.base_dim(), s.rank(), p.y));
                     const SplitVector rhs{a * r * X.h, (1 + b * r) * X.v};
                     worst = std::max(worst, (lhs - rhs).max_abs());
                   }
                   return at_most(worst, 1e-10);
                 }});
  out.push_back({"total_space", "parallel_field_reproduction", [](Rng& rng) {
                   double worst = 0;
                   for (ChartKind kind : {ChartKind::flat, ChartKind::sphere, ChartKind::hyperbolic}) {
                     const BaseChart c = model_chart(kind, 3, 1.0);
                     const TotalSpace s(c, trivial_bundle(c, 2), constant_profile(0.4, -0.3));
                     for (int i = 0; i < 10; ++i) {
                       const TotalPoint p = random_point(s, rng);
                       const PointGeometry pg = s.at(p);
                       const SplitVector X = random_split(s, rng), Y = random_split(s, rng);
                       const SplitVector got =
                           pg.levi_civita(X, VectorField::split(Y, Mat::Zero(s.dim(), s.dim())));
                       const auto& gam = pg.base_christoffel();
                       Vec expect(3);
                       for (int q = 0; q < 3; ++q) expect(q) = X.h.dot(gam[q] * Y.h);
                       worst = std::max({worst, (got.h - expect).cwiseAbs().maxCoeff(),
                                         got.v.cwiseAbs().maxCoeff()});
                     }
                   }
                   return at_most(worst, 1e-12);
                 }});
  out.push_back({"total_space", "structured_parallel_field_rank_one", [](Rng& rng) {
                   // k = 1, phi1 constant: Y = c e^{-phi2} e_1 is parallel
                   const BaseChart c = model_chart(ChartKind::sphere, 2, 1.0);
                   const TotalSpace s(c, trivial_bundle(c, 1), expression_profile("0.7", "0.3*r - 0.1*r^2"));
                   double worst = 0;
                   for (int i = 0; i < 20; ++i) {
                     const TotalPoint p = random_point(s, rng, 2.0);
                     const PointGeometry pg = s.at(p);
                     const double cc = rng.uniform(0.5, 2.0);
                     const WeightValues w = pg.weights();
                     const double val = cc * std::exp(-w.phi2);
                     Mat J = Mat::Zero(3, 3);
                     J(2, 2) = -val * w.dphi2 * 2 * p.y(0);
                     const VectorField Y = VectorField::split({Vec::Zero(2), Vec::Constant(1, val)}, J);
                     worst = std::max(worst, pg.levi_civita(random_split(s, rng), Y).max_abs());
                   }
                   return at_most(worst, 1e-8);
                 }});
  out.push_back({"total_space", "killing_fields", [](Rng& rng) {
                   double worst = 0;
                   // fibre rotations for radial weights on a trivial bundle
                   const BaseChart sph = model_chart(ChartKind::sphere, 2, 1.0);
                   const TotalSpace s(sph, trivial_bundle(sph, 3), expression_profile("0.2*r", "sin(r)"));
                   for (int i = 0; i < 20; ++i) {
                     const TotalPoint p = random_point(s, rng);
                     const PointGeometry pg = s.at(p);
                     Mat A = Mat::Zero(3, 3);
                     A(0, 1) = rng.uniform(-1, 1);
                     A(0, 2) = rng.uniform(-1, 1);
                     A(1, 2) = rng.uniform(-1, 1);
                     A -= Mat(A.transpose());
                     Mat J = Mat::Zero(5, 5);
                     J.bottomRightCorner(3, 3) = A;
                     const VectorField X = VectorField::split({Vec::Zero(2), A * p.y}, J);
                     worst = std::max(worst, std::abs(pg.killing_residual(X, random_split(s, rng),
                                                                          random_split(s, rng))));
                   }
                   // translations of a flat base
                   const TotalSpace f = preset_space("flat_m2k2");
                   for (int i = 0; i < 20; ++i) {
                     const TotalPoint p = random_point(f, rng);
                     const PointGeometry pg = f.at(p);
                     Vec t = Vec::Zero(4);
                     t.head(2) = rng.uniform_vec(2, -1, 1);
                     worst = std::max(worst, std::abs(pg.killing_residual(constant_coordinate(t),
                                                                          random_split(f, rng),
                                                                          random_split(f, rng))));
                   }
                   return at_most(worst, 1e-12);
                 }});
  out.push_back({"total_space", "killing_residual_matches_lie_derivative", [](Rng& rng) {
                   // linear coordinate field X(z) = v + J (z - z0); (L_X g)_ab = X^c d_c g_ab + g_cb J_ca + g_ac J_cb
                   double worst = 0, smallest = kInfinity;
                   for (const auto& [name, s] : sample_spaces()) {
                     const int n = s.dim();
                     const TotalPoint p = random_point(s, rng);
                     const PointGeometry pg = s.at(p);
                     const Vec v = rng.uniform_vec(n, -1, 1);
                     const Mat J = Mat::NullaryExpr(n, n, [&rng]() { return rng.uniform(-1, 1); });
                     const double h = 1e-5;
                     const Vec z = p.coords();
                     const Mat dg = (s.coordinate_metric(z + h * v) - s.coordinate_metric(z - h * v)) / (2 * h);
                     const Mat g = s.coordinate_metric(z);
                     const Mat lie = dg + J.transpose() * g + g * J;
                     const Vec Y = rng.uniform_vec(n, -1, 1), Z = rng.uniform_vec(n, -1, 1);
                     const double got = pg.killing_residual(VectorField::coordinate(v, J), pg.split(Y), pg.split(Z));
                     const double want = Y.dot(lie * Z);
                     worst = std::max(worst, std::abs(got - want));
                     smallest = std::min(smallest, std::abs(want));
                   }
                   CheckOutcome o = at_most(worst, 1e-5);
                   o.passed = o.passed && smallest > 1e-3;
                   o.detail = "smallest |L_X g(Y,Z)| " + fmt(smallest);
                   return o;
                 }});
  out.push_back({"total_space", "bergery_conformal_to_musso_tricerri", [](Rng& rng) {
                   double worst = 0;
                   const BaseChart s3 = model_chart(ChartKind::sphere, 3, 1.0);
                   const TotalSpace spaces[] = {
                       preset_space("flat_m2k2"),
                       TotalSpace(s3, tangent_bundle(s3), expression_profile("0.1*r", "-0.2*r"))};
                   for (const TotalSpace& s : spaces)
                     for (int i = 0; i < 20; ++i) {
                       const Vec y = rng.unit_vec(s.rank()) * std::sqrt(rng.uniform(0.1, 2.0));
                       const TotalPoint p{s.base().domain().sample(rng, 0.1), y};
                       worst = std::max(worst, s.at(p).conformal_check(RadialDeformation::sinh()));
                     }
                   return at_most(worst, 1e-10);
                 }});
}

// ---------------------------------------------------------------- geodesics

namespace {

// Unit-curvature sphere in the conformal chart: inverse stereographic map and back.
Vec stereo_up(const Vec& x) {
  const double q = x.squaredNorm();
  Vec P(x.size() + 1);
  P << 2 * x / (q + 1), (q - 1) / (q + 1);
  return P;
}

Vec stereo_down(const Vec& P) {
  const Eigen::Index m = P.size() - 1;
  return P.head(m) / (1 - P(m));
}

Vec stereo_push(const Vec& x, const Vec& v) {
  const double q = x.squaredNorm(), xv = x.dot(v);
  Vec V(x.size() + 1);
  V << (2 * v * (q + 1) - 4 * x * xv) / ((q + 1) * (q + 1)), 4 * xv / ((q + 1) * (q + 1));
  return V;
}

Vec great_circle(const Vec& x0, const Vec& v0, double t) {
  const Vec P = stereo_up(x0), V = stereo_push(x0, v0);
  const double w = V.norm();
  return stereo_down(std::cos(w * t) * P + std::sin(w * t) * V / w);
}

double great_circle_error(const TotalSpace& s, const Vec& x0, const Vec& v0, double step) {
  const int k = s.rank();
  const GeodesicState st{x0, Vec::Zero(k), v0, Vec::Zero(k)};
  const Trajectory tr = integrate(s, st, 1.0, step);
  if (tr.status != TrajectoryStatus::completed) throw DomainError("great circle left the chart");
  return (tr.final_state().gamma - great_circle(x0, v0, 1.0)).cwiseAbs().maxCoeff();
}

GeodesicState random_start(const TotalSpace& s, Rng& rng, double speed_scale) {
  const TotalPoint p = random_point(s, rng, 0.5);
  Vec x = s.base().domain().center() + 0.3 * (p.x - s.base().domain().center());
  const Vec y = p.y * std::sqrt(0.6);
  return state_from_velocity(s, x, y, speed_scale * rng.uniform_vec(s.base_dim(), -1, 1),
                             speed_scale * rng.uniform_vec(s.rank(), -1, 1));
}

}  // namespace

void add_geodesic_checks(std::vector<CheckCase>& out) {
  out.push_back({"geodesics", "speed_conservation_presets", [](Rng& rng) {
                   double worst = 0;
                   std::string where;
                   for (const auto& p : builtin_presets()) {
                     const TotalSpace s = parse_scenario(p.doc).space;
                     const Trajectory tr = integrate(s, random_start(s, rng, 0.3), 1.0, 1e-3);
                     if (tr.status != TrajectoryStatus::completed)
                       return CheckOutcome{false, 0, 1e-7, p.file + ": " + to_string(tr.status)};
                     if (tr.max_relative_speed_drift >= worst) {
                       worst = tr.max_relative_speed_drift;
                       where = p.file;
                     }
                   }
                   return at_most(worst, 1e-7, "worst " + where);
                 }});
  out.push_back({"geodesics", "fibres_totally_geodesic", [](Rng& rng) {
                   double worst = 0;
                   for (const char* name : {"bs_s4", "flat_m2k2", "fiber_k3"}) {
                     const TotalSpace s = preset_space(name);
                     GeodesicState st = random_start(s, rng, 0.3);
                     st.dgamma.setZero();
                     const Trajectory tr = integrate(s, st, 1.0, 1e-3);
                     for (const auto& q : tr.states) worst = std::max(worst, q.dgamma.cwiseAbs().maxCoeff());
                   }
                   return at_most(worst, 1e-10);
                 }});
  out.push_back({"geodesics", "zero_section_totally_geodesic", [](Rng& rng) {
                   double worst = 0;
                   for (const char* name : {"bs_s4", "bs_h4_plus", "sasaki_flat"}) {
                     const TotalSpace s = preset_space(name);
                     GeodesicState st = random_start(s, rng, 0.3);
                     st.y.setZero();
                     st.z.setZero();
                     const Trajectory tr = integrate(s, st, 1.0, 1e-3);
                     for (const auto& q : tr.states)
                       worst = std::max({worst, q.y.cwiseAbs().maxCoeff(), q.z.cwiseAbs().maxCoeff()});
                   }
                   return CheckOutcome{worst == 0.0, worst, 0.0, "exact"};
                 }});
  out.push_back({"geodesics", "sphere_zero_section_great_circle", [](Rng& rng) {
                   const TotalSpace s = preset_space("bs_s4");
                   const Vec x0 = rng.uniform_vec(4, -0.3, 0.3);
                   Vec v0 = rng.unit_vec(4);
                   v0 /= std::sqrt(v0.dot(s.base().metric(x0) * v0));  // unit base speed
                   return at_most(great_circle_error(s, x0, v0, 1e-3), 1e-6);
                 }});
  out.push_back({"geodesics", "step_halving_fourth_order", [](Rng& rng) {
                   const TotalSpace s = preset_space("bs_s4");
                   const Vec x0 = rng.uniform_vec(4, -0.3, 0.3);
                   Vec v0 = rng.unit_vec(4);
                   v0 /= std::sqrt(v0.dot(s.base().metric(x0) * v0));
                   const double e1 = great_circle_error(s, x0, v0, 0.1);
                   const double e2 = great_circle_error(s, x0, v0, 0.05);
                   const double ratio = e1 / e2;
                   CheckOutcome o{ratio >= 12 && ratio <= 20, ratio, 16,
                                  "errors " + fmt(e1) + " / " + fmt(e2) + ", accepted [12, 20]"};
                   return o;
                 }});
  out.push_back({"geodesics", "vertical_system_matches_fibre_equation", [](Rng& rng) {
                   const TotalSpace s = preset_space("fiber_k3");
                   double worst = 0;
                   for (int i = 0; i < 20; ++i) {
                     GeodesicState st = random_start(s, rng, 1.0);
                     st.dgamma.setZero();
                     const GeodesicDerivative d = geodesic_rhs(s, st);
                     worst = std::max(worst, (d.dz - fiber_geodesic_rhs(st.y, st.z, s.weights()))
                                                 .cwiseAbs().maxCoeff());
                   }
                   return at_most(worst, 1e-12);
                 }});
  out.push_back({"geodesics", "fibre_speed_conservation", [](Rng& rng) {
                   // phi2 = r, k = 2, start tangent to the circle |y| = const
                   const WeightProfile w = expression_profile("0", "r");
                   Vec y = rng.unit_vec(2) * 0.7;
                   Vec v(2);
                   v << -y(1), y(0);
                   auto speed = [&](const Vec& q, const Vec& dq) {
                     return std::exp(w.phi2(q.squaredNorm())) * dq.norm();
                   };
                   const double s0 = speed(y, v);
                   double worst = 0;
                   const double h = 1e-3;
                   for (int i = 0; i < 1000; ++i) {
                     auto f = [&](const Vec& q, const Vec& dq) { return fiber_geodesic_rhs(q, dq, w); };
                     const Vec k1y = v, k1v = f(y, v);
                     const Vec k2y = v + 0.5 * h * k1v, k2v = f(y + 0.5 * h * k1y, k2y);
                     const Vec k3y = v + 0.5 * h * k2v, k3v = f(y + 0.5 * h * k2y, k3y);
                     const Vec k4y = v + h * k3v, k4v = f(y + h * k3y, k4y);
                     y += h / 6 * (k1y + 2 * k2y + 2 * k3y + k4y);
                     v += h / 6 * (k1v + 2 * k2v + 2 * k3v + k4v);
                     worst = std::max(worst, std::abs(speed(y, v) - s0) / s0);
                   }
                   return at_most(worst, 1e-8);
                 }});
}

}  // namespace vbgeo::cli::detail
