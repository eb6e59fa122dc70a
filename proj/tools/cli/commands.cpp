#include "commands.hpp"

#include <cmath>

namespace vbgeo::cli {

namespace {

Json point_json(const TotalPoint& p) { return {{"x", to_json(p.x)}, {"y", to_json(p.y)}}; }

Json tensor_entries(const Tensor4& t) {
  Json e = Json::array();
  const int n = t.dim(0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (t(i, j, k, l) != 0.0) e.push_back(Json::array({i, j, k, l, t(i, j, k, l)}));
  return e;
}

Json weights_json(const WeightValues& w) {
  return {{"phi1", w.phi1}, {"dphi1", w.dphi1}, {"d2phi1", w.d2phi1},
          {"phi2", w.phi2}, {"dphi2", w.dphi2}, {"d2phi2", w.d2phi2}};
}

Json holonomy_json(const HolonomyResult& h) {
  Json j;
  j["n"] = h.n;
  j["dimension"] = h.dimension;
  j["classification"] = h.classification;
  j["rounds"] = h.closure_rounds;
  j["singular_value_margins"] = {{"smallest_retained", h.smallest_retained},
                                 {"largest_discarded", h.largest_discarded},
                                 {"ratio", h.margin()}};
  return j;
}

Json state_json(const GeodesicState& s) {
  return {{"x", to_json(s.gamma)}, {"y", to_json(s.y)}, {"dx", to_json(s.dgamma)}, {"z", to_json(s.z)}};
}

}  // namespace

Json scenario_header(const Scenario& s) {
  return {{"name", s.name},
          {"base_dim", s.space.base_dim()},
          {"rank", s.space.rank()},
          {"bundle", to_string(s.space.bundle().kind())},
          {"weights", s.space.weights().kind()}};
}

Json cmd_coeffs(const Scenario& s, double r) {
  const WeightValues w = s.space.weights().evaluate(r);
  const ConnectionCoefficients c = coefficients(w);
  Json j;
  j["scenario"] = scenario_header(s);
  j["r"] = r;
  j["weights"] = weights_json(w);
  j["a"] = c.a;
  j["b"] = c.b;
  j["c1"] = c.c1;
  j["c2"] = c.c2;
  return j;
}

Json cmd_metric(const Scenario& s, const TotalPoint& p) {
  const PointGeometry pg = s.space.at(p);
  const MetricAtPoint m = pg.metric();
  Json j;
  j["scenario"] = scenario_header(s);
  j["point"] = point_json(p);
  j["r"] = p.r();
  j["matrix"] = to_json(m.matrix);
  j["split_matrix"] = to_json(m.split_matrix);
  return j;
}

Json cmd_geodesic(const Scenario& s, const Json& init, double t_end, double step, std::ostream& csv) {
  if (!init.is_object()) throw ParseError("geodesic initial data must be an object");
  for (auto it = init.begin(); it != init.end(); ++it)
    if (it.key() != "x" && it.key() != "y" && it.key() != "dx" && it.key() != "dy")
      throw ParseError("unknown key '" + it.key() + "' in geodesic initial data");
  const int m = s.space.base_dim(), k = s.space.rank();
  auto get = [&](const char* key, int n, bool required) -> Vec {
    if (!init.contains(key)) {
      if (required) throw ParseError(std::string("geodesic initial data needs '") + key + "'");
      return Vec::Zero(n);
    }
    Vec v = vec_from_json(init.at(key), key);
    if (v.size() != n)
      throw InvalidArgument(std::string("'") + key + "' needs " + std::to_string(n) + " values");
    return v;
  };
  const GeodesicState st =
      state_from_velocity(s.space, get("x", m, true), get("y", k, false), get("dx", m, true), get("dy", k, false));
  const Trajectory tr = integrate(s.space, st, t_end, step);
  write_trajectory_csv(csv, tr);
  Json j;
  j["scenario"] = scenario_header(s);
  j["status"] = to_string(tr.status);
  j["samples"] = tr.t.size();
  j["t_final"] = tr.t.back();
  j["final_state"] = state_json(tr.final_state());
  j["initial_speed"] = tr.speeds.front();
  j["max_relative_speed_drift"] = tr.max_relative_speed_drift;
  return j;
}

Json cmd_curvature(const Scenario& s, const std::string& at, const TotalPoint& p, bool oracle) {
  Json j;
  j["scenario"] = scenario_header(s);
  Tensor4 t;
  if (at == "zero-section") {
    j["at"] = "zero-section";
    j["x"] = to_json(p.x);
    t = zero_section_tensor(s.space, p.x);
    if (oracle) {
      const Vec u = Vec::Ones(s.space.rank());
      j["oracle_max_abs_diff"] = Tensor4::max_abs_diff(t, zero_section_oracle(s.space, p.x, u));
    }
  } else if (at == "point") {
    j["at"] = "point";
    j["point"] = point_json(p);
    t = flat_bundle_tensor(s.space, p);
    if (oracle) j["oracle_max_abs_diff"] = Tensor4::max_abs_diff(t, fd_riemann_oracle_split(s.space, p));
  } else {
    throw ParseError("--at must be 'zero-section' or 'point'");
  }
  j["basis"] = "split";
  j["dim"] = s.space.dim();
  j["riemann"] = tensor_entries(t);
  return j;
}

Json cmd_ricci(const Scenario& s, const Vec& x) {
  const CurvatureReport r = ricci_scalar_zero_section(s.space, x);
  Json j;
  j["scenario"] = scenario_header(s);
  j["x"] = to_json(x);
  j["ricci"] = to_json(r.ricci);
  j["ricci_closed_form"] = to_json(r.ricci_closed_form);
  j["scalar"] = r.scalar;
  j["scalar_closed_form"] = r.scalar_closed_form;
  j["einstein_lambda"] = r.einstein_lambda ? Json(*r.einstein_lambda) : Json(nullptr);
  try {
    const EinsteinCheck e = einstein_check(s.space, x);
    j["einstein_check"] = {{"lambda_M", e.lambda_M},
                           {"residual_first", e.residual_first},
                           {"residual_second", e.residual_second},
                           {"lambda_E", e.lambda_E ? Json(*e.lambda_E) : Json(nullptr)}};
  } catch (const InvalidArgument& e) {
    j["einstein_check"] = {{"error", e.what()}};
  }
  return j;
}

Json cmd_holonomy(const Scenario& s, const Vec& x, bool subspaces) {
  Json j;
  j["scenario"] = scenario_header(s);
  j["x"] = to_json(x);
  if (subspaces) {
    if (s.space.base().kind() == ChartKind::sphere || s.space.base().kind() == ChartKind::hyperbolic)
      require_g2_pairing(s.space.base(), s.space.bundle().kind());
    const G2Report r = g2_decomposition(s.space, x);
    j.update(holonomy_json(r.holonomy));
    j["generators"] = r.generators.size();
    j["subspace_dims"] = r.subspace_dims;
    j["family_sizes"] = r.family_sizes;
    j["family_gram_ranks"] = r.family_gram_ranks;
    return j;
  }
  const auto gens = curvature_generators(s.space, x);
  std::vector<SkewOperator> ops;
  for (const auto& g : gens) ops.push_back(g.op);
  j.update(holonomy_json(lie_closure(ops)));
  j["generators"] = gens.size();
  if (s.space.bundle().kind() == BundleKind::trivial) {
    const FlatHolonomyReport f = flat_holonomy_scenario(s.space.base(), s.space.rank(), s.space.weights(), x);
    j["flat_case"] = {{"case", f.proposition_case},
                      {"base_dimension", f.base_dimension},
                      {"lower_bound", f.lower_bound},
                      {"expected_equality", f.expected_equality},
                      {"consistent", f.consistent}};
  }
  return j;
}

Json cmd_fiber(const Scenario& s, const Vec& y) {
  const FiberCurvatures f = fiber_curvatures(s.space.weights(), s.space.rank(), y);
  Json j;
  j["scenario"] = scenario_header(s);
  j["y"] = to_json(y);
  j["r"] = y.squaredNorm();
  j["sectional"] = to_json(f.sectional);
  j["ricci_diagonal"] = to_json(f.ricci_diagonal);
  j["scalar"] = f.scalar;
  return j;
}

Json cmd_conformal(const Scenario& s, const TotalPoint& p, const std::string& deformation) {
  RadialDeformation f;
  if (deformation == "sinh") f = RadialDeformation::sinh();
  else if (deformation == "identity") f = RadialDeformation::identity();
  else if (deformation == "cubic") f = RadialDeformation::cubic();
  else throw ParseError("--f must be one of sinh, identity, cubic");
  const PointGeometry pg = s.space.at(p);
  Json j;
  j["scenario"] = scenario_header(s);
  j["point"] = point_json(p);
  j["deformation"] = f.name;
  j["bergery_matrix"] = to_json(pg.bergery_metric(f).matrix);
  j["residual"] = pg.conformal_check(f);
  return j;
}

Json cmd_hermitian(const Scenario& s, const TotalPoint& p, bool domega) {
  const SasakiStructure st = sasaki_structure(s.space, p);
  Json j;
  j["scenario"] = scenario_header(s);
  j["point"] = point_json(p);
  j["psi"] = st.psi;
  j["psibar"] = st.psibar;
  j["J"] = to_json(st.J);
  j["omega"] = to_json(omega(s.space, p));
  if (domega) j["d_omega_norm"] = d_omega_norm(s.space, p);
  return j;
}

}  // namespace vbgeo::cli
