#include "checks_internal.hpp"

#include <Eigen/QR>
#include <cmath>

namespace vbgeo::cli::detail {

namespace {

std::vector<std::pair<std::string, TotalSpace>> curved_spaces() {
  std::vector<std::pair<std::string, TotalSpace>> out;
  out.emplace_back("bs_s4", preset_space("bs_s4"));
  out.emplace_back("bs_h4_plus", preset_space("bs_h4_plus"));
  const BaseChart s3 = model_chart(ChartKind::sphere, 3, 1.0);
  out.emplace_back("tangent_s3", TotalSpace(s3, tangent_bundle(s3),
                                            expression_profile("0.2*r - 0.05*r^2", "0.1 - 0.3*r")));
  const BaseChart h3 = model_chart(ChartKind::hyperbolic, 3, 0.7);
  out.emplace_back("trivial_h3", TotalSpace(h3, trivial_bundle(h3, 2), kahler_disk_profile(1.5, 0.8)));
  const BaseChart s4 = model_chart(ChartKind::sphere, 4, 1.3);
  out.emplace_back("lambda2_plus_s4", TotalSpace(s4, lambda2_bundle(s4, Orientation::plus),
                                                 expression_profile("0.3*r", "-0.1*r + 0.2")));
  return out;
}

double symmetry_defect(const Tensor4& t) {
  const int n = t.dim(0);
  double worst = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          worst = std::max({worst, std::abs(t(i, j, k, l) + t(j, i, k, l)),
                            std::abs(t(i, j, k, l) + t(i, j, l, k)),
                            std::abs(t(i, j, k, l) - t(k, l, i, j))});
  return worst;
}

std::string poly(Rng& rng) {
  return fmt(rng.uniform(-0.5, 0.5)) + "*r + " + fmt(rng.uniform(-0.3, 0.3)) + "*r^2";
}

// Scalar curvature of e^{2 phi2(|y|^2)} |dy|^2 on R^k from the FD oracle.
double fd_fibre_scalar(const WeightProfile& w, const Vec& y) {
  const MetricFn g = [&w](const Vec& q) {
    return Mat(std::exp(2 * w.phi2(q.squaredNorm())) * Mat::Identity(q.size(), q.size()));
  };
  const Tensor4 R = fd_riemann(g, y, 1e-4, 1e-3);
  const Mat gi = g(y).inverse();
  const int k = static_cast<int>(y.size());
  double s = 0;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        for (int e = 0; e < k; ++e) s += gi(a, e) * gi(b, c) * R(a, b, c, e);
  return s;
}

std::vector<SkewOperator> ops_of(const std::vector<CurvatureGenerator>& g) {
  std::vector<SkewOperator> out;
  for (const auto& c : g) out.push_back(c.op);
  return out;
}

}  // namespace

void add_curvature_checks(std::vector<CheckCase>& out) {
  out.push_back({"curvature", "zero_section_symmetries", [](Rng& rng) {
                   double worst = 0;
                   for (const auto& [name, s] : curved_spaces()) {
                     const Tensor4 t = zero_section_tensor(s, s.base().domain().sample(rng, 0.1));
                     worst = std::max(worst, symmetry_defect(t) / std::max(1.0, t.max_abs()));
                   }
                   return at_most(worst, 1e-12);
                 }});
  out.push_back({"curvature", "ricci_is_trace_of_riemann", [](Rng& rng) {
                   double worst = 0;
                   for (const auto& [name, s] : curved_spaces()) {
                     const CurvatureReport r =
                         ricci_scalar_zero_section(s, s.base().domain().sample(rng, 0.1));
                     const double scale = std::max(1.0, r.ricci.cwiseAbs().maxCoeff());
                     worst = std::max({worst, (r.ricci - r.ricci_closed_form).cwiseAbs().maxCoeff() / scale,
                                       std::abs(r.scalar - r.scalar_closed_form) / std::max(1.0, std::abs(r.scalar))});
                   }
                   return at_most(worst, 1e-12);
                 }});
  out.push_back({"curvature", "bryant_salamon_ricci_flat", [](Rng& rng) {
                   double worst = 0;
                   for (const char* name : {"bs_s4", "bs_h4_plus"}) {
                     const TotalSpace s = preset_space(name);
                     const CurvatureReport r =
                         ricci_scalar_zero_section(s, s.base().domain().sample(rng, 0.1));
                     worst = std::max({worst, r.ricci.cwiseAbs().maxCoeff(),
                                       r.ricci_closed_form.cwiseAbs().maxCoeff()});
                   }
                   return at_most(worst, 1e-10);
                 }});
  out.push_back({"curvature", "flat_bundle_formulas_match_oracle", [](Rng& rng) {
                   double worst = 0;
                   const ChartKind kinds[] = {ChartKind::flat, ChartKind::sphere, ChartKind::hyperbolic};
                   for (int i = 0; i < 20; ++i) {
                     const int m = 1 + static_cast<int>(rng.uniform() * 2), k = 1 + static_cast<int>(rng.uniform() * 2);
                     const BaseChart c = model_chart(kinds[i % 3], m, rng.uniform(0.5, 1.5));
                     const TotalSpace s(c, trivial_bundle(c, k), expression_profile(poly(rng), poly(rng)));
                     const TotalPoint p = random_point(s, rng);
                     worst = std::max(worst, Tensor4::max_abs_diff(flat_bundle_tensor(s, p),
                                                                   fd_riemann_oracle_split(s, p)));
                   }
                   return at_most(worst, 1e-4);
                 }});
  out.push_back({"curvature", "zero_section_formulas_match_oracle", [](Rng& rng) {
                   double worst = 0;
                   for (const auto& [name, s] : curved_spaces()) {
                     const Vec x = s.base().domain().sample(rng, 0.2);
                     const Tensor4 t = zero_section_tensor(s, x);
                     worst = std::max(worst, Tensor4::max_abs_diff(t, zero_section_oracle(s, x, rng.unit_vec(s.rank()))));
                   }
                   return at_most(worst, 1e-3);
                 }});
  out.push_back({"curvature", "fibre_scalar_matches_oracle", [](Rng& rng) {
                   double worst = 0;
                   for (const char* phi2 : {"r", "r^2/4"})
                     for (int k : {2, 3, 5}) {
                       const WeightProfile w = expression_profile("0", phi2);
                       const Vec y = rng.unit_vec(k) * rng.uniform(0.3, 1.0);
                       worst = std::max(worst, std::abs(fiber_curvatures(w, k, y).scalar - fd_fibre_scalar(w, y)));
                     }
                   return at_most(worst, 1e-3);
                 }});
  out.push_back({"curvature", "fibre_scalar_example", [](Rng&) {
                   const FiberCurvatures f = fiber_curvatures(expression_profile("0", "r"), 3, Vec::Unit(3, 0));
                   return at_most(std::abs(f.scalar + 32 * std::exp(-2.0)), 1e-12);
                 }});
  out.push_back({"curvature", "fibre_flatness_family", [](Rng& rng) {
                   // phi2'' r + phi2' = 0 for phi2 = c log r
                   double worst = 0;
                   for (int i = 0; i < 10; ++i) {
                     const WeightProfile w = expression_profile("0", fmt(rng.uniform(-1, 1)) + "*log(r)");
                     const Vec y = rng.unit_vec(2) * rng.uniform(0.2, 2.0);
                     worst = std::max(worst, fiber_curvatures(w, 2, y).sectional.cwiseAbs().maxCoeff());
                   }
                   return at_most(worst, 1e-8);
                 }});
  out.push_back({"curvature", "fibre_sectional_symmetric", [](Rng& rng) {
                   const WeightProfile w = expression_profile("0", "0.4*r - 0.2*r^2");
                   double worst = 0;
                   for (int i = 0; i < 10; ++i) {
                     const Vec y = rng.uniform_vec(4, -1, 1);
                     const Mat a = fiber_curvatures(w, 4, y).sectional;
                     Vec flipped = y;
                     flipped(i % 4) = -flipped(i % 4);
                     const Mat b = fiber_curvatures(w, 4, flipped).sectional;
                     worst = std::max({worst, (a - a.transpose()).cwiseAbs().maxCoeff(), (a - b).cwiseAbs().maxCoeff()});
                   }
                   return CheckOutcome{worst == 0.0, worst, 0.0, "exact"};
                 }});
  out.push_back({"curvature", "einstein_identities", [](Rng& rng) {
                   double worst = 0;
                   for (const char* name : {"bs_s4", "bs_h4_plus"}) {
                     const TotalSpace s = preset_space(name);
                     const EinsteinCheck e = einstein_check(s, s.base().domain().sample(rng, 0.1));
                     if (!e.lambda_E) return CheckOutcome{false, 0, 1e-10, std::string(name) + ": not Einstein"};
                     worst = std::max({worst, std::abs(*e.lambda_E), std::abs(e.residual_first), std::abs(e.residual_second)});
                   }
                   // constant weights: the first residual is lambda_M e^{2phi2 - 2phi1}
                   const BaseChart c = model_chart(ChartKind::sphere, 3, 1.0);
                   const TotalSpace s(c, trivial_bundle(c, 2), constant_profile(0.3, -0.2));
                   const EinsteinCheck e = einstein_check(s, c.domain().center());
                   worst = std::max(worst, std::abs(e.residual_first - 2.0 * std::exp(-1.0)));
                   return at_most(worst, 1e-10);
                 }});
}

void add_holonomy_checks(std::vector<CheckCase>& out) {
  out.push_back({"holonomy", "generators_skew", [](Rng& rng) {
                   double worst = 0;
                   for (const auto& [name, s] : curved_spaces())
                     for (const auto& g : curvature_generators(s, s.base().domain().sample(rng, 0.1)))
                       worst = std::max(worst, g.op.skew_residual());
                   return at_most(worst, 1e-12);
                 }});
  out.push_back({"holonomy", "generators_match_curvature_tensor", [](Rng& rng) {
                   double worst = 0;
                   for (const auto& [name, s] : curved_spaces()) {
                     const Vec x = s.base().domain().sample(rng, 0.1);
                     const auto a = curvature_generators(s, x), b = curvature_generators_from_tensor(s, x);
                     for (std::size_t i = 0; i < a.size(); ++i)
                       worst = std::max(worst, (a[i].op.matrix - b[i].op.matrix).cwiseAbs().maxCoeff());
                   }
                   return at_most(worst, 1e-12);
                 }});
  out.push_back({"holonomy", "closure_idempotent", [](Rng& rng) {
                   int defects = 0;
                   for (const auto& [name, s] : curved_spaces()) {
                     const auto ops = ops_of(curvature_generators(s, s.base().domain().sample(rng, 0.1)));
                     const HolonomyResult h = lie_closure(ops);
                     std::vector<SkewOperator> sat = ops;
                     for (std::size_t i = 0; i < ops.size(); ++i)
                       for (std::size_t j = i + 1; j < ops.size(); ++j)
                         sat.push_back({ops[i].matrix * ops[j].matrix - ops[j].matrix * ops[i].matrix});
                     defects += lie_closure(sat).dimension != h.dimension;
                     defects += lie_closure(h.basis).dimension != h.dimension;
                   }
                   return equals(defects, 0);
                 }});
  out.push_back({"holonomy", "closure_basis_independent", [](Rng& rng) {
                   int defects = 0;
                   for (const auto& [name, s] : curved_spaces()) {
                     const auto ops = ops_of(curvature_generators(s, s.base().domain().sample(rng, 0.1)));
                     Mat G(s.dim(), s.dim());
                     for (int i = 0; i < G.size(); ++i) G.data()[i] = rng.normal();
                     const Mat Q = Eigen::HouseholderQR<Mat>(G).householderQ();
                     std::vector<SkewOperator> conj;
                     for (const auto& o : ops) conj.push_back({Q * o.matrix * Q.transpose()});
                     defects += lie_closure(conj).dimension != lie_closure(ops).dimension;
                   }
                   return equals(defects, 0);
                 }});
  out.push_back({"holonomy", "g2_dimension_both_branches", [](Rng& rng) {
                   int bad = 0;
                   double margin = kInfinity;
                   for (int i = 0; i < 6; ++i) {
                     const G2Base b = i % 2 ? G2Base::hyperbolic4 : G2Base::sphere4;
                     const double c0 = i < 2 ? 1.0 : rng.uniform(0.5, 2.0);
                     const double c1 = i < 2 ? (i == 0 ? 1.0 : 2.0) : rng.uniform(0.5, 2.0);
                     const TotalSpace s = g2_space(b, c0, c1);
                     const HolonomyResult h = lie_closure(
                         ops_of(curvature_generators(s, s.base().domain().sample(rng, 0.1))));
                     bad += h.dimension != 14;
                     margin = std::min(margin, h.margin());
                   }
                   CheckOutcome o = equals(bad, 0, "smallest singular-value margin " + fmt(margin));
                   o.passed = o.passed && margin >= 1e4;
                   return o;
                 }});
  out.push_back({"holonomy", "g2_proof_decomposition", [](Rng&) {
                   int bad = 0;
                   for (G2Base b : {G2Base::sphere4, G2Base::hyperbolic4}) {
                     const G2Report r = g2_scenario(b, 1.0, b == G2Base::sphere4 ? 1.0 : 2.0);
                     bad += r.subspace_dims != std::array<int, 3>{3, 3, 8};
                     bad += r.family_sizes != std::vector<int>{3, 3, 3, 3};
                     bad += r.family_gram_ranks != std::vector<int>{2, 2, 2, 2};
                   }
                   return equals(bad, 0);
                 }});
  out.push_back({"holonomy", "base_block_of_ek_generators", [](Rng& rng) {
                   // R^M(e_k) = -s e^k, the 2-form acting through (u^v)z = <u,z>v - <v,z>u
                   const TotalSpace s = preset_space("bs_s4");
                   const double sc = curvature_operator(s.base(), s.base().domain().center()).s;
                   const Vec x = s.base().domain().sample(rng, 0.1);
                   const auto gens = curvature_generators(s, x);
                   double worst = 0;
                   for (const Mat& e : lambda2_frame(Orientation::minus)) {
                     Mat sum = Mat::Zero(7, 7);
                     for (const auto& g : gens)
                       if (g.type == PlaneType::horizontal) sum += e(g.first, g.second) * g.op.matrix;
                     const Mat as_endomorphism = -e;  // (E_a ^ E_b) sends E_a to E_b
                     worst = std::max(worst, (sum.topLeftCorner(4, 4) + sc * as_endomorphism).cwiseAbs().maxCoeff());
                   }
                   return at_most(worst, 1e-8);
                 }});
  out.push_back({"holonomy", "flat_bundle_cases", [](Rng&) {
                   int bad = 0;
                   std::string detail;
                   const BaseChart plane = model_chart(ChartKind::flat, 2, 1.0);
                   const FlatHolonomyReport i = flat_holonomy_scenario(plane, 2, expression_profile("r", "0"), Vec::Zero(2));
                   bad += i.holonomy.dimension != 6 || !i.consistent;
                   const FlatHolonomyReport iii = flat_holonomy_scenario(plane, 3, constant_profile(0.1, 0.2), Vec::Zero(2));
                   bad += iii.holonomy.dimension != 0 || !iii.consistent;
                   const BaseChart sphere = model_chart(ChartKind::sphere, 2, 1.0);
                   const FlatHolonomyReport ii = flat_holonomy_scenario(sphere, 2, expression_profile("0", "r"), Vec::Zero(2));
                   bad += ii.holonomy.dimension < 2 || !ii.consistent;
                   detail = "dims " + std::to_string(i.holonomy.dimension) + ", " +
                            std::to_string(ii.holonomy.dimension) + ", " + std::to_string(iii.holonomy.dimension);
                   return equals(bad, 0, detail);
                 }});
}

void add_hermitian_checks(std::vector<CheckCase>& out) {
  out.push_back({"hermitian", "J_compatible_and_complex", [](Rng& rng) {
                   double worst = 0;
                   const BaseChart s2 = model_chart(ChartKind::sphere, 2, 1.0);
                   const TotalSpace spaces[] = {
                       preset_space("sasaki_flat"),
                       TotalSpace(s2, tangent_bundle(s2), expression_profile("0.3*r", "sin(r)"))};
                   for (const TotalSpace& s : spaces)
                     for (int i = 0; i < 20; ++i) {
                       const SasakiStructure st = sasaki_structure(s, random_point(s, rng));
                       const Vec X = rng.uniform_vec(s.dim(), -1, 1), Y = rng.uniform_vec(s.dim(), -1, 1);
                       const double gxy = X.dot(st.g * Y);
                       worst = std::max({worst,
                                         std::abs((st.J * X).dot(st.g * (st.J * Y)) - gxy) / std::max(1.0, std::abs(gxy)),
                                         (st.J * st.J + Mat::Identity(s.dim(), s.dim())).cwiseAbs().maxCoeff()});
                     }
                   return at_most(worst, 1e-12);
                 }});
  out.push_back({"hermitian", "d_omega_constant_psibar", [](Rng& rng) {
                   double worst = 0;
                   const BaseChart s2 = model_chart(ChartKind::sphere, 2, 1.0);
                   const TotalSpace spaces[] = {
                       preset_space("sasaki_flat"),
                       TotalSpace(s2, tangent_bundle(s2), expression_profile("0.4*r", "0.3 - 0.4*r"))};
                   for (const TotalSpace& s : spaces)
                     for (int i = 0; i < 5; ++i) worst = std::max(worst, d_omega_norm(s, random_point(s, rng)));
                   return at_most(worst, 1e-6);
                 }});
  out.push_back({"hermitian", "d_omega_nonconstant_psibar", [](Rng& rng) {
                   const BaseChart plane = model_chart(ChartKind::flat, 2, 1.0);
                   const TotalSpace s(plane, tangent_bundle(plane), expression_profile("0", "r"));
                   const TotalPoint p{plane.domain().sample(rng, 0.2), rng.unit_vec(2)};  // r = 1
                   return at_least(d_omega_norm(s, p), 1e-2);
                 }});
  out.push_back({"hermitian", "omega_scaling_and_nondegeneracy", [](Rng& rng) {
                   const BaseChart s2 = model_chart(ChartKind::sphere, 2, 1.0);
                   const TotalSpace s(s2, tangent_bundle(s2), expression_profile("0.2*r", "0.5*r - 0.1"));
                   // same psi, psibar = 0
                   const TotalSpace s0(s2, tangent_bundle(s2),
                                       expression_profile("(0.2*r - (0.5*r - 0.1))/2", "((0.5*r - 0.1) - 0.2*r)/2"));
                   double worst = 0, min_det = kInfinity;
                   for (int i = 0; i < 20; ++i) {
                     const TotalPoint p = random_point(s, rng);
                     const WeightValues w = s.weights().evaluate(p.r());
                     const Mat a = omega(s, p), b = omega(s0, p);
                     worst = std::max(worst, (a - std::exp(w.phi1 + w.phi2) * b).cwiseAbs().maxCoeff() /
                                                 std::max(1.0, a.cwiseAbs().maxCoeff()));
                     min_det = std::min(min_det, std::abs(a.determinant()));
                   }
                   CheckOutcome o = at_most(worst, 1e-12, "smallest |det omega| " + fmt(min_det));
                   o.passed = o.passed && min_det > 1e-6;
                   return o;
                 }});
}

}  // namespace vbgeo::cli::detail
