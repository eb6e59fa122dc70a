// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include "scenario.hpp"

#include <vbgeo/vbgeo.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace vbgeo;
using namespace vbgeo::cli;

namespace {

const std::string kScenarioDir = VBGEO_SCENARIO_DIR;

TotalSpace scenario(const std::string& name) {
  return load_scenario(kScenarioDir + "/" + name + ".json").space;
}

struct Line {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    detail << (detail.tellp() > 0 ? "; " : "") << what << (ok ? "" : " [X]");
  }
};

std::string num(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int failures = 0;

void run(const std::string& name, const std::function<void(Line&)>& body) {
  Line line;
  try {
    body(line);
  } catch (const std::exception& e) {
    line.require(false, std::string("exception: ") + e.what());
  }
  if (!line.pass) ++failures;
  std::printf("%s %s: %s\n", line.pass ? "PASS" : "FAIL", name.c_str(), line.detail.str().c_str());
  std::fflush(stdout);
}

double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

// Scalar curvature of a coordinate metric from a Riemann tensor R(i,j,k,l) = g(R(d_i,d_j)d_k, d_l).
double scalar_from(const Mat& g, const Tensor4& R) {
  const Mat gi = g.inverse();
  const int n = static_cast<int>(g.rows());
  double s = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) s += gi(i, l) * gi(j, k) * R(i, j, k, l);
  return s;
}

Tensor4 richardson_riemann(const MetricFn& g, const Vec& x) {
  Tensor4 fine = fd_riemann(g, x, 1e-5, 1e-3);
  Tensor4 coarse = fd_riemann(g, x, 1e-5, 2e-3);
  fine *= 4.0;
  coarse *= -1.0;
  fine += coarse;
  fine *= 1.0 / 3.0;
  return fine;
}

// Unit sphere in the conformal chart, for the closed-form great circle.
Vec great_circle(const Vec& x0, const Vec& v0, double t) {
  const double q = x0.squaredNorm(), xv = x0.dot(v0);
  Vec P(x0.size() + 1), V(x0.size() + 1);
  P << 2 * x0 / (q + 1), (q - 1) / (q + 1);
  V << (2 * v0 * (q + 1) - 4 * x0 * xv) / ((q + 1) * (q + 1)), 4 * xv / ((q + 1) * (q + 1));
  const double w = V.norm();
  const Vec Q = std::cos(w * t) * P + std::sin(w * t) * V / w;
  return Q.head(x0.size()) / (1 - Q(x0.size()));
}

double great_circle_error(const TotalSpace& s, const Vec& x0, const Vec& v0, double step) {
  const GeodesicState st{x0, Vec::Zero(s.rank()), v0, Vec::Zero(s.rank())};
  const Trajectory tr = integrate(s, st, 1.0, step);
  if (tr.status != TrajectoryStatus::completed) throw DomainError("geodesic left the chart");
  return (tr.final_state().gamma - great_circle(x0, v0, 1.0)).cwiseAbs().maxCoeff();
}

TotalPoint random_point(const TotalSpace& s, Rng& rng, double r_lo, double r_hi) {
  const Vec y = rng.unit_vec(s.rank()) * std::sqrt(rng.uniform(r_lo, r_hi));
  return {s.base().domain().sample(rng, 0.1), y};
}

HolonomyResult closure_at(const TotalSpace& s, const Vec& x) {
  std::vector<SkewOperator> ops;
  for (const auto& g : curvature_generators(s, x)) ops.push_back(g.op);
  return lie_closure(ops);
}

const char* kPresets[] = {"bs_s4", "bs_h4_plus", "flat_m2k2", "sasaki_flat", "fiber_k3"};

}  // namespace

int main() {
  Rng rng(20240607);

  run("g2_holonomy_dimension", [](Line& l) {
    for (const char* name : {"bs_s4", "bs_h4_plus"}) {
      const auto t0 = std::chrono::steady_clock::now();
      const TotalSpace s = scenario(name);
      const Vec x = s.base().domain().center();
      const HolonomyResult h = closure_at(s, x);
      const double secs = seconds_since(t0);
      l.require(h.dimension == 14, std::string(name) + " dim=" + std::to_string(h.dimension));
      l.require(h.margin() >= 1e4, "margin=" + num(h.margin()) + " >= 1e4");
      l.require(secs < 5, "time=" + num(secs) + "s < 5s");
    }
  });

  run("g2_proof_decomposition", [](Line& l) {
    for (const char* name : {"bs_s4", "bs_h4_plus"}) {
      const TotalSpace s = scenario(name);
      const G2Report r = g2_decomposition(s, s.base().domain().center());
      const auto& d = r.subspace_dims;
      l.require(d[0] == 3 && d[1] == 3 && d[2] == 8,
                std::string(name) + " subspaces=" + std::to_string(d[0]) + "," + std::to_string(d[1]) +
                    "," + std::to_string(d[2]));
      const bool ranks = r.family_gram_ranks.size() == 4 &&
                         std::all_of(r.family_gram_ranks.begin(), r.family_gram_ranks.end(),
                                     [](int k) { return k == 2; });
      std::string rs;
      for (int k : r.family_gram_ranks) rs += std::to_string(k);
      l.require(ranks, "family ranks=" + rs);
    }
  });

  run("bryant_salamon_ricci_flat", [&rng](Line& l) {
    for (const char* name : {"bs_s4", "bs_h4_plus"}) {
      const TotalSpace s = scenario(name);
      const Vec x = s.base().domain().center();
      const CurvatureReport c = ricci_scalar_zero_section(s, x);
      const double analytic = std::max(max_abs(c.ricci), max_abs(c.ricci_closed_form));
      const Mat fd = ricci_from_tensor(s, x, zero_section_oracle(s, x, rng.unit_vec(s.rank())));
      l.require(analytic < 1e-10, std::string(name) + " analytic=" + num(analytic) + " < 1e-10");
      l.require(max_abs(fd) < 1e-3, "oracle=" + num(max_abs(fd)) + " < 1e-3");
    }
  });

  run("flat_case_holonomy", [](Line& l) {
    const TotalSpace s = scenario("flat_m2k2");
    const Vec x = s.base().domain().center();
    l.require(s.weights().dphi1(0) != 0, "phi1'(0)=" + num(s.weights().dphi1(0)));
    const int d6 = closure_at(s, x).dimension;
    l.require(d6 == 6, "m=2,k=2 dim=" + std::to_string(d6) + " == 6");
    const TotalSpace c = scenario("sasaki_flat");
    const int d0 = closure_at(c, c.base().domain().center()).dimension;
    l.require(d0 == 0, "constant weights dim=" + std::to_string(d0) + " == 0");
    const BaseChart plane = model_chart(ChartKind::flat, 3);
    const int t0 = flat_holonomy_scenario(plane, 2, constant_profile(0.3, -0.2), plane.domain().center())
                       .holonomy.dimension;
    l.require(t0 == 0, "trivial bundle constant weights dim=" + std::to_string(t0) + " == 0");
  });

  run("closed_forms_match_oracle", [&rng](Line& l) {
    const auto t0 = std::chrono::steady_clock::now();
    double flat = 0;
    const ChartKind kinds[] = {ChartKind::flat, ChartKind::sphere, ChartKind::hyperbolic};
    {
      const TotalSpace s = scenario("flat_m2k2");
      Vec y(2);
      y << 0.3, 0.4;
      flat = Tensor4::max_abs_diff(flat_bundle_tensor(s, {Vec::Zero(2), y}),
                                   fd_riemann_oracle_split(s, {Vec::Zero(2), y}));
    }
    for (int i = 0; i < 20; ++i) {
      const int m = 1 + (i / 3) % 3, k = 1 + (i + i / 9) % 3;
      const BaseChart c = model_chart(kinds[i % 3], m, rng.uniform(0.5, 1.5));
      std::ostringstream p1, p2;
      p1 << rng.uniform(-0.5, 0.5) << "*r + " << rng.uniform(-0.3, 0.3) << "*r^2";
      p2 << rng.uniform(-0.5, 0.5) << "*r + " << rng.uniform(-0.3, 0.3) << "*r^2";
      const TotalSpace s(c, trivial_bundle(c, k), expression_profile(p1.str(), p2.str()));
      const TotalPoint p = random_point(s, rng, 0.05, 1.0);
      flat = std::max(flat, Tensor4::max_abs_diff(flat_bundle_tensor(s, p), fd_riemann_oracle_split(s, p)));
    }
    l.require(flat < 1e-4, "flat bundle=" + num(flat) + " < 1e-4");
    double zero = 0;
    const BaseChart s3 = model_chart(ChartKind::sphere, 3);
    const TotalSpace extra[] = {
        TotalSpace(s3, tangent_bundle(s3), expression_profile("0.3*r - 0.1*r^2", "0.2 - 0.4*r")),
        TotalSpace(model_chart(ChartKind::sphere, 4), lambda2_bundle(model_chart(ChartKind::sphere, 4),
                                                                     Orientation::plus),
                   expression_profile("0.25*r", "sin(r)"))};
    for (const char* name : {"bs_s4", "bs_h4_plus"}) {
      const TotalSpace s = scenario(name);
      const Vec x = s.base().domain().sample(rng, 0.25);
      zero = std::max(zero, Tensor4::max_abs_diff(zero_section_tensor(s, x),
                                                  zero_section_oracle(s, x, rng.unit_vec(s.rank()))));
    }
    for (const TotalSpace& s : extra) {
      const Vec x = s.base().domain().sample(rng, 0.25);
      zero = std::max(zero, Tensor4::max_abs_diff(zero_section_tensor(s, x),
                                                  zero_section_oracle(s, x, rng.unit_vec(s.rank()))));
    }
    l.require(zero < 1e-3, "zero section=" + num(zero) + " < 1e-3");
    const double secs = seconds_since(t0);
    l.require(secs < 30, "time=" + num(secs) + "s < 30s");
  });

  run("fibre_curvature", [&rng](Line& l) {
    double worst = 0;
    for (const char* phi2 : {"r", "r^2/4"})
      for (int k : {2, 3, 5}) {
        const WeightProfile w = expression_profile("0", phi2);
        const Vec y = rng.unit_vec(k) * rng.uniform(0.3, 1.0);
        const MetricFn g = [&w](const Vec& q) {
          return Mat(std::exp(2 * w.phi2(q.squaredNorm())) * Mat::Identity(q.size(), q.size()));
        };
        const double fd = scalar_from(g(y), richardson_riemann(g, y));
        worst = std::max(worst, std::abs(fiber_curvatures(w, k, y).scalar - fd));
      }
    l.require(worst < 1e-3, "scalar vs oracle=" + num(worst) + " < 1e-3");
    double flat = 0;
    for (double c : {-0.7, -0.2, 0.4, 1.3}) {
      const WeightProfile w = expression_profile("0", std::to_string(c) + "*log(r)");
      const Vec y = rng.unit_vec(2) * rng.uniform(0.3, 1.5);
      flat = std::max(flat, max_abs(fiber_curvatures(w, 2, y).sectional));
    }
    l.require(flat < 1e-8, "c log r sectional=" + num(flat) + " < 1e-8");
  });

  run("geodesics", [&rng](Line& l) {
    const TotalSpace s = scenario("bs_s4");
    const Vec x0 = rng.uniform_vec(4, -0.3, 0.3);
    Vec v0 = rng.unit_vec(4);
    v0 /= std::sqrt(v0.dot(s.base().metric(x0) * v0));
    const double err = great_circle_error(s, x0, v0, 1e-3);
    l.require(err < 1e-6, "S4 great circle=" + num(err) + " < 1e-6");
    double drift = 0;
    for (const char* name : kPresets) {
      const TotalSpace p = scenario(name);
      const Vec c = p.base().domain().center();
      const Vec x = c + 0.2 * (p.base().domain().sample(rng, 0.1) - c);
      const Vec y = rng.unit_vec(p.rank()) * std::sqrt(0.3 * std::min(1.0, p.weights().r_max()));
      const GeodesicState st = state_from_velocity(p, x, y, 0.3 * rng.uniform_vec(p.base_dim(), -1, 1),
                                                   0.3 * rng.uniform_vec(p.rank(), -1, 1));
      const Trajectory tr = integrate(p, st, 1.0, 1e-3);
      l.require(tr.status == TrajectoryStatus::completed, std::string(name) + " " + to_string(tr.status));
      drift = std::max(drift, tr.max_relative_speed_drift);
    }
    l.require(drift < 1e-7, "speed drift=" + num(drift) + " < 1e-7");
    const double ratio = great_circle_error(s, x0, v0, 0.1) / great_circle_error(s, x0, v0, 0.05);
    l.require(ratio >= 12 && ratio <= 20, "step-halving ratio=" + num(ratio) + " in [12, 20]");
  });

  run("conformal_equivalence", [&rng](Line& l) {
    double worst = 0;
    const char* spaces[] = {"bs_s4", "flat_m2k2", "sasaki_flat", "fiber_k3"};
    for (int i = 0; i < 20; ++i) {
      const TotalSpace s = scenario(spaces[i % 4]);
      const TotalPoint p = random_point(s, rng, 0.1, 2.0);
      worst = std::max(worst, s.at(p).conformal_check(RadialDeformation::sinh()));
    }
    l.require(worst < 1e-10, "sinh residual=" + num(worst) + " < 1e-10");
  });

  run("symplectic_dichotomy", [&rng](Line& l) {
    const TotalSpace s = scenario("sasaki_flat");
    double closed = 0;
    for (int i = 0; i < 5; ++i) closed = std::max(closed, d_omega_norm(s, random_point(s, rng, 0.05, 1.0)));
    l.require(closed < 1e-6, "constant psibar |d omega|=" + num(closed) + " < 1e-6");
    // psibar = phi1 + phi2 = r
    const TotalSpace v(s.base(), s.bundle(), expression_profile("0", "r"));
    const double open = d_omega_norm(v, {s.base().domain().sample(rng, 0.2), rng.unit_vec(2)});
    l.require(open > 1e-2, "psibar=r at r=1 |d omega|=" + num(open) + " > 1e-2");
  });

  run("nabla_xi_identity", [&rng](Line& l) {
    double worst = 0;
    for (int i = 0; i < 50; ++i) {
      const TotalSpace s = scenario(kPresets[i % 5]);
      const TotalPoint p = random_point(s, rng, 0.0, std::min(1.0, 0.8 * s.weights().r_max()));
      const PointGeometry pg = s.at(p);
      const SplitVector X{rng.uniform_vec(s.base_dim(), -1, 1), rng.uniform_vec(s.rank(), -1, 1)};
      const double r = p.r(), a = pg.coeffs().a, b = pg.coeffs().b;
      const SplitVector got = pg.levi_civita(X, VectorField::tautological(s.base_dim(), s.rank(), p.y));
      worst = std::max(worst, (got - SplitVector{a * r * X.h, (1 + b * r) * X.v}).max_abs());
    }
    l.require(worst < 1e-10, "max deviation=" + num(worst) + " < 1e-10");
  });

  std::printf("%s: %d failure(s)\n", failures == 0 ? "ALL PASS" : "FAILED", failures);
  return failures == 0 ? 0 : 1;
}
