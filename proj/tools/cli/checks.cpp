#include "checks.hpp"

#include "checks_internal.hpp"

#include <atomic>
#include <cmath>
#include <thread>

namespace vbgeo::cli {

using namespace detail;

const std::vector<std::string>& check_suites() {
  static const std::vector<std::string> s{"weights",   "base_geometry", "total_space", "geodesics",
                                          "curvature", "holonomy",      "hermitian"};
  return s;
}

std::vector<CheckCase> checks_for(const std::string& suite) {
  std::vector<CheckCase> all;
  add_weights_checks(all);
  add_base_checks(all);
  add_total_space_checks(all);
  add_geodesic_checks(all);
  add_curvature_checks(all);
  add_holonomy_checks(all);
  add_hermitian_checks(all);
  if (suite == "all") return all;
  bool known = false;
  for (const auto& s : check_suites()) known = known || s == suite;
  if (!known) throw ParseError("unknown check suite '" + suite + "'");
  std::vector<CheckCase> out;
  for (auto& c : all)
    if (c.suite == suite) out.push_back(std::move(c));
  return out;
}

namespace {

std::uint64_t case_seed(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : name) h = (h ^ c) * 1099511628211ull;
  std::uint64_t z = seed + h + 0x9e3779b97f4a7c15ull;  // splitmix64 finaliser
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

Json run_checks(const std::string& suite, std::uint64_t seed, int threads) {
  const std::vector<CheckCase> cases = checks_for(suite);
  std::vector<CheckOutcome> results(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < cases.size();) {
      Rng rng(case_seed(seed, cases[i].suite + "/" + cases[i].name));
      try {
        results[i] = cases[i].run(rng);
      } catch (const std::exception& e) {
        results[i] = {false, std::nan(""), 0, std::string("error: ") + e.what()};
      }
    }
  };
  int n = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  n = std::max(1, std::min<int>(n, static_cast<int>(cases.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Json report;
  report["suite"] = suite;
  report["seed"] = seed;
  Json list = Json::array();
  int passed = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& r = results[i];
    passed += r.passed ? 1 : 0;
    Json c;
    c["suite"] = cases[i].suite;
    c["name"] = cases[i].name;
    c["passed"] = r.passed;
    c["value"] = r.value;
    c["tolerance"] = r.tolerance;
    if (!r.detail.empty()) c["detail"] = r.detail;
    list.push_back(std::move(c));
  }
  report["passed"] = passed == static_cast<int>(cases.size());
  report["counts"] = {{"total", cases.size()}, {"passed", passed}, {"failed", cases.size() - passed}};
  report["cases"] = std::move(list);
  return report;
}

// ---------------------------------------------------------------- weights

namespace detail {

namespace {

std::vector<std::pair<std::string, WeightProfile>> sample_profiles() {
  return {{"constant", constant_profile(0.3, -0.2)},
          {"bryant_salamon_s+", bryant_salamon_profile(1.0, 1.0, 1.0)},
          {"bryant_salamon_s-", bryant_salamon_profile(1.3, 2.0, -1.0)},
          {"kahler_disk_k+", kahler_disk_profile(1.0, 1.0)},
          {"kahler_disk_k-", kahler_disk_profile(2.0, -0.5)},
          {"expression", expression_profile("0.3*r - 0.1*r^2", "sin(r)/2")}};
}

double interior_radius(const WeightProfile& w, Rng& rng) {
  const double hi = std::isfinite(w.r_max()) ? 0.9 * w.r_max() : 4.0;
  return rng.uniform(1e-3, hi);
}

}  // namespace

void add_weights_checks(std::vector<CheckCase>& out) {
  out.push_back({"weights", "derivatives_match_central_differences", [](Rng& rng) {
                   double worst = 0;
                   std::string where;
                   for (const auto& [name, w] : sample_profiles()) {
                     std::vector<double> radii;
                     for (int i = 0; i < 100; ++i) radii.push_back(interior_radius(w, rng));
                     const DerivativeCheck d = check_derivatives(w, radii, 1e-5);
                     if (std::max(d.first, d.second) > worst) {
                       worst = std::max(d.first, d.second);
                       where = name;
                     }
                   }
                   return at_most(worst, 1e-6, "worst profile " + where);
                 }});
  out.push_back({"weights", "c1_identity", [](Rng& rng) {
                   double worst = 0;
                   for (const auto& [name, w] : sample_profiles())
                     for (int i = 0; i < 50; ++i) {
                       const WeightValues v = w.evaluate(interior_radius(w, rng));
                       const ConnectionCoefficients c = coefficients(v);
                       const double lhs = c.c1 * std::exp(2 * v.phi2);
                       const double rhs = -c.a * std::exp(2 * v.phi1);
                       worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
                     }
                   return at_most(worst, 1e-12);
                 }});
  out.push_back({"weights", "bryant_salamon_a_equals_minus_b", [](Rng& rng) {
                   double worst = 0;
                   for (int i = 0; i < 10; ++i) {
                     const double s = i % 2 ? -1.0 : 1.0;
                     const WeightProfile w =
                         bryant_salamon_profile(rng.uniform(0.5, 2), rng.uniform(0.5, 2), s);
                     const ConnectionCoefficients c = coefficients(w, 0.0);
                     worst = std::max({worst, std::abs(c.a + c.b), std::abs(c.c2 - c.a)});
                   }
                   return at_most(worst, 1e-14);
                 }});
}

// ---------------------------------------------------------------- base geometry

void add_base_checks(std::vector<CheckCase>& out) {
  out.push_back({"base_geometry", "model_riemann_matches_fd", [](Rng& rng) {
                   double worst = 0;
                   for (ChartKind kind : {ChartKind::flat, ChartKind::sphere, ChartKind::hyperbolic})
                     for (int m = 2; m <= 4; ++m) {
                       const BaseChart c = model_chart(kind, m, rng.uniform(0.5, 2.0));
                       const MetricFn g = [&c](const Vec& x) { return c.metric(x); };
                       for (int i = 0; i < 20; ++i) {
                         const Vec x = c.domain().sample(rng, 0.1);
                         const Tensor4 a = c.riemann(x);
                         const Tensor4 b = fd_riemann(g, x, 1e-4, 1e-3);
                         worst = std::max(worst, Tensor4::max_abs_diff(a, b) / std::max(1.0, a.max_abs()));
                       }
                     }
                   return at_most(worst, 1e-4);
                 }});
  out.push_back({"base_geometry", "lambda2_cyclic_structure", [](Rng& rng) {
                   // a non-Einstein chart and the two model charts, both orientations
                   const BaseChart warped = expression_chart(
                       4,
                       {{"1 + 0.3*x2^2", "0.1*x1*x2", "0", "0"},
                        {"0.1*x1*x2", "exp(0.2*x3)", "0", "0.05*x4"},
                        {"0", "0", "1 + 0.2*x1^2", "0"},
                        {"0", "0.05*x4", "0", "cosh(0.3*x2)"}},
                       DomainBox{Vec::Constant(4, -1), Vec::Constant(4, 1)}, "warped");
                   double worst = 0, worst_generic = 0;
                   for (const BaseChart& c : {warped, model_chart(ChartKind::sphere, 4, 1.0),
                                              model_chart(ChartKind::hyperbolic, 4, 1.0)})
                     for (Orientation o : {Orientation::plus, Orientation::minus}) {
                       const BundleConnection b = lambda2_bundle(c, o);
                       const BundleConnection generic = custom_bundle(
                           c, 3, [b](const Vec& x) { return b.gamma(x); });
                       for (int i = 0; i < 3; ++i) {
                         const Vec x = c.domain().sample(rng, 0.1);
                         const Tensor4 R = b.curvature(x);
                         const auto rho = lambda2_rho(curvature_operator(c, x), o);
                         const Mat L = orthonormal_frame(c.metric(x)).L;
                         // R^E e^i = rho^k e^j - rho^j e^k, rho in coordinates
                         for (int ii = 0; ii < 3; ++ii) {
                           const int j = (ii + 1) % 3, k = (ii + 2) % 3;
                           const Mat rk = L * rho[k] * L.transpose();
                           const Mat rj = L * rho[j] * L.transpose();
                           for (int p = 0; p < 4; ++p)
                             for (int q = 0; q < 4; ++q)
                               worst = std::max({worst, std::abs(R(j, ii, p, q) - rk(p, q)),
                                                 std::abs(R(k, ii, p, q) + rj(p, q)),
                                                 std::abs(R(ii, ii, p, q))});
                         }
                         worst_generic = std::max(worst_generic, Tensor4::max_abs_diff(R, generic.curvature(x)));
                       }
                     }
                   CheckOutcome o = at_most(worst, 1e-10, "connection-form route differs by " + fmt(worst_generic));
                   o.passed = o.passed && worst_generic <= 1e-6;
                   return o;
                 }});
  out.push_back({"base_geometry", "einstein_s_constant", [](Rng& rng) {
                   double worst = 0;
                   for (ChartKind kind : {ChartKind::sphere, ChartKind::hyperbolic}) {
                     const BaseChart c = model_chart(kind, 4, rng.uniform(0.5, 2.0));
                     const double s0 = curvature_operator(c, c.domain().center()).s;
                     for (int i = 0; i < 10; ++i)
                       worst = std::max(worst,
                                        std::abs(curvature_operator(c, c.domain().sample(rng, 0.1)).s - s0));
                   }
                   return at_most(worst, 1e-8);
                 }});
}

}  // namespace detail

}  // namespace vbgeo::cli
