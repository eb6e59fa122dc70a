#include "checks.hpp"
#include "commands.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace vbgeo;
using namespace vbgeo::cli;

namespace {

enum Exit { ok = 0, check_failed = 1, bad_input = 2, domain = 3, numerical = 4 };

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("vbgeo");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%l] %v");
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("VBGEO_LOG")) {
    const std::string v = env;
    if (v == "error") spdlog::set_level(spdlog::level::err);
    else if (v == "info") spdlog::set_level(spdlog::level::info);
    else if (v == "debug") spdlog::set_level(spdlog::level::debug);
    else spdlog::warn("ignoring VBGEO_LOG={} (expected error, info or debug)", v);
  }
}

void emit(const Json& j, const std::string& out) {
  const std::string text = dump(j) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw ParseError("cannot write '" + out + "'");
  f << text;
  spdlog::info("wrote {}", out);
}

Vec base_point(const Scenario& s, const std::string& x) {
  if (x.empty()) return s.space.base().domain().center();
  Vec v = parse_list(x, "--x");
  if (v.size() != s.space.base_dim())
    throw InvalidArgument("--x needs " + std::to_string(s.space.base_dim()) + " values");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  CLI::App app{"vbgeo: weighted metrics on vector bundles"};
  app.require_subcommand(1);

  std::string scenario_path, out, point, x, y, at = "zero-section", suite = "all", deformation = "sinh",
                                                      init_path, check;
  double r = 0, t_end = 1.0, step = 1e-3;
  std::uint64_t seed = 0;
  int threads = 0;
  bool oracle = false, subspaces = false;

  auto with_scenario = [&](CLI::App* c) {
    c->add_option("--scenario", scenario_path, "scenario JSON file")->required();
    c->add_option("--out", out, "write the result here instead of stdout");
    return c;
  };
  auto* coeffs = with_scenario(app.add_subcommand("coeffs", "weights and connection coefficients at r"));
  coeffs->add_option("--r", r, "r = |y|^2");
  auto* metric = with_scenario(app.add_subcommand("metric", "coordinate and split metric at a point"));
  metric->add_option("--point", point, "x=a:b,y=c:d")->required();
  auto* geodesic = with_scenario(app.add_subcommand("geodesic", "integrate a geodesic (CSV trajectory)"));
  geodesic->add_option("--init", init_path, "initial data JSON {x, y, dx, dy}")->required();
  geodesic->add_option("--t-end", t_end, "final time");
  geodesic->add_option("--step", step, "RK4 step");
  auto* curvature = with_scenario(app.add_subcommand("curvature", "Riemann tensor in the split basis"));
  curvature->add_option("--at", at, "zero-section or point");
  curvature->add_option("--x", x, "base point a:b:c (zero-section)");
  curvature->add_option("--point", point, "x=..,y=.. (flat bundles, --at point)");
  curvature->add_flag("--oracle", oracle, "compare with the finite-difference oracle");
  auto* ricci = with_scenario(app.add_subcommand("ricci", "Ricci and scalar curvature on the zero section"));
  ricci->add_option("--x", x, "base point a:b:c");
  auto* holonomy = with_scenario(app.add_subcommand("holonomy", "local holonomy algebra at the zero section"));
  holonomy->add_option("--x", x, "base point a:b:c (default: chart centre)");
  holonomy->add_flag("--report-subspaces", subspaces, "G2 proof decomposition (Lambda2 bundles)");
  auto* fiber = with_scenario(app.add_subcommand("fiber", "curvatures of the fibre metric e^{2phi2}|dy|^2"));
  fiber->add_option("--y", y, "fibre point a:b:c")->required();
  auto* conformal = with_scenario(app.add_subcommand("conformal", "Bergery vs Musso-Tricerri conformal check"));
  conformal->add_option("--point", point, "x=..,y=..")->required();
  conformal->add_option("--f", deformation, "sinh, identity or cubic");
  auto* hermitian = with_scenario(app.add_subcommand("hermitian", "Sasaki structure on a tangent bundle"));
  hermitian->add_option("--point", point, "x=..,y=..")->required();
  hermitian->add_option("--check", check, "domega");
  auto* checks = app.add_subcommand("check", "run the invariant suites");
  checks->add_option("--suite", suite, "all or one module");
  checks->add_option("--seed", seed, "random seed");
  checks->add_option("--threads", threads, "worker threads (0 = all cores)");
  checks->add_option("--out", out, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return bad_input;
  }

  try {
    if (checks->parsed()) {
      const Json report = run_checks(suite, seed, threads);
      emit(report, out);
      const bool pass = report["passed"].get<bool>();
      if (!pass) spdlog::error("{} check(s) failed", report["counts"]["failed"].get<int>());
      return pass ? ok : check_failed;
    }
    spdlog::info("loading scenario {}", scenario_path);
    const Scenario s = load_scenario(scenario_path);
    const int m = s.space.base_dim(), k = s.space.rank();
    Json result;
    if (coeffs->parsed()) {
      result = cmd_coeffs(s, r);
    } else if (metric->parsed()) {
      result = cmd_metric(s, parse_point(point, m, k));
    } else if (geodesic->parsed()) {
      std::ifstream in(init_path);
      if (!in) throw ParseError("cannot open '" + init_path + "'");
      Json init;
      try {
        init = Json::parse(in);
      } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("initial data is not valid JSON: ") + e.what());
      }
      if (out.empty()) {
        cmd_geodesic(s, init, t_end, step, std::cout);
        return ok;
      }
      std::ofstream csv(out);
      if (!csv) throw ParseError("cannot write '" + out + "'");
      result = cmd_geodesic(s, init, t_end, step, csv);
      out.clear();  // the summary goes to stdout
    } else if (curvature->parsed()) {
      TotalPoint p = point.empty() ? TotalPoint{base_point(s, x), Vec::Zero(k)} : parse_point(point, m, k);
      result = cmd_curvature(s, at, p, oracle);
    } else if (ricci->parsed()) {
      result = cmd_ricci(s, base_point(s, x));
    } else if (holonomy->parsed()) {
      result = cmd_holonomy(s, base_point(s, x), subspaces);
    } else if (fiber->parsed()) {
      Vec yy = parse_list(y, "--y");
      if (yy.size() != k) throw InvalidArgument("--y needs " + std::to_string(k) + " values");
      result = cmd_fiber(s, yy);
    } else if (conformal->parsed()) {
      result = cmd_conformal(s, parse_point(point, m, k), deformation);
    } else if (hermitian->parsed()) {
      if (!check.empty() && check != "domega") throw ParseError("--check accepts only 'domega'");
      result = cmd_hermitian(s, parse_point(point, m, k), check == "domega");
    }
    emit(result, out);
    return ok;
  } catch (const DomainError& e) {
    spdlog::error("domain error: {}", e.what());
    return domain;
  } catch (const ParseError& e) {
    spdlog::error("parse error: {}", e.what());
    return bad_input;
  } catch (const InvalidArgument& e) {
    spdlog::error("invalid argument: {}", e.what());
    return bad_input;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return numerical;
  }
}
