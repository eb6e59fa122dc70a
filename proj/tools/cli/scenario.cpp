#include "scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace vbgeo::cli {

namespace {

void require_keys(const Json& obj, const std::string& where, const std::set<std::string>& allowed) {
  if (!obj.is_object()) throw ParseError(where + " must be an object");
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key())) throw ParseError("unknown key '" + it.key() + "' in " + where);
}

const Json& member(const Json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw ParseError("missing key '" + key + "' in " + where);
  return obj.at(key);
}

double number(const Json& obj, const std::string& key, const std::string& where, double fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj.at(key).is_number()) throw ParseError(where + "." + key + " must be a number");
  return obj.at(key).get<double>();
}

std::string text(const Json& obj, const std::string& key, const std::string& where) {
  const Json& v = member(obj, key, where);
  if (!v.is_string()) throw ParseError(where + "." + key + " must be a string");
  return v.get<std::string>();
}

int integer(const Json& obj, const std::string& key, const std::string& where) {
  const Json& v = member(obj, key, where);
  if (!v.is_number_integer()) throw ParseError(where + "." + key + " must be an integer");
  return v.get<int>();
}

BaseChart parse_base(const Json& b) {
  const std::string kind = text(b, "kind", "base");
  if (kind == "custom") {
    require_keys(b, "base", {"kind", "dim", "metric", "domain", "label"});
    const int m = integer(b, "dim", "base");
    const Json& metric = member(b, "metric", "base");
    if (!metric.is_array() || static_cast<int>(metric.size()) != m)
      throw ParseError("base.metric must be a dim x dim array of expressions");
    std::vector<std::vector<std::string>> entries;
    for (const auto& row : metric) {
      if (!row.is_array() || static_cast<int>(row.size()) != m)
        throw ParseError("base.metric must be a dim x dim array of expressions");
      std::vector<std::string> r;
      for (const auto& e : row) {
        if (e.is_string()) r.push_back(e.get<std::string>());
        else if (e.is_number()) r.push_back(dump(e));
        else throw ParseError("base.metric entries must be strings or numbers");
      }
      entries.push_back(std::move(r));
    }
    const Json& dom = member(b, "domain", "base");
    require_keys(dom, "base.domain", {"lo", "hi"});
    DomainBox box{vec_from_json(member(dom, "lo", "base.domain"), "base.domain.lo"),
                  vec_from_json(member(dom, "hi", "base.domain"), "base.domain.hi")};
    if (box.lo.size() != m || box.hi.size() != m || !(box.lo.array() < box.hi.array()).all())
      throw InvalidArgument("base.domain must give lo < hi in every coordinate");
    const std::string label = b.contains("label") ? text(b, "label", "base") : "custom";
    return expression_chart(m, entries, box, label);
  }
  require_keys(b, "base", {"kind", "dim", "curv"});
  const int m = integer(b, "dim", "base");
  const double curv = number(b, "curv", "base", 1.0);
  if (kind == "flat") return model_chart(ChartKind::flat, m, curv);
  if (kind == "sphere") return model_chart(ChartKind::sphere, m, curv);
  if (kind == "hyperbolic") return model_chart(ChartKind::hyperbolic, m, curv);
  throw ParseError("unknown base kind '" + kind + "'");
}

BundleConnection parse_bundle(const Json& b, const BaseChart& chart) {
  const std::string kind = text(b, "kind", "bundle");
  if (kind == "trivial") {
    require_keys(b, "bundle", {"kind", "rank"});
    return trivial_bundle(chart, integer(b, "rank", "bundle"));
  }
  if (kind == "tangent") {
    require_keys(b, "bundle", {"kind"});
    return tangent_bundle(chart);
  }
  if (kind == "lambda2") {
    require_keys(b, "bundle", {"kind", "sign"});
    const std::string sign = text(b, "sign", "bundle");
    if (sign != "plus" && sign != "minus")
      throw ParseError("bundle.sign must be 'plus' or 'minus'");
    return lambda2_bundle(chart, sign == "plus" ? Orientation::plus : Orientation::minus);
  }
  throw ParseError("unknown bundle kind '" + kind + "'");
}

WeightProfile parse_weights(const Json& w, const BaseChart& chart) {
  const std::string kind = text(w, "kind", "weights");
  if (kind == "custom") {
    require_keys(w, "weights", {"kind", "phi1", "phi2", "r_max"});
    return expression_profile(text(w, "phi1", "weights"), text(w, "phi2", "weights"),
                              number(w, "r_max", "weights", kInfinity));
  }
  require_keys(w, "weights", {"kind", "params"});
  static const std::map<std::string, std::pair<ProfileKind, std::set<std::string>>> kinds{
      {"constant", {ProfileKind::constant, {"phi1", "phi2"}}},
      {"bryant_salamon", {ProfileKind::bryant_salamon, {"c0", "c1", "s"}}},
      {"kahler_disk", {ProfileKind::kahler_disk, {"c1", "kappa"}}}};
  const auto it = kinds.find(kind);
  if (it == kinds.end()) throw ParseError("unknown weights kind '" + kind + "'");
  std::map<std::string, double> params;
  if (w.contains("params")) {
    const Json& p = w.at("params");
    require_keys(p, "weights.params", it->second.second);
    for (auto e = p.begin(); e != p.end(); ++e) params[e.key()] = number(p, e.key(), "weights.params", 0);
  }
  if (kind == "bryant_salamon" && !params.count("s")) {
    // s = Scal/12 of the base: kappa for the sphere, -kappa for hyperbolic space
    const double K = chart.model_curvature();
    if (chart.dim() != 4 || std::isnan(K))
      throw InvalidArgument("bryant_salamon weights need params.s unless the base is a 4-dimensional model chart");
    params["s"] = K;
  }
  return builtin_profile(it->second.first, params);
}

}  // namespace

Scenario parse_scenario(const Json& doc) {
  require_keys(doc, "scenario", {"schema", "name", "description", "seed", "base", "bundle", "weights"});
  if (!doc.contains("schema") || doc.at("schema") != 1)
    throw ParseError("scenario must declare \"schema\": 1");
  std::uint64_t seed = 0;
  if (doc.contains("seed")) {
    if (!doc.at("seed").is_number_unsigned()) throw ParseError("seed must be a non-negative integer");
    seed = doc.at("seed").get<std::uint64_t>();
  }
  const BaseChart chart = parse_base(member(doc, "base", "scenario"));
  const BundleConnection bundle = parse_bundle(member(doc, "bundle", "scenario"), chart);
  const WeightProfile weights = parse_weights(member(doc, "weights", "scenario"), chart);
  return Scenario{doc.contains("name") ? text(doc, "name", "scenario") : "",
                  doc.contains("description") ? text(doc, "description", "scenario") : "",
                  seed, TotalSpace(chart, bundle, weights), doc};
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("scenario '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_scenario(doc);
}

Vec parse_list(const std::string& s, const std::string& what) {
  std::vector<double> vals;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ':')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw ParseError("cannot read '" + item + "' in " + what);
    }
    if (used != item.size()) throw ParseError("cannot read '" + item + "' in " + what);
    vals.push_back(v);
  }
  return Eigen::Map<const Vec>(vals.data(), static_cast<Eigen::Index>(vals.size()));
}

TotalPoint parse_point(const std::string& s, int m, int k) {
  TotalPoint p{Vec(), Vec::Zero(k)};
  bool have_x = false;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw ParseError("point parts look like x=a:b or y=c:d");
    const std::string key = part.substr(0, eq), val = part.substr(eq + 1);
    if (key == "x") {
      p.x = parse_list(val, "point x");
      have_x = true;
    } else if (key == "y") {
      p.y = parse_list(val, "point y");
    } else {
      throw ParseError("unknown point component '" + key + "'");
    }
  }
  if (!have_x) throw ParseError("point needs an x component");
  if (p.x.size() != m) throw InvalidArgument("point x needs " + std::to_string(m) + " values");
  if (p.y.size() != k) throw InvalidArgument("point y needs " + std::to_string(k) + " values");
  return p;
}

}  // namespace vbgeo::cli
