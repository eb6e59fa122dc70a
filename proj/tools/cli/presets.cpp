#include "presets.hpp"

#include "vbgeo/errors.hpp"

namespace vbgeo::cli {

const std::vector<Preset>& builtin_presets() {
  static const std::vector<Preset> presets = [] {
    std::vector<Preset> p;
    p.push_back({"bs_s4.json", Json::parse(R"({
      "schema": 1,
      "name": "bs_s4",
      "description": "Bryant-Salamon metric on the anti-self-dual 2-forms of the round 4-sphere",
      "seed": 7,
      "base": {"kind": "sphere", "dim": 4, "curv": 1.0},
      "bundle": {"kind": "lambda2", "sign": "minus"},
      "weights": {"kind": "bryant_salamon", "params": {"c0": 1.0, "c1": 1.0, "s": 1.0}}
    })")});
    p.push_back({"bs_h4_plus.json", Json::parse(R"({
      "schema": 1,
      "name": "bs_h4_plus",
      "description": "Bryant-Salamon metric on the disk bundle r < 1 of self-dual 2-forms over hyperbolic 4-space",
      "seed": 7,
      "base": {"kind": "hyperbolic", "dim": 4, "curv": 1.0},
      "bundle": {"kind": "lambda2", "sign": "plus"},
      "weights": {"kind": "bryant_salamon", "params": {"c0": 1.0, "c1": 2.0, "s": -1.0}}
    })")});
    p.push_back({"flat_m2k2.json", Json::parse(R"({
      "schema": 1,
      "name": "flat_m2k2",
      "description": "Trivial rank-2 bundle over the plane with phi1 = phi2 = r/2",
      "seed": 7,
      "base": {"kind": "flat", "dim": 2},
      "bundle": {"kind": "trivial", "rank": 2},
      "weights": {"kind": "custom", "phi1": "r/2", "phi2": "r/2"}
    })")});
    p.push_back({"sasaki_flat.json", Json::parse(R"({
      "schema": 1,
      "name": "sasaki_flat",
      "description": "Tangent bundle of the plane with constant weights",
      "seed": 7,
      "base": {"kind": "flat", "dim": 2},
      "bundle": {"kind": "tangent"},
      "weights": {"kind": "constant", "params": {"phi1": 0.2, "phi2": -0.1}}
    })")});
    p.push_back({"fiber_k3.json", Json::parse(R"({
      "schema": 1,
      "name": "fiber_k3",
      "description": "Rank-3 trivial bundle over a line with phi2 = r; the fibres carry e^{2r} |dy|^2",
      "seed": 7,
      "base": {"kind": "flat", "dim": 1},
      "bundle": {"kind": "trivial", "rank": 3},
      "weights": {"kind": "custom", "phi1": "0", "phi2": "r"}
    })")});
    return p;
  }();
  return presets;
}

const Json& preset(const std::string& name) {
  for (const auto& p : builtin_presets())
    if (p.file == name + ".json") return p.doc;
  throw InvalidArgument("no bundled scenario named '" + name + "'");
}

}  // namespace vbgeo::cli
