#pragma once

#include "json_io.hpp"
#include "vbgeo/vbgeo.hpp"

#include <cstdint>
#include <string>

namespace vbgeo::cli {

struct Scenario {
  std::string name;
  std::string description;
  std::uint64_t seed = 0;
  TotalSpace space;
  Json source;  // the validated document
};

// Parses a scenario document (schema 1). Unknown keys are rejected with ParseError;
// inconsistent combinations with InvalidArgument.
Scenario parse_scenario(const Json& doc);
Scenario load_scenario(const std::string& path);

// "x=a:b:c,y=d:e"; the y part may be omitted (zero section).
TotalPoint parse_point(const std::string& text, int m, int k);
// "a:b:c"
Vec parse_list(const std::string& text, const std::string& what);

}  // namespace vbgeo::cli
