#pragma once

#include "json_io.hpp"

#include <string>
#include <vector>

namespace vbgeo::cli {

struct Preset {
  std::string file;  // e.g. "bs_s4.json"
  Json doc;
};

// The bundled scenarios; the files under scenarios/ hold the same documents.
const std::vector<Preset>& builtin_presets();
const Json& preset(const std::string& name);  // by name without extension

}  // namespace vbgeo::cli
