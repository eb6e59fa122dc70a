#pragma once

#include "vbgeo/types.hpp"

#include <json.hpp>

#include <string>

namespace vbgeo::cli {

using Json = nlohmann::ordered_json;

Json to_json(const Vec& v);
Json to_json(const Mat& m);
Vec vec_from_json(const Json& j, const std::string& what);

// Serialises with every floating-point value printed as %.17g; non-finite values become null.
std::string dump(const Json& j, int indent = 2);

}  // namespace vbgeo::cli
