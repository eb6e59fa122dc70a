#pragma once

#include "json_io.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace vbgeo {
class Rng;
}

namespace vbgeo::cli {

struct CheckOutcome {
  bool passed = false;
  double value = 0;      // measured residual or count
  double tolerance = 0;  // the bound it was compared with
  std::string detail;
};

struct CheckCase {
  std::string suite;
  std::string name;
  std::function<CheckOutcome(Rng&)> run;
};

const std::vector<std::string>& check_suites();  // module suites, without "all"
std::vector<CheckCase> checks_for(const std::string& suite);

// Runs a suite ("all" or one module) on `threads` workers (0 = hardware concurrency).
// Each case draws from its own generator seeded by (seed, case name), so the report
// does not depend on scheduling.
Json run_checks(const std::string& suite, std::uint64_t seed, int threads = 0);

}  // namespace vbgeo::cli
