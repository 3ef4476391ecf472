#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "zmw/parameters.hpp"

namespace zmw::cli {

enum class Status { pass, fail, skipped };

struct Check {
  std::string module;
  std::string name;
  double value = 0.0;      // measured error, or the quantity being bounded
  double tolerance = 0.0;  // pass when value <= tolerance
  std::string units;
  Status status = Status::skipped;
  std::string note;
  double seconds = 0.0;
};

/// Suites: all, specfun, partitions, moments, kernels, operators, sampler.
/// Parameter-independent oracles (special functions) ignore params; the
/// sampler checks use the seed.  Checks whose hypotheses the parameter set
/// violates (|a| < 1/2, t > 1, ...) are reported as skipped with the reason.
std::vector<Check> run_suite(const std::string& suite, const Parameters& params,
                             std::uint64_t seed);

const std::vector<std::string>& suite_names();

nlohmann::json report(const std::vector<Check>& checks, const Parameters& params,
                      const std::string& suite);

bool all_passed(const std::vector<Check>& checks);

}  // namespace zmw::cli
