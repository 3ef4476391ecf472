#pragma once

#include <stdexcept>
#include <string>

#include "zmw/parameters.hpp"

namespace zmw::cli {

// Raw parameter flags as typed on the command line or read from a config file.
struct ParamInput {
  std::string z;
  std::string zprime;
  std::string a;
  std::string mu;
  std::string pairs;  // "z=0.3,zprime=0.6" or "a=0.2,mu=2i"
};

/// "0.3", "-1e-2", "0.2+0.5i", "0.2-0.5i", "2i", "-i".
cplx parse_complex(const std::string& text);

/// μ literal: "0.15" (real) or "2i" (pure imaginary).
std::pair<MuKind, double> parse_mu(const std::string& text);

/// Builds and classifies the parameter set; UsageError on conflicting or
/// missing groups, AdmissibilityError when the pair is not admissible.
Parameters resolve_parameters(const ParamInput& in);

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace zmw::cli
