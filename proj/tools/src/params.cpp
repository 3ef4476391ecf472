#include "params.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace zmw::cli {
namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

double parse_real(const std::string& text, const std::string& what) {
  if (text.empty() || text == "+") return 1.0;
  if (text == "-") return -1.0;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size()) {
    throw UsageError("cannot parse " + what + " '" + text + "'");
  }
  return v;
}

}  // namespace

cplx parse_complex(const std::string& raw) {
  const std::string s = strip(raw);
  if (s.empty()) throw UsageError("empty complex literal");
  if (s.back() != 'i') return {parse_real(s, "number"), 0.0};
  const std::string body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not an exponent sign or the leading sign.
  for (std::size_t k = body.size(); k-- > 1;) {
    const char c = body[k];
    if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      return {parse_real(body.substr(0, k), "real part"),
              parse_real(body.substr(k), "imaginary part")};
    }
  }
  return {0.0, parse_real(body, "imaginary part")};
}

std::pair<MuKind, double> parse_mu(const std::string& text) {
  const cplx m = parse_complex(text);
  if (m.imag() != 0.0 && m.real() != 0.0) {
    throw UsageError("mu must be real or pure imaginary, got '" + text + "'");
  }
  if (m.imag() != 0.0) return {MuKind::imaginary, m.imag()};
  return {MuKind::real, m.real()};
}

Parameters resolve_parameters(const ParamInput& in) {
  ParamInput v = in;
  if (!v.pairs.empty()) {
    std::stringstream ss(v.pairs);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw UsageError("--params entry without '=': " + item);
      const std::string key = strip(item.substr(0, eq));
      const std::string value = strip(item.substr(eq + 1));
      if (key == "z") {
        v.z = value;
      } else if (key == "zprime" || key == "z'") {
        v.zprime = value;
      } else if (key == "a") {
        v.a = value;
      } else if (key == "mu") {
        v.mu = value;
      } else {
        throw UsageError("unknown parameter key '" + key + "'");
      }
    }
  }
  const bool zgroup = !v.z.empty() || !v.zprime.empty();
  const bool agroup = !v.a.empty() || !v.mu.empty();
  if (zgroup && agroup) throw UsageError("give either z/zprime or a/mu, not both");
  if (agroup) {
    if (v.a.empty() || v.mu.empty()) throw UsageError("a/mu group needs both --a and --mu");
    const auto [kind, m] = parse_mu(v.mu);
    return Parameters::from_a_mu(parse_real(v.a, "a"), kind, m);
  }
  if (v.z.empty()) throw UsageError("missing parameters: give --z [--zprime] or --a --mu");
  const cplx z = parse_complex(v.z);
  const cplx zp = v.zprime.empty() ? std::conj(z) : parse_complex(v.zprime);
  if (v.zprime.empty() && z.imag() == 0.0) {
    throw UsageError("a real z needs an explicit --zprime");
  }
  return Parameters::from_pair(z, zp);
}

}  // namespace zmw::cli
