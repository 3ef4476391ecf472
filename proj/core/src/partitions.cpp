#include "zmw/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "zmw/error.hpp"

namespace zmw {
namespace {

void generate(int remaining, int max_part, std::vector<int>& current,
              std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    generate(remaining - part, part, current, out);
    current.pop_back();
  }
}

std::vector<int> hook_lengths(const Partition& lambda) {
  const Partition conj = lambda.transpose();
  std::vector<int> hooks;
  hooks.reserve(lambda.size());
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      hooks.push_back(lambda[i] - j - 1 + conj[j] - i);
    }
  }
  return hooks;
}

void add_factorization(int m, int sign, std::vector<int>& exponents) {
  for (int p = 2; m > 1; ++p) {
    while (m % p == 0) {
      exponents[p] += sign;
      m /= p;
    }
  }
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, const char* what) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw GuardError(std::string(what) + ": value exceeds 64-bit range");
  }
  return r;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw DomainError("partition parts must be positive and weakly decreasing: " +
                        to_string());
    }
    n_ += parts_[i];
  }
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    const auto e = item.find_last_not_of(" \t");
    const std::string token = item.substr(b, e - b + 1);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw DomainError("cannot parse partition literal '" + text + "'");
    }
    if (used != token.size()) throw DomainError("cannot parse partition literal '" + text + "'");
    parts.push_back(value);
  }
  return Partition(std::move(parts));
}

Partition Partition::from_frobenius(const std::vector<int>& p, const std::vector<int>& q) {
  if (p.size() != q.size()) throw DomainError("Frobenius lists must have equal length");
  const int d = static_cast<int>(p.size());
  if (d == 0) return Partition();
  std::vector<int> parts;
  for (int i = 0; i < d; ++i) parts.push_back(p[i] + i + 1);
  const int length = q[0] + 1;
  for (int row = d + 1; row <= length; ++row) {
    int count = 0;
    for (int j = 0; j < d; ++j) {
      if (q[j] + j + 1 >= row) ++count;
    }
    parts.push_back(count);
  }
  return Partition(std::move(parts));
}

Partition Partition::transpose() const {
  std::vector<int> conj(parts_.empty() ? 0 : parts_.front(), 0);
  for (int part : parts_) {
    for (int j = 0; j < part; ++j) ++conj[j];
  }
  return Partition(std::move(conj));
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

Frobenius frobenius(const Partition& lambda) {
  Frobenius f;
  const Partition conj = lambda.transpose();
  for (int i = 0; i < lambda.length() && lambda[i] >= i + 1; ++i) {
    ++f.d;
    f.p.push_back(lambda[i] - i - 1);
    f.q.push_back(conj[i] - i - 1);
  }
  return f;
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw DomainError("enumerate_partitions: n must be nonnegative");
  if (n > kMaxEnumeration) {
    throw GuardError("enumerate_partitions: n=" + std::to_string(n) + " exceeds the guard " +
                     std::to_string(kMaxEnumeration));
  }
  std::vector<Partition> out;
  out.reserve(partition_count(n));
  std::vector<int> current;
  generate(n, n, current, out);
  return out;
}

std::uint64_t partition_count(int n) {
  if (n < 0) return 0;
  std::vector<std::uint64_t> p(n + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    std::int64_t acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      if (g1 > m) break;
      const std::int64_t sign = (k % 2 == 1) ? 1 : -1;
      acc += sign * static_cast<std::int64_t>(p[m - g1]);
      const int g2 = k * (3 * k + 1) / 2;
      if (g2 <= m) acc += sign * static_cast<std::int64_t>(p[m - g2]);
    }
    p[m] = static_cast<std::uint64_t>(acc);
  }
  return p[n];
}

std::uint64_t dimension(const Partition& lambda) {
  const int n = lambda.size();
  std::vector<int> exponents(n + 2, 0);
  for (int m = 2; m <= n; ++m) add_factorization(m, +1, exponents);
  for (int h : hook_lengths(lambda)) add_factorization(h, -1, exponents);
  std::uint64_t result = 1;
  for (int p = 2; p <= n; ++p) {
    for (int e = 0; e < exponents[p]; ++e) {
      result = checked_mul(result, static_cast<std::uint64_t>(p), "dimension");
    }
  }
  return result;
}

double log_dimension(const Partition& lambda) {
  double acc = std::lgamma(lambda.size() + 1.0);
  for (int h : hook_lengths(lambda)) acc -= std::log(static_cast<double>(h));
  return acc;
}

std::uint64_t z_rho(const Partition& rho) {
  std::uint64_t result = 1;
  const auto& parts = rho.parts();
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const auto k = static_cast<std::uint64_t>(parts[i]);
    for (std::size_t m = 1; m <= j - i; ++m) {
      result = checked_mul(result, k, "z_rho");
      result = checked_mul(result, m, "z_rho");
    }
    i = j;
  }
  return result;
}

double SignedLog::value() const {
  return sign == 0 ? 0.0 : sign * std::exp(log_abs);
}

SignedLog log_phi(const Partition& lambda, const Parameters& params) {
  const Frobenius f = frobenius(lambda);
  const double t = params.t();
  const double a = params.a();
  SignedLog out;
  auto absorb = [&out](double factor, int power) {
    if (factor == 0.0) {
      out.sign = 0;
      return;
    }
    out.log_abs += power * std::log(std::fabs(factor));
    if (factor < 0.0 && (power % 2 != 0)) out.sign = -out.sign;
  };

  for (int k = 0; k < lambda.size(); ++k) {
    if (t + k == 0.0) {
      throw DomainError("phi: (t)_n vanishes for " + params.describe());
    }
    absorb(t + k, -1);
  }
  absorb(t, f.d);
  for (int i = 0; i < f.d; ++i) {
    // (z+1+k)(z'+1+k) = (1+k)^2 + 2a(1+k) + t, real for every admissible pair.
    for (int k = 0; k < f.p[i]; ++k) {
      const double m = k + 1.0;
      absorb(m * m + 2.0 * a * m + t, 1);
    }
    for (int k = 0; k < f.q[i]; ++k) {
      const double m = k + 1.0;
      absorb(m * m - 2.0 * a * m + t, 1);
    }
    out.log_abs -= std::lgamma(f.p[i] + 1.0) + std::lgamma(f.q[i] + 1.0);
    for (int j = i + 1; j < f.d; ++j) {
      out.log_abs += std::log(static_cast<double>(f.p[i] - f.p[j])) +
                     std::log(static_cast<double>(f.q[i] - f.q[j]));
    }
    for (int j = 0; j < f.d; ++j) {
      out.log_abs -= std::log(static_cast<double>(f.p[i] + f.q[j] + 1));
    }
  }
  if (out.sign == 0) out.log_abs = -std::numeric_limits<double>::infinity();
  return out;
}

double phi(const Partition& lambda, const Parameters& params) {
  return log_phi(lambda, params).value();
}

std::vector<std::pair<Partition, double>> zmeasure(int n, const Parameters& params) {
  if (n > kMaxZmeasure) {
    throw GuardError("zmeasure: n=" + std::to_string(n) + " exceeds the guard " +
                     std::to_string(kMaxZmeasure));
  }
  std::vector<std::pair<Partition, double>> out;
  for (Partition& lambda : enumerate_partitions(n)) {
    SignedLog w = log_phi(lambda, params);
    w.log_abs += log_dimension(lambda);
    out.emplace_back(std::move(lambda), w.value());
  }
  return out;
}

double PointConfiguration::total() const {
  double s = 0.0;
  for (double x : alphas) s += x;
  for (double x : betas) s += x;
  return s;
}

double ptilde(int k, const PointConfiguration& omega) {
  if (k < 1) throw DomainError("ptilde: index must be positive");
  if (k == 1) return 1.0;
  double sa = 0.0;
  double sb = 0.0;
  for (double x : omega.alphas) sa += std::pow(x, k);
  for (double x : omega.betas) sb += std::pow(x, k);
  return sa + ((k % 2 == 0) ? -sb : sb);
}

double ptilde_eval(const Partition& rho, const PointConfiguration& omega) {
  double r = 1.0;
  for (int k : rho.parts()) r *= ptilde(k, omega);
  return r;
}

double extended_schur(const Partition& lambda, const PointConfiguration& omega) {
  const int n = lambda.size();
  if (n > kMaxCharacterSum) {
    throw GuardError("extended_schur: |lambda|=" + std::to_string(n) + " exceeds the guard " +
                     std::to_string(kMaxCharacterSum));
  }
  double acc = 0.0;
  for (const Partition& rho : enumerate_partitions(n)) {
    const std::int64_t chi = character(lambda, rho);
    if (chi == 0) continue;
    acc += static_cast<double>(chi) / static_cast<double>(z_rho(rho)) * ptilde_eval(rho, omega);
  }
  return acc;
}

}  // namespace zmw
