#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zmw/parameters.hpp"

namespace zmw {

/// Young diagram; parts weakly decreasing and positive.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// Parses "3,2,1"; the empty string and "0" give the empty partition.
  static Partition parse(const std::string& text);
  static Partition from_frobenius(const std::vector<int>& p, const std::vector<int>& q);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }

  Partition transpose() const;
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

struct Frobenius {
  int d = 0;
  std::vector<int> p;  // p_i = λ_i - i, strictly decreasing
  std::vector<int> q;  // q_i = λ'_i - i
};

Frobenius frobenius(const Partition& lambda);

constexpr int kMaxEnumeration = 60;

/// All partitions of n in reverse-lexicographic order, (n) first.
std::vector<Partition> enumerate_partitions(int n);

/// Number of partitions p(n) by Euler's pentagonal recurrence.
std::uint64_t partition_count(int n);

/// Exact dimension of the irreducible S_n module (hook length formula).
/// Throws GuardError when the value does not fit in 64 bits.
std::uint64_t dimension(const Partition& lambda);
double log_dimension(const Partition& lambda);

/// z_ρ = Π k^{m_k} m_k!.
std::uint64_t z_rho(const Partition& rho);

/// χ^λ_ρ by the Murnaghan–Nakayama rule.
std::int64_t character(const Partition& lambda, const Partition& rho);

/// Clears the calling thread's character memo.
void clear_character_cache();

/// log|φ_zz'(λ)| and its sign.
struct SignedLog {
  double log_abs = 0.0;
  int sign = 1;

  double value() const;
};

SignedLog log_phi(const Partition& lambda, const Parameters& params);
double phi(const Partition& lambda, const Parameters& params);

/// M_n(λ) = dim(λ)·φ(λ) over all λ ⊢ n, n ≤ 40.
constexpr int kMaxZmeasure = 40;
std::vector<std::pair<Partition, double>> zmeasure(int n, const Parameters& params);

/// Finite truncation of a Thoma point (α | β), possibly lifted.
struct PointConfiguration {
  std::vector<double> alphas;
  std::vector<double> betas;
  bool lifted = false;

  double total() const;
};

/// p̃_k(ω) = Σα^k + (-1)^{k-1} Σβ^k, p̃_1 ≡ 1.
double ptilde(int k, const PointConfiguration& omega);
/// Π_j p̃_{ρ_j}(ω).
double ptilde_eval(const Partition& rho, const PointConfiguration& omega);

constexpr int kMaxCharacterSum = 20;
/// s̃_λ(ω) = Σ_ρ χ^λ_ρ z_ρ^{-1} p̃_ρ(ω), |λ| ≤ 20.
double extended_schur(const Partition& lambda, const PointConfiguration& omega);

}  // namespace zmw
