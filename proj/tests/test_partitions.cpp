#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "fixtures.hpp"
#include "zmw/error.hpp"
#include "zmw/partitions.hpp"

using namespace zmw;
using zmw::test::rel_diff;
using zmw::test::standard_sets;

namespace {

using Monomial = std::vector<int>;
using Polynomial = std::map<Monomial, long long>;

// p_ρ in `vars` variables, expanded.
Polynomial power_sum_product(const Partition& rho, int vars) {
  Polynomial acc{{Monomial(vars, 0), 1}};
  for (int k : rho.parts()) {
    Polynomial next;
    for (const auto& [m, c] : acc) {
      for (int i = 0; i < vars; ++i) {
        Monomial e = m;
        e[i] += k;
        next[e] += c;
      }
    }
    acc = std::move(next);
  }
  return acc;
}

// Frobenius' formula: χ^λ_ρ is the coefficient of x^{λ+δ} in a_δ·p_ρ.  For
// each monomial x^m of p_ρ the target needs λ+δ-m to be a permutation of δ,
// contributing its sign.
long long character_frobenius(const Partition& lambda, const Partition& rho) {
  const int vars = std::max(lambda.size(), 1);
  long long chi = 0;
  for (const auto& [m, c] : power_sum_product(rho, vars)) {
    std::vector<int> perm(vars);
    bool ok = true;
    for (int i = 0; i < vars && ok; ++i) {
      perm[i] = lambda[i] + (vars - 1 - i) - m[i];
      ok = perm[i] >= 0 && perm[i] < vars;
    }
    if (!ok) continue;
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    int inversions = 0;
    for (int i = 0; i < vars; ++i) {
      for (int j = i + 1; j < vars; ++j) inversions += perm[i] < perm[j];
    }
    chi += (inversions % 2 ? -c : c);
  }
  return chi;
}

// Standard Young tableaux by removing corners.
std::uint64_t count_tableaux(const Partition& lambda, std::map<Partition, std::uint64_t>& memo) {
  if (lambda.size() <= 1) return 1;
  if (auto it = memo.find(lambda); it != memo.end()) return it->second;
  std::uint64_t total = 0;
  std::vector<int> parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i + 1 < parts.size() && parts[i + 1] == parts[i]) continue;
    std::vector<int> smaller = parts;
    --smaller[i];
    total += count_tableaux(Partition(smaller), memo);
  }
  memo[lambda] = total;
  return total;
}

// dim·φ from the content product Π(z+c)(z'+c) dim² / ((t)_n n!).
double zmeasure_by_contents(const Partition& lambda, const Parameters& p) {
  cplx prod = 1.0;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      const double c = j - i;
      prod *= (p.z() + c) * (p.zprime() + c);
    }
  }
  const double d = static_cast<double>(dimension(lambda));
  double norm = 1.0;
  for (int k = 0; k < lambda.size(); ++k) norm *= (p.t() + k) * (k + 1.0);
  return prod.real() * d * d / norm;
}

}  // namespace

TEST_CASE("partition basics") {
  const Partition l = Partition::parse("4,2,2,1");
  CHECK(l.size() == 9);
  CHECK(l.length() == 4);
  CHECK(l.to_string() == "4,2,2,1");
  CHECK(l.transpose() == Partition({4, 3, 1, 1}));
  CHECK(l.transpose().transpose() == l);
  CHECK(Partition::parse("").size() == 0);
  CHECK(Partition::parse("0").length() == 0);
  CHECK_THROWS_AS(Partition::parse("1,2"), DomainError);
  CHECK_THROWS_AS(Partition::parse("3,x"), DomainError);

  const Frobenius f = frobenius(Partition({3, 2, 1}));
  CHECK(f.d == 2);
  CHECK(f.p == std::vector<int>{2, 0});
  CHECK(f.q == std::vector<int>{2, 0});
  for (int n = 1; n <= 9; ++n) {
    for (const Partition& lambda : enumerate_partitions(n)) {
      const Frobenius g = frobenius(lambda);
      CHECK(Partition::from_frobenius(g.p, g.q) == lambda);
    }
  }
}

TEST_CASE("enumeration and Euler's partition numbers") {
  const std::uint64_t known[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) CHECK(partition_count(n) == known[n]);
  CHECK(partition_count(60) == 966467u);
  CHECK(partition_count(100) == 190569292u);

  for (int n = 1; n <= 18; ++n) {
    const auto all = enumerate_partitions(n);
    CHECK(all.size() == partition_count(n));
    CHECK(all.front() == Partition({n}));
    CHECK(all.back() == Partition(std::vector<int>(n, 1)));
    CHECK(std::set<Partition>(all.begin(), all.end()).size() == all.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
      CHECK(all[i].size() == n);
      if (i > 0) CHECK(all[i] < all[i - 1]);
    }
  }
  CHECK_THROWS_AS(enumerate_partitions(kMaxEnumeration + 1), GuardError);
}

TEST_CASE("hook-length dimension against tableau counting") {
  std::map<Partition, std::uint64_t> memo;
  for (int n = 1; n <= 12; ++n) {
    std::uint64_t sum_sq = 0;
    for (const Partition& lambda : enumerate_partitions(n)) {
      const std::uint64_t d = dimension(lambda);
      CHECK(d == count_tableaux(lambda, memo));
      CHECK(log_dimension(lambda) == doctest::Approx(std::log(static_cast<double>(d))).epsilon(1e-12));
      sum_sq += d * d;
    }
    std::uint64_t fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    CHECK(sum_sq == fact);
  }
}

TEST_CASE("Murnaghan-Nakayama against the Frobenius formula") {
  for (int n = 1; n <= 6; ++n) {
    for (const Partition& lambda : enumerate_partitions(n)) {
      for (const Partition& rho : enumerate_partitions(n)) {
        CHECK(character(lambda, rho) == character_frobenius(lambda, rho));
      }
    }
  }
}

TEST_CASE("character orthogonality and z_rho") {
  CHECK(z_rho(Partition({2, 2, 1})) == 8u);
  CHECK(z_rho(Partition({1, 1, 1})) == 6u);
  for (int n = 1; n <= 8; ++n) {
    const auto parts = enumerate_partitions(n);
    std::uint64_t fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    double class_sum = 0.0;
    for (const Partition& rho : parts) class_sum += 1.0 / static_cast<double>(z_rho(rho));
    CHECK(class_sum == doctest::Approx(1.0).epsilon(1e-12));
    for (const Partition& a : parts) {
      CHECK(character(a, Partition(std::vector<int>(n, 1))) == static_cast<std::int64_t>(dimension(a)));
      for (const Partition& b : parts) {
        double acc = 0.0;
        for (const Partition& rho : parts) {
          acc += static_cast<double>(character(a, rho) * character(b, rho)) /
                 static_cast<double>(z_rho(rho));
        }
        CHECK(acc == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("z-measure weights") {
  for (const Parameters& p : standard_sets()) {
    CAPTURE(p.describe());
    for (int n = 1; n <= 12; ++n) {
      double total = 0.0;
      for (const auto& [lambda, w] : zmeasure(n, p)) {
        CHECK(w >= 0.0);
        total += w;
        if (n <= 8) CHECK(rel_diff(w, zmeasure_by_contents(lambda, p)) < 1e-11);
      }
      CHECK(std::fabs(total - 1.0) <= 1e-10);
    }
  }
  // n = 2 by hand: M((2)) = z(z+1)z'(z'+1)/(2t(t+1)).
  const Parameters p = Parameters::complementary(0.3, 0.6);
  const double t = 0.18;
  CHECK(phi(Partition({2}), p) == doctest::Approx(0.3 * 1.3 * 0.6 * 1.6 / (2.0 * t * (t + 1.0))).epsilon(1e-13));
  CHECK(phi(Partition({1, 1}), p) ==
        doctest::Approx(0.3 * -0.7 * 0.6 * -0.4 / (2.0 * t * (t + 1.0))).epsilon(1e-13));
  CHECK(phi(Partition({1}), p) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(zmeasure(kMaxZmeasure + 1, p), GuardError);
}

TEST_CASE("phi is symmetric under transposition and negation") {
  for (const Parameters& p : standard_sets()) {
    const Parameters neg = p.negated();
    for (int n = 1; n <= 9; ++n) {
      for (const Partition& lambda : enumerate_partitions(n)) {
        CHECK(rel_diff(phi(lambda, neg), phi(lambda.transpose(), p)) < 1e-12);
      }
    }
  }
}

TEST_CASE("extended power sums and Schur functions") {
  PointConfiguration half;
  half.alphas = {0.5};
  half.betas = {0.5};
  CHECK(ptilde_eval(Partition({1, 1, 1}), half) == 1.0);
  CHECK(ptilde_eval(Partition({3}), half) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(ptilde(2, half) == doctest::Approx(0.0));

  PointConfiguration w;
  w.alphas = {0.6};
  w.betas = {0.3};
  CHECK(ptilde(2, w) == doctest::Approx(0.36 - 0.09).epsilon(1e-15));
  CHECK(ptilde(3, w) == doctest::Approx(0.216 + 0.027).epsilon(1e-15));

  PointConfiguration delta;
  delta.alphas = {1.0};
  CHECK(extended_schur(Partition({1}), delta) == 1.0);
  CHECK(extended_schur(Partition({2}), delta) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(extended_schur(Partition({1, 1}), delta) == doctest::Approx(0.0));

  // Σ_λ χ^λ_ρ s̃_λ = p̃_ρ.
  PointConfiguration omega;
  omega.alphas = {0.35, 0.2, 0.05};
  omega.betas = {0.25, 0.1};
  for (int n = 1; n <= 6; ++n) {
    const auto parts = enumerate_partitions(n);
    for (const Partition& rho : parts) {
      double acc = 0.0;
      for (const Partition& lambda : parts) {
        acc += static_cast<double>(character(lambda, rho)) * extended_schur(lambda, omega);
      }
      CHECK(acc == doctest::Approx(ptilde_eval(rho, omega)).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(extended_schur(Partition(std::vector<int>(kMaxCharacterSum + 1, 1)), omega), GuardError);
}
