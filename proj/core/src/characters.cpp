#include <algorithm>
#include <string>
#include <unordered_map>

#include "zmw/error.hpp"
#include "zmw/partitions.hpp"

namespace zmw {
namespace {

// The memo is per thread, so concurrent callers never contend; it stops
// growing (but keeps serving hits) once it reaches the size guard.
constexpr std::size_t kCacheGuard = 1u << 22;

using Memo = std::unordered_map<std::string, std::int64_t>;

Memo& memo() {
  thread_local Memo cache;
  return cache;
}

std::string memo_key(const std::vector<int>& beta, const std::vector<int>& rho, std::size_t k) {
  std::string key;
  key.reserve(2 * (beta.size() + rho.size() - k) + 2);
  auto put = [&key](int v) {
    key.push_back(static_cast<char>(v & 0xff));
    key.push_back(static_cast<char>((v >> 8) & 0xff));
  };
  // The β-set with its length fixes λ; normalize by stripping zero parts
  // (the beads at 0, 1, ..., m-1 carry no information).
  std::size_t skip = 0;
  while (skip < beta.size() && beta[beta.size() - 1 - skip] == static_cast<int>(skip)) ++skip;
  for (std::size_t i = 0; i + skip < beta.size(); ++i) put(beta[i] - static_cast<int>(skip));
  put(0xffff);
  for (std::size_t i = k; i < rho.size(); ++i) put(rho[i]);
  return key;
}

// beta: strictly decreasing bead positions λ_i + (ℓ - 1 - i).
std::int64_t mn_recurse(const std::vector<int>& beta, const std::vector<int>& rho, std::size_t k) {
  if (k == rho.size()) return 1;
  const std::string key = memo_key(beta, rho, k);
  Memo& cache = memo();
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  const int r = rho[k];
  std::int64_t total = 0;
  std::vector<int> next;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    // Beads strictly between target and beta[i] are the leg length.
    int between = 0;
    for (int b : beta) {
      if (b > target && b < beta[i]) ++between;
    }
    next = beta;
    next[i] = target;
    std::sort(next.begin(), next.end(), std::greater<>());
    const std::int64_t sub = mn_recurse(next, rho, k + 1);
    total += (between % 2 == 0) ? sub : -sub;
  }
  if (cache.size() < kCacheGuard) cache.emplace(key, total);
  return total;
}

}  // namespace

std::int64_t character(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size()) {
    throw DomainError("character: |lambda|=" + std::to_string(lambda.size()) +
                      " differs from |rho|=" + std::to_string(rho.size()));
  }
  const int len = lambda.length();
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);
  return mn_recurse(beta, rho.parts(), 0);
}

void clear_character_cache() { memo().clear(); }

}  // namespace zmw
