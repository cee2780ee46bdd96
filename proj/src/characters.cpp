#include "centstab/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "centstab/errors.hpp"

namespace centstab {

mpz_class factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

mpz_class class_size(const CycleType& lambda) {
  // z_lambda = prod k^{m_k} m_k! over the part multiplicities.
  mpz_class z = 1;
  int run = 0, prev = -1;
  for (int part : lambda.parts()) {
    if (part == prev) {
      ++run;
    } else {
      prev = part;
      run = 1;
    }
    z *= part;
    z *= run;
  }
  return factorial(lambda.n()) / z;
}

namespace {

// Beta numbers beta_i = mu_i + (rows - i), strictly decreasing.  Removing
// a border strip of size s moves one beta down by s into an unoccupied
// slot; the strip height is the number of betas jumped over.
std::vector<int> beta_numbers(const Partition& mu) {
  const int rows = mu.rows();
  std::vector<int> beta(rows);
  for (int i = 0; i < rows; ++i) beta[i] = mu.part(i) + (rows - 1 - i);
  return beta;
}

Partition from_beta(std::vector<int> beta) {
  std::sort(beta.rbegin(), beta.rend());
  const int rows = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < rows; ++i) {
    int part = beta[i] - (rows - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return Partition(parts);
}

std::map<std::pair<Partition, Partition>, long long> g_cache;
std::mutex g_cache_mutex;

// chi^mu evaluated on the cycle-type suffix lambda[li..].
long long mn(const Partition& mu, const std::vector<int>& lambda, size_t li) {
  if (li == lambda.size()) return mu.n() == 0 ? 1 : 0;

  const Partition key_rest(std::vector<int>(lambda.begin() + li, lambda.end()));
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_cache.find({mu, key_rest});
    if (it != g_cache.end()) return it->second;
  }

  const int s = lambda[li];
  const std::vector<int> beta = beta_numbers(mu);
  std::vector<char> occupied(beta.empty() ? 0 : beta[0] + 1, 0);
  for (int b : beta) occupied[b] = 1;

  long long total = 0;
  for (size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - s;
    if (target < 0 || occupied[target]) continue;
    int jumped = 0;
    for (size_t j = i + 1; j < beta.size(); ++j)
      if (beta[j] > target) ++jumped;
    std::vector<int> next = beta;
    next[i] = target;
    const long long sub = mn(from_beta(std::move(next)), lambda, li + 1);
    total += (jumped % 2 == 0) ? sub : -sub;
  }

  std::lock_guard<std::mutex> lock(g_cache_mutex);
  g_cache.emplace(std::make_pair(mu, key_rest), total);
  return total;
}

}  // namespace

long long specht_character(const Partition& mu, const CycleType& lambda) {
  if (mu.n() != lambda.n())
    throw ShapeError("specht_character: shape and cycle type must partition the same n");
  return mn(mu, lambda.parts(), 0);
}

std::vector<CycleType> cycle_types(int n) { return enumerate_partitions(n); }

}  // namespace centstab
