#include "centstab/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "centstab/errors.hpp"

namespace centstab {

Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool perm_is_valid(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw LinalgError("permutation size mismatch");
  Perm c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

Perm perm_inverse(const Perm& p) {
  Perm inv(p.size());
  for (size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

Perm perm_transposition(int n, int a, int b) {
  Perm p = perm_identity(n);
  std::swap(p[a], p[b]);
  return p;
}

int perm_sign(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  int transpositions = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = static_cast<int>(i); !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

std::vector<int> adjacent_factorization(const Perm& p) {
  // Bubble-sorting the one-line word w by right multiplications
  // w -> w * s_i reaches the identity; reversing the swap list gives a
  // left-to-right factorization of p.
  Perm w = p;
  std::vector<int> swaps;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] > w[i + 1]) {
        std::swap(w[i], w[i + 1]);
        swaps.push_back(static_cast<int>(i));
        changed = true;
      }
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

Partition cycle_type(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  std::vector<int> lengths;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = static_cast<int>(i); !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return Partition(lengths);
}

Perm cycle_type_representative(const Partition& lambda, int n) {
  if (lambda.n() != n) throw ShapeError("cycle type must be a partition of n");
  Perm p = perm_identity(n);
  int start = 0;
  for (int len : lambda.parts()) {
    for (int i = 0; i < len; ++i) p[start + i] = start + (i + 1) % len;
    start += len;
  }
  return p;
}

}  // namespace centstab
