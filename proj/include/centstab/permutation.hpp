#pragma once

#include <vector>

#include "centstab/combinatorics.hpp"

namespace centstab {

// A permutation of {0, ..., n-1} in one-line form: p[i] is the image of i.
using Perm = std::vector<int>;

Perm perm_identity(int n);
bool perm_is_valid(const Perm& p);
// (a * b)(i) = a[b[i]].
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& p);
// Transposition of letters a and b (0-based), identity elsewhere.
Perm perm_transposition(int n, int a, int b);
int perm_sign(const Perm& p);

// Adjacent-transposition factorization via bubble sort: returns indices
// f so that p = s_{f[0]} s_{f[1]} ... s_{f.back()}, where s_i swaps
// letters i and i+1.  Deterministic; empty for the identity.
std::vector<int> adjacent_factorization(const Perm& p);

Partition cycle_type(const Perm& p);
// Canonical representative with cycles on consecutive blocks:
// (1..l1)(l1+1..l1+l2)...
Perm cycle_type_representative(const Partition& lambda, int n);

}  // namespace centstab
