#pragma once

#include <vector>

#include <gmpxx.h>

#include "centstab/combinatorics.hpp"

namespace centstab {

// A conjugacy class of S_n is labelled by its cycle type.
using CycleType = Partition;

mpz_class factorial(int n);

// Size of the conjugacy class with the given cycle type: n! / z_lambda.
mpz_class class_size(const CycleType& lambda);

// Specht character value chi^mu(lambda) via the Murnaghan-Nakayama
// recursion (independent of every matrix construction in the workbench).
// Memoized behind a synchronized cache.
long long specht_character(const Partition& mu, const CycleType& lambda);

// All cycle types of S_n in the enumerate_partitions order.
std::vector<CycleType> cycle_types(int n);

}  // namespace centstab
