#pragma once

#include "centstab/combinatorics.hpp"
#include "centstab/symrep.hpp"

namespace centstab {

// M^shape: basis the tabloids in canonical order, generators permuting
// the labels.
SymRepPtr permutation_module(const WeakPartition& shape, const Field& f);

// Coordinates of the polytabloid e_t in the canonical tabloid order:
// the signed sum of {sigma t} over the column stabilizer of t.  The shape
// of t must be a partition.
Matrix polytabloid(const Tableau& t, const Field& f);

// Generalized polytabloid e_t^nu: the column alternation runs only over
// the part of t inside nu.
Matrix polytabloid(const Tableau& t, const Partition& nu, const Field& f);

// A Specht-type module: the representation on its own basis plus the
// columns embedding that basis into the ambient permutation module.
struct SpechtModule {
  SymRepPtr rep;
  EquivMap embedding;  // rep -> M^shape
};

// S^mu with the standard polytabloid basis; the action is obtained by
// straightening (solving for the expansion of g e_t inside M^mu).
SpechtModule specht_module(const Partition& mu, const Field& f);

// S^{nu,eta} for nu contained in the weak shape eta: the span of the
// generalized polytabloids, with basis the pivot columns of the closure
// of one seed polytabloid under the group action.
SpechtModule generalized_specht(const Partition& nu, const WeakPartition& eta,
                                const Field& f);

// The injective map S^mu -> S^{stab mu} that appends n+1 to the first
// row, expressed in the standard polytabloid bases.
EquivMap stabilization_map(const Partition& mu, const Field& f);

}  // namespace centstab
