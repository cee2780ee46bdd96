#pragma once

#include <optional>
#include <vector>

#include "centstab/specht.hpp"
#include "centstab/symrep.hpp"

namespace centstab {

// V_start -> V_{start+1} -> ... with S_i-equivariant maps; reps[i] is a
// representation of S_{start_n + i}.
struct CoherentSequence {
  int start_n = 0;
  std::vector<SymRepPtr> reps;
  std::vector<EquivMap> maps;  // maps[i]: reps[i] -> reps[i+1]

  int length() const { return static_cast<int>(reps.size()); }
  void validate() const;
};

// Chains the maps; consecutive endpoints must be the same representation
// object and the group indices must step by one.
CoherentSequence make_coherent_sequence(std::vector<EquivMap> maps);

// A chain complex of S_M-representations, boundaries written left to
// right; consecutive boundaries compose to zero (checked at build time).
struct ChainComplex {
  int group_index = 0;  // M
  std::vector<SymRepPtr> terms;
  std::vector<Matrix> boundaries;  // boundaries[i]: terms[i] -> terms[i+1]
};

// The largest quotient of Ind_{S_n}^{S_{n+1}} V_n on which (n, n+1) acts
// trivially on the image of V_{n-1}.  Returns the quotient together with
// the natural map V_n -> quotient.
struct CentralStabilization {
  SymRepPtr rep;  // over S_{n+1}
  EquivMap map;   // V_n -> rep
};

CentralStabilization central_stabilization(const EquivMap& phi);

// Right coset representatives of S_{n+2..M} in S_{n+1..M}: one
// permutation per letter a in {n+1..M} with sigma^{-1}(n+1) = a.  The
// canonical choice is the transpositions (n+1, a); the boundary map does
// not depend on the choice.
using BoundaryTransversal = std::vector<Perm>;

// The alternating-sum boundary Ind(V_n, M-n, sign) -> Ind(V_{n+1},
// M-n-1, sign) associated to phi: V_n -> V_{n+1}.
EquivMap boundary_map(const EquivMap& phi, int group_index,
                      const BoundaryTransversal* transversal = nullptr);

// The complex Ind(V_n, M-n, sign) -> ... -> Ind(V_m, M-m, sign) of
// S_M-representations.  Throws PotentialStabilityError when the sequence
// is not potentially centrally stable, and LinalgError if d.d != 0.
ChainComplex central_stability_complex(const CoherentSequence& seq, int group_index);

// Homology dimensions at positions 1..L-1 (the final boundary is taken
// to be the zero map to 0): dim ker d_i - rank d_{i-1}.  All zeros means
// the complex is exact everywhere right of the first term.
std::vector<int> homology_dims(const ChainComplex& complex);

// Every vector in the image of V_i inside V_j is fixed by S_{i+1..j},
// checked on generators via matrix identities.
bool potential_check(const CoherentSequence& seq);

// Iterates central stabilization starting from phi: V_{N-1} -> V_N,
// appending extra_terms further terms.  An optional quotient (columns in
// the coordinates of the first central stabilization) is applied at the
// first step only; it must be generator-invariant.
CoherentSequence central_stabilization_sequence(
    const EquivMap& phi, int extra_terms,
    const std::optional<Matrix>& quotient_at_first_step = std::nullopt);

// Semisimple certificate: constituents per term, whether consecutive
// terms match under mu -> stab(mu), and whether each graded map is
// injective isotypic component by isotypic component.
struct CertificateTerm {
  int n = 0;
  std::map<Partition, long long> constituents;
};

struct StabilityCertificate {
  std::vector<CertificateTerm> terms;
  std::vector<bool> multiset_match;    // per consecutive pair
  std::vector<bool> graded_injective;  // per consecutive pair
  bool all_match = false;
};

StabilityCertificate specht_stability_certificate(const CoherentSequence& seq);

// Fits the term dimensions against the sum-of-binomials prediction from
// the constituents of an anchor term; agrees_from_index is the earliest
// anchor that predicts every later dimension (-1 when none does).
struct DimPolyReport {
  std::vector<long long> computed;
  std::vector<long long> predicted;  // from the anchor, aligned with computed
  int agrees_from_index = -1;
};

DimPolyReport dimension_polynomial_check(const CoherentSequence& seq);

// Cokernel of a boundary map as a representation: the target modulo the
// image, with the induced action.
QuotientRep boundary_cokernel(const EquivMap& boundary);

}  // namespace centstab
