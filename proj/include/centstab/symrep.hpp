#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "centstab/characters.hpp"
#include "centstab/combinatorics.hpp"
#include "centstab/matrix.hpp"
#include "centstab/permutation.hpp"

namespace centstab {

// A representation of S_n: a labelled basis together with one matrix per
// adjacent transposition (i, i+1), i = 1..n-1.  Construction validates
// the Coxeter relations, so every SymRep in flight is a genuine
// representation.
struct SymRep {
  int n = 0;
  int dim = 0;
  Field field;
  std::vector<std::string> labels;
  std::vector<Matrix> gens;  // gens[i] acts as the transposition (i+1, i+2)

  // Throws LinalgError when shapes, labels or Coxeter relations fail.
  void validate() const;

  bool operator==(const SymRep&) const = default;
};

using SymRepPtr = std::shared_ptr<const SymRep>;

// Validates and wraps.
SymRepPtr make_symrep(SymRep rep);

// An S_n-equivariant linear map into an S_m-representation, m >= n;
// equivariance holds for the generators the two groups share.
struct EquivMap {
  SymRepPtr source;
  SymRepPtr target;
  Matrix matrix;  // target.dim x source.dim

  void validate() const;  // throws LinalgError on shape/equivariance failure
};

EquivMap make_equiv_map(SymRepPtr source, SymRepPtr target, Matrix matrix);

// ---- stock representations ----

SymRepPtr trivial_rep(int n, const Field& f);
SymRepPtr sign_rep(int n, const Field& f);
// Permutation representation on formal symbols [1..n].
SymRepPtr perm_rep(int n, const Field& f);
// The natural inclusions 1_{n-1} -> 1_n and P_{n-1} -> P_n.
EquivMap trivial_inclusion(int n, const Field& f);
EquivMap perm_inclusion(int n, const Field& f);

// ---- operations ----

// rho(sigma) as a product of generator matrices along the fixed
// adjacent-transposition factorization; the Coxeter relations make the
// result independent of the factorization.
Matrix apply_permutation(const SymRep& v, const Perm& sigma);
// rho(sigma) * cols, applied factor by factor (cheaper than building
// rho(sigma) when cols is narrow).
Matrix apply_permutation_to(const SymRep& v, const Perm& sigma, Matrix cols);

enum class Twist { Trivial, Sign };

// Left coset representatives of S_n x S_k in S_{n+k}, keyed by the image
// of the letters {n+1,...,n+k} (stored 0-based and sorted).
using CosetTransversal = std::map<std::vector<int>, Perm>;

struct Induced {
  SymRepPtr rep;
  EquivMap inclusion;  // the identity-coset copy of the source
};

// Ind_{S_n x S_k}^{S_{n+k}} V (x) (trivial or sign of S_k).  The default
// transversal is the order-preserving shuffle per coset, enumerated in
// lexicographic order of the image set; any other valid transversal
// yields an isomorphic representation.
Induced induce(const SymRepPtr& v, int k, Twist twist,
               const CosetTransversal* transversal = nullptr);

// The k-subsets of {0..m-1} in lexicographic order: the coset blocks of
// induce, in basis order.
std::vector<std::vector<int>> coset_images(int m, int k);

// Same space, generators truncated to the first m-1.
SymRepPtr restrict_rep(const SymRepPtr& v, int m);

// V (x) sign: every generator negated.
SymRepPtr tensor_sign(const SymRepPtr& v);

// Trace at a fixed representative of each cycle type.
std::map<CycleType, Scalar> character(const SymRep& v);

// Multiplicities of the Specht constituents, via character inner products
// over Q and via the mod-p character system (validated by a dimension
// count) over F_p with p > n.  Throws SemisimplicityError when p <= n.
std::map<Partition, long long> decompose(const SymRep& v);

long long specht_dim(const Partition& mu);

// Largest first-row length among the constituents.
int width(const SymRep& v);

// Inclusion of the sum of the isotypic components whose first row is
// strictly shorter than the bound, built from central idempotents.
EquivMap width_subspace(const SymRepPtr& v, int bound);

// sum_{sigma in class} rho(sigma) per cycle type.
std::map<CycleType, Matrix> class_sums(const SymRep& v);

// Projection onto the mu-isotypic component (semisimple case), from the
// central idempotent of mu.
Matrix isotypic_projection(const SymRep& v, const Partition& mu,
                           const std::map<CycleType, Matrix>& sums);

// Quotient by a generator-invariant subspace (columns); the quotient
// carries the action projection . generator . section.  Throws
// InvalidSubrepresentationError when the subspace is not invariant.
struct QuotientRep {
  SymRepPtr rep;
  Matrix projection;             // rep->dim x v.dim
  std::vector<int> rep_indices;  // coordinates labelling the quotient basis
};

QuotientRep quotient_rep(const SymRep& v, const Matrix& subspace_cols);

// Throws SemisimplicityError unless the field is Q or F_p with p > n.
void require_semisimple(const Field& f, int n);

}  // namespace centstab
