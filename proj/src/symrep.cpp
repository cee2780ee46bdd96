#include "centstab/symrep.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "centstab/errors.hpp"

namespace centstab {

void SymRep::validate() const {
  if (n < 1) throw LinalgError("SymRep needs n >= 1");
  if (static_cast<int>(gens.size()) != n - 1)
    throw LinalgError("SymRep needs n-1 generator matrices");
  if (static_cast<int>(labels.size()) != dim)
    throw LinalgError("SymRep needs one label per basis vector");
  for (const Matrix& g : gens) {
    if (g.rows() != dim || g.cols() != dim || !(g.field() == field))
      throw LinalgError("SymRep generator has wrong shape or field");
  }
  const Matrix id = Matrix::identity(dim, field);
  for (size_t i = 0; i < gens.size(); ++i) {
    if (gens[i] * gens[i] != id)
      throw LinalgError("Coxeter violation: generator " + std::to_string(i + 1) +
                        " is not an involution");
    for (size_t j = i + 2; j < gens.size(); ++j) {
      if (gens[i] * gens[j] != gens[j] * gens[i])
        throw LinalgError("Coxeter violation: distant generators do not commute");
    }
    if (i + 1 < gens.size()) {
      const Matrix braid = gens[i] * gens[i + 1];
      if (braid * braid * braid != id)
        throw LinalgError("Coxeter violation: braid relation fails at " +
                          std::to_string(i + 1));
    }
  }
}

SymRepPtr make_symrep(SymRep rep) {
  rep.validate();
  return std::make_shared<const SymRep>(std::move(rep));
}

void EquivMap::validate() const {
  if (!source || !target) throw LinalgError("EquivMap endpoints missing");
  if (source->n > target->n)
    throw LinalgError("EquivMap source group exceeds target group");
  if (matrix.rows() != target->dim || matrix.cols() != source->dim)
    throw LinalgError("EquivMap matrix has wrong shape");
  for (int i = 0; i + 1 < source->n; ++i) {
    if (matrix * source->gens[i] != target->gens[i] * matrix)
      throw LinalgError("EquivMap is not equivariant for generator " +
                        std::to_string(i + 1));
  }
}

EquivMap make_equiv_map(SymRepPtr source, SymRepPtr target, Matrix matrix) {
  EquivMap m{std::move(source), std::move(target), std::move(matrix)};
  m.validate();
  return m;
}

SymRepPtr trivial_rep(int n, const Field& f) {
  SymRep rep{n, 1, f, {"1"}, std::vector<Matrix>(n - 1, Matrix::identity(1, f))};
  return make_symrep(std::move(rep));
}

SymRepPtr sign_rep(int n, const Field& f) {
  SymRep rep{n, 1, f, {"sgn"}, std::vector<Matrix>(n - 1, -Matrix::identity(1, f))};
  return make_symrep(std::move(rep));
}

SymRepPtr perm_rep(int n, const Field& f) {
  SymRep rep;
  rep.n = n;
  rep.dim = n;
  rep.field = f;
  for (int i = 1; i <= n; ++i) rep.labels.push_back("[" + std::to_string(i) + "]");
  for (int i = 0; i + 1 < n; ++i) {
    Matrix g(n, n, f);
    for (int j = 0; j < n; ++j) {
      int image = j == i ? i + 1 : (j == i + 1 ? i : j);
      g.at(image, j) = Scalar::one(f);
    }
    rep.gens.push_back(std::move(g));
  }
  return make_symrep(std::move(rep));
}

EquivMap trivial_inclusion(int n, const Field& f) {
  return make_equiv_map(trivial_rep(n - 1, f), trivial_rep(n, f),
                        Matrix::identity(1, f));
}

EquivMap perm_inclusion(int n, const Field& f) {
  Matrix incl(n, n - 1, f);
  for (int i = 0; i + 1 < n; ++i) incl.at(i, i) = Scalar::one(f);
  return make_equiv_map(perm_rep(n - 1, f), perm_rep(n, f), std::move(incl));
}

Matrix apply_permutation_to(const SymRep& v, const Perm& sigma, Matrix cols) {
  if (static_cast<int>(sigma.size()) != v.n || !perm_is_valid(sigma))
    throw LinalgError("apply_permutation: not a permutation of 1..n");
  const std::vector<int> factors = adjacent_factorization(sigma);
  for (auto it = factors.rbegin(); it != factors.rend(); ++it)
    cols = v.gens[*it] * cols;
  return cols;
}

Matrix apply_permutation(const SymRep& v, const Perm& sigma) {
  return apply_permutation_to(v, sigma, Matrix::identity(v.dim, v.field));
}

namespace {

std::vector<std::vector<int>> subsets_lex(int m, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    if (m - from < k - static_cast<int>(cur.size())) return;
    for (int v = from; v < m; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

// Order-preserving shuffle sending {n..m-1} onto the subset A.
Perm canonical_shuffle(int m, int n, const std::vector<int>& a) {
  std::vector<char> in_a(m, 0);
  for (int x : a) in_a[x] = 1;
  Perm c(m);
  int pos = 0;
  for (int x = 0; x < m; ++x)
    if (!in_a[x]) c[pos++] = x;
  for (size_t j = 0; j < a.size(); ++j) c[n + j] = a[j];
  return c;
}

std::string subset_label(const std::vector<int>& a) {
  std::ostringstream out;
  out << '{';
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) out << ',';
    out << a[i] + 1;
  }
  out << '}';
  return out.str();
}

}  // namespace

std::vector<std::vector<int>> coset_images(int m, int k) {
  return subsets_lex(m, k);
}

Induced induce(const SymRepPtr& v, int k, Twist twist,
               const CosetTransversal* transversal) {
  if (k < 0) throw LinalgError("induce needs k >= 0");
  const int n = v->n, m = n + k, d = v->dim;
  const Field& f = v->field;

  const auto cosets = subsets_lex(m, k);
  std::map<std::vector<int>, int> coset_index;
  for (size_t i = 0; i < cosets.size(); ++i)
    coset_index[cosets[i]] = static_cast<int>(i);

  auto coset_rep = [&](const std::vector<int>& a) -> Perm {
    if (transversal == nullptr) return canonical_shuffle(m, n, a);
    auto it = transversal->find(a);
    if (it == transversal->end())
      throw LinalgError("transversal is missing the coset " + subset_label(a));
    const Perm& c = it->second;
    if (static_cast<int>(c.size()) != m || !perm_is_valid(c))
      throw LinalgError("transversal entry is not a permutation of the right size");
    std::vector<int> image;
    for (int j = 0; j < k; ++j) image.push_back(c[n + j]);
    std::sort(image.begin(), image.end());
    if (image != a)
      throw LinalgError("transversal entry does not represent the coset " +
                        subset_label(a));
    return c;
  };

  std::vector<Perm> reps;
  reps.reserve(cosets.size());
  for (const auto& a : cosets) reps.push_back(coset_rep(a));

  SymRep ind;
  ind.n = m;
  ind.dim = static_cast<int>(cosets.size()) * d;
  ind.field = f;
  for (const auto& a : cosets)
    for (int b = 0; b < d; ++b)
      ind.labels.push_back(subset_label(a) + "|" + v->labels[b]);

  // Splits h in S_n x S_k into its two factors; anything outside the
  // subgroup means the coset algebra went wrong.
  auto split = [&](const Perm& h) -> std::pair<Perm, Perm> {
    Perm hn(n), hk(k);
    for (int i = 0; i < n; ++i) {
      if (h[i] >= n) throw LinalgError("coset factor does not preserve blocks");
      hn[i] = h[i];
    }
    for (int j = 0; j < k; ++j) {
      if (h[n + j] < n) throw LinalgError("coset factor does not preserve blocks");
      hk[j] = h[n + j] - n;
    }
    return {hn, hk};
  };

  std::map<Perm, Matrix> block_cache;
  auto action_block = [&](const Perm& hn) -> const Matrix& {
    auto it = block_cache.find(hn);
    if (it == block_cache.end())
      it = block_cache.emplace(hn, apply_permutation(*v, hn)).first;
    return it->second;
  };

  for (int g = 0; g + 1 < m; ++g) {
    Matrix mat(ind.dim, ind.dim, f);
    const Perm si = perm_transposition(m, g, g + 1);
    for (size_t ca = 0; ca < cosets.size(); ++ca) {
      std::vector<int> a2;
      for (int x : cosets[ca]) a2.push_back(si[x]);
      std::sort(a2.begin(), a2.end());
      const int cb = coset_index.at(a2);
      const Perm h =
          perm_compose(perm_inverse(reps[cb]), perm_compose(si, reps[ca]));
      auto [hn, hk] = split(h);
      const Matrix& block = action_block(hn);
      const bool negate = twist == Twist::Sign && perm_sign(hk) < 0;
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
          const Scalar& val = block.at(r, c);
          if (val.is_zero()) continue;
          mat.at(cb * d + r, static_cast<int>(ca) * d + c) = negate ? -val : val;
        }
    }
    ind.gens.push_back(std::move(mat));
  }

  SymRepPtr ind_ptr = make_symrep(std::move(ind));

  // Natural inclusion: the identity-coset copy.  That coset's
  // representative always lies in S_n x S_k itself, so the copy is the
  // block image of rho(h_n^{-1}), sign-adjusted.
  std::vector<int> a0(k);
  for (int j = 0; j < k; ++j) a0[j] = n + j;
  const int idx0 = coset_index.at(a0);
  auto [h0n, h0k] = split(reps[idx0]);
  Matrix block0 = apply_permutation(*v, perm_inverse(h0n));
  if (twist == Twist::Sign && perm_sign(h0k) < 0) block0 = -block0;
  Matrix incl(ind_ptr->dim, d, f);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) incl.at(idx0 * d + r, c) = block0.at(r, c);

  return Induced{ind_ptr, make_equiv_map(v, ind_ptr, std::move(incl))};
}

SymRepPtr restrict_rep(const SymRepPtr& v, int m) {
  if (m < 1 || m > v->n) throw LinalgError("restrict_rep needs 1 <= m <= n");
  SymRep r{m, v->dim, v->field, v->labels,
           std::vector<Matrix>(v->gens.begin(), v->gens.begin() + (m - 1))};
  return make_symrep(std::move(r));
}

SymRepPtr tensor_sign(const SymRepPtr& v) {
  SymRep r = *v;
  for (Matrix& g : r.gens) g = -g;
  return make_symrep(std::move(r));
}

std::map<CycleType, Scalar> character(const SymRep& v) {
  std::map<CycleType, Scalar> chi;
  for (const CycleType& lambda : cycle_types(v.n)) {
    Matrix rho = apply_permutation(v, cycle_type_representative(lambda, v.n));
    Scalar trace = Scalar::zero(v.field);
    for (int i = 0; i < v.dim; ++i) trace += rho.at(i, i);
    chi.emplace(lambda, std::move(trace));
  }
  return chi;
}

void require_semisimple(const Field& f, int n) {
  if (!f.is_rationals() && f.characteristic() <= static_cast<std::uint64_t>(n))
    throw SemisimplicityError("operation needs char 0 or p > n, got p = " +
                              std::to_string(f.characteristic()) +
                              ", n = " + std::to_string(n));
}

long long specht_dim(const Partition& mu) {
  return static_cast<long long>(standard_tableaux(mu).size());
}

std::map<Partition, long long> decompose(const SymRep& v) {
  require_semisimple(v.field, v.n);
  const auto chi = character(v);
  const auto mus = enumerate_partitions(v.n);
  const auto lambdas = cycle_types(v.n);
  std::map<Partition, long long> mult;

  if (v.field.is_rationals()) {
    const mpz_class order = factorial(v.n);
    for (const Partition& mu : mus) {
      mpq_class sum = 0;
      for (const CycleType& lambda : lambdas)
        sum += mpq_class(class_size(lambda) *
                         static_cast<long>(specht_character(mu, lambda))) *
               chi.at(lambda).rational();
      mpq_class m = sum / mpq_class(order);
      if (m.get_den() != 1 || m < 0)
        throw LinalgError("decompose: non-integral multiplicity for " + mu.str());
      if (m != 0) mult[mu] = m.get_num().get_si();
    }
  } else {
    // Solve the character system mod p; the table is invertible because
    // every z_lambda is a product of factors at most n < p.
    const Field& f = v.field;
    const int c = static_cast<int>(lambdas.size());
    Matrix table(c, c, f), rhs(c, 1, f);
    for (int row = 0; row < c; ++row) {
      for (int col = 0; col < c; ++col)
        table.at(row, col) =
            Scalar::from_int(f, specht_character(mus[col], lambdas[row]));
      rhs.at(row, 0) = chi.at(lambdas[row]);
    }
    Matrix sol = solve(table, rhs);
    long long dim_total = 0;
    for (int i = 0; i < c; ++i) {
      long long m = static_cast<long long>(sol.at(i, 0).residue());
      if (m != 0) mult[mus[i]] = m;
      dim_total += m * specht_dim(mus[i]);
    }
    if (dim_total != v.dim)
      throw LinalgError("decompose: mod-p multiplicities fail the dimension count");
  }
  return mult;
}

int width(const SymRep& v) {
  int w = 0;
  for (const auto& [mu, m] : decompose(v)) w = std::max(w, mu.part(0));
  return w;
}

// Class sums sum_{sigma in class} rho(sigma), accumulated level by level
// over the Cayley graph of the adjacent transpositions.
std::map<CycleType, Matrix> class_sums(const SymRep& v) {
  std::map<CycleType, Matrix> sums;
  for (const CycleType& lambda : cycle_types(v.n))
    sums.emplace(lambda, Matrix(v.dim, v.dim, v.field));

  std::set<Perm> visited;
  std::map<Perm, Matrix> level;
  level.emplace(perm_identity(v.n), Matrix::identity(v.dim, v.field));
  visited.insert(perm_identity(v.n));
  while (!level.empty()) {
    std::map<Perm, Matrix> next;
    for (const auto& [sigma, rho] : level) {
      auto it = sums.find(cycle_type(sigma));
      it->second = it->second + rho;
      for (int i = 0; i + 1 < v.n; ++i) {
        Perm tau = perm_compose(perm_transposition(v.n, i, i + 1), sigma);
        if (visited.insert(tau).second)
          next.emplace(std::move(tau), v.gens[i] * rho);
      }
    }
    level = std::move(next);
  }
  return sums;
}

Matrix isotypic_projection(const SymRep& v, const Partition& mu,
                           const std::map<CycleType, Matrix>& sums) {
  const Field& f = v.field;
  const mpz_class order = factorial(v.n);
  Matrix proj(v.dim, v.dim, f);
  for (const auto& [lambda, sum] : sums) {
    mpz_class num = mpz_class(static_cast<long>(specht_dim(mu))) *
                    static_cast<long>(specht_character(mu, lambda));
    mpq_class coeff(num, order);
    coeff.canonicalize();
    proj = proj + sum * Scalar::from_mpq(f, coeff);
  }
  return proj;
}

EquivMap width_subspace(const SymRepPtr& v, int bound) {
  const auto mult = decompose(*v);
  const Field& f = v->field;
  const auto sums = class_sums(*v);

  // Sum of the central idempotents of the constituents below the bound.
  Matrix proj(v->dim, v->dim, f);
  for (const auto& [mu, m] : mult) {
    if (mu.part(0) >= bound) continue;
    proj = proj + isotypic_projection(*v, mu, sums);
  }

  Matrix cols = image_basis(proj);
  SymRep sub;
  sub.n = v->n;
  sub.dim = cols.cols();
  sub.field = f;
  for (int j = 0; j < cols.cols(); ++j) sub.labels.push_back("w" + std::to_string(j));
  for (const Matrix& g : v->gens) sub.gens.push_back(solve(cols, g * cols));
  return make_equiv_map(make_symrep(std::move(sub)), v, std::move(cols));
}

QuotientRep quotient_rep(const SymRep& v, const Matrix& subspace_cols) {
  const Field& f = v.field;
  const int sub_rank = rank(subspace_cols);
  for (const Matrix& g : v.gens) {
    if (rank(subspace_cols.hstack(g * subspace_cols)) != sub_rank)
      throw InvalidSubrepresentationError(
          "quotient_rep: subspace is not generator-invariant");
  }
  QuotientSpace qs = quotient_basis(v.dim, subspace_cols);
  const int qdim = static_cast<int>(qs.rep_indices.size());

  Matrix section(v.dim, qdim, f);
  for (int j = 0; j < qdim; ++j) section.at(qs.rep_indices[j], j) = Scalar::one(f);

  SymRep q;
  q.n = v.n;
  q.dim = qdim;
  q.field = f;
  for (int j = 0; j < qdim; ++j)
    q.labels.push_back("q|" + v.labels[qs.rep_indices[j]]);
  for (const Matrix& g : v.gens) q.gens.push_back(qs.projection * (g * section));

  return QuotientRep{make_symrep(std::move(q)), std::move(qs.projection),
                     std::move(qs.rep_indices)};
}

}  // namespace centstab
