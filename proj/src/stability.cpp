#include "centstab/stability.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "centstab/errors.hpp"

namespace centstab {

void CoherentSequence::validate() const {
  if (reps.empty()) throw LinalgError("coherent sequence is empty");
  if (maps.size() + 1 != reps.size())
    throw LinalgError("coherent sequence needs one map per consecutive pair");
  for (size_t i = 0; i < reps.size(); ++i) {
    if (reps[i]->n != start_n + static_cast<int>(i))
      throw LinalgError("coherent sequence group indices must step by one");
  }
  for (size_t i = 0; i < maps.size(); ++i) {
    // Pointer identity is the fast path; independently built copies of
    // the same representation chain fine as long as they agree exactly.
    if (maps[i].source != reps[i] && !(*maps[i].source == *reps[i]))
      throw LinalgError("coherent sequence maps must chain the terms");
    if (maps[i].target != reps[i + 1] && !(*maps[i].target == *reps[i + 1]))
      throw LinalgError("coherent sequence maps must chain the terms");
    maps[i].validate();
  }
}

CoherentSequence make_coherent_sequence(std::vector<EquivMap> maps) {
  if (maps.empty()) throw LinalgError("make_coherent_sequence needs at least one map");
  CoherentSequence seq;
  seq.start_n = maps[0].source->n;
  seq.reps.push_back(maps[0].source);
  for (const EquivMap& m : maps) seq.reps.push_back(m.target);
  seq.maps = std::move(maps);
  seq.validate();
  return seq;
}

CentralStabilization central_stabilization(const EquivMap& phi) {
  phi.validate();
  const int n = phi.target->n;
  if (phi.source->n + 1 != n)
    throw LinalgError("central stabilization needs phi: V_{n-1} -> V_n");

  // W = Ind_{S_n}^{S_{n+1}} V_n; the one-letter twist is immaterial and
  // fixed as trivial.
  Induced w = induce(phi.target, 1, Twist::Trivial);
  const Matrix phi_in_w = w.inclusion.matrix * phi.matrix;

  // Seed vectors v - (n, n+1) v over the image of V_{n-1}, then their
  // span closed under the S_{n+1} action.
  const Matrix& last_gen = w.rep->gens[n - 1];  // the transposition (n, n+1)
  const Matrix seed = phi_in_w - last_gen * phi_in_w;
  const Matrix invariant = close_under_maps(seed, w.rep->gens);

  QuotientRep q = quotient_rep(*w.rep, invariant);
  EquivMap nat = make_equiv_map(phi.target, q.rep, q.projection * w.inclusion.matrix);
  return CentralStabilization{q.rep, std::move(nat)};
}

namespace {

// Shared by boundary_map and the complex builder so that consecutive
// boundaries reuse one induced representation per term.
Matrix boundary_matrix(const EquivMap& phi, int group_index, const Induced& src,
                       const Induced& tgt, const BoundaryTransversal* transversal) {
  const int n = phi.source->n;
  const int m = group_index;
  const Field& f = phi.matrix.field();

  // Coset representatives for S_{n+2..M} inside S_{n+1..M}, written as
  // sigma * S_{n+2..M} so that replacing sigma by sigma tau only hits the
  // identity copy with tau, where the twist turns it into a sign.  The
  // coset of sigma is labelled by sigma(n+1); the canonical choice is the
  // transposition (n+1, a).  A custom transversal must fix 1..n and hit
  // each coset exactly once.
  std::vector<Perm> reps;
  if (transversal == nullptr) {
    for (int a = n; a < m; ++a) reps.push_back(perm_transposition(m, n, a));
  } else {
    reps = *transversal;
    if (static_cast<int>(reps.size()) != m - n)
      throw LinalgError("boundary transversal needs one representative per coset");
    std::set<int> hit;
    for (const Perm& sigma : reps) {
      if (static_cast<int>(sigma.size()) != m || !perm_is_valid(sigma))
        throw LinalgError("boundary transversal entry is not a permutation");
      for (int i = 0; i < n; ++i)
        if (sigma[i] != i)
          throw LinalgError("boundary transversal entry moves a letter of S_n");
      hit.insert(sigma[n]);
    }
    if (static_cast<int>(hit.size()) != m - n)
      throw LinalgError("boundary transversal entries repeat a coset");
  }

  // The signed sum over the transversal applied to the image of V_n.
  const Matrix included = tgt.inclusion.matrix * phi.matrix;
  Matrix dprime(tgt.rep->dim, phi.source->dim, f);
  for (const Perm& sigma : reps) {
    Matrix moved = apply_permutation_to(*tgt.rep, sigma, included);
    dprime = perm_sign(sigma) > 0 ? dprime + moved : dprime - moved;
  }

  // Extend to the whole induced module: the column block of the coset A
  // is rho(c_A) dprime, and adjacent swaps move one block to another
  // because s_i c_A = c_{s_i A} whenever exactly one of i, i+1 lies in A.
  const auto cosets = coset_images(m, m - n);
  std::map<std::vector<int>, int> coset_index;
  for (size_t i = 0; i < cosets.size(); ++i)
    coset_index[cosets[i]] = static_cast<int>(i);

  const int d = phi.source->dim;
  Matrix out(tgt.rep->dim, src.rep->dim, f);
  std::vector<char> done(cosets.size(), 0);
  auto write_block = [&](int coset, const Matrix& block) {
    for (int r = 0; r < block.rows(); ++r)
      for (int c = 0; c < d; ++c)
        if (!block.at(r, c).is_zero()) out.at(r, coset * d + c) = block.at(r, c);
  };

  std::vector<int> a0(m - n);
  for (int j = 0; j < m - n; ++j) a0[j] = n + j;
  const int idx0 = coset_index.at(a0);
  write_block(idx0, dprime);
  done[idx0] = 1;

  std::vector<std::pair<std::vector<int>, Matrix>> frontier{{a0, dprime}};
  while (!frontier.empty()) {
    std::vector<std::pair<std::vector<int>, Matrix>> next;
    for (const auto& [a, block] : frontier) {
      std::vector<char> in_a(m, 0);
      for (int x : a) in_a[x] = 1;
      for (int i = 0; i + 1 < m; ++i) {
        if (in_a[i] == in_a[i + 1]) continue;
        std::vector<int> a2 = a;
        for (int& x : a2) x = x == i ? i + 1 : (x == i + 1 ? i : x);
        std::sort(a2.begin(), a2.end());
        const int idx = coset_index.at(a2);
        if (done[idx]) continue;
        Matrix moved = tgt.rep->gens[i] * block;
        write_block(idx, moved);
        done[idx] = 1;
        next.emplace_back(std::move(a2), std::move(moved));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

EquivMap boundary_map(const EquivMap& phi, int group_index,
                      const BoundaryTransversal* transversal) {
  phi.validate();
  const int n = phi.source->n;
  if (phi.target->n != n + 1)
    throw LinalgError("boundary_map needs phi: V_n -> V_{n+1}");
  if (group_index <= n) throw LinalgError("boundary_map needs M > n");

  Induced src = induce(phi.source, group_index - n, Twist::Sign);
  Induced tgt = induce(phi.target, group_index - n - 1, Twist::Sign);
  Matrix mat = boundary_matrix(phi, group_index, src, tgt, transversal);
  return make_equiv_map(src.rep, tgt.rep, std::move(mat));
}

ChainComplex central_stability_complex(const CoherentSequence& seq, int group_index) {
  seq.validate();
  if (!potential_check(seq))
    throw PotentialStabilityError(
        "sequence is not potentially centrally stable; no chain complex");
  const int m_top = seq.start_n + seq.length() - 1;
  if (group_index < m_top)
    throw LinalgError("central_stability_complex needs M >= the last index");

  std::vector<Induced> induced;
  induced.reserve(seq.reps.size());
  for (int i = 0; i < seq.length(); ++i)
    induced.push_back(
        induce(seq.reps[i], group_index - (seq.start_n + i), Twist::Sign));

  ChainComplex complex;
  complex.group_index = group_index;
  for (const Induced& ind : induced) complex.terms.push_back(ind.rep);
  for (size_t i = 0; i < seq.maps.size(); ++i)
    complex.boundaries.push_back(boundary_matrix(seq.maps[i], group_index,
                                                 induced[i], induced[i + 1],
                                                 nullptr));

  for (size_t i = 0; i + 1 < complex.boundaries.size(); ++i) {
    if (!(complex.boundaries[i + 1] * complex.boundaries[i]).is_zero())
      throw LinalgError("central stability complex: d.d != 0 at position " +
                        std::to_string(i));
  }
  return complex;
}

std::vector<int> homology_dims(const ChainComplex& complex) {
  const int terms = static_cast<int>(complex.terms.size());
  std::vector<int> h;
  for (int i = 1; i < terms; ++i) {
    const int incoming = rank(complex.boundaries[i - 1]);
    const int kernel =
        i < terms - 1
            ? complex.terms[i]->dim - rank(complex.boundaries[i])
            : complex.terms[i]->dim;  // final boundary is the zero map
    h.push_back(kernel - incoming);
  }
  return h;
}

bool potential_check(const CoherentSequence& seq) {
  seq.validate();
  for (int u = 0; u < seq.length(); ++u) {
    Matrix composed = Matrix::identity(seq.reps[u]->dim, seq.reps[u]->field);
    for (int v = u + 1; v < seq.length(); ++v) {
      composed = seq.maps[v - 1].matrix * composed;
      // Generators of S_{i+1..j} for i = start+u, j = start+v.
      const int lo = seq.start_n + u;
      const int hi = seq.start_n + v - 2;
      for (int g = lo; g <= hi; ++g) {
        if (seq.reps[v]->gens[g] * composed != composed) return false;
      }
    }
  }
  return true;
}

CoherentSequence central_stabilization_sequence(
    const EquivMap& phi, int extra_terms,
    const std::optional<Matrix>& quotient_at_first_step) {
  if (extra_terms < 0) throw LinalgError("extra_terms must be nonnegative");
  std::vector<EquivMap> maps{phi};
  for (int step = 0; step < extra_terms; ++step) {
    CentralStabilization cs = central_stabilization(maps.back());
    if (step == 0 && quotient_at_first_step.has_value()) {
      // quotient_rep rejects subspaces that are not generator-invariant.
      QuotientRep q = quotient_rep(*cs.rep, *quotient_at_first_step);
      maps.push_back(make_equiv_map(maps.back().target, q.rep,
                                    q.projection * cs.map.matrix));
    } else {
      maps.push_back(cs.map);
    }
  }
  return make_coherent_sequence(std::move(maps));
}

StabilityCertificate specht_stability_certificate(const CoherentSequence& seq) {
  seq.validate();
  require_semisimple(seq.reps.back()->field, seq.reps.back()->n);

  StabilityCertificate cert;
  std::vector<std::map<CycleType, Matrix>> sums;
  for (int u = 0; u < seq.length(); ++u) {
    cert.terms.push_back(
        CertificateTerm{seq.reps[u]->n, decompose(*seq.reps[u])});
    sums.push_back(class_sums(*seq.reps[u]));
  }

  cert.all_match = true;
  for (int u = 0; u + 1 < seq.length(); ++u) {
    // Multiset matching under mu -> stab(mu).
    std::map<Partition, long long> pushed;
    for (const auto& [mu, m] : cert.terms[u].constituents) pushed[stab(mu)] += m;
    const bool match = pushed == cert.terms[u + 1].constituents;
    cert.multiset_match.push_back(match);

    // Graded injectivity: restricted to each isotypic component, the map
    // composed with the matching projection has full rank.
    bool injective = true;
    for (const auto& [mu, m] : cert.terms[u].constituents) {
      const Matrix incl =
          image_basis(isotypic_projection(*seq.reps[u], mu, sums[u]));
      const Matrix proj =
          isotypic_projection(*seq.reps[u + 1], stab(mu), sums[u + 1]);
      if (rank(proj * (seq.maps[u].matrix * incl)) != incl.cols()) {
        injective = false;
        break;
      }
    }
    cert.graded_injective.push_back(injective);
    cert.all_match = cert.all_match && match && injective;
  }
  return cert;
}

DimPolyReport dimension_polynomial_check(const CoherentSequence& seq) {
  seq.validate();
  DimPolyReport report;
  for (const SymRepPtr& rep : seq.reps) report.computed.push_back(rep->dim);

  std::vector<std::map<Partition, long long>> constituents;
  for (const SymRepPtr& rep : seq.reps) constituents.push_back(decompose(*rep));

  const int len = seq.length();
  auto predict = [&](int anchor, int v) {
    long long total = 0;
    for (const auto& [mu, m] : constituents[anchor])
      total += m * dim_poly(mu, v - anchor);
    return total;
  };

  report.predicted.assign(len, -1);
  for (int anchor = 0; anchor < len; ++anchor) {
    bool ok = true;
    for (int v = anchor; v < len && ok; ++v)
      ok = predict(anchor, v) == report.computed[v];
    if (ok) {
      report.agrees_from_index = anchor;
      for (int v = anchor; v < len; ++v) report.predicted[v] = predict(anchor, v);
      break;
    }
  }
  return report;
}

QuotientRep boundary_cokernel(const EquivMap& boundary) {
  return quotient_rep(*boundary.target, image_basis(boundary.matrix));
}

}  // namespace centstab
