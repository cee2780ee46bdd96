#include "centstab/specht.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "centstab/errors.hpp"

namespace centstab {

namespace {

// Tabloid basis of M^shape with the generator action stored as index
// permutations.  Lets Specht modules be built without materializing the
// dense generator matrices of large permutation modules.
struct TabloidAction {
  std::vector<Tabloid> tabloids;
  std::map<Tabloid, int> index;
  std::vector<std::vector<int>> gen_maps;  // gen_maps[i][j]: s_{i+1} moves j here
};

Tabloid swap_entries(const Tabloid& t, int a, int b) {
  std::vector<std::vector<int>> rows = t.rows();
  for (auto& row : rows)
    for (int& v : row) {
      if (v == a)
        v = b;
      else if (v == b)
        v = a;
    }
  return Tabloid(t.shape(), std::move(rows));
}

TabloidAction tabloid_action(const WeakPartition& shape) {
  TabloidAction act;
  act.tabloids = enumerate_tabloids(shape);
  for (size_t i = 0; i < act.tabloids.size(); ++i)
    act.index.emplace(act.tabloids[i], static_cast<int>(i));
  const int n = shape.n();
  for (int g = 0; g + 1 < n; ++g) {
    std::vector<int> moves(act.tabloids.size());
    for (size_t j = 0; j < act.tabloids.size(); ++j)
      moves[j] = act.index.at(swap_entries(act.tabloids[j], g + 1, g + 2));
    act.gen_maps.push_back(std::move(moves));
  }
  return act;
}

Matrix permute_rows(const std::vector<int>& moves, const Matrix& m) {
  Matrix out(m.rows(), m.cols(), m.field());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out.at(moves[r], c) = m.at(r, c);
  return out;
}

Matrix polytabloid_coords(const Tableau& t, const Partition& nu, const Field& f,
                          const TabloidAction& act) {
  const WeakPartition& shape = t.shape();
  Matrix coords(static_cast<int>(act.tabloids.size()), 1, f);

  // Columns of the nu-portion: column c collects the entries t[r][c]
  // for the rows of nu reaching past c.
  std::vector<std::vector<int>> columns;
  const int width = nu.rows() == 0 ? 0 : nu.part(0);
  for (int c = 0; c < width; ++c) {
    std::vector<int> col;
    for (int r = 0; r < nu.rows(); ++r)
      if (nu.part(r) > c) col.push_back(t.rows()[r][c]);
    columns.push_back(std::move(col));
  }

  // Iterate over the product of per-column permutations, tracking the
  // entry relocation map and the sign.
  const int n = shape.n();
  std::vector<int> image(n + 1);
  std::iota(image.begin(), image.end(), 0);

  std::function<void(size_t, int)> walk = [&](size_t ci, int sign) {
    if (ci == columns.size()) {
      std::vector<std::vector<int>> rows = t.rows();
      for (auto& row : rows)
        for (int& v : row) v = image[v];
      const Tabloid target(shape, std::move(rows));
      Scalar& slot = coords.at(act.index.at(target), 0);
      slot += Scalar::from_int(f, sign);
      return;
    }
    const std::vector<int>& col = columns[ci];
    std::vector<int> arrangement(col.size());
    std::iota(arrangement.begin(), arrangement.end(), 0);
    do {
      int inversions = 0;
      for (size_t a = 0; a < arrangement.size(); ++a)
        for (size_t b = a + 1; b < arrangement.size(); ++b)
          if (arrangement[a] > arrangement[b]) ++inversions;
      for (size_t a = 0; a < col.size(); ++a) image[col[a]] = col[arrangement[a]];
      walk(ci + 1, inversions % 2 == 0 ? sign : -sign);
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    for (int v : col) image[v] = v;
  };
  walk(0, 1);
  return coords;
}

struct SpechtCore {
  SymRepPtr rep;
  Matrix embed;  // tabloid coordinates of the standard polytabloids
};

// S^mu on the standard polytabloid basis, driven entirely by the tabloid
// index action.
SpechtCore specht_core(const Partition& mu, const Field& f) {
  const TabloidAction act = tabloid_action(mu.weak());
  const auto tableaux = standard_tableaux(mu);
  const int dim = static_cast<int>(tableaux.size());
  const int ambient = static_cast<int>(act.tabloids.size());

  Matrix embed(ambient, dim, f);
  for (int j = 0; j < dim; ++j) {
    Matrix col = polytabloid_coords(tableaux[j], mu, f, act);
    for (int i = 0; i < ambient; ++i) embed.at(i, j) = col.at(i, 0);
  }
  if (rank(embed) != dim)
    throw LinalgError("standard polytabloids are dependent for " + mu.str());

  SymRep rep;
  rep.n = mu.n();
  rep.dim = dim;
  rep.field = f;
  for (const Tableau& t : tableaux) rep.labels.push_back(t.str());
  // Straightening by linear solve: expand g e_t in the standard
  // polytabloids inside M^mu.
  for (const auto& moves : act.gen_maps)
    rep.gens.push_back(solve(embed, permute_rows(moves, embed)));

  return SpechtCore{make_symrep(std::move(rep)), std::move(embed)};
}

}  // namespace

SymRepPtr permutation_module(const WeakPartition& shape, const Field& f) {
  const int n = shape.n();
  if (n < 1) throw ShapeError("permutation_module needs at least one box");
  // Dense generator matrices grow as dim^2 per generator; past this the
  // module no longer fits the desk-scale memory budget.
  if (tabloid_count(shape) > 3000)
    throw LinalgError("permutation module of dimension " +
                      std::to_string(tabloid_count(shape)) +
                      " exceeds the desk-scale limit of 3000");
  const TabloidAction act = tabloid_action(shape);
  const int dim = static_cast<int>(act.tabloids.size());

  SymRep rep;
  rep.n = n;
  rep.dim = dim;
  rep.field = f;
  for (const Tabloid& t : act.tabloids) rep.labels.push_back(t.str());
  for (int i = 0; i + 1 < n; ++i) {
    Matrix g(dim, dim, f);
    for (int j = 0; j < dim; ++j) g.at(act.gen_maps[i][j], j) = Scalar::one(f);
    rep.gens.push_back(std::move(g));
  }
  return make_symrep(std::move(rep));
}

Matrix polytabloid(const Tableau& t, const Partition& nu, const Field& f) {
  if (!t.shape().contains(nu.weak()))
    throw ShapeError("polytabloid: nu does not fit inside the shape of t");
  return polytabloid_coords(t, nu, f, tabloid_action(t.shape()));
}

Matrix polytabloid(const Tableau& t, const Field& f) {
  if (!t.shape().is_partition())
    throw ShapeError("polytabloid: the shape of t must be a partition");
  return polytabloid(t, Partition(t.shape().parts()), f);
}

SpechtModule specht_module(const Partition& mu, const Field& f) {
  SpechtCore core = specht_core(mu, f);
  SymRepPtr pm = permutation_module(mu.weak(), f);
  return SpechtModule{core.rep, make_equiv_map(core.rep, pm, std::move(core.embed))};
}

SpechtModule generalized_specht(const Partition& nu, const WeakPartition& eta,
                                const Field& f) {
  if (!eta.contains(nu.weak()))
    throw ShapeError("generalized_specht needs nu contained in eta");
  SymRepPtr pm = permutation_module(eta, f);
  const auto tabs = enumerate_tabloids(eta);

  // sigma e_t^nu = e_{sigma t}^nu and the tableaux of shape eta form a
  // single orbit, so closing one polytabloid under the generators spans
  // the span of all of them.
  std::vector<std::vector<int>> rows(eta.rows());
  int next = 1;
  for (int r = 0; r < eta.rows(); ++r)
    for (int c = 0; c < eta.parts()[r]; ++c) rows[r].push_back(next++);
  const Tableau seed_tableau(eta, std::move(rows));

  Matrix basis = close_under_maps(polytabloid(seed_tableau, nu, f), pm->gens);
  const int dim = basis.cols();

  SymRep rep;
  rep.n = eta.n();
  rep.dim = dim;
  rep.field = f;
  for (int j = 0; j < dim; ++j) {
    int pivot = 0;
    while (pivot < pm->dim && basis.at(pivot, j).is_zero()) ++pivot;
    rep.labels.push_back("e|" + tabs[pivot].str());
  }
  for (const Matrix& g : pm->gens) rep.gens.push_back(solve(basis, g * basis));

  SymRepPtr rep_ptr = make_symrep(std::move(rep));
  return SpechtModule{rep_ptr, make_equiv_map(rep_ptr, pm, std::move(basis))};
}

EquivMap stabilization_map(const Partition& mu, const Field& f) {
  const Partition up = stab(mu);
  // The permutation modules are never needed here, only the two Specht
  // representations themselves.
  SpechtCore source = specht_core(mu, f);
  SpechtCore target = specht_core(up, f);

  const auto source_tableaux = standard_tableaux(mu);
  const auto target_tableaux = standard_tableaux(up);
  std::map<std::vector<int>, int> target_index;
  for (size_t i = 0; i < target_tableaux.size(); ++i)
    target_index.emplace(target_tableaux[i].row_reading_word(),
                         static_cast<int>(i));

  // Appending n+1 to the first row sends a standard tableau to a
  // standard tableau and e_t to e_{t'}.
  Matrix m(target.rep->dim, source.rep->dim, f);
  for (size_t j = 0; j < source_tableaux.size(); ++j) {
    std::vector<std::vector<int>> rows = source_tableaux[j].rows();
    rows[0].push_back(mu.n() + 1);
    const Tableau lifted(up.weak(), std::move(rows));
    m.at(target_index.at(lifted.row_reading_word()), static_cast<int>(j)) =
        Scalar::one(f);
  }
  return make_equiv_map(source.rep, target.rep, std::move(m));
}

}  // namespace centstab
