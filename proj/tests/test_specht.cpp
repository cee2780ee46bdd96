#include "centstab/specht.hpp"

#include "centstab/errors.hpp"
#include "doctest.h"

using namespace centstab;

namespace {

const Field Q = Field::rationals();

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

// The tabloid-level append-(n+1)-to-row-one map M^mu -> M^{stab mu}.
Matrix tabloid_append_map(const Partition& mu, const Field& f) {
  const auto src = enumerate_tabloids(mu.weak());
  const auto dst = enumerate_tabloids(stab(mu).weak());
  std::map<Tabloid, int> dst_index;
  for (size_t i = 0; i < dst.size(); ++i) dst_index.emplace(dst[i], static_cast<int>(i));

  Matrix m(static_cast<int>(dst.size()), static_cast<int>(src.size()), f);
  for (size_t j = 0; j < src.size(); ++j) {
    auto rows = src[j].rows();
    rows[0].push_back(mu.n() + 1);
    m.at(dst_index.at(Tabloid(stab(mu).weak(), std::move(rows))),
         static_cast<int>(j)) = Scalar::one(f);
  }
  return m;
}

}  // namespace

TEST_CASE("permutation modules") {
  CHECK(character(*permutation_module(WeakPartition({4}), Q)) ==
        character(*trivial_rep(4, Q)));
  for (int n = 2; n <= 5; ++n) {
    auto m = permutation_module(WeakPartition({n - 1, 1}), Q);
    CHECK(m->dim == n);
    CHECK(character(*m) == character(*perm_rep(n, Q)));
  }
  CHECK(permutation_module(WeakPartition({2, 1}), Q)->dim == 3);

  // Generators are permutation matrices: exactly one 1 per column.
  auto m = permutation_module(WeakPartition({2, 2}), Q);
  for (const Matrix& g : m->gens)
    for (int j = 0; j < g.cols(); ++j) {
      int ones = 0, others = 0;
      for (int i = 0; i < g.rows(); ++i) {
        if (g.at(i, j).is_one())
          ++ones;
        else if (!g.at(i, j).is_zero())
          ++others;
      }
      CHECK(ones == 1);
      CHECK(others == 0);
    }

  // Weak shapes with zero rows still produce modules.
  CHECK(permutation_module(WeakPartition({0, 3}), Q)->dim == 1);
  CHECK(permutation_module(WeakPartition({1, 0, 2}), Q)->dim == 3);
}

TEST_CASE("polytabloids on pinned shapes") {
  // Single row: one tabloid, coefficient 1.
  Tableau t3(WeakPartition({3}), {{1, 2, 3}});
  Matrix e3 = polytabloid(t3, Q);
  CHECK(e3.rows() == 1);
  CHECK(e3.at(0, 0).is_one());

  // Single column of two boxes: {t} - {swapped t}.
  Tableau t11(WeakPartition({1, 1}), {{1}, {2}});
  Matrix e11 = polytabloid(t11, Q);
  REQUIRE(e11.rows() == 2);
  CHECK(e11.at(0, 0) == Scalar::from_int(Q, 1));
  CHECK(e11.at(1, 0) == Scalar::from_int(Q, -1));

  // Shape (2,1), t = [[1,2],[3]]: supported on {12|3} and {23|1} with
  // coefficients +1 and -1.
  Tableau t21(WeakPartition({2, 1}), {{1, 2}, {3}});
  Matrix e21 = polytabloid(t21, Q);
  const auto tabs = enumerate_tabloids(WeakPartition({2, 1}));
  REQUIRE(tabs.size() == 3);
  int support = 0;
  for (int i = 0; i < 3; ++i)
    if (!e21.at(i, 0).is_zero()) ++support;
  CHECK(support == 2);
  CHECK(e21.at(0, 0) == Scalar::from_int(Q, 1));   // {12|3}
  CHECK(e21.at(1, 0) == Scalar::from_int(Q, 0));   // {13|2}
  CHECK(e21.at(2, 0) == Scalar::from_int(Q, -1));  // {23|1}

  CHECK_THROWS_AS(polytabloid(Tableau(WeakPartition({1, 2}), {{1}, {2, 3}}), Q),
                  ShapeError);
}

TEST_CASE("specht modules") {
  CHECK(specht_module(P({4}), Q).rep->dim == 1);
  CHECK(specht_module(P({2, 1}), Q).rep->dim == 2);
  for (int n = 2; n <= 7; ++n) {
    std::vector<int> hook = {n - 1, 1};
    CHECK(specht_module(Partition(hook), Q).rep->dim == n - 1);
  }

  // Characters of the constructed modules agree with the
  // Murnaghan-Nakayama values; two fully independent routes.
  for (int n = 1; n <= 5; ++n)
    for (const Partition& mu : enumerate_partitions(n)) {
      auto chi = character(*specht_module(mu, Q).rep);
      for (const CycleType& lambda : cycle_types(n))
        CHECK(chi.at(lambda) ==
              Scalar::from_int(Q, specht_character(mu, lambda)));
    }

  // Same construction over a prime field.
  Field f7 = Field::prime(7);
  CHECK(specht_module(P({2, 2}), f7).rep->dim == 2);
  CHECK(specht_module(P({3, 1, 1}), f7).rep->dim == 6);
}

TEST_CASE("standard polytabloid span is generator-closed") {
  for (int n = 2; n <= 6; ++n)
    for (const Partition& mu : enumerate_partitions(n)) {
      SpechtModule s = specht_module(mu, Q);
      const Matrix& embed = s.embedding.matrix;
      Matrix closed = close_under_maps(embed, s.embedding.target->gens);
      CHECK(closed.cols() == embed.cols());
    }
}

TEST_CASE("stabilization maps") {
  for (int n = 1; n <= 6; ++n)
    for (const Partition& mu : enumerate_partitions(n)) {
      EquivMap f = stabilization_map(mu, Q);  // construction validates equivariance
      CHECK(rank(f.matrix) == f.source->dim);
    }

  // Consistency with the tabloid-level append map.
  for (int n = 1; n <= 5; ++n)
    for (const Partition& mu : enumerate_partitions(n)) {
      EquivMap f = stabilization_map(mu, Q);
      SpechtModule src = specht_module(mu, Q);
      SpechtModule dst = specht_module(stab(mu), Q);
      CHECK(dst.embedding.matrix * f.matrix ==
            tabloid_append_map(mu, Q) * src.embedding.matrix);
    }

  EquivMap triv = stabilization_map(P({4}), Q);
  CHECK(triv.matrix.is_identity());

  EquivMap one = stabilization_map(P({1}), Q);
  CHECK(one.source->dim == 1);
  CHECK(one.target->dim == 1);
  CHECK(!one.matrix.is_zero());

  EquivMap two = stabilization_map(P({2, 1}), Q);
  CHECK(two.source->dim == 2);
  CHECK(two.target->dim == 3);
  CHECK(rank(two.matrix) == 2);
}

TEST_CASE("generalized specht modules") {
  // eta = nu recovers the ordinary Specht module.
  for (int n = 2; n <= 5; ++n)
    for (const Partition& nu : enumerate_partitions(n)) {
      SpechtModule plain = specht_module(nu, Q);
      SpechtModule gen = generalized_specht(nu, nu.weak(), Q);
      CHECK(gen.rep->dim == plain.rep->dim);
      CHECK(rank(plain.embedding.matrix.hstack(gen.embedding.matrix)) ==
            plain.rep->dim);
      CHECK(character(*gen.rep) == character(*plain.rep));
    }

  // Empty nu: no column alternation, the span is the whole permutation
  // module.
  SpechtModule all = generalized_specht(Partition(), WeakPartition({2, 1}), Q);
  CHECK(all.rep->dim == 3);

  // The hatstab tail of size zero is the plain module again.
  for (const Partition& nu : {P({2, 1}), P({3})})
    for (int k = 1; k <= 2; ++k) {
      Partition tall = hatstab_pow(nu, k);
      SpechtModule gen = generalized_specht(tall, tall.weak(), Q);
      CHECK(gen.rep->dim == specht_dim(tall));
      CHECK(character(*gen.rep) == character(*specht_module(tall, Q).rep));
    }

  CHECK_THROWS_AS(generalized_specht(P({3}), WeakPartition({2, 1}), Q), ShapeError);
}

TEST_CASE("short exact sequence dimension split") {
  // dim Ind(S^nu, k, trivial) = dim S^{nu,nu[k]} + dim S^{hatstab nu,
  // (hatstab nu)[k-1]} over both field kinds.
  for (const Field& f : {Field::rationals(), Field::prime(11)}) {
    for (int n = 1; n <= 3; ++n)
      for (const Partition& nu : enumerate_partitions(n))
        for (int k = 1; k <= 2; ++k) {
          long long lhs =
              induce(specht_module(nu, f).rep, k, Twist::Trivial).rep->dim;
          long long top =
              generalized_specht(nu, bracket_weak(nu, k), f).rep->dim;
          long long bottom =
              generalized_specht(hatstab(nu), bracket_weak(hatstab(nu), k - 1), f)
                  .rep->dim;
          CHECK(lhs == top + bottom);
        }
  }
}
