#include "centstab/json_io.hpp"

#include "centstab/errors.hpp"
#include "centstab/specht.hpp"
#include "doctest.h"

using namespace centstab;

namespace {
const Field Q = Field::rationals();
}

TEST_CASE("matrix documents round-trip") {
  for (const Field& f : {Field::rationals(), Field::prime(7)}) {
    Matrix m(2, 3, f);
    m.at(0, 0) = Scalar::parse(f, "3/5");
    m.at(1, 2) = Scalar::from_int(f, -5);
    Json doc = matrix_to_json(m);
    CHECK(matrix_from_json(doc) == m);
    // Byte-level stability of the serialized form.
    CHECK(matrix_to_json(matrix_from_json(doc)).dump() == doc.dump());
  }
  CHECK_THROWS_AS(matrix_from_json(Json{{"rows", 1}}), ParseError);
}

TEST_CASE("tableau and tabloid documents round-trip") {
  Tableau t(WeakPartition({2, 1}), {{1, 3}, {2}});
  CHECK(tableau_from_json(tableau_to_json(t)) == t);
  CHECK(tableau_to_json(t).dump() == "[[1,3],[2]]");

  Tabloid tab(WeakPartition({2, 1}), {{3, 1}, {2}});
  CHECK(tabloid_from_json(tabloid_to_json(tab)) == tab);
  CHECK(tabloid_to_json(tab).dump() == "[[1,3],[2]]");  // rows stored sorted
}

TEST_CASE("symrep documents round-trip") {
  for (const SymRepPtr& rep :
       {perm_rep(3, Q), specht_module(Partition({2, 1}), Q).rep,
        perm_rep(3, Field::prime(5))}) {
    Json doc = symrep_to_json(*rep);
    SymRepPtr back = symrep_from_json(doc);
    CHECK(*back == *rep);
    CHECK(symrep_to_json(*back).dump() == doc.dump());
  }
  CHECK_THROWS_AS(symrep_from_json(Json{{"type", "other"}}), ParseError);
}

TEST_CASE("character documents round-trip") {
  CharacterDoc doc{3, Q, character(*perm_rep(3, Q))};
  Json j = character_to_json(doc);
  CHECK(character_from_json(j) == doc);
  CHECK(character_to_json(character_from_json(j)).dump() == j.dump());
}
