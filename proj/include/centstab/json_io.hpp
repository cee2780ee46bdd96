#pragma once

#include <string>

#include "json.hpp"

#include "centstab/combinatorics.hpp"
#include "centstab/symrep.hpp"

namespace centstab {

// All emitted documents are nlohmann ordered_json so identical inputs
// serialize to identical bytes.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaTag = "centstab/1";

// Matrices serialize as nested arrays of scalar strings ("3/7", "12").
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

// Tableaux and tabloids serialize as row lists.
Json tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const Json& j);
Json tabloid_to_json(const Tabloid& t);
Tabloid tabloid_from_json(const Json& j);

// {schema, type: symrep, n, dim, field, labels, gens}.
Json symrep_to_json(const SymRep& rep);
SymRepPtr symrep_from_json(const Json& j);

// {schema, type: character, n, field, values: {cycle type -> value}}.
struct CharacterDoc {
  int n = 0;
  Field field;
  std::map<CycleType, Scalar> values;

  bool operator==(const CharacterDoc&) const = default;
};

Json character_to_json(const CharacterDoc& doc);
CharacterDoc character_from_json(const Json& j);

}  // namespace centstab
