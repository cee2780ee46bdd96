#include "centstab/json_io.hpp"

#include "centstab/errors.hpp"

namespace centstab {

namespace {

Json rows_to_json(const std::vector<std::vector<int>>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) out.push_back(row);
  return out;
}

std::vector<std::vector<int>> rows_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rows");
  std::vector<std::vector<int>> rows;
  for (const Json& row : j) {
    if (!row.is_array()) throw ParseError("expected an array of entries");
    rows.push_back(row.get<std::vector<int>>());
  }
  return rows;
}

WeakPartition shape_of(const std::vector<std::vector<int>>& rows) {
  std::vector<int> parts;
  for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
  return WeakPartition(parts);
}

void expect(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    entries.push_back(std::move(row));
  }
  Json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["field"] = m.field().spec();
  out["entries"] = std::move(entries);
  return out;
}

Matrix matrix_from_json(const Json& j) {
  expect(j, "rows");
  expect(j, "cols");
  expect(j, "field");
  expect(j, "entries");
  const Field f = Field::parse(j["field"].get<std::string>());
  const int rows = j["rows"].get<int>(), cols = j["cols"].get<int>();
  Matrix m(rows, cols, f);
  const Json& entries = j["entries"];
  if (static_cast<int>(entries.size()) != rows) throw ParseError("bad row count");
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(entries[r].size()) != cols) throw ParseError("bad column count");
    for (int c = 0; c < cols; ++c)
      m.at(r, c) = Scalar::parse(f, entries[r][c].get<std::string>());
  }
  return m;
}

Json tableau_to_json(const Tableau& t) { return rows_to_json(t.rows()); }

Tableau tableau_from_json(const Json& j) {
  auto rows = rows_from_json(j);
  WeakPartition shape = shape_of(rows);
  return Tableau(std::move(shape), std::move(rows));
}

Json tabloid_to_json(const Tabloid& t) { return rows_to_json(t.rows()); }

Tabloid tabloid_from_json(const Json& j) {
  auto rows = rows_from_json(j);
  WeakPartition shape = shape_of(rows);
  return Tabloid(std::move(shape), std::move(rows));
}

Json symrep_to_json(const SymRep& rep) {
  Json gens = Json::array();
  for (const Matrix& g : rep.gens) {
    Json entries = Json::array();
    for (int i = 0; i < g.rows(); ++i) {
      Json row = Json::array();
      for (int j = 0; j < g.cols(); ++j) row.push_back(g.at(i, j).str());
      entries.push_back(std::move(row));
    }
    gens.push_back(std::move(entries));
  }
  Json out;
  out["schema"] = kSchemaTag;
  out["type"] = "symrep";
  out["n"] = rep.n;
  out["dim"] = rep.dim;
  out["field"] = rep.field.spec();
  out["labels"] = rep.labels;
  out["gens"] = std::move(gens);
  return out;
}

SymRepPtr symrep_from_json(const Json& j) {
  for (const char* key : {"schema", "type", "n", "dim", "field", "labels", "gens"})
    expect(j, key);
  if (j["type"].get<std::string>() != "symrep") throw ParseError("not a symrep document");
  SymRep rep;
  rep.n = j["n"].get<int>();
  rep.dim = j["dim"].get<int>();
  rep.field = Field::parse(j["field"].get<std::string>());
  rep.labels = j["labels"].get<std::vector<std::string>>();
  for (const Json& entries : j["gens"]) {
    Matrix g(rep.dim, rep.dim, rep.field);
    if (static_cast<int>(entries.size()) != rep.dim) throw ParseError("bad generator shape");
    for (int r = 0; r < rep.dim; ++r) {
      if (static_cast<int>(entries[r].size()) != rep.dim)
        throw ParseError("bad generator shape");
      for (int c = 0; c < rep.dim; ++c)
        g.at(r, c) = Scalar::parse(rep.field, entries[r][c].get<std::string>());
    }
    rep.gens.push_back(std::move(g));
  }
  return make_symrep(std::move(rep));
}

Json character_to_json(const CharacterDoc& doc) {
  Json values;
  for (const auto& [lambda, value] : doc.values) values[lambda.str()] = value.str();
  Json out;
  out["schema"] = kSchemaTag;
  out["type"] = "character";
  out["n"] = doc.n;
  out["field"] = doc.field.spec();
  out["values"] = std::move(values);
  return out;
}

CharacterDoc character_from_json(const Json& j) {
  for (const char* key : {"schema", "type", "n", "field", "values"}) expect(j, key);
  if (j["type"].get<std::string>() != "character")
    throw ParseError("not a character document");
  CharacterDoc doc;
  doc.n = j["n"].get<int>();
  doc.field = Field::parse(j["field"].get<std::string>());
  for (const auto& [key, value] : j["values"].items())
    doc.values.emplace(Partition::parse(key),
                       Scalar::parse(doc.field, value.get<std::string>()));
  return doc;
}

}  // namespace centstab
