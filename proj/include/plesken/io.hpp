#pragma once

#include <plesken/algebra.hpp>
#include <plesken/builders.hpp>
#include <plesken/cellular.hpp>

#include <json.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace plesken {

using Json = nlohmann::ordered_json;

inline constexpr const char* format_version = "1";
inline constexpr const char* document_extension = ".plesken.json";

/// Serialized algebra with involution, optional cell datum and free-form metadata.
struct AlgebraDocument {
  Algebra algebra;
  AntiInvolution involution;
  std::optional<CellDatum> cell;
  Json metadata = Json::object();

  friend bool operator==(const AlgebraDocument&, const AlgebraDocument&) = default;
};

namespace detail {

[[noreturn]] inline void bad_document(const std::string& what) {
  throw std::invalid_argument("invalid document: " + what);
}

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad_document(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::size_t index_field(const Json& j, std::size_t bound, const std::string& what) {
  if (!j.is_number_unsigned()) bad_document(what + " must be a non-negative integer");
  auto k = j.get<std::size_t>();
  if (k >= bound) bad_document(what + " " + std::to_string(k) + " out of range");
  return k;
}

inline Scalar scalar_entry(const Json& j, const std::string& what) {
  if (!j.is_string()) bad_document(what + " must be a scalar string");
  try {
    return Scalar::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    bad_document(what + ": " + e.what());
  }
}

inline std::vector<std::string> string_list(const Json& j, const std::string& what) {
  if (!j.is_array()) bad_document(what + " must be an array");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) bad_document(what + " entries must be strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

/// Signed-permutation shorthand applies when every column has a single
/// nonzero entry equal to +1 or -1.
inline bool is_signed_permutation(const Matrix& m) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::size_t nonzero = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const auto& x = m(r, c);
      if (x.is_zero()) continue;
      if (!x.is_one() && !(-x).is_one()) return false;
      ++nonzero;
    }
    if (nonzero != 1) return false;
  }
  return true;
}

inline std::size_t label_index(const std::vector<std::string>& labels, const Json& j, const std::string& what) {
  if (!j.is_string()) bad_document(what + " must be a label string");
  auto it = std::find(labels.begin(), labels.end(), j.get<std::string>());
  if (it == labels.end()) bad_document(what + " '" + j.get<std::string>() + "' is not declared");
  return static_cast<std::size_t>(it - labels.begin());
}

}  // namespace detail

inline Json cell_to_json(const CellDatum& cd, std::size_t dim) {
  Json j;
  j["lambdas"] = cd.lambdas;
  Json order = Json::array();
  for (const auto& [mu, l] : cd.order) order.push_back({cd.lambdas[mu], cd.lambdas[l]});
  j["order"] = order;
  Json sets = Json::object();
  for (std::size_t l = 0; l < cd.cells(); ++l) sets[cd.lambdas[l]] = cd.index_sets[l];
  j["index_sets"] = sets;
  std::vector<Json> triples(dim);
  for (std::size_t l = 0; l < cd.cells(); ++l)
    for (std::size_t s = 0; s < cd.size(l); ++s)
      for (std::size_t t = 0; t < cd.size(l); ++t)
        triples.at(cd.basis_index(l, s, t)) = Json::array({cd.lambdas[l], cd.index_sets[l][s], cd.index_sets[l][t]});
  j["basis"] = triples;
  return j;
}

/// Reads a cell section; basis triples must cover every basis index once.
inline CellDatum cell_from_json(const Json& j, std::size_t dim) {
  CellDatum cd;
  cd.lambdas = detail::string_list(detail::field(j, "lambdas"), "cell.lambdas");
  detail::check_labels(cd.lambdas);
  for (const auto& pair : detail::field(j, "order")) {
    if (!pair.is_array() || pair.size() != 2) detail::bad_document("cell.order entries must be [mu, lambda] pairs");
    cd.order.emplace_back(detail::label_index(cd.lambdas, pair[0], "cell.order lambda"),
                          detail::label_index(cd.lambdas, pair[1], "cell.order lambda"));
  }
  const Json& sets = detail::field(j, "index_sets");
  for (const auto& l : cd.lambdas) {
    if (!sets.contains(l)) detail::bad_document("cell.index_sets has no entry for lambda '" + l + "'");
    cd.index_sets.push_back(detail::string_list(sets.at(l), "cell.index_sets"));
    detail::check_labels(cd.index_sets.back());
    cd.basis.emplace_back(cd.index_sets.back().size() * cd.index_sets.back().size(), SIZE_MAX);
  }
  const Json& triples = detail::field(j, "basis");
  if (!triples.is_array() || triples.size() != dim) detail::bad_document("cell.basis must list one triple per basis element");
  for (std::size_t k = 0; k < dim; ++k) {
    const Json& t = triples[k];
    if (!t.is_array() || t.size() != 3) detail::bad_document("cell.basis entries must be [lambda, s, t] triples");
    std::size_t l = detail::label_index(cd.lambdas, t[0], "cell.basis lambda");
    std::size_t s = detail::label_index(cd.index_sets[l], t[1], "cell.basis index");
    std::size_t u = detail::label_index(cd.index_sets[l], t[2], "cell.basis index");
    auto& slot = cd.basis[l][s * cd.size(l) + u];
    if (slot != SIZE_MAX) detail::bad_document("cell.basis triple assigned twice");
    slot = k;
  }
  for (const auto& cells : cd.basis)
    for (auto k : cells)
      if (k == SIZE_MAX) detail::bad_document("cell.basis leaves a triple unassigned");
  return cd;
}

inline Json to_json(const AlgebraDocument& doc) {
  const Algebra& a = doc.algebra;
  const std::size_t n = a.dim();
  Json j;
  j["format_version"] = format_version;
  j["name"] = a.name();
  j["basis"] = a.labels();
  Json structure = Json::array();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (const auto& t : a.product(x, y)) structure.push_back({x, y, t.index, t.coeff.str()});
  j["structure"] = structure;
  Json unit = Json::array();
  for (const auto& c : a.unit()) unit.push_back(c.str());
  j["unit"] = unit;

  Json inv;
  const Matrix& m = doc.involution.matrix;
  if (detail::is_signed_permutation(m)) {
    inv["kind"] = "signed-permutation";
    inv["semilinear"] = doc.involution.semilinear;
    Json images = Json::array();
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r = 0; r < n; ++r)
        if (!m(r, c).is_zero()) images.push_back({r, m(r, c).str()});
    inv["images"] = images;
  } else {
    inv["kind"] = "matrix";
    inv["semilinear"] = doc.involution.semilinear;
    Json rows = Json::array();
    for (std::size_t r = 0; r < n; ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < n; ++c) row.push_back(m(r, c).str());
      rows.push_back(row);
    }
    inv["matrix"] = rows;
  }
  j["involution"] = inv;
  if (doc.cell) j["cell"] = cell_to_json(*doc.cell, n);
  j["metadata"] = doc.metadata;
  return j;
}

/// Parses and range-checks a document. Algebraic validation (associativity,
/// involution axioms) is left to the caller.
inline AlgebraDocument from_json(const Json& j) {
  if (!j.is_object()) detail::bad_document("top level must be an object");
  const Json& version = detail::field(j, "format_version");
  if (!version.is_string() || version.get<std::string>() != format_version)
    detail::bad_document("unsupported format_version");
  const Json& name = detail::field(j, "name");
  if (!name.is_string()) detail::bad_document("name must be a string");
  auto labels = detail::string_list(detail::field(j, "basis"), "basis");
  const std::size_t n = labels.size();

  StructureTable table(n);
  const Json& structure = detail::field(j, "structure");
  if (!structure.is_array()) detail::bad_document("structure must be an array");
  for (const auto& q : structure) {
    if (!q.is_array() || q.size() != 4) detail::bad_document("structure entries must be [i, j, k, coeff]");
    table.add(detail::index_field(q[0], n, "structure index"), detail::index_field(q[1], n, "structure index"),
              detail::index_field(q[2], n, "structure index"), detail::scalar_entry(q[3], "structure coefficient"));
  }

  const Json& unit_json = detail::field(j, "unit");
  if (!unit_json.is_array() || unit_json.size() != n) detail::bad_document("unit must have one entry per basis element");
  Vector unit;
  for (const auto& c : unit_json) unit.push_back(detail::scalar_entry(c, "unit coefficient"));

  const Json& inv = detail::field(j, "involution");
  const Json& kind = detail::field(inv, "kind");
  const Json& semilinear = detail::field(inv, "semilinear");
  if (!semilinear.is_boolean()) detail::bad_document("involution.semilinear must be a boolean");
  AntiInvolution sigma{Matrix(n, n), semilinear.get<bool>()};
  if (kind == "signed-permutation") {
    const Json& images = detail::field(inv, "images");
    if (!images.is_array() || images.size() != n) detail::bad_document("involution.images must have one entry per basis element");
    for (std::size_t c = 0; c < n; ++c) {
      const Json& im = images[c];
      if (!im.is_array() || im.size() != 2) detail::bad_document("involution.images entries must be [index, sign]");
      Scalar s = detail::scalar_entry(im[1], "involution sign");
      if (!s.is_one() && !(-s).is_one()) detail::bad_document("involution sign must be 1 or -1");
      sigma.matrix(detail::index_field(im[0], n, "involution image"), c) = s;
    }
  } else if (kind == "matrix") {
    const Json& rows = detail::field(inv, "matrix");
    if (!rows.is_array() || rows.size() != n) detail::bad_document("involution.matrix must be dim x dim");
    for (std::size_t r = 0; r < n; ++r) {
      if (!rows[r].is_array() || rows[r].size() != n) detail::bad_document("involution.matrix must be dim x dim");
      for (std::size_t c = 0; c < n; ++c) sigma.matrix(r, c) = detail::scalar_entry(rows[r][c], "involution entry");
    }
  } else {
    detail::bad_document("involution.kind must be 'signed-permutation' or 'matrix'");
  }

  AlgebraDocument doc{Algebra(name.get<std::string>(), std::move(labels), std::move(table), std::move(unit)),
                      std::move(sigma), std::nullopt, Json::object()};
  if (j.contains("cell")) doc.cell = cell_from_json(j.at("cell"), n);
  if (j.contains("metadata")) {
    if (!j.at("metadata").is_object()) detail::bad_document("metadata must be an object");
    doc.metadata = j.at("metadata");
  }
  return doc;
}

inline std::string emit(const AlgebraDocument& doc) { return to_json(doc).dump(2) + "\n"; }

inline AlgebraDocument parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    detail::bad_document(std::string("malformed JSON: ") + e.what());
  }
  return from_json(j);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline AlgebraDocument load_document(const std::string& path) { return parse_document(read_file(path)); }

/// Cayley table file: {"name": ..., "elements": [labels], "table": [[labels]]}
/// where table[a][b] is the label of a*b.
inline GroupTable parse_group_table(const std::string& text, std::string* name = nullptr) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("group table: malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("elements") || !j.contains("table"))
    throw std::invalid_argument("group table: needs 'elements' and 'table'");
  auto labels = detail::string_list(j.at("elements"), "group elements");
  detail::check_labels(labels);
  const Json& rows = j.at("table");
  if (!rows.is_array() || rows.size() != labels.size())
    throw std::invalid_argument("group table: table has wrong number of rows");
  std::vector<std::vector<std::size_t>> table;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != labels.size())
      throw std::invalid_argument("group table: table row has wrong length");
    std::vector<std::size_t> r;
    for (const auto& x : row) {
      if (!x.is_string()) throw std::invalid_argument("group table: entries must be element labels");
      auto it = std::find(labels.begin(), labels.end(), x.get<std::string>());
      if (it == labels.end())
        throw std::invalid_argument("group table: closure fails, '" + x.get<std::string>() + "' is not an element");
      r.push_back(static_cast<std::size_t>(it - labels.begin()));
    }
    table.push_back(std::move(r));
  }
  if (name) *name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "group";
  return GroupTable(std::move(labels), std::move(table));
}

inline AlgebraWithInvolution load_group_algebra(const std::string& path) {
  std::string name;
  GroupTable g = parse_group_table(read_file(path), &name);
  return group_algebra(g, "group " + name);
}

}  // namespace plesken
