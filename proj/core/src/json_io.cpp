#include "refcalc/json_io.hpp"

#include <fstream>
#include <sstream>

#include "refcalc/errors.hpp"

namespace refcalc {

json scalar_to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const json& j, const Field& field, const std::string& where) {
  try {
    if (j.is_string()) return field.parse_scalar(j.get<std::string>());
    if (j.is_number_integer()) return field.from_int(j.get<std::int64_t>());
  } catch (const Error& e) {
    throw TypeError(where + ": " + e.what());
  }
  throw TypeError(where + ": expected an integer or an \"a/b\" string, got " + j.dump());
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(scalar_to_json(s));
  return out;
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

namespace {

std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

const json& require_array(const json& j, std::size_t size, const std::string& where) {
  if (!j.is_array()) throw TypeError(where + ": expected an array");
  if (j.size() != size)
    throw TypeError(where + " has " + std::to_string(j.size()) + " entries, expected dim = " + std::to_string(size));
  return j;
}

Vector vector_from_json(const json& j, const Field& field, std::size_t n, const std::string& where) {
  require_array(j, n, where);
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(scalar_from_json(j[i], field, at(where, i)));
  return v;
}

Tensor3 tensor_from_json(const json& j, const Field& field, std::size_t n, const std::string& where) {
  Tensor3 t(field, n);
  require_array(j, n, where);
  for (std::size_t a = 0; a < n; ++a) {
    require_array(j[a], n, at(where, a));
    for (std::size_t b = 0; b < n; ++b) {
      const std::string w = at(at(where, a), b);
      require_array(j[a][b], n, w);
      for (std::size_t c = 0; c < n; ++c) t(a, b, c) = scalar_from_json(j[a][b][c], field, at(w, c));
    }
  }
  return t;
}

json tensor_to_json(const Tensor3& t) {
  json out = json::array();
  const std::size_t n = t.extent();
  for (std::size_t a = 0; a < n; ++a) {
    json plane = json::array();
    for (std::size_t b = 0; b < n; ++b) {
      json row = json::array();
      for (std::size_t c = 0; c < n; ++c) row.push_back(scalar_to_json(t(a, b, c)));
      plane.push_back(std::move(row));
    }
    out.push_back(std::move(plane));
  }
  return out;
}

json header(const Field& k, const std::vector<std::string>& labels) {
  return json{{"field", k.name()}, {"dim", labels.size()}, {"labels", labels}};
}

}  // namespace

Matrix matrix_from_json(const json& j, const Field& field, const std::string& where) {
  if (!j.is_array() || j.empty()) throw TypeError(where + ": expected a non-empty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw TypeError(at(where, r) + " has " + std::to_string(j[r].is_array() ? j[r].size() : 0) +
                      " entries, expected " + std::to_string(cols));
    rows.push_back(vector_from_json(j[r], field, cols, at(where, r)));
  }
  return Matrix::from_rows(field, rows);
}

std::size_t StructureBlock::dim() const { return algebra ? algebra->dim() : coalgebra ? coalgebra->dim() : 0; }

FdBialgebra StructureBlock::bialgebra() const {
  if (!is_bialgebra()) throw TypeError("structure block lacks " + std::string(algebra ? "comult/counit" : "mult/unit"));
  return FdBialgebra{*algebra, *coalgebra};
}

StructureBlock structure_from_json(const json& j) {
  if (!j.is_object()) throw TypeError("structure block must be a JSON object");
  StructureBlock out;
  try {
    out.field = Field::parse(j.value("field", std::string("Q")));
  } catch (const Error& e) {
    throw TypeError(std::string("field: ") + e.what());
  }
  if (!j.contains("dim") || !j["dim"].is_number_unsigned()) throw TypeError("dim: expected a non-negative integer");
  const std::size_t n = j["dim"].get<std::size_t>();
  if (n == 0) throw TypeError("dim must be at least 1");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    require_array(j["labels"], n, "labels");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw TypeError("labels: expected strings");
      labels.push_back(l.get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  }
  const bool has_mult = j.contains("mult") || j.contains("unit");
  const bool has_comult = j.contains("comult") || j.contains("counit");
  if (!has_mult && !has_comult) throw TypeError("structure block needs mult/unit or comult/counit");
  if (has_mult) {
    if (!j.contains("mult") || !j.contains("unit")) throw TypeError("mult and unit must be given together");
    out.algebra = FdAlgebra{out.field, labels, tensor_from_json(j["mult"], out.field, n, "mult"),
                            vector_from_json(j["unit"], out.field, n, "unit")};
  }
  if (has_comult) {
    if (!j.contains("comult") || !j.contains("counit")) throw TypeError("comult and counit must be given together");
    out.coalgebra = FdCoalgebra{out.field, labels, tensor_from_json(j["comult"], out.field, n, "comult"),
                                vector_from_json(j["counit"], out.field, n, "counit")};
  }
  return out;
}

json structure_to_json(const FdAlgebra& a) {
  json j = header(a.field, a.labels);
  j["mult"] = tensor_to_json(a.mult);
  j["unit"] = vector_to_json(a.unit);
  return j;
}

json structure_to_json(const FdCoalgebra& c) {
  json j = header(c.field, c.labels);
  j["comult"] = tensor_to_json(c.comult);
  j["counit"] = vector_to_json(c.counit);
  return j;
}

json structure_to_json(const FdBialgebra& b) {
  json j = structure_to_json(b.algebra);
  j["comult"] = tensor_to_json(b.coalgebra.comult);
  j["counit"] = vector_to_json(b.coalgebra.counit);
  return j;
}

AlgebraTower tower_from_json(const json& j) {
  if (!j.is_object() || !j.contains("levels") || !j["levels"].is_array())
    throw TypeError("tower: expected {\"levels\": [...], \"transitions\": [...]}");
  AlgebraTower t;
  for (std::size_t n = 0; n < j["levels"].size(); ++n) {
    StructureBlock b;
    try {
      b = structure_from_json(j["levels"][n]);
    } catch (const TypeError& e) {
      throw TypeError(at("levels", n) + ": " + e.what());
    }
    if (!b.algebra) throw TypeError(at("levels", n) + ": a tower level needs mult and unit");
    t.levels.push_back(*b.algebra);
  }
  if (t.levels.empty()) throw TypeError("tower: levels must not be empty");
  const json transitions = j.value("transitions", json::array());
  if (!transitions.is_array() || transitions.size() + 1 != t.levels.size())
    throw TypeError("tower: " + std::to_string(t.levels.size()) + " levels need " +
                    std::to_string(t.levels.size() - 1) + " transitions");
  for (std::size_t n = 0; n < transitions.size(); ++n)
    t.transitions.push_back(matrix_from_json(transitions[n], t.levels[n].field, at("transitions", n)));
  t.validate();
  return t;
}

json tower_to_json(const AlgebraTower& t) {
  json levels = json::array(), transitions = json::array();
  for (const auto& a : t.levels) levels.push_back(structure_to_json(a));
  for (const auto& m : t.transitions) transitions.push_back(matrix_to_json(m));
  return json{{"levels", levels}, {"transitions", transitions}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(path + ": invalid JSON", line, col);
  }
}

}  // namespace refcalc
