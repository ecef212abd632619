#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "refcalc/profinite.hpp"
#include "refcalc/structure.hpp"

namespace refcalc {

using json = nlohmann::json;

/// Scalars serialize as strings ("3", "-1/2"); parsing also accepts JSON integers.
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, const Field& field, const std::string& where);

json vector_to_json(const Vector& v);
json matrix_to_json(const Matrix& m);
/// Throws TypeError on ragged rows or a shape other than rows x cols when given.
Matrix matrix_from_json(const json& j, const Field& field, const std::string& where);

/// One structure-constant block:
///   {"field": "Q"|"Fp:p", "dim": n, "labels": [...],
///    "mult": n x n x n, "unit": n, "comult": n x n x n, "counit": n}
/// Either half may be absent; a block with both halves is a bialgebra.
struct StructureBlock {
  Field field = Field::rationals();
  std::optional<FdAlgebra> algebra;
  std::optional<FdCoalgebra> coalgebra;

  std::size_t dim() const;
  bool is_bialgebra() const { return algebra && coalgebra; }
  FdBialgebra bialgebra() const;  // throws TypeError unless both halves are present
};

/// Throws TypeError with a dimension diagnostic naming the JSON path (e.g. mult[1])
/// when a tensor or vector has the wrong shape.
StructureBlock structure_from_json(const json& j);
json structure_to_json(const FdAlgebra& a);
json structure_to_json(const FdCoalgebra& c);
json structure_to_json(const FdBialgebra& b);

/// {"levels": [block, ...], "transitions": [matrix, ...]}; transitions[n] maps
/// level n+1 onto level n. The tower is validated.
AlgebraTower tower_from_json(const json& j);
json tower_to_json(const AlgebraTower& t);

/// Reads and parses a file; syntax errors become ParseError with line and column.
json read_json_file(const std::string& path);

}  // namespace refcalc
