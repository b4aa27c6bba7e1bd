#pragma once

// JSON encodings shared by the CLI and any external consumer.
//
// Field:      {"p":5,"e":1,"m":2,"ext_modulus":[2,4,1]}  (+ "base_modulus" when e > 1,
//             + "basis" as polynomial-basis codes when not the polynomial basis)
// Matrix:     {"rows":r,"cols":c,"field":"ext"|"base","data":[[...],...]}
// Partition:  {"parts":[2,2,2]}
// Code:       {"field":F,"partition":P,"k":2,"H":M,"G":M?,"d":5?}
// Isometry:   {"D_diag":[...]}
//
// Scalars are integers sum_j c_j q^j over their coordinates c_j in the field basis;
// polynomial coefficients are little-endian.

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "srmk/code.hpp"
#include "srmk/decoder.hpp"
#include "srmk/errors.hpp"
#include "srmk/skew.hpp"
#include "srmk/sumrank.hpp"

namespace srmk::io {

using nlohmann::json;

json to_json(const FieldTower& field);
TowerPtr field_from_json(const json& j);

json to_json(const MatrixExt& M);
json to_json(const MatrixBase& M);
MatrixExt ext_matrix_from_json(const json& j, const TowerPtr& tower);
MatrixBase base_matrix_from_json(const json& j, const TowerPtr& tower);

json to_json(const LengthPartition& partition);
LengthPartition partition_from_json(const json& j);

json to_json(const LinearCode& code);
LinearCode code_from_json(const json& j);

json to_json(const ErrorModel& model);

json to_json(const SkewIsometry& iso);
SkewIsometry isometry_from_json(const json& j, const TowerPtr& tower, const LengthPartition& partition);

json to_json(const DecodingReport& report);
json to_json(const DecodeFailure& failure);

/// Parses JSON text; syntax errors become FormatError naming line and column.
json parse(std::string_view text, std::string_view source = "<input>");
json read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const json& j);

}  // namespace srmk::io
