#include "srmk/io.hpp"

#include <fstream>
#include <sstream>

namespace srmk::io {

namespace {

const json& need(const json& j, const char* key, std::string_view what) {
  if (!j.is_object()) throw FormatError(std::string(what) + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string(what) + ": missing key \"" + key + "\"");
  return *it;
}

std::uint64_t need_uint(const json& j, const char* key, std::string_view what) {
  const json& v = need(j, key, what);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    throw FormatError(std::string(what) + ": \"" + key + "\" must be a non-negative integer");
  return v.get<std::uint64_t>();
}

template <class T>
std::vector<T> uint_list(const json& v, std::string_view what) {
  if (!v.is_array()) throw FormatError(std::string(what) + ": expected an array");
  std::vector<T> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.is_number_integer() || x.get<std::int64_t>() < 0)
      throw FormatError(std::string(what) + ": entries must be non-negative integers");
    out.push_back(static_cast<T>(x.get<std::uint64_t>()));
  }
  return out;
}

template <class Field, class Decode>
std::vector<typename Field::value_type> matrix_data(const json& j, std::string_view kind, Decode&& decode,
                                                    std::size_t& rows, std::size_t& cols) {
  rows = need_uint(j, "rows", "matrix");
  cols = need_uint(j, "cols", "matrix");
  const json& field = need(j, "field", "matrix");
  if (!field.is_string() || field.get<std::string>() != kind)
    throw FormatError("matrix: expected \"field\": \"" + std::string(kind) + "\"");
  const json& data = need(j, "data", "matrix");
  if (!data.is_array() || data.size() != rows) throw FormatError("matrix: \"data\" must hold exactly rows arrays");
  std::vector<typename Field::value_type> out;
  out.reserve(rows * cols);
  for (const auto& row : data) {
    auto values = uint_list<std::uint64_t>(row, "matrix row");
    if (values.size() != cols) throw FormatError("matrix: row length differs from cols");
    for (auto v : values) out.push_back(decode(v));
  }
  return out;
}

}  // namespace

json to_json(const FieldTower& field) {
  const auto& p = field.params();
  json j{{"p", p.p}, {"e", p.e}, {"m", p.m}, {"ext_modulus", p.ext_modulus}};
  if (p.e > 1) j["base_modulus"] = p.base_modulus;
  if (!field.has_polynomial_basis()) j["basis"] = field.basis();
  return j;
}

TowerPtr field_from_json(const json& j) {
  FieldTower::Params params;
  params.p = static_cast<std::uint32_t>(need_uint(j, "p", "field"));
  params.e = j.contains("e") ? static_cast<std::uint32_t>(need_uint(j, "e", "field")) : 1;
  params.m = static_cast<std::uint32_t>(need_uint(j, "m", "field"));
  params.ext_modulus = uint_list<BaseField::value_type>(need(j, "ext_modulus", "field"), "field.ext_modulus");
  if (j.contains("base_modulus"))
    params.base_modulus = uint_list<BaseField::value_type>(j["base_modulus"], "field.base_modulus");
  if (j.contains("basis")) params.basis = uint_list<FieldTower::value_type>(j["basis"], "field.basis");
  try {
    return FieldTower::create(std::move(params));
  } catch (const InvalidField& e) {
    throw FormatError(std::string("field: ") + e.what());
  }
}

json to_json(const MatrixExt& M) {
  json data = json::array();
  for (std::size_t i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < M.cols(); ++j) row.push_back(M.field().to_wire(M(i, j)));
    data.push_back(std::move(row));
  }
  return {{"rows", M.rows()}, {"cols", M.cols()}, {"field", "ext"}, {"data", std::move(data)}};
}

json to_json(const MatrixBase& M) {
  json data = json::array();
  for (std::size_t i = 0; i < M.rows(); ++i) data.push_back(std::vector<std::uint64_t>(M.row(i).begin(), M.row(i).end()));
  return {{"rows", M.rows()}, {"cols", M.cols()}, {"field", "base"}, {"data", std::move(data)}};
}

MatrixExt ext_matrix_from_json(const json& j, const TowerPtr& tower) {
  std::size_t rows = 0, cols = 0;
  auto data = matrix_data<FieldTower>(
      j, "ext",
      [&](std::uint64_t v) {
        if (v >= tower->order()) throw FormatError("matrix: element " + std::to_string(v) + " outside " + tower->describe());
        return tower->from_wire(v);
      },
      rows, cols);
  return MatrixExt(tower, rows, cols, std::move(data));
}

MatrixBase base_matrix_from_json(const json& j, const TowerPtr& tower) {
  std::size_t rows = 0, cols = 0;
  auto data = matrix_data<BaseField>(
      j, "base",
      [&](std::uint64_t v) {
        if (v >= tower->q()) throw FormatError("matrix: element " + std::to_string(v) + " outside F_q");
        return static_cast<BaseField::value_type>(v);
      },
      rows, cols);
  return MatrixBase(tower->base_ptr(), rows, cols, std::move(data));
}

json to_json(const LengthPartition& partition) { return {{"parts", partition.parts()}}; }

LengthPartition partition_from_json(const json& j) {
  auto parts = uint_list<std::size_t>(need(j, "parts", "partition"), "partition.parts");
  if (parts.empty()) throw FormatError("partition: \"parts\" must not be empty");
  try {
    return LengthPartition(std::move(parts));
  } catch (const StructuralError& e) {
    throw FormatError(std::string("partition: ") + e.what());
  }
}

json to_json(const LinearCode& code) {
  json j{{"field", to_json(*code.tower())},
         {"partition", to_json(code.partition())},
         {"k", code.dimension()},
         {"H", to_json(code.parity_check())}};
  if (code.has_explicit_generator()) j["G"] = to_json(code.generator());
  if (code.distance()) j["d"] = *code.distance();
  return j;
}

LinearCode code_from_json(const json& j) {
  auto tower = field_from_json(need(j, "field", "code"));
  auto partition = partition_from_json(need(j, "partition", "code"));
  auto H = ext_matrix_from_json(need(j, "H", "code"), tower);
  const auto k = need_uint(j, "k", "code");
  if (H.cols() != partition.length() || H.rows() + k != H.cols())
    throw FormatError("code: H is " + H.shape() + ", inconsistent with n = " + std::to_string(partition.length()) +
                      " and k = " + std::to_string(k));
  std::optional<MatrixExt> G;
  if (j.contains("G") && !j["G"].is_null()) G = ext_matrix_from_json(j["G"], tower);
  std::optional<std::size_t> d;
  if (j.contains("d") && !j["d"].is_null()) d = need_uint(j, "d", "code");
  try {
    return LinearCode(tower, std::move(partition), std::move(H), std::move(G), d);
  } catch (const StructuralError& e) {
    throw FormatError(std::string("code: ") + e.what());
  }
}

json to_json(const ErrorModel& model) {
  return {{"E", to_json(model.E)},       {"A", to_json(model.A)},         {"B", to_json(model.B)},
          {"profile", model.profile},    {"t", model.t},                  {"full_rank", model.full_rank},
          {"seed", model.seed}};
}

json to_json(const SkewIsometry& iso) {
  json diag = json::array();
  for (auto v : iso.diagonal()) diag.push_back(iso.tower()->to_wire(v));
  return {{"D_diag", std::move(diag)}};
}

SkewIsometry isometry_from_json(const json& j, const TowerPtr& tower, const LengthPartition& partition) {
  auto raw = uint_list<std::uint64_t>(need(j, "D_diag", "isometry"), "isometry.D_diag");
  std::vector<FieldTower::value_type> diag;
  diag.reserve(raw.size());
  for (auto v : raw) {
    if (v >= tower->order()) throw FormatError("isometry: entry outside the field");
    diag.push_back(tower->from_wire(v));
  }
  try {
    return SkewIsometry(tower, std::move(diag), partition);
  } catch (const StructuralError& e) {
    throw FormatError(std::string("isometry: ") + e.what());
  }
}

json to_json(const DecodingReport& report) {
  return {{"status", "success"},
          {"C_hat", to_json(report.C_hat)},
          {"E_hat", to_json(report.E_hat)},
          {"A_hat", to_json(report.A_hat)},
          {"B_hat", to_json(report.B_hat)},
          {"t_hat", report.t_hat},
          {"per_block_t", report.block_t},
          {"residual_ok", report.residual_ok},
          {"weight_ok", report.weight_ok}};
}

json to_json(const DecodeFailure& failure) {
  return {{"status", "failure"}, {"failure", std::string(to_string(failure.kind()))}, {"detail", failure.what()}};
}

json parse(std::string_view text, std::string_view source) {
  try {
    return json::parse(text.begin(), text.end());
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
    throw FormatError(std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(col) +
                      ": malformed JSON");
  }
}

json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.string());
}

void write_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace srmk::io
