#include "srmk/matrix.hpp"

namespace srmk {

MatrixBase ext_matrix(const MatrixExt& M) {
  const FieldTower& F = M.field();
  const std::size_t m = F.m();
  MatrixBase out(F.base_ptr(), M.rows() * m, M.cols());
  std::vector<FieldTower::base_type> buf(m);
  for (std::size_t i = 0; i < M.rows(); ++i) {
    for (std::size_t j = 0; j < M.cols(); ++j) {
      const auto v = M(i, j);
      if (v == 0) continue;
      F.ext_into(v, buf);
      for (std::size_t r = 0; r < m; ++r) out(i * m + r, j) = buf[r];
    }
  }
  return out;
}

MatrixExt unext_matrix(const MatrixBase& M, const TowerPtr& tower) {
  const std::size_t m = tower->m();
  if (!fields_match(M.field(), tower->base())) throw StructuralError("unext_matrix: base field mismatch");
  if (M.rows() % m != 0) throw StructuralError("unext_matrix: row count is not a multiple of m");
  MatrixExt out(tower, M.rows() / m, M.cols());
  std::vector<FieldTower::base_type> buf(m);
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) {
      for (std::size_t r = 0; r < m; ++r) buf[r] = M(i * m + r, j);
      out(i, j) = tower->unext(buf);
    }
  }
  return out;
}

MatrixExt embed(const MatrixBase& M, const TowerPtr& tower) {
  if (!fields_match(M.field(), tower->base())) throw StructuralError("embed: base field mismatch");
  std::vector<FieldTower::value_type> data(M.data().begin(), M.data().end());
  for (auto& v : data) v = tower->embed(static_cast<FieldTower::base_type>(v));
  return MatrixExt(tower, M.rows(), M.cols(), std::move(data));
}

MatrixExt scale_columns(const MatrixExt& X, std::span<const FieldTower::value_type> d) {
  if (d.size() != X.cols()) throw StructuralError("scale_columns: diagonal length does not match column count");
  const FieldTower& F = X.field();
  MatrixExt r = X;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) = F.mul(r(i, j), d[j]);
  return r;
}

}  // namespace srmk
