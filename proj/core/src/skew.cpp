#include "srmk/skew.hpp"

#include <string>

namespace srmk {

SkewIsometry::SkewIsometry(TowerPtr tower, std::vector<FieldTower::value_type> diagonal, LengthPartition partition)
    : tower_(std::move(tower)), diag_(std::move(diagonal)), partition_(std::move(partition)) {
  if (!tower_) throw StructuralError("isometry without a field");
  require_partition(partition_, diag_.size());
  inv_diag_.reserve(diag_.size());
  for (std::size_t j = 0; j < diag_.size(); ++j) {
    if (!tower_->contains(diag_[j])) throw StructuralError("isometry diagonal entry out of range");
    if (diag_[j] == 0) throw StructuralError("isometry diagonal entry " + std::to_string(j) + " is zero");
    inv_diag_.push_back(tower_->inv(diag_[j]));
  }
}

MatrixExt SkewIsometry::apply(const MatrixExt& X) const {
  if (!fields_match(X.field(), *tower_)) throw StructuralError("isometry applied over a different field");
  return scale_columns(X, diag_);
}

MatrixExt SkewIsometry::apply_inverse(const MatrixExt& X) const {
  if (!fields_match(X.field(), *tower_)) throw StructuralError("isometry applied over a different field");
  return scale_columns(X, inv_diag_);
}

MatrixExt SkewIsometry::matrix() const {
  MatrixExt D(tower_, diag_.size(), diag_.size());
  for (std::size_t j = 0; j < diag_.size(); ++j) D(j, j) = diag_[j];
  return D;
}

std::size_t skew_weight(const MatrixExt& X, const SkewIsometry& iso) {
  return sum_rank_weight(iso.apply(X), iso.partition());
}

SkewCode skew_code_from_sumrank(const InterleavedCode& code, const SkewIsometry& iso) {
  if (!(code.constituent.partition() == iso.partition()))
    throw StructuralError("isometry partition differs from the code partition");
  return SkewCode{iso.apply(code.constituent.parity_check()), code.constituent.distance(), code.s};
}

DecodingReport skew_decode(const InterleavedCode& code, const SkewIsometry& iso, const MatrixExt& Y) {
  if (!(code.constituent.partition() == iso.partition()))
    throw StructuralError("isometry partition differs from the code partition");
  auto report = decode(code, iso.apply(Y));
  report.C_hat = iso.apply_inverse(report.C_hat);
  report.E_hat = iso.apply_inverse(report.E_hat);
  const auto H_skew = iso.apply(code.constituent.parity_check());
  report.residual_ok = syndrome(H_skew, report.C_hat).is_zero();
  if (!report.residual_ok)
    throw DecodeFailure(DecodeFailureKind::ResidualCheckFailed, "H_skew C_hat^T != 0");
  return report;
}

}  // namespace srmk
