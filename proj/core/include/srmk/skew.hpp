#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "srmk/code.hpp"
#include "srmk/decoder.hpp"
#include "srmk/matrix.hpp"
#include "srmk/sumrank.hpp"

namespace srmk {

/// Invertible diagonal D with wt_SR(X D) = wt_skew(X).
///
/// D is taken as given; whether it realizes the skew/sum-rank isometry for the
/// chosen length is the caller's responsibility. Only invertibility is checked.
class SkewIsometry {
 public:
  SkewIsometry(TowerPtr tower, std::vector<FieldTower::value_type> diagonal, LengthPartition partition);

  const TowerPtr& tower() const noexcept { return tower_; }
  const std::vector<FieldTower::value_type>& diagonal() const noexcept { return diag_; }
  const std::vector<FieldTower::value_type>& inverse_diagonal() const noexcept { return inv_diag_; }
  const LengthPartition& partition() const noexcept { return partition_; }

  /// X D
  MatrixExt apply(const MatrixExt& X) const;
  /// X D^{-1}
  MatrixExt apply_inverse(const MatrixExt& X) const;
  /// D as a dense n x n matrix.
  MatrixExt matrix() const;

 private:
  TowerPtr tower_;
  std::vector<FieldTower::value_type> diag_;
  std::vector<FieldTower::value_type> inv_diag_;
  LengthPartition partition_;
};

/// wt_skew(X), evaluated through the isometry as wt_SR(X D).
std::size_t skew_weight(const MatrixExt& X, const SkewIsometry& iso);

/// The interleaved skew-metric code {C D^{-1}}: parity check H D, same distance.
struct SkewCode {
  MatrixExt parity_check;
  std::optional<std::size_t> distance;
  std::size_t s = 1;
};

SkewCode skew_code_from_sumrank(const InterleavedCode& code, const SkewIsometry& iso);

/// Decodes Y = C + E on the skew side: decode(Y D), then map back with D^{-1}.
/// C_hat and E_hat are skew-side; A_hat and B_hat describe the sum-rank-side error E D.
DecodingReport skew_decode(const InterleavedCode& code, const SkewIsometry& iso, const MatrixExt& Y);

}  // namespace srmk
