#include "srmk/decoder.hpp"

#include <numeric>
#include <string>

#include "srmk/linalg.hpp"

namespace srmk {

SupportRecovery compute_hsub(const MatrixExt& H, const MatrixExt& S) {
  if (S.rows() != H.rows())
    throw StructuralError("syndrome has " + std::to_string(S.rows()) + " rows, H has " + std::to_string(H.rows()));
  const std::size_t r = H.rows();
  auto ref = ref_with_transform(S);
  if (ref.rank >= r)
    throw DecodeFailure(DecodeFailureKind::SupportSpaceEmpty,
                        "rk(S) = " + std::to_string(ref.rank) + " leaves no zero syndrome rows (n - k = " +
                            std::to_string(r) + ")");
  SupportRecovery out;
  out.t_hat = ref.rank;
  // Only the rows of P H aligned with zero rows of P S are needed.
  out.h_sub = ref.transform.row_range(ref.rank, r - ref.rank) * H;
  return out;
}

void recover_block_supports(SupportRecovery& recovery, const LengthPartition& partition) {
  require_partition(partition, recovery.h_sub.cols());
  recovery.block_kernels.clear();
  recovery.block_t.clear();
  std::size_t total = 0;
  for (std::size_t i = 0; i < partition.blocks(); ++i) {
    auto kernel = right_kernel(ext_matrix(block(recovery.h_sub, partition, i)));
    total += kernel.rows();
    recovery.block_t.push_back(kernel.rows());
    recovery.block_kernels.push_back(std::move(kernel));
  }
  if (total != recovery.t_hat)
    throw DecodeFailure(DecodeFailureKind::SupportMismatch, "block supports have total dimension " +
                                                                std::to_string(total) + " but rk(S) = " +
                                                                std::to_string(recovery.t_hat));
}

MatrixExt erasure_decode(const MatrixExt& H, const MatrixBase& B, const MatrixExt& S) {
  if (B.cols() != H.cols()) throw StructuralError("erasure_decode: support basis has wrong length");
  const auto HBt = H * embed(B, H.field_ptr_ref()).transpose();
  return solve_unique(HBt, S).transpose();
}

DecodingReport decode(const MatrixExt& H, const LengthPartition& partition, const MatrixExt& Y) {
  H.require_same_field(Y);
  require_partition(partition, Y.cols());
  const auto S = syndrome(H, Y);

  auto recovery = compute_hsub(H, S);
  recover_block_supports(recovery, partition);

  const auto& tower = H.field_ptr_ref();
  auto B = block_diag<BaseField>(recovery.block_kernels, tower->base_ptr());
  MatrixExt A;
  try {
    A = erasure_decode(H, B, S);
  } catch (const NonUniqueSolution& e) {
    throw DecodeFailure(DecodeFailureKind::NonUniqueSolution, e.what());
  } catch (const InconsistentSystem& e) {
    throw DecodeFailure(DecodeFailureKind::Inconsistent, e.what());
  }

  DecodingReport report;
  report.E_hat = A * embed(B, tower);
  report.C_hat = Y - report.E_hat;
  report.A_hat = std::move(A);
  report.B_hat = std::move(B);
  report.t_hat = recovery.t_hat;
  report.block_t = recovery.block_t;
  report.residual_ok = syndrome(H, report.C_hat).is_zero();
  report.weight_ok = sum_rank_weight(report.E_hat, partition) == report.t_hat;
  if (!report.residual_ok)
    throw DecodeFailure(DecodeFailureKind::ResidualCheckFailed, "H C_hat^T != 0");
  if (!report.weight_ok)
    throw DecodeFailure(DecodeFailureKind::ResidualCheckFailed,
                        "recovered error has sum-rank weight " +
                            std::to_string(sum_rank_weight(report.E_hat, partition)) + " != " +
                            std::to_string(report.t_hat));
  return report;
}

DecodingReport decode(const InterleavedCode& code, const MatrixExt& Y) {
  if (Y.rows() != code.s)
    throw StructuralError("received matrix has " + std::to_string(Y.rows()) + " rows, interleaving order is " +
                          std::to_string(code.s));
  return decode(code.constituent.parity_check(), code.constituent.partition(), Y);
}

}  // namespace srmk
