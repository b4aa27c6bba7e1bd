#pragma once

// Metzner-Kapturowski style decoding of high-order interleaved sum-rank-metric codes.
//
// Given H and Y = C + E the decoder
//   1. computes S = H Y^T and an invertible P with P S in reduced echelon form,
//   2. takes H_sub = rows of P H that meet the zero rows of P S,
//   3. recovers each block support as the F_q right kernel of ext(H_sub^(i)),
//   4. solves (H B^T) A^T = S for A (column-erasure decoding) and returns Y - A B.
//
// Success is guaranteed when wt(E) = t <= d - 2 and rk_{q^m}(E) = t (which forces
// s >= t). The error weight is never an input: t is inferred as rk_{q^m}(S) and
// each t_i as the dimension of the recovered block support. Every returned
// report has passed H C^T = 0 and wt(E_hat) = t; anything else is a DecodeFailure.

#include <cstddef>
#include <vector>

#include "srmk/code.hpp"
#include "srmk/errors.hpp"
#include "srmk/matrix.hpp"
#include "srmk/sumrank.hpp"

namespace srmk {

struct SupportRecovery {
  MatrixExt h_sub;                       ///< (n-k-t) x n
  std::size_t t_hat = 0;                 ///< rk_{q^m}(S)
  std::vector<MatrixBase> block_kernels; ///< canonical F_q basis of each recovered block support
  std::vector<std::size_t> block_t;      ///< row count of each kernel basis
};

struct DecodingReport {
  MatrixExt C_hat;
  MatrixExt E_hat;
  MatrixExt A_hat;
  MatrixBase B_hat;
  std::size_t t_hat = 0;
  std::vector<std::size_t> block_t;
  bool residual_ok = false;  ///< H C_hat^T = 0
  bool weight_ok = false;    ///< wt(E_hat) = t_hat
};

/// Steps 1-2 given the syndrome. Throws DecodeFailure(SupportSpaceEmpty) when rk(S) = n - k.
SupportRecovery compute_hsub(const MatrixExt& H, const MatrixExt& S);

/// Step 3: fills block_kernels / block_t. Throws DecodeFailure(SupportMismatch)
/// when the block dimensions do not add up to t_hat.
void recover_block_supports(SupportRecovery& recovery, const LengthPartition& partition);

/// Column-erasure decoding: the unique A with (H B^T) A^T = S. Throws
/// NonUniqueSolution or InconsistentSystem.
MatrixExt erasure_decode(const MatrixExt& H, const MatrixBase& B, const MatrixExt& S);

/// Full pipeline. Throws StructuralError on shape mismatch and DecodeFailure
/// when a stage rejects the input.
DecodingReport decode(const InterleavedCode& code, const MatrixExt& Y);

/// Same, from a bare parity-check matrix and partition.
DecodingReport decode(const MatrixExt& H, const LengthPartition& partition, const MatrixExt& Y);

}  // namespace srmk
