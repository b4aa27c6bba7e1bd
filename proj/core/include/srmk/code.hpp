#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "srmk/gf.hpp"
#include "srmk/matrix.hpp"
#include "srmk/sumrank.hpp"

namespace srmk {

/// F_{q^m}-linear sum-rank-metric code given by a full-rank parity-check matrix.
///
/// A generator matrix is derived from H when none is supplied; a supplied one
/// is checked against H.
class LinearCode {
 public:
  LinearCode(TowerPtr tower, LengthPartition partition, MatrixExt H, std::optional<MatrixExt> G = std::nullopt,
             std::optional<std::size_t> d = std::nullopt);

  const TowerPtr& tower() const noexcept { return tower_; }
  const LengthPartition& partition() const noexcept { return partition_; }
  const MatrixExt& parity_check() const noexcept { return H_; }
  const MatrixExt& generator() const noexcept { return G_; }
  /// True when the generator was given rather than derived.
  bool has_explicit_generator() const noexcept { return explicit_G_; }

  std::size_t length() const noexcept { return partition_.length(); }
  std::size_t dimension() const noexcept { return length() - H_.rows(); }
  std::size_t redundancy() const noexcept { return H_.rows(); }

  const std::optional<std::size_t>& distance() const noexcept { return d_; }
  void set_distance(std::size_t d) { d_ = d; }

 private:
  TowerPtr tower_;
  LengthPartition partition_;
  MatrixExt H_;
  MatrixExt G_;
  bool explicit_G_ = false;
  std::optional<std::size_t> d_;
};

/// Homogeneous s-interleaved code: s codewords of one constituent code stacked as rows.
struct InterleavedCode {
  InterleavedCode(LinearCode code, std::size_t order);

  LinearCode constituent;
  std::size_t s;
};

/// S = H Y^T, an (n-k) x s matrix.
MatrixExt syndrome(const MatrixExt& H, const MatrixExt& Y);

/// Rows of M (s x k) encoded with G: M * G.
MatrixExt encode(const MatrixExt& G, const MatrixExt& M);

/// Canonical (reduced echelon) basis of the right kernel of H.
MatrixExt generator_from_parity(const MatrixExt& H);

/// Exact minimum sum-rank distance by enumerating all q^{mk} - 1 nonzero
/// codewords. Throws BudgetExceeded when q^{mk} > budget. The range may be
/// split across `threads` workers; the result does not depend on the split.
std::size_t min_sum_rank_distance(const LinearCode& code, std::uint64_t budget = 1'000'000, unsigned threads = 0);

/// Uniformly random full-rank (n-k) x n parity-check matrix; deterministic in the seed.
LinearCode random_code(const TowerPtr& tower, const LengthPartition& partition, std::size_t k, std::uint64_t seed);

}  // namespace srmk
