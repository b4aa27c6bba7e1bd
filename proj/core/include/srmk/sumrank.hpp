#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "srmk/gf.hpp"
#include "srmk/matrix.hpp"
#include "srmk/random.hpp"

namespace srmk {

/// n = n_1 + ... + n_l with every n_i >= 1.
class LengthPartition {
 public:
  LengthPartition() = default;
  explicit LengthPartition(std::vector<std::size_t> parts);

  /// (1, ..., 1): the Hamming metric.
  static LengthPartition hamming(std::size_t n);
  /// (n): the rank metric.
  static LengthPartition rank_metric(std::size_t n);
  /// `blocks` parts of equal length `size`.
  static LengthPartition uniform(std::size_t blocks, std::size_t size);

  std::size_t blocks() const noexcept { return parts_.size(); }
  std::size_t length() const noexcept { return total_; }
  std::size_t size(std::size_t i) const { return parts_.at(i); }
  std::size_t offset(std::size_t i) const { return offsets_.at(i); }
  const std::vector<std::size_t>& parts() const noexcept { return parts_; }

  bool operator==(const LengthPartition&) const = default;

 private:
  std::vector<std::size_t> parts_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
};

/// Columns of block i.
template <class Field>
Matrix<Field> block(const Matrix<Field>& M, const LengthPartition& partition, std::size_t i) {
  return M.columns(partition.offset(i), partition.size(i));
}

void require_partition(const LengthPartition& partition, std::size_t cols);

/// rk_q of every block of X (rank of the ext-expanded block).
std::vector<std::size_t> block_ranks(const MatrixExt& X, const LengthPartition& partition);

/// Sum over blocks of rk_q; works for row vectors (1 x n) and s x n matrices alike.
std::size_t sum_rank_weight(const MatrixExt& X, const LengthPartition& partition);

/// Canonical basis of the F_q row space of ext(block).
MatrixBase rank_support(const MatrixExt& block);

/// rank_support of every block, in partition order.
std::vector<MatrixBase> sum_rank_support(const MatrixExt& E, const LengthPartition& partition);

/// Indices of the nonzero columns.
std::vector<std::size_t> hamming_support(const MatrixExt& E);

/// An error E = A * B with B = diag(B^(1), ..., B^(l)) over F_q.
struct ErrorModel {
  MatrixExt E;
  MatrixExt A;
  MatrixBase B;
  std::vector<std::size_t> profile;  ///< (t_1, ..., t_l)
  std::size_t t = 0;
  bool full_rank = false;            ///< rk_{q^m}(E) == t
  std::uint64_t seed = 0;
};

/// Draws an error with rk_q(E^(i)) = t_i exactly.
///
/// Feasibility: t_i <= min(n_i, m*s), and with `require_full_rank` also
/// t <= s. Up to 1000 attempts are made before SamplingFailure.
ErrorModel sample_error(const TowerPtr& tower, const LengthPartition& partition,
                        const std::vector<std::size_t>& profile, std::size_t s, bool require_full_rank,
                        std::uint64_t seed);

/// Random composition of t into the blocks with t_i <= min(n_i, cap), built one unit at a time.
/// Not uniform over compositions. Throws Infeasible when t does not fit.
std::vector<std::size_t> random_profile(const LengthPartition& partition, std::size_t t,
                                        std::size_t per_block_cap, Rng& rng);

struct Decomposition {
  MatrixExt A;
  MatrixBase B;
};

/// E = A * B with B^(i) the canonical basis of the F_q row space of block i.
Decomposition decompose_error(const MatrixExt& E, const LengthPartition& partition);

/// Uniform random matrix.
template <class Field>
Matrix<Field> random_matrix(const std::shared_ptr<const Field>& field, std::size_t rows, std::size_t cols,
                            Rng& rng) {
  std::vector<typename Field::value_type> data(rows * cols);
  for (auto& v : data) v = static_cast<typename Field::value_type>(rng.below(field->order()));
  return Matrix<Field>(field, rows, cols, std::move(data));
}

}  // namespace srmk
