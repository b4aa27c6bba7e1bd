#include "srmk/sumrank.hpp"

#include <numeric>
#include <string>

#include "srmk/errors.hpp"
#include "srmk/linalg.hpp"

namespace srmk {

namespace {
constexpr int kSamplingBudget = 1000;
}

LengthPartition::LengthPartition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  offsets_.reserve(parts_.size());
  for (auto n : parts_) {
    if (n == 0) throw StructuralError("partition parts must be positive");
    offsets_.push_back(total_);
    total_ += n;
  }
}

LengthPartition LengthPartition::hamming(std::size_t n) { return LengthPartition(std::vector<std::size_t>(n, 1)); }

LengthPartition LengthPartition::rank_metric(std::size_t n) { return LengthPartition({n}); }

LengthPartition LengthPartition::uniform(std::size_t blocks, std::size_t size) {
  return LengthPartition(std::vector<std::size_t>(blocks, size));
}

void require_partition(const LengthPartition& partition, std::size_t cols) {
  if (partition.length() != cols)
    throw StructuralError("partition of length " + std::to_string(partition.length()) + " applied to " +
                          std::to_string(cols) + " columns");
}

std::vector<std::size_t> block_ranks(const MatrixExt& X, const LengthPartition& partition) {
  require_partition(partition, X.cols());
  std::vector<std::size_t> out(partition.blocks());
  for (std::size_t i = 0; i < partition.blocks(); ++i) out[i] = rank(ext_matrix(block(X, partition, i)));
  return out;
}

std::size_t sum_rank_weight(const MatrixExt& X, const LengthPartition& partition) {
  const auto r = block_ranks(X, partition);
  return std::accumulate(r.begin(), r.end(), std::size_t{0});
}

MatrixBase rank_support(const MatrixExt& blk) { return row_space_basis(ext_matrix(blk)); }

std::vector<MatrixBase> sum_rank_support(const MatrixExt& E, const LengthPartition& partition) {
  require_partition(partition, E.cols());
  std::vector<MatrixBase> out;
  out.reserve(partition.blocks());
  for (std::size_t i = 0; i < partition.blocks(); ++i) out.push_back(rank_support(block(E, partition, i)));
  return out;
}

std::vector<std::size_t> hamming_support(const MatrixExt& E) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < E.cols(); ++j) {
    for (std::size_t i = 0; i < E.rows(); ++i) {
      if (E(i, j) != 0) {
        out.push_back(j);
        break;
      }
    }
  }
  return out;
}

ErrorModel sample_error(const TowerPtr& tower, const LengthPartition& partition,
                        const std::vector<std::size_t>& profile, std::size_t s, bool require_full_rank,
                        std::uint64_t seed) {
  if (profile.size() != partition.blocks())
    throw StructuralError("profile has " + std::to_string(profile.size()) + " entries for " +
                          std::to_string(partition.blocks()) + " blocks");
  const std::size_t m = tower->m();
  std::size_t t = 0;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (profile[i] > partition.size(i) || profile[i] > m * s)
      throw Infeasible("t_" + std::to_string(i + 1) + " = " + std::to_string(profile[i]) +
                       " exceeds min(n_i, m*s) = " + std::to_string(std::min(partition.size(i), m * s)));
    t += profile[i];
  }
  if (require_full_rank && t > s)
    throw Infeasible("full F_{q^m}-rank error needs t <= s (t = " + std::to_string(t) + ", s = " + std::to_string(s) +
                     ")");

  Rng rng(seed);
  const auto& base = tower->base_ptr();
  for (int attempt = 0; attempt < kSamplingBudget; ++attempt) {
    std::vector<MatrixBase> blocks;
    blocks.reserve(profile.size());
    bool ok = true;
    for (std::size_t i = 0; i < profile.size() && ok; ++i) {
      auto Bi = random_matrix(base, profile[i], partition.size(i), rng);
      ok = rank(Bi) == profile[i];
      blocks.push_back(std::move(Bi));
    }
    if (!ok) continue;
    auto A = random_matrix(tower, s, t, rng);
    std::size_t col = 0;
    for (std::size_t i = 0; i < profile.size() && ok; ++i) {
      ok = rank(ext_matrix(A.columns(col, profile[i]))) == profile[i];
      col += profile[i];
    }
    if (!ok) continue;
    if (require_full_rank && rank(A) != t) continue;

    auto B = block_diag<BaseField>(blocks, base);
    auto E = A * embed(B, tower);
    if (block_ranks(E, partition) != profile) continue;
    const bool full = rank(E) == t;
    if (require_full_rank && !full) continue;
    return ErrorModel{std::move(E), std::move(A), std::move(B), profile, t, full, seed};
  }
  throw SamplingFailure("no error with the requested profile after " + std::to_string(kSamplingBudget) +
                        " attempts");
}

std::vector<std::size_t> random_profile(const LengthPartition& partition, std::size_t t,
                                        std::size_t per_block_cap, Rng& rng) {
  std::vector<std::size_t> cap(partition.blocks());
  std::size_t room = 0;
  for (std::size_t i = 0; i < cap.size(); ++i) {
    cap[i] = std::min(partition.size(i), per_block_cap);
    room += cap[i];
  }
  if (room < t)
    throw Infeasible("weight " + std::to_string(t) + " does not fit the partition (capacity " + std::to_string(room) +
                     ")");
  std::vector<std::size_t> profile(partition.blocks(), 0);
  for (std::size_t u = 0; u < t; ++u) {
    // Pick a unit of remaining capacity uniformly.
    std::uint64_t pick = rng.below(room);
    for (std::size_t i = 0; i < cap.size(); ++i) {
      const std::size_t left = cap[i] - profile[i];
      if (pick < left) {
        ++profile[i];
        break;
      }
      pick -= left;
    }
    --room;
  }
  return profile;
}

Decomposition decompose_error(const MatrixExt& E, const LengthPartition& partition) {
  require_partition(partition, E.cols());
  const auto& tower = E.field_ptr_ref();
  std::vector<MatrixBase> blocks;
  MatrixExt A(tower, E.rows(), 0);
  for (std::size_t i = 0; i < partition.blocks(); ++i) {
    auto Ei = block(E, partition, i);
    auto Bi = rank_support(Ei);
    auto Ai = solve_unique(embed(Bi, tower).transpose(), Ei.transpose()).transpose();
    A = hstack(A, Ai);
    blocks.push_back(std::move(Bi));
  }
  return {std::move(A), block_diag<BaseField>(blocks, tower->base_ptr())};
}

}  // namespace srmk
