#include "srmk/code.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "srmk/errors.hpp"
#include "srmk/linalg.hpp"

namespace srmk {

LinearCode::LinearCode(TowerPtr tower, LengthPartition partition, MatrixExt H, std::optional<MatrixExt> G,
                       std::optional<std::size_t> d)
    : tower_(std::move(tower)), partition_(std::move(partition)), H_(std::move(H)), d_(d) {
  if (!tower_) throw StructuralError("code without a field");
  if (!fields_match(H_.field(), *tower_)) throw StructuralError("parity-check matrix is over a different field");
  require_partition(partition_, H_.cols());
  if (H_.rows() > H_.cols()) throw StructuralError("parity-check matrix has more rows than columns");
  if (rank(H_) != H_.rows()) throw StructuralError("parity-check matrix does not have full row rank");
  if (G) {
    if (!fields_match(G->field(), *tower_) || G->cols() != H_.cols() || G->rows() != dimension())
      throw StructuralError("generator matrix has shape " + G->shape() + ", expected " +
                            std::to_string(dimension()) + "x" + std::to_string(H_.cols()));
    if (!(H_ * G->transpose()).is_zero()) throw StructuralError("generator rows are not codewords (G H^T != 0)");
    if (rank(*G) != dimension()) throw StructuralError("generator matrix is rank deficient");
    G_ = std::move(*G);
    explicit_G_ = true;
  } else {
    G_ = generator_from_parity(H_);
  }
}

InterleavedCode::InterleavedCode(LinearCode code, std::size_t order) : constituent(std::move(code)), s(order) {
  if (s == 0) throw StructuralError("interleaving order must be at least 1");
}

MatrixExt syndrome(const MatrixExt& H, const MatrixExt& Y) {
  if (H.cols() != Y.cols())
    throw StructuralError("syndrome: H is " + H.shape() + " but Y is " + Y.shape());
  return H * Y.transpose();
}

MatrixExt encode(const MatrixExt& G, const MatrixExt& M) {
  if (M.cols() != G.rows()) throw StructuralError("encode: message has " + std::to_string(M.cols()) +
                                                  " columns, code dimension is " + std::to_string(G.rows()));
  return M * G;
}

MatrixExt generator_from_parity(const MatrixExt& H) { return right_kernel(H); }

namespace {

/// Sum-rank weight of one vector with a reusable scratch buffer.
class VectorWeigher {
 public:
  VectorWeigher(const FieldTower& F, const LengthPartition& partition)
      : F_(F), base_(F.base()), partition_(partition), m_(F.m()) {
    std::size_t widest = 0;
    for (auto n : partition.parts()) widest = std::max(widest, n);
    scratch_.resize(m_ * widest);
    coords_.resize(m_);
  }

  std::size_t weight(std::span<const FieldTower::value_type> x) {
    std::size_t total = 0;
    for (std::size_t b = 0; b < partition_.blocks(); ++b) {
      const std::size_t off = partition_.offset(b);
      const std::size_t w = partition_.size(b);
      bool any = false;
      for (std::size_t j = 0; j < w; ++j) {
        F_.ext_into(x[off + j], coords_);
        for (std::size_t r = 0; r < m_; ++r) scratch_[r * w + j] = coords_[r];
        any |= x[off + j] != 0;
      }
      if (any) total += rank_of(w);
    }
    return total;
  }

 private:
  std::size_t rank_of(std::size_t w) {
    std::size_t rk = 0;
    for (std::size_t c = 0; c < w && rk < m_; ++c) {
      std::size_t p = rk;
      while (p < m_ && scratch_[p * w + c] == 0) ++p;
      if (p == m_) continue;
      if (p != rk)
        for (std::size_t j = c; j < w; ++j) std::swap(scratch_[p * w + j], scratch_[rk * w + j]);
      const auto s = base_.inv(scratch_[rk * w + c]);
      for (std::size_t r = rk + 1; r < m_; ++r) {
        const auto f = scratch_[r * w + c];
        if (f == 0) continue;
        const auto nf = base_.neg(base_.mul(f, s));
        for (std::size_t j = c; j < w; ++j)
          scratch_[r * w + j] = base_.add(scratch_[r * w + j], base_.mul(nf, scratch_[rk * w + j]));
      }
      ++rk;
    }
    return rk;
  }

  const FieldTower& F_;
  const BaseField& base_;
  const LengthPartition& partition_;
  std::size_t m_;
  std::vector<BaseField::value_type> scratch_;
  std::vector<BaseField::value_type> coords_;
};

/// Minimum weight over message indices [lo, hi), digits base Q little-endian.
std::size_t scan_range(const LinearCode& code, std::uint64_t lo, std::uint64_t hi) {
  const FieldTower& F = *code.tower();
  const MatrixExt& G = code.generator();
  const std::size_t k = G.rows();
  const std::size_t n = G.cols();
  const std::uint64_t Q = F.order();

  std::vector<FieldTower::value_type> digits(k, 0);
  std::uint64_t idx = lo;
  for (std::size_t j = 0; j < k; ++j) {
    digits[j] = idx % Q;
    idx /= Q;
  }
  std::vector<FieldTower::value_type> word(n, 0);
  for (std::size_t j = 0; j < k; ++j) {
    if (digits[j] == 0) continue;
    for (std::size_t c = 0; c < n; ++c) word[c] = F.add(word[c], F.mul(digits[j], G(j, c)));
  }

  VectorWeigher weigher(F, code.partition());
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::uint64_t i = lo; i < hi; ++i) {
    if (i != 0) best = std::min(best, weigher.weight(word));
    if (best <= 1) break;
    // Advance the counter and patch the codeword by the changed digits.
    for (std::size_t j = 0; j < k; ++j) {
      const FieldTower::value_type old = digits[j];
      const FieldTower::value_type next = old + 1 == Q ? 0 : old + 1;
      digits[j] = next;
      const auto delta = F.sub(next, old);
      const auto row = G.row(j);
      for (std::size_t c = 0; c < n; ++c) word[c] = F.add(word[c], F.mul(delta, row[c]));
      if (next != 0) break;
    }
  }
  return best;
}

}  // namespace

std::size_t min_sum_rank_distance(const LinearCode& code, std::uint64_t budget, unsigned threads) {
  const std::size_t k = code.dimension();
  if (k == 0) throw StructuralError("minimum distance of the zero code is undefined");
  const std::uint64_t Q = code.tower()->order();
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < k; ++j) {
    if (total > budget / Q) throw BudgetExceeded("q^{mk} exceeds the enumeration budget of " + std::to_string(budget));
    total *= Q;
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));
  if (threads <= 1) return scan_range(code, 0, total);

  std::vector<std::size_t> results(threads, std::numeric_limits<std::size_t>::max());
  std::vector<std::thread> workers;
  const std::uint64_t chunk = (total + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    const std::uint64_t lo = w * chunk;
    const std::uint64_t hi = std::min(total, lo + chunk);
    if (lo >= hi) continue;
    workers.emplace_back([&, w, lo, hi] { results[w] = scan_range(code, lo, hi); });
  }
  for (auto& t : workers) t.join();
  return *std::min_element(results.begin(), results.end());
}

LinearCode random_code(const TowerPtr& tower, const LengthPartition& partition, std::size_t k, std::uint64_t seed) {
  const std::size_t n = partition.length();
  if (k < 1 || k >= n) throw Infeasible("random_code needs 1 <= k < n");
  Rng rng(seed);
  while (true) {
    auto H = random_matrix(tower, n - k, n, rng);
    if (rank(H) == n - k) return LinearCode(tower, partition, std::move(H));
  }
}

}  // namespace srmk
