#include <doctest.h>

#include <set>

#include <srmk/linalg.hpp>
#include <srmk/random.hpp>
#include <srmk/sumrank.hpp>

#include "helpers.hpp"

using namespace srmk;
using testing_support::oracle_of;
using testing_support::to_oracle;

namespace {

template <class Field>
bool is_reduced_echelon(const Matrix<Field>& M) {
  std::size_t last_pivot = 0;
  bool seen_zero_row = false;
  for (std::size_t i = 0; i < M.rows(); ++i) {
    std::size_t c = 0;
    while (c < M.cols() && M(i, c) == Field::zero()) ++c;
    if (c == M.cols()) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;
    if (i > 0 && c <= last_pivot) return false;
    if (M(i, c) != Field::one()) return false;
    for (std::size_t r = 0; r < M.rows(); ++r)
      if (r != i && M(r, c) != Field::zero()) return false;
    last_pivot = c;
  }
  return true;
}

// Rank-deficient random matrix: product of r x k and k x c factors.
MatrixExt low_rank(const TowerPtr& F, std::size_t r, std::size_t c, std::size_t k, Rng& rng) {
  return random_matrix(F, r, k, rng) * random_matrix(F, k, c, rng);
}

std::set<std::vector<BaseField::value_type>> enumerate_span(const MatrixBase& M) {
  const auto p = M.field().order();
  std::set<std::vector<BaseField::value_type>> out;
  std::vector<BaseField::value_type> coef(M.rows(), 0);
  while (true) {
    std::vector<BaseField::value_type> v(M.cols(), 0);
    for (std::size_t i = 0; i < M.rows(); ++i)
      for (std::size_t j = 0; j < M.cols(); ++j) v[j] = M.field().add(v[j], M.field().mul(coef[i], M(i, j)));
    out.insert(v);
    std::size_t k = 0;
    while (k < coef.size() && ++coef[k] == p) coef[k++] = 0;
    if (k == coef.size()) break;
  }
  return out;
}

}  // namespace

TEST_CASE("rref is reduced, canonical, and has oracle rank") {
  auto F = make_tower(5, 2, {2, 4, 1});
  const auto O = oracle_of(*F);
  Rng rng(1);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng.below(5), c = 1 + rng.below(6), k = rng.below(std::min(r, c) + 1);
    auto M = low_rank(F, r, c, k, rng);
    auto e = rref(M);
    CHECK(is_reduced_echelon(e.reduced));
    CHECK(e.rank == oracle::rank(O, to_oracle(M)));
    CHECK(rank(M) == e.rank);
    CHECK(rank(M.transpose()) == e.rank);
    // Row operations do not change the canonical form.
    auto shuffled = random_matrix(F, r, r, rng);
    if (rank(shuffled) == r) CHECK(rref(shuffled * M).reduced == e.reduced);
  }
}

TEST_CASE("ref_with_transform: P invertible and P S reduced") {
  auto F = make_tower(3, 3);
  Rng rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t r = 1 + rng.below(6), c = 1 + rng.below(4);
    auto S = low_rank(F, r, c, rng.below(std::min(r, c) + 1), rng);
    auto ref = ref_with_transform(S);
    CHECK(rank(ref.transform) == r);
    CHECK(ref.transform * S == ref.reduced);
    CHECK(ref.reduced == rref(S).reduced);
    CHECK(ref.rank == rank(S));
  }
}

TEST_CASE("right kernel: annihilates, right dimension, canonical") {
  auto F = make_tower(2, 4);
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t r = 1 + rng.below(5), c = 1 + rng.below(7);
    auto M = low_rank(F, r, c, rng.below(std::min(r, c) + 1), rng);
    auto K = right_kernel(M);
    CHECK(K.rows() == c - rank(M));
    CHECK((M * K.transpose()).is_zero());
    CHECK(rank(K) == K.rows());
    CHECK(is_reduced_echelon(K));
  }
}

TEST_CASE("right kernel over F_q against enumeration") {
  auto F5 = std::make_shared<const BaseField>(5);
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    auto M = random_matrix(F5, 1 + rng.below(3), 4, rng);
    auto K = right_kernel(M);
    std::size_t count = 0;
    std::vector<BaseField::value_type> v(4, 0);
    for (std::uint32_t code = 0; code < 625; ++code) {
      for (std::size_t j = 0, x = code; j < 4; ++j, x /= 5) v[j] = static_cast<BaseField::value_type>(x % 5);
      bool zero = true;
      for (std::size_t i = 0; i < M.rows(); ++i) {
        BaseField::value_type acc = 0;
        for (std::size_t j = 0; j < 4; ++j) acc = F5->add(acc, F5->mul(M(i, j), v[j]));
        zero = zero && acc == 0;
      }
      count += zero;
    }
    std::size_t expected = 1;
    for (std::size_t i = 0; i < K.rows(); ++i) expected *= 5;
    CHECK(count == expected);
  }
}

TEST_CASE("solve_unique and its failure modes") {
  auto F = make_tower(5, 2, {2, 4, 1});
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    auto M = random_matrix(F, 5, 3, rng);
    if (rank(M) < 3) continue;
    auto X = random_matrix(F, 3, 2, rng);
    CHECK(solve_unique(M, M * X) == X);
  }
  MatrixExt M(F, {{1, 0}, {0, 0}});
  MatrixExt rhs(F, {{1}, {0}});
  CHECK_THROWS_AS(solve_unique(M, rhs), NonUniqueSolution);
  MatrixExt M2(F, {{1}, {1}});
  MatrixExt rhs2(F, {{1}, {2}});
  CHECK_THROWS_AS(solve_unique(M2, rhs2), InconsistentSystem);
}

TEST_CASE("row space intersection equals the intersection of enumerated spans") {
  auto F3 = std::make_shared<const BaseField>(3);
  Rng rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    auto U = random_matrix(F3, 1 + rng.below(3), 4, rng);
    auto W = random_matrix(F3, 1 + rng.below(3), 4, rng);
    auto I = row_space_intersection(U, W);
    auto su = enumerate_span(U), sw = enumerate_span(W);
    std::size_t common = 0;
    for (const auto& v : su) common += sw.count(v);
    CHECK(enumerate_span(I).size() == common);
    CHECK(in_row_space(I, U));
    CHECK(in_row_space(I, W));
    CHECK(is_reduced_echelon(I));
  }
}

TEST_CASE("block_diag and stacking") {
  auto F = std::make_shared<const BaseField>(5);
  std::vector<MatrixBase> blocks{MatrixBase(F, {{1, 2}}), MatrixBase(F, {{1, 0}, {0, 1}}), MatrixBase(F, 0, 2)};
  auto B = block_diag<BaseField>(blocks, F);
  CHECK(B == MatrixBase(F, {{1, 2, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0}}));
  CHECK(vstack(blocks[0], blocks[1]).rows() == 3);
  CHECK(hstack(blocks[1], blocks[1]).cols() == 4);
  CHECK_THROWS_AS(hstack(blocks[0], blocks[1]), StructuralError);
}

TEST_CASE("ext_matrix layout and round trip") {
  auto F = make_tower(5, 2, {2, 4, 1});
  const auto a = F->alpha();
  MatrixExt M(F, {{1, F->pow(a, 6)}, {F->pow(a, 16), 0}});
  auto X = ext_matrix(M);
  CHECK(X == MatrixBase(F->base_ptr(), {{1, 2}, {0, 0}, {3, 0}, {3, 0}}));
  CHECK(unext_matrix(X, F) == M);
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    auto R = random_matrix(F, 3, 4, rng);
    CHECK(unext_matrix(ext_matrix(R), F) == R);
  }
}

TEST_CASE("matrix structural errors") {
  auto F = make_tower(5, 2);
  auto G = make_tower(3, 2);
  MatrixExt A(F, 2, 3), B(G, 2, 3), C(F, 3, 3);
  CHECK_THROWS_AS(A + B, StructuralError);
  CHECK_THROWS_AS(A + C, StructuralError);
  CHECK_THROWS_AS(C * A, StructuralError);
  CHECK_THROWS_AS(A.at(2, 0), StructuralError);
  CHECK_THROWS_AS(MatrixExt(F, {{25}}), StructuralError);
}
