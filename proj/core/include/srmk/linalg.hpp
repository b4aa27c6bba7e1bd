#pragma once

// Exact dense linear algebra over BaseField and FieldTower.
//
// Every echelon form here is the reduced row-echelon form with leftmost-pivot,
// topmost-row tie-breaking, so bases returned by these functions are canonical:
// two matrices span the same row space iff their row_space_basis() are equal.

#include <cstddef>
#include <span>
#include <vector>

#include "srmk/errors.hpp"
#include "srmk/matrix.hpp"

namespace srmk {

template <class Field>
struct EchelonForm {
  Matrix<Field> reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  ///< pivot column of each of the first `rank` rows
};

/// P * S = reduced, with P invertible.
template <class Field>
struct RefResult {
  Matrix<Field> transform;
  Matrix<Field> reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduces M in place to RREF, choosing pivots only among the first
/// `pivot_cols` columns; row operations act on whole rows.
template <class Field>
std::vector<std::size_t> rref_in_place(Matrix<Field>& M, std::size_t pivot_cols) {
  using V = typename Field::value_type;
  const Field& f = M.field();
  const std::size_t rows = M.rows();
  const std::size_t cols = M.cols();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < pivot_cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && M(p, c) == Field::zero()) ++p;
    if (p == rows) continue;
    if (p != rank) {
      auto a = M.row(p), b = M.row(rank);
      for (std::size_t j = c; j < cols; ++j) std::swap(a[j], b[j]);
    }
    auto prow = M.row(rank);
    if (prow[c] != Field::one()) {
      const V s = f.inv(prow[c]);
      for (std::size_t j = c; j < cols; ++j) prow[j] = f.mul(prow[j], s);
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      auto row = M.row(r);
      const V factor = row[c];
      if (factor == Field::zero()) continue;
      const V nf = f.neg(factor);
      for (std::size_t j = c; j < cols; ++j)
        if (prow[j] != Field::zero()) row[j] = f.add(row[j], f.mul(nf, prow[j]));
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

template <class Field>
EchelonForm<Field> rref(Matrix<Field> M) {
  auto pivots = rref_in_place(M, M.cols());
  const std::size_t rank = pivots.size();
  return {std::move(M), rank, std::move(pivots)};
}

template <class Field>
std::size_t rank(const Matrix<Field>& M) {
  if (M.rows() == 0 || M.cols() == 0) return 0;
  // Eliminate along the shorter side.
  if (M.rows() > M.cols()) {
    auto t = M.transpose();
    return rref_in_place(t, t.cols()).size();
  }
  auto copy = M;
  return rref_in_place(copy, copy.cols()).size();
}

/// Row-echelon form with the accumulated transformation: transform * S = reduced.
template <class Field>
RefResult<Field> ref_with_transform(const Matrix<Field>& S) {
  const std::size_t r = S.rows();
  auto aug = hstack(S, Matrix<Field>::identity(S.field_ptr_ref(), r));
  auto pivots = rref_in_place(aug, S.cols());
  RefResult<Field> out;
  out.reduced = aug.columns(0, S.cols());
  out.transform = aug.columns(S.cols(), r);
  out.rank = pivots.size();
  out.pivots = std::move(pivots);
  return out;
}

/// Canonical basis (RREF nonzero rows) of the row space.
template <class Field>
Matrix<Field> row_space_basis(const Matrix<Field>& M) {
  auto e = rref(M);
  return e.reduced.row_range(0, e.rank);
}

/// Canonical basis of {v : M v^T = 0}, one vector per row.
template <class Field>
Matrix<Field> right_kernel(const Matrix<Field>& M) {
  const Field& f = M.field();
  auto e = rref(M);
  const std::size_t n = M.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix<Field> K(M.field_ptr_ref(), n - e.rank, n);
  std::size_t k = 0;
  for (std::size_t fc = 0; fc < n; ++fc) {
    if (is_pivot[fc]) continue;
    K(k, fc) = Field::one();
    for (std::size_t r = 0; r < e.rank; ++r) K(k, e.pivots[r]) = f.neg(e.reduced(r, fc));
    ++k;
  }
  return row_space_basis(K);
}

/// The unique X with M * X = rhs. Throws NonUniqueSolution when M lacks full
/// column rank and InconsistentSystem when rhs is outside its column space.
template <class Field>
Matrix<Field> solve_unique(const Matrix<Field>& M, const Matrix<Field>& rhs) {
  if (M.rows() != rhs.rows()) throw StructuralError("solve_unique: row counts differ");
  const std::size_t b = M.cols();
  auto aug = hstack(M, rhs);
  auto pivots = rref_in_place(aug, b);
  if (pivots.size() < b)
    throw NonUniqueSolution("coefficient matrix has rank " + std::to_string(pivots.size()) + " < " +
                            std::to_string(b) + " columns");
  for (std::size_t r = b; r < aug.rows(); ++r)
    for (std::size_t j = b; j < aug.cols(); ++j)
      if (aug(r, j) != Field::zero()) throw InconsistentSystem("right-hand side is not in the column space");
  return aug.row_range(0, b).columns(b, rhs.cols());
}

/// Canonical basis of R(U) ∩ R(W) via the Zassenhaus construction.
template <class Field>
Matrix<Field> row_space_intersection(const Matrix<Field>& U, const Matrix<Field>& W) {
  if (U.cols() != W.cols()) throw StructuralError("row_space_intersection: column counts differ");
  const std::size_t n = U.cols();
  auto top = hstack(U, U);
  auto bottom = hstack(W, Matrix<Field>(W.field_ptr_ref(), W.rows(), n));
  auto e = rref(vstack(top, bottom));
  std::vector<typename Field::value_type> data;
  std::size_t count = 0;
  for (std::size_t r = 0; r < e.rank; ++r) {
    if (e.pivots[r] < n) continue;
    auto row = e.reduced.row(r);
    data.insert(data.end(), row.begin() + static_cast<std::ptrdiff_t>(n), row.end());
    ++count;
  }
  return row_space_basis(Matrix<Field>(U.field_ptr_ref(), count, n, std::move(data)));
}

template <class Field>
bool same_row_space(const Matrix<Field>& a, const Matrix<Field>& b) {
  if (a.cols() != b.cols()) return false;
  return row_space_basis(a) == row_space_basis(b);
}

/// Every row of `rows` lies in the row space of M.
template <class Field>
bool in_row_space(const Matrix<Field>& rows, const Matrix<Field>& M) {
  if (rows.cols() != M.cols()) throw StructuralError("in_row_space: column counts differ");
  return rank(vstack(M, rows)) == rank(M);
}

/// diag(B_1, ..., B_l); a 0 x n_i block contributes n_i zero columns.
template <class Field>
Matrix<Field> block_diag(std::span<const Matrix<Field>> blocks, std::shared_ptr<const Field> field) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    if (!fields_match(b.field(), *field)) throw StructuralError("block_diag: blocks over different fields");
    rows += b.rows();
    cols += b.cols();
  }
  Matrix<Field> out(std::move(field), rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

}  // namespace srmk
