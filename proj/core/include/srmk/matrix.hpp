#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "srmk/errors.hpp"
#include "srmk/gf.hpp"

namespace srmk {

inline bool fields_match(const BaseField& a, const BaseField& b) { return &a == &b || a == b; }
inline bool fields_match(const FieldTower& a, const FieldTower& b) { return a.same_as(b); }

/// Dense row-major matrix over F_q (Field = BaseField) or F_{q^m} (Field = FieldTower).
///
/// Zero-row and zero-column shapes are legal and used throughout (empty
/// support blocks, t = 0 decompositions).
template <class Field>
class Matrix {
 public:
  using field_type = Field;
  using value_type = typename Field::value_type;
  using field_ptr = std::shared_ptr<const Field>;

  Matrix() = default;

  Matrix(field_ptr field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, Field::zero()) {
    if (!field_) throw StructuralError("matrix without a field");
  }

  Matrix(field_ptr field, std::size_t rows, std::size_t cols, std::vector<value_type> data)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
    if (!field_) throw StructuralError("matrix without a field");
    if (data_.size() != rows_ * cols_) throw StructuralError("matrix data size does not match its shape");
    for (auto v : data_)
      if (!field_->contains(v)) throw StructuralError("matrix entry out of field range");
  }

  /// Row-list construction, e.g. Matrix(F, {{1, 2}, {0, 1}}).
  Matrix(field_ptr field, std::initializer_list<std::initializer_list<value_type>> rows)
      : field_(std::move(field)), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    if (!field_) throw StructuralError("matrix without a field");
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw StructuralError("ragged row list");
      for (auto v : r) {
        if (!field_->contains(v)) throw StructuralError("matrix entry out of field range");
        data_.push_back(v);
      }
    }
  }

  static Matrix identity(field_ptr field, std::size_t n) {
    Matrix I(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) I(i, i) = Field::one();
    return I;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return *field_; }
  const field_ptr& field_ptr_ref() const noexcept { return field_; }

  value_type& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  value_type operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

  value_type at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw StructuralError("matrix index out of range");
    return data_[i * cols_ + j];
  }

  std::span<value_type> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
  std::span<const value_type> row(std::size_t i) const noexcept { return {data_.data() + i * cols_, cols_}; }

  const std::vector<value_type>& data() const noexcept { return data_; }

  bool is_zero() const noexcept {
    for (auto v : data_)
      if (v != Field::zero()) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Columns [first, first + count).
  Matrix columns(std::size_t first, std::size_t count) const {
    if (first + count > cols_) throw StructuralError("column range out of bounds");
    Matrix r(field_, rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < count; ++j) r(i, j) = (*this)(i, first + j);
    return r;
  }

  /// Rows [first, first + count).
  Matrix row_range(std::size_t first, std::size_t count) const {
    if (first + count > rows_) throw StructuralError("row range out of bounds");
    return Matrix(field_, count, cols_,
                  std::vector<value_type>(data_.begin() + static_cast<std::ptrdiff_t>(first * cols_),
                                          data_.begin() + static_cast<std::ptrdiff_t>((first + count) * cols_)));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.data_ != b.data_) return false;
    if (a.field_ == b.field_) return true;
    if (!a.field_ || !b.field_) return false;
    return fields_match(*a.field_, *b.field_);
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b, "addition");
    Matrix r = a;
    const Field& f = *a.field_;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = f.add(a.data_[i], b.data_[i]);
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b, "subtraction");
    Matrix r = a;
    const Field& f = *a.field_;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = f.sub(a.data_[i], b.data_[i]);
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    a.require_same_field(b);
    if (a.cols_ != b.rows_)
      throw StructuralError("product of " + a.shape() + " and " + b.shape() + " matrices");
    const Field& f = *a.field_;
    Matrix r(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      auto out = r.row(i);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const value_type c = a(i, k);
        if (c == Field::zero()) continue;
        const auto src = b.row(k);
        if (c == Field::one()) {
          for (std::size_t j = 0; j < b.cols_; ++j) out[j] = f.add(out[j], src[j]);
        } else {
          for (std::size_t j = 0; j < b.cols_; ++j)
            if (src[j] != Field::zero()) out[j] = f.add(out[j], f.mul(c, src[j]));
        }
      }
    }
    return r;
  }

  /// Scalar multiple.
  Matrix scaled(value_type c) const {
    Matrix r = *this;
    for (auto& v : r.data_) v = field_->mul(c, v);
    return r;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  void require_same_field(const Matrix& other) const {
    if (!field_ || !other.field_) throw StructuralError("matrix without a field");
    if (field_ != other.field_ && !fields_match(*field_, *other.field_))
      throw StructuralError("matrices over different fields");
  }

 private:
  void require_same_shape(const Matrix& other, const char* op) const {
    require_same_field(other);
    if (rows_ != other.rows_ || cols_ != other.cols_)
      throw StructuralError(std::string(op) + " of " + shape() + " and " + other.shape() + " matrices");
  }

  field_ptr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> data_;
};

using MatrixExt = Matrix<FieldTower>;
using MatrixBase = Matrix<BaseField>;

template <class Field>
Matrix<Field> hstack(const Matrix<Field>& a, const Matrix<Field>& b) {
  a.require_same_field(b);
  if (a.rows() != b.rows()) throw StructuralError("hstack of matrices with different row counts");
  Matrix<Field> r(a.field_ptr_ref(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

template <class Field>
Matrix<Field> vstack(const Matrix<Field>& a, const Matrix<Field>& b) {
  a.require_same_field(b);
  if (a.cols() != b.cols()) throw StructuralError("vstack of matrices with different column counts");
  std::vector<typename Field::value_type> data(a.data());
  data.insert(data.end(), b.data().begin(), b.data().end());
  return Matrix<Field>(a.field_ptr_ref(), a.rows() + b.rows(), a.cols(), std::move(data));
}

/// Element-wise column expansion: entry (i, j) becomes rows [m*i, m*i + m) of column j.
MatrixBase ext_matrix(const MatrixExt& M);

/// Inverse of ext_matrix; rows must be a multiple of m.
MatrixExt unext_matrix(const MatrixBase& M, const TowerPtr& tower);

/// The same matrix viewed over F_{q^m}.
MatrixExt embed(const MatrixBase& M, const TowerPtr& tower);

/// X * diag(d).
MatrixExt scale_columns(const MatrixExt& X, std::span<const FieldTower::value_type> d);

}  // namespace srmk
