#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "starconf/field.hpp"

namespace starconf {

/// Row-major dense matrix over F_p. The field is carried by the operations,
/// not by the matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data);

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Scalar> values);
  const std::vector<Scalar>& data() const noexcept { return data_; }

  DenseMatrix transposed() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

DenseMatrix multiply(const PrimeField& f, const DenseMatrix& a, const DenseMatrix& b);
std::vector<Scalar> apply(const PrimeField& f, const DenseMatrix& m, std::span<const Scalar> v);

/// A subspace of F_p^ambient, held by its reduced row-echelon basis.
///
/// Two SubspaceBasis values describe the same subspace iff they compare equal.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(std::size_t ambient_dim = 0) : basis_(0, ambient_dim) {}

  /// Row space of `m`.
  static SubspaceBasis span_of(const PrimeField& f, const DenseMatrix& m);
  static SubspaceBasis whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const DenseMatrix& basis() const noexcept { return basis_; }
  /// Pivot column of each basis row, strictly increasing.
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(const PrimeField& f, std::span<const Scalar> v) const;
  /// Reduce v modulo the subspace in place; afterwards v vanishes on every pivot column.
  void reduce(const PrimeField& f, std::span<Scalar> v) const;

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) { return a.basis_ == b.basis_; }

 private:
  friend class RowReducer;
  DenseMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Incremental Gaussian elimination.
///
/// Stored rows are kept in semi-echelon form: row k vanishes before its pivot
/// and on the pivot columns of all rows inserted before it.
class RowReducer {
 public:
  RowReducer(const PrimeField& f, std::size_t cols);

  /// Returns true if `v` was independent of the rows seen so far.
  bool insert(std::span<const Scalar> v);
  std::size_t rank() const noexcept { return pivot_cols_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  bool full() const noexcept { return rank() == cols_; }

  SubspaceBasis finish() &&;

 private:
  PrimeField field_;
  std::size_t cols_;
  std::vector<Scalar> rows_;  // rank() * cols_
  std::vector<std::size_t> pivot_cols_;
  std::vector<Scalar> work_;
};

struct RrefResult {
  DenseMatrix rref;  // same shape as the input, zero rows at the bottom
  std::size_t rank = 0;
};

RrefResult rref(const PrimeField& f, const DenseMatrix& m);
std::size_t rank(const PrimeField& f, const DenseMatrix& m);

/// Basis of { v : m * v = 0 }.
SubspaceBasis kernel_basis(const PrimeField& f, const DenseMatrix& m);
/// Orthogonal complement under the standard dot product; dim = ambient - dim u.
SubspaceBasis orthogonal_complement(const PrimeField& f, const SubspaceBasis& u);

SubspaceBasis sum_bases(const PrimeField& f, const SubspaceBasis& u, const SubspaceBasis& w);
SubspaceBasis intersect_bases(const PrimeField& f, const SubspaceBasis& u, const SubspaceBasis& w);
/// Intersection of any nonempty family, via the sum of orthogonal complements.
SubspaceBasis intersect_all(const PrimeField& f, std::span<const SubspaceBasis> spaces);

}  // namespace starconf
