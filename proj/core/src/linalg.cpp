#include "starconf/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace starconf {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) {
    throw DimensionError("matrix data has " + std::to_string(data_.size()) + " entries, expected " +
                         std::to_string(rows * cols));
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void DenseMatrix::append_row(std::span<const Scalar> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw DimensionError("row length does not match column count");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

DenseMatrix multiply(const PrimeField& f, const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) f.axpy(a(i, k), b.row(k).data(), out.row(i).data(), b.cols());
  return out;
}

std::vector<Scalar> apply(const PrimeField& f, const DenseMatrix& m, std::span<const Scalar> v) {
  if (v.size() != m.cols()) throw DimensionError("vector length does not match column count");
  std::vector<Scalar> out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Scalar acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc = f.add(acc, f.mul(m(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

// ---------------------------------------------------------------------------

RowReducer::RowReducer(const PrimeField& f, std::size_t cols) : field_(f), cols_(cols), work_(cols, 0) {}

bool RowReducer::insert(std::span<const Scalar> v) {
  if (v.size() != cols_) throw DimensionError("vector length does not match reducer width");
  if (full()) return false;
  std::copy(v.begin(), v.end(), work_.begin());
  const std::size_t r = rank();
  for (std::size_t k = 0; k < r; ++k) {
    const std::size_t pc = pivot_cols_[k];
    const Scalar c = work_[pc];
    if (c == 0) continue;
    field_.axpy(field_.neg(c), rows_.data() + k * cols_ + pc, work_.data() + pc, cols_ - pc);
  }
  auto it = std::find_if(work_.begin(), work_.end(), [](Scalar x) { return x != 0; });
  if (it == work_.end()) return false;
  const std::size_t pc = static_cast<std::size_t>(it - work_.begin());
  const Scalar inv = field_.inv(*it);
  for (std::size_t j = pc; j < cols_; ++j) work_[j] = field_.mul(work_[j], inv);
  rows_.insert(rows_.end(), work_.begin(), work_.end());
  pivot_cols_.push_back(pc);
  return true;
}

SubspaceBasis RowReducer::finish() && {
  const std::size_t r = rank();
  std::vector<std::size_t> order(r);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivot_cols_[a] < pivot_cols_[b]; });

  SubspaceBasis out(cols_);
  std::vector<Scalar> data(r * cols_);
  for (std::size_t i = 0; i < r; ++i)
    std::copy_n(rows_.begin() + order[i] * cols_, cols_, data.begin() + i * cols_);
  out.pivots_.resize(r);
  for (std::size_t i = 0; i < r; ++i) out.pivots_[i] = pivot_cols_[order[i]];

  // Back substitution, last pivot first.
  for (std::size_t i = r; i-- > 0;) {
    const std::size_t pc = out.pivots_[i];
    const Scalar* src = data.data() + i * cols_ + pc;
    for (std::size_t k = 0; k < i; ++k) {
      Scalar* dst = data.data() + k * cols_;
      if (dst[pc] != 0) field_.axpy(field_.neg(dst[pc]), src, dst + pc, cols_ - pc);
    }
  }
  out.basis_ = DenseMatrix(r, cols_, std::move(data));
  return out;
}

// ---------------------------------------------------------------------------

SubspaceBasis SubspaceBasis::span_of(const PrimeField& f, const DenseMatrix& m) {
  RowReducer red(f, m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) red.insert(m.row(i));
  return std::move(red).finish();
}

SubspaceBasis SubspaceBasis::whole(std::size_t ambient_dim) {
  SubspaceBasis out(ambient_dim);
  out.basis_ = DenseMatrix::identity(ambient_dim);
  out.pivots_.resize(ambient_dim);
  std::iota(out.pivots_.begin(), out.pivots_.end(), 0);
  return out;
}

void SubspaceBasis::reduce(const PrimeField& f, std::span<Scalar> v) const {
  if (v.size() != ambient_dim()) throw DimensionError("vector length does not match ambient dimension");
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const std::size_t pc = pivots_[i];
    if (v[pc] != 0) f.axpy(f.neg(v[pc]), basis_.row(i).data() + pc, v.data() + pc, v.size() - pc);
  }
}

bool SubspaceBasis::contains(const PrimeField& f, std::span<const Scalar> v) const {
  std::vector<Scalar> w(v.begin(), v.end());
  reduce(f, w);
  return std::all_of(w.begin(), w.end(), [](Scalar x) { return x == 0; });
}

RrefResult rref(const PrimeField& f, const DenseMatrix& m) {
  SubspaceBasis s = SubspaceBasis::span_of(f, m);
  RrefResult out{DenseMatrix(m.rows(), m.cols()), s.dim()};
  for (std::size_t i = 0; i < s.dim(); ++i) std::copy_n(s.basis().row(i).begin(), m.cols(), out.rref.row(i).begin());
  return out;
}

std::size_t rank(const PrimeField& f, const DenseMatrix& m) {
  RowReducer red(f, m.cols());
  for (std::size_t i = 0; i < m.rows() && !red.full(); ++i) red.insert(m.row(i));
  return red.rank();
}

namespace {

SubspaceBasis kernel_of_rref(const PrimeField& f, const DenseMatrix& basis, const std::vector<std::size_t>& pivots) {
  const std::size_t n = basis.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t pc : pivots) is_pivot[pc] = true;
  // Free column c yields e_c - sum_i basis(i, c) e_{pivot_i}; sorting these by
  // their pivot (the free column) puts them in echelon form already.
  RowReducer red(f, n);
  std::vector<Scalar> v(n);
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[c] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(basis(i, c));
    red.insert(v);
  }
  return std::move(red).finish();
}

}  // namespace

SubspaceBasis kernel_basis(const PrimeField& f, const DenseMatrix& m) {
  SubspaceBasis row_space = SubspaceBasis::span_of(f, m);
  return kernel_of_rref(f, row_space.basis(), row_space.pivots());
}

SubspaceBasis orthogonal_complement(const PrimeField& f, const SubspaceBasis& u) {
  return kernel_of_rref(f, u.basis(), u.pivots());
}

SubspaceBasis sum_bases(const PrimeField& f, const SubspaceBasis& u, const SubspaceBasis& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw DimensionError("subspace sum: ambient dimensions differ");
  RowReducer red(f, u.ambient_dim());
  for (std::size_t i = 0; i < u.dim(); ++i) red.insert(u.basis().row(i));
  for (std::size_t i = 0; i < w.dim() && !red.full(); ++i) red.insert(w.basis().row(i));
  return std::move(red).finish();
}

SubspaceBasis intersect_bases(const PrimeField& f, const SubspaceBasis& u, const SubspaceBasis& w) {
  const SubspaceBasis pair[2] = {u, w};
  return intersect_all(f, pair);
}

SubspaceBasis intersect_all(const PrimeField& f, std::span<const SubspaceBasis> spaces) {
  if (spaces.empty()) throw DimensionError("intersection of an empty family");
  const std::size_t n = spaces.front().ambient_dim();
  for (const auto& s : spaces)
    if (s.ambient_dim() != n) throw DimensionError("subspace intersection: ambient dimensions differ");
  if (spaces.size() == 1) return spaces.front();

  // (U1 ∩ ... ∩ Uk)^perp = U1^perp + ... + Uk^perp, and perp is an involution.
  RowReducer red(f, n);
  for (const auto& s : spaces) {
    if (red.full()) break;
    SubspaceBasis perp = orthogonal_complement(f, s);
    for (std::size_t i = 0; i < perp.dim(); ++i) red.insert(perp.basis().row(i));
  }
  SubspaceBasis annihilator = std::move(red).finish();
  return orthogonal_complement(f, annihilator);
}

}  // namespace starconf
