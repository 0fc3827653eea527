#pragma once

#include <cassert>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "strata/field.hpp"

namespace strata {

// Dense row-major matrix over an exact field. Vectors are rows throughout
// the library: a linear map U -> V is a (dim U) x (dim V) matrix applied as
// x |-> x * M, so composition "f then g" is the product F * G.
template <class K>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, K(0)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  K& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const K& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  bool is_zero() const {
    for (const K& x : a_) if (!strata::is_zero(x)) return false;
    return true;
  }

  Mat operator+(const Mat& o) const {
    check_same_shape(o);
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = K(a_[i] + o.a_[i]);
    return r;
  }
  Mat operator-(const Mat& o) const {
    check_same_shape(o);
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = K(a_[i] - o.a_[i]);
    return r;
  }
  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const K& x = (*this)(i, k);
        if (strata::is_zero(x)) continue;
        for (int j = 0; j < o.cols_; ++j) {
          if (strata::is_zero(o(k, j))) continue;
          r(i, j) = K(r(i, j) + x * o(k, j));
        }
      }
    return r;
  }
  Mat scaled(const K& c) const {
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = K(c * a_[i]);
    return r;
  }

  Mat transposed() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Mat row(int i) const {
    Mat r(1, cols_);
    for (int j = 0; j < cols_; ++j) r(0, j) = (*this)(i, j);
    return r;
  }

  void set_row(int i, const Mat& v) {
    assert(v.rows() == 1 && v.cols() == cols_);
    for (int j = 0; j < cols_; ++j) (*this)(i, j) = v(0, j);
  }

  // Rows of `below` appended under this matrix.
  Mat vstack(const Mat& below) const {
    if (cols_ != below.cols_ && !empty() && !below.empty())
      throw std::invalid_argument("vstack width mismatch");
    int c = rows_ > 0 ? cols_ : below.cols_;
    Mat r(rows_ + below.rows_, c);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (int i = 0; i < below.rows_; ++i)
      for (int j = 0; j < below.cols_; ++j) r(rows_ + i, j) = below(i, j);
    return r;
  }

  Mat hstack(const Mat& right) const {
    if (rows_ != right.rows_) throw std::invalid_argument("hstack height mismatch");
    Mat r(rows_, cols_ + right.cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
      for (int j = 0; j < right.cols_; ++j) r(i, cols_ + j) = right(i, j);
    }
    return r;
  }

  Mat block(int r0, int c0, int nrows, int ncols) const {
    Mat r(nrows, ncols);
    for (int i = 0; i < nrows; ++i)
      for (int j = 0; j < ncols; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
    return r;
  }

  // diag(this, other)
  Mat dsum(const Mat& o) const {
    Mat r(rows_ + o.rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (int i = 0; i < o.rows_; ++i)
      for (int j = 0; j < o.cols_; ++j) r(rows_ + i, cols_ + j) = o(i, j);
    return r;
  }

 private:
  void check_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }
  int rows_, cols_;
  std::vector<K> a_;
};

// Reduced row echelon form, in place. Returns pivot columns. The result is
// canonical: equal row spaces give identical reduced forms.
template <class K>
std::vector<int> rref(Mat<K>& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int sel = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!is_zero(m(i, c))) { sel = i; break; }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(sel, j));
    K piv = inv(m(r, c));
    for (int j = c; j < m.cols(); ++j) m(r, j) = K(m(r, j) * piv);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      K f = m(i, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) = K(m(i, j) - f * m(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class K>
int rank(Mat<K> m) {
  return int(rref(m).size());
}

// Canonical basis of the row space: RREF with zero rows dropped.
template <class K>
Mat<K> image_basis(Mat<K> m) {
  auto pivots = rref(m);
  return m.block(0, 0, int(pivots.size()), m.cols());
}

// Canonical basis of { x : x * A = 0 } as rows of the returned matrix
// (nullity x rows(A)).
template <class K>
Mat<K> kernel_basis(const Mat<K>& a) {
  // Solve A^T y^T = 0 by RREF on A^T; free columns parametrize the kernel.
  Mat<K> t = a.transposed();
  std::vector<int> pivots = rref(t);
  int n = a.rows();
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  Mat<K> ker(n - int(pivots.size()), n);
  int row = 0;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    ker(row, c) = K(1);
    for (size_t pi = 0; pi < pivots.size(); ++pi)
      ker(row, pivots[pi]) = K(-t(int(pi), c));
    ++row;
  }
  return ker;
}

template <class K>
struct SolveResult {
  bool solvable = false;
  Mat<K> solution;  // one row per row of the target
  Mat<K> kernel;    // canonical kernel basis of the map
};

// Solve X * A = B row by row. `solution` satisfies solution * A = B exactly.
template <class K>
SolveResult<K> solve_right(const Mat<K>& a, const Mat<K>& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("solve shape mismatch");
  SolveResult<K> res;
  res.kernel = kernel_basis(a);
  // RREF of [A^T | B^T]; consistency = no pivot in the augmented part.
  Mat<K> aug = a.transposed().hstack(b.transposed());
  std::vector<int> pivots = rref(aug);
  for (int c : pivots)
    if (c >= a.rows()) { res.solvable = false; return res; }
  res.solvable = true;
  res.solution = Mat<K>(b.rows(), a.rows());
  for (size_t pi = 0; pi < pivots.size(); ++pi)
    for (int t = 0; t < b.rows(); ++t)
      res.solution(t, pivots[pi]) = aug(int(pi), a.rows() + t);
  return res;
}

// Membership of a row vector in the row space of `basis` (basis need not be
// reduced). Returns coordinates when inside.
template <class K>
std::optional<Mat<K>> coords_in_rowspace(const Mat<K>& basis, const Mat<K>& v) {
  auto r = solve_right(basis, v);
  if (!r.solvable) return std::nullopt;
  return r.solution;
}

// Intersection of two row spaces, canonical basis.
template <class K>
Mat<K> rowspace_intersection(const Mat<K>& a, const Mat<K>& b) {
  if (a.rows() == 0 || b.rows() == 0) return Mat<K>(0, a.cols());
  // x = u*a = v*b  <=>  (u, -v) in kernel of [a; b] stacked.
  Mat<K> st = a.vstack(b);
  Mat<K> ker = kernel_basis(st);
  Mat<K> left = ker.block(0, 0, ker.rows(), a.rows());
  return image_basis(Mat<K>(left * a));
}

template <class K>
Mat<K> rowspace_sum(const Mat<K>& a, const Mat<K>& b) {
  return image_basis(a.vstack(b));
}

// Inverse of a square matrix; throws if singular.
template <class K>
Mat<K> inverse(const Mat<K>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square");
  Mat<K> aug = m.hstack(Mat<K>::identity(m.rows()));
  auto pivots = rref(aug);
  if (int(pivots.size()) != m.rows() || (m.rows() > 0 && pivots.back() >= m.rows()))
    throw std::domain_error("matrix not invertible");
  return aug.block(0, m.rows(), m.rows(), m.rows());
}

template <class K>
bool is_invertible(const Mat<K>& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

}  // namespace strata
