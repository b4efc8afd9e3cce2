#pragma once

#include <cassert>
#include <optional>
#include <vector>

#include "pomod/field.hpp"

namespace pomod {

// Dense exact matrix. Instances in this project are small (graded pieces of
// desk-scale modules), so dense Gaussian elimination with a fixed pivot rule
// is the right tool; the fixed rule keeps every derived basis reproducible.
template <class S>
class Matrix {
 public:
  Matrix() : r_(0), c_(0) {}
  Matrix(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols, S(0)) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }

  S& operator()(int i, int j) { return a_[size_t(i) * c_ + j]; }
  const S& operator()(int i, int j) const { return a_[size_t(i) * c_ + j]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_zero() const {
    for (const S& x : a_) if (!pomod::is_zero(x)) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.c_ == b.r_);
    Matrix out(a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
      for (int k = 0; k < a.c_; ++k) {
        const S& aik = a(i, k);
        if (pomod::is_zero(aik)) continue;
        for (int j = 0; j < b.c_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    assert(a.r_ == b.r_ && a.c_ == b.c_);
    Matrix out = a;
    for (size_t i = 0; i < out.a_.size(); ++i) out.a_[i] += b.a_[i];
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    assert(a.r_ == b.r_ && a.c_ == b.c_);
    Matrix out = a;
    for (size_t i = 0; i < out.a_.size(); ++i) out.a_[i] -= b.a_[i];
    return out;
  }

  Matrix scaled(const S& s) const {
    Matrix out = *this;
    for (S& x : out.a_) x *= s;
    return out;
  }

  Matrix transpose() const {
    Matrix out(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  // [A | B] side by side.
  static Matrix hstack(const Matrix& a, const Matrix& b) {
    assert(a.r_ == b.r_);
    Matrix out(a.r_, a.c_ + b.c_);
    for (int i = 0; i < a.r_; ++i) {
      for (int j = 0; j < a.c_; ++j) out(i, j) = a(i, j);
      for (int j = 0; j < b.c_; ++j) out(i, a.c_ + j) = b(i, j);
    }
    return out;
  }

  static Matrix vstack(const Matrix& a, const Matrix& b) {
    assert(a.c_ == b.c_);
    Matrix out(a.r_ + b.r_, a.c_);
    for (int i = 0; i < a.r_; ++i)
      for (int j = 0; j < a.c_; ++j) out(i, j) = a(i, j);
    for (int i = 0; i < b.r_; ++i)
      for (int j = 0; j < b.c_; ++j) out(a.r_ + i, j) = b(i, j);
    return out;
  }

  Matrix column(int j) const {
    Matrix out(r_, 1);
    for (int i = 0; i < r_; ++i) out(i, 0) = (*this)(i, j);
    return out;
  }

  Matrix columns(const std::vector<int>& idx) const {
    Matrix out(r_, int(idx.size()));
    for (int j = 0; j < int(idx.size()); ++j)
      for (int i = 0; i < r_; ++i) out(i, j) = (*this)(i, idx[j]);
    return out;
  }

  // Row echelon form in place; returns pivot column per pivot row.
  // Pivot rule: scan columns left to right, take the first nonzero entry.
  std::vector<int> rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < c_ && row < r_; ++col) {
      int p = -1;
      for (int i = row; i < r_; ++i) {
        if (!pomod::is_zero((*this)(i, col))) { p = i; break; }
      }
      if (p < 0) continue;
      if (p != row)
        for (int j = 0; j < c_; ++j) std::swap((*this)(p, j), (*this)(row, j));
      S inv = S(1) / (*this)(row, col);
      for (int j = col; j < c_; ++j) (*this)(row, j) *= inv;
      for (int i = 0; i < r_; ++i) {
        if (i == row) continue;
        S f = (*this)(i, col);
        if (pomod::is_zero(f)) continue;
        for (int j = col; j < c_; ++j) (*this)(i, j) -= f * (*this)(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  int rank() const {
    Matrix m = *this;
    return int(m.rref().size());
  }

  // Basis of the right kernel, one column per basis vector.
  Matrix kernel_basis() const {
    Matrix m = *this;
    std::vector<int> piv = m.rref();
    std::vector<char> is_piv(c_, 0);
    for (int p : piv) is_piv[p] = 1;
    std::vector<int> free;
    for (int j = 0; j < c_; ++j) if (!is_piv[j]) free.push_back(j);
    Matrix out(c_, int(free.size()));
    for (int k = 0; k < int(free.size()); ++k) {
      int f = free[k];
      out(f, k) = S(1);
      for (int i = 0; i < int(piv.size()); ++i) out(piv[i], k) = -m(i, f);
    }
    return out;
  }

  // Columns of *this that form a basis of the column space, in scan order.
  std::vector<int> independent_columns() const {
    Matrix m = *this;
    return m.rref();
  }

  // Solve A X = B exactly; nullopt when inconsistent.
  std::optional<Matrix> solve(const Matrix& b) const {
    assert(r_ == b.r_);
    Matrix aug = hstack(*this, b);
    std::vector<int> piv = aug.rref();
    for (int p : piv)
      if (p >= c_) return std::nullopt;  // pivot in the augmented block
    Matrix x(c_, b.c_);
    for (int i = 0; i < int(piv.size()); ++i)
      for (int j = 0; j < b.c_; ++j) x(piv[i], j) = aug(i, c_ + j);
    return x;
  }

  std::optional<Matrix> inverse() const {
    if (r_ != c_) return std::nullopt;
    auto x = solve(identity(r_));
    if (!x) return std::nullopt;
    if ((*this) * *x != identity(r_)) return std::nullopt;
    return x;
  }

  bool invertible() const { return r_ == c_ && rank() == r_; }

 private:
  int r_, c_;
  std::vector<S> a_;
};

// Columns of `inside` all lie in the column space of `space`.
template <class S>
bool columns_contained(const Matrix<S>& space, const Matrix<S>& inside) {
  return space.solve(inside).has_value();
}

// Basis (as columns) of the intersection of two column spaces.
template <class S>
Matrix<S> intersect_column_spaces(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() == 0 || b.cols() == 0) return Matrix<S>(a.rows(), 0);
  Matrix<S> ker = Matrix<S>::hstack(a, b.scaled(S(-1))).kernel_basis();
  Matrix<S> top(a.cols(), ker.cols());
  for (int i = 0; i < a.cols(); ++i)
    for (int j = 0; j < ker.cols(); ++j) top(i, j) = ker(i, j);
  Matrix<S> raw = a * top;
  std::vector<int> idx = raw.independent_columns();
  return raw.columns(idx);
}

}  // namespace pomod
