#ifndef HOPFIND_MATRIX_HPP
#define HOPFIND_MATRIX_HPP

#include <vector>

#include "hopfind/cyclo.hpp"
#include "hopfind/errors.hpp"
#include "hopfind/numutil.hpp"

namespace hopfind {

inline bool fld_is_zero(const Rat& x) { return x == 0; }
inline bool fld_is_zero(const CycNum& x) { return x.is_zero(); }
inline Rat fld_inv(const Rat& x) {
  if (x == 0) throw domain_error("fld_inv: zero");
  return Rat(1) / x;
}
inline CycNum fld_inv(const CycNum& x) { return inv(x); }

/// Dense row-major matrix over an exact field (Rat or CycNum).
template <typename T>
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(long rows, long cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(long n) {
    Matrix m(n, n);
    for (long i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  T& operator()(long i, long j) { return data_[i * cols_ + j]; }
  const T& operator()(long i, long j) const { return data_[i * cols_ + j]; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (long i = 0; i < rows_; ++i)
      for (long j = 0; j < cols_; ++j) {
        if (i == j && (*this)(i, j) != T(1)) return false;
        if (i != j && !fld_is_zero((*this)(i, j))) return false;
      }
    return true;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw domain_error("Matrix: dimension mismatch in product");
    Matrix r(rows_, o.cols_);
    for (long i = 0; i < rows_; ++i)
      for (long k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (fld_is_zero(a)) continue;
        for (long j = 0; j < o.cols_; ++j) {
          if (fld_is_zero(o(k, j))) continue;
          r(i, j) += a * o(k, j);
        }
      }
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (long i = 0; i < rows_; ++i)
      for (long j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

private:
  long rows_, cols_;
  std::vector<T> data_;
};

/// Row echelon reduction in place; returns the rank.
template <typename T>
long row_reduce(Matrix<T>& m) {
  long rank = 0;
  for (long col = 0; col < m.cols() && rank < m.rows(); ++col) {
    long pivot = -1;
    for (long i = rank; i < m.rows(); ++i)
      if (!fld_is_zero(m(i, col))) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (long j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(rank, j));
    T inv_p = fld_inv(m(rank, col));
    for (long j = col; j < m.cols(); ++j) m(rank, j) = m(rank, j) * inv_p;
    for (long i = 0; i < m.rows(); ++i) {
      if (i == rank || fld_is_zero(m(i, col))) continue;
      T f = m(i, col);
      for (long j = col; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

template <typename T>
long matrix_rank(Matrix<T> m) {
  return row_reduce(m);
}

/// Basis of the right nullspace, returned as columns.
template <typename T>
std::vector<std::vector<T>> nullspace(Matrix<T> m) {
  long n = m.cols();
  row_reduce(m);
  std::vector<long> pivot_col_of_row;
  std::vector<bool> is_pivot(n, false);
  for (long i = 0; i < m.rows(); ++i) {
    long j = 0;
    while (j < n && fld_is_zero(m(i, j))) ++j;
    if (j < n) {
      pivot_col_of_row.push_back(j);
      is_pivot[j] = true;
    }
  }
  std::vector<std::vector<T>> basis;
  for (long free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<T> v(n, T(0));
    v[free_col] = T(1);
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r)
      v[pivot_col_of_row[r]] = -m(static_cast<long>(r), free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <typename T>
T determinant(Matrix<T> m) {
  if (m.rows() != m.cols()) throw domain_error("determinant: not square");
  T det(1);
  long n = m.rows();
  for (long col = 0; col < n; ++col) {
    long pivot = -1;
    for (long i = col; i < n; ++i)
      if (!fld_is_zero(m(i, col))) {
        pivot = i;
        break;
      }
    if (pivot < 0) return T(0);
    if (pivot != col) {
      for (long j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det = det * m(col, col);
    T inv_p = fld_inv(m(col, col));
    for (long i = col + 1; i < n; ++i) {
      if (fld_is_zero(m(i, col))) continue;
      T f = m(i, col) * inv_p;
      for (long j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

/// Exact characteristic polynomial det(xI - M), monic, coefficients
/// ascending.  Similarity reduction to Hessenberg form followed by the
/// standard determinant recurrence.
template <typename T>
std::vector<T> charpoly(Matrix<T> m) {
  if (m.rows() != m.cols()) throw domain_error("charpoly: not square");
  long n = m.rows();
  if (n == 0) return {T(1)};

  // Hessenberg via similarity transformations
  for (long j = 0; j + 2 < n; ++j) {
    long pivot = -1;
    for (long i = j + 1; i < n; ++i)
      if (!fld_is_zero(m(i, j))) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != j + 1) {
      for (long c = 0; c < n; ++c) std::swap(m(pivot, c), m(j + 1, c));
      for (long r = 0; r < n; ++r) std::swap(m(r, pivot), m(r, j + 1));
    }
    T inv_p = fld_inv(m(j + 1, j));
    for (long i = j + 2; i < n; ++i) {
      if (fld_is_zero(m(i, j))) continue;
      T f = m(i, j) * inv_p;
      for (long c = 0; c < n; ++c) m(i, c) -= f * m(j + 1, c);
      for (long r = 0; r < n; ++r) m(r, j + 1) += f * m(r, i);
    }
  }

  // p_k = (x - h_{kk}) p_{k-1} - sum_i h_{k-i,k} (prod subdiagonals) p_{k-1-i}
  std::vector<std::vector<T>> p(n + 1);
  p[0] = {T(1)};
  for (long k = 1; k <= n; ++k) {
    std::vector<T> cur(k + 1, T(0));
    // (x - m(k-1,k-1)) * p[k-1]
    for (size_t i = 0; i < p[k - 1].size(); ++i) {
      cur[i + 1] += p[k - 1][i];
      cur[i] -= m(k - 1, k - 1) * p[k - 1][i];
    }
    T subprod(1);
    for (long i = 1; i < k; ++i) {
      subprod = subprod * m(k - i, k - i - 1);
      if (fld_is_zero(subprod)) break;
      T coeff = m(k - 1 - i, k - 1) * subprod;
      if (fld_is_zero(coeff)) continue;
      for (size_t t = 0; t < p[k - 1 - i].size(); ++t) cur[t] -= coeff * p[k - 1 - i][t];
    }
    p[k] = std::move(cur);
  }
  return p[n];
}

} // namespace hopfind

#endif
