#pragma once

// Dense matrices: Matrix<R> over the coefficient ring (representation
// images) and PolyMatrix<R> over Laurent polynomials (Alexander matrices).

#include <algorithm>
#include <cstddef>
#include <vector>

#include "torres/error.hpp"
#include "torres/laurent.hpp"

namespace torres {

template <class R>
class Matrix {
 public:
  using Coeff = typename R::value_type;

  Matrix(R ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, ring_.zero()) {}

  static Matrix identity(const R& ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
    return m;
  }

  static Matrix from_rows(const R& ring, const std::vector<std::vector<Coeff>>& rows) {
    std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
    Matrix m(ring, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw InputError("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  const R& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Coeff& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Coeff& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix product size mismatch");
    const R& ring = a.ring_;
    Matrix m(ring, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (ring.is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          m(i, j) = ring.add(m(i, j), ring.mul(a(i, k), b(k, j)));
        }
      }
    }
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i) {
      if (!a.ring_.equal(a.data_[i], b.data_[i])) return false;
    }
    return true;
  }

  bool is_identity() const { return rows_ == cols_ && *this == identity(ring_, rows_); }

  /// Fraction-free elimination; every division is exact.
  Coeff determinant() const {
    if (rows_ != cols_) throw InputError("determinant of a non-square matrix");
    const std::size_t n = rows_;
    std::vector<Coeff> m = data_;
    auto at = [&](std::size_t i, std::size_t j) -> Coeff& { return m[i * n + j]; };
    Coeff prev = ring_.one();
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
      if (ring_.is_zero(at(k, k))) {
        std::size_t p = k + 1;
        while (p < n && ring_.is_zero(at(p, k))) ++p;
        if (p == n) return ring_.zero();
        for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
        negate = !negate;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          Coeff v = ring_.sub(ring_.mul(at(k, k), at(i, j)), ring_.mul(at(i, k), at(k, j)));
          bool ok = false;
          at(i, j) = ring_.divide(v, prev, ok);
          if (!ok) throw InternalError("inexact division in Bareiss elimination");
        }
      }
      prev = at(k, k);
    }
    Coeff d = n ? at(n - 1, n - 1) : ring_.one();
    return negate ? ring_.neg(d) : d;
  }

  /// Inverse via the adjugate; requires a unit determinant.
  Matrix inverse() const {
    Coeff d = determinant();
    if (!ring_.is_unit(d)) throw InputError("matrix is not invertible over " + ring_.name());
    Coeff d_inv = ring_.inverse(d);
    const std::size_t n = rows_;
    Matrix inv(ring_, n, n);
    if (n == 1) {
      inv(0, 0) = d_inv;
      return inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Matrix minor(ring_, n - 1, n - 1);
        for (std::size_t r = 0, mr = 0; r < n; ++r) {
          if (r == j) continue;
          for (std::size_t c = 0, mc = 0; c < n; ++c) {
            if (c == i) continue;
            minor(mr, mc++) = (*this)(r, c);
          }
          ++mr;
        }
        Coeff cof = minor.determinant();
        if ((i + j) % 2) cof = ring_.neg(cof);
        inv(i, j) = ring_.mul(cof, d_inv);
      }
    }
    return inv;
  }

 private:
  R ring_;
  std::size_t rows_, cols_;
  std::vector<Coeff> data_;
};

template <class R>
class PolyMatrix {
 public:
  using Poly = LaurentPoly<R>;

  PolyMatrix(const R& ring, std::size_t rows, std::size_t cols, std::size_t num_vars)
      : ring_(ring), rows_(rows), cols_(cols), num_vars_(num_vars),
        entries_(rows * cols, Poly(ring, num_vars)) {}

  static PolyMatrix identity(const R& ring, std::size_t n, std::size_t num_vars) {
    PolyMatrix m(ring, n, n, num_vars);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly::one(ring, num_vars);
    return m;
  }

  /// c * t^exp for a constant matrix c.
  static PolyMatrix from_constant(const Matrix<R>& c, const Exponent& exp) {
    PolyMatrix m(c.ring(), c.rows(), c.cols(), exp.size());
    for (std::size_t i = 0; i < c.rows(); ++i) {
      for (std::size_t j = 0; j < c.cols(); ++j) m(i, j) = Poly::monomial(c.ring(), exp, c(i, j));
    }
    return m;
  }

  const R& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t num_vars() const { return num_vars_; }
  Poly& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Poly& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    a.check_same_shape(b);
    PolyMatrix r = a;
    for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] += b.entries_[k];
    return r;
  }

  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
    a.check_same_shape(b);
    PolyMatrix r = a;
    for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] -= b.entries_[k];
    return r;
  }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_ || a.num_vars_ != b.num_vars_) {
      throw InputError("matrix product size mismatch");
    }
    PolyMatrix m(a.ring_, a.rows_, b.cols_, a.num_vars_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!b(k, j).is_zero()) m(i, j) += a(i, k) * b(k, j);
        }
      }
    }
    return m;
  }

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Poly& p) { return p.is_zero(); });
  }

 private:
  void check_same_shape(const PolyMatrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_ || num_vars_ != b.num_vars_) {
      throw InputError("matrix shape mismatch");
    }
  }

  R ring_;
  std::size_t rows_, cols_, num_vars_;
  std::vector<Poly> entries_;
};

/// Laplace expansion along the first row.
template <class R>
LaurentPoly<R> det_cofactor(const PolyMatrix<R>& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return LaurentPoly<R>::one(m.ring(), m.num_vars());
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  LaurentPoly<R> sum(m.ring(), m.num_vars());
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    PolyMatrix<R> minor(m.ring(), n - 1, n - 1, m.num_vars());
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t c = 0, mc = 0; c < n; ++c) {
        if (c != j) minor(r - 1, mc++) = m(r, c);
      }
    }
    auto term = m(0, j) * det_cofactor(minor);
    if (j % 2) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

/// Fraction-free Gaussian elimination (Bareiss). Row pivots prefer the
/// sparsest nonzero candidate.
template <class R>
LaurentPoly<R> det_bareiss(PolyMatrix<R> m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  using Poly = LaurentPoly<R>;
  if (n == 0) return Poly::one(m.ring(), m.num_vars());
  Poly prev = Poly::one(m.ring(), m.num_vars());
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t i = k; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      if (pivot == n || m(i, k).size() < m(pivot, k).size()) pivot = i;
    }
    if (pivot == n) return Poly(m.ring(), m.num_vars());
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        if (k == 0) {
          m(i, j) = std::move(v);
          continue;
        }
        auto q = v.divide_exact(prev);
        if (!q) throw InternalError("inexact division in Bareiss elimination");
        m(i, j) = std::move(*q);
      }
      m(i, k) = Poly(m.ring(), m.num_vars());
    }
    prev = m(k, k);
  }
  Poly d = m(n - 1, n - 1);
  return negate ? -d : d;
}

inline constexpr std::size_t kCofactorThreshold = 4;

template <class R>
LaurentPoly<R> det(const PolyMatrix<R>& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  return m.rows() <= kCofactorThreshold ? det_cofactor(m) : det_bareiss(m);
}

/// det(T*A - I) for a constant invertible matrix A and a monomial T with coefficient 1.
template <class R>
LaurentPoly<R> char_factor(const Monomial<R>& T, const Matrix<R>& A) {
  const R& ring = A.ring();
  if (!ring.is_one(T.coefficient)) throw InputError("char_factor: T must have coefficient 1");
  if (A.rows() != A.cols()) throw InputError("char_factor: A must be square");
  if (!ring.is_unit(A.determinant())) throw InputError("char_factor: A is singular");
  const std::size_t n = A.rows();
  const std::size_t nv = T.exponents.size();
  PolyMatrix<R> m = PolyMatrix<R>::from_constant(A, T.exponents) - PolyMatrix<R>::identity(ring, n, nv);
  return det(m);
}

}  // namespace torres
