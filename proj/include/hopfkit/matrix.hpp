#pragma once

// Dense exact linear algebra over Scalar: Gaussian elimination, kernels,
// subspaces with canonical residues, and quotient presentations.

#include <hopfkit/scalar.hpp>

#include <cassert>
#include <cstddef>
#include <optional>
#include <vector>

namespace hopfkit {

struct DimensionMismatch : std::runtime_error {
  explicit DimensionMismatch(const std::string& what) : std::runtime_error("dimension mismatch: " + what) {}
};

using Vec = std::vector<Scalar>;

inline Vec operator+(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
inline Vec operator-(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
inline Vec operator*(const Scalar& k, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = k * v[i];
  return r;
}
inline bool isZeroVec(const Vec& v) {
  for (const auto& x : v)
    if (!x.isZero()) return false;
  return true;
}
inline Vec zeroVec(std::size_t n) { return Vec(n, Scalar(0)); }
inline Vec unitVec(std::size_t n, std::size_t i) {
  Vec v(n, Scalar(0));
  v[i] = Scalar(1);
  return v;
}

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows, zeroVec(cols)) {}
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
  }
  static Matrix fromRows(std::vector<Vec> rows) {
    Matrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows[0].size();
    m.a_ = std::move(rows);
    return m;
  }
  // matrix of a linear map sending basis vector j to columns[j]
  static Matrix fromColumns(const std::vector<Vec>& cols) {
    std::size_t nc = cols.size();
    std::size_t nr = cols.empty() ? 0 : cols[0].size();
    Matrix m(nr, nc);
    for (std::size_t j = 0; j < nc; ++j) {
      assert(cols[j].size() == nr);
      for (std::size_t i = 0; i < nr; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& at(std::size_t i, std::size_t j) { return a_[i][j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i][j]; }
  const Vec& row(std::size_t i) const { return a_[i]; }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw DimensionMismatch("matrix product");
    Matrix r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        if (x.at(i, k).isZero()) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
      }
    return r;
  }
  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw DimensionMismatch("matrix sum");
    Matrix r(x.rows_, x.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t j = 0; j < x.cols_; ++j) r.at(i, j) = x.at(i, j) + y.at(i, j);
    return r;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw DimensionMismatch("matrix difference");
    Matrix r(x.rows_, x.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t j = 0; j < x.cols_; ++j) r.at(i, j) = x.at(i, j) - y.at(i, j);
    return r;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  Vec apply(const Vec& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix apply");
    Vec r = zeroVec(rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (v[j].isZero()) continue;
      for (std::size_t i = 0; i < rows_; ++i) r[i] += a_[i][j] * v[j];
    }
    return r;
  }

  bool isZero() const {
    for (const auto& r : a_)
      if (!isZeroVec(r)) return false;
    return true;
  }

  // Kronecker product: (x (*) y) acts on the tensor of the column spaces,
  // index (i,j) flattened as i*y.rows + j.
  friend Matrix kron(const Matrix& x, const Matrix& y) {
    Matrix r(x.rows_ * y.rows_, x.cols_ * y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t j = 0; j < x.cols_; ++j) {
        if (x.at(i, j).isZero()) continue;
        for (std::size_t k = 0; k < y.rows_; ++k)
          for (std::size_t l = 0; l < y.cols_; ++l)
            r.at(i * y.rows_ + k, j * y.cols_ + l) = x.at(i, j) * y.at(k, l);
      }
    return r;
  }

  std::size_t rank() const;
  std::vector<Vec> kernelBasis() const;
  std::optional<Matrix> inverse() const;
  std::optional<Vec> solve(const Vec& rhs) const;  // one solution of A x = rhs

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Vec> a_;
};

// Row-echelon span of a set of vectors in k^n; supports canonical residues
// modulo the span and quotient coordinates. Basis rows are kept fully reduced
// (RREF), so residues are canonical representatives.
class Subspace {
 public:
  explicit Subspace(std::size_t ambientDim) : n_(ambientDim) {}

  std::size_t ambientDim() const { return n_; }
  std::size_t dim() const { return rows_.size(); }

  // reduce v modulo the span; returns the canonical residue
  Vec reduce(Vec v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Scalar& c = v[pivots_[r]];
      if (!c.isZero()) v = v - c * rows_[r];
    }
    return v;
  }

  bool contains(const Vec& v) const { return isZeroVec(reduce(v)); }

  // insert v; returns true if the span grew
  bool insert(Vec v) {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < n_ && v[p].isZero()) ++p;
    if (p == n_) return false;
    Scalar inv = v[p].inverse();
    v = inv * v;
    // back-substitute into existing rows to keep RREF
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Scalar& c = rows_[r][p];
      if (!c.isZero()) rows_[r] = rows_[r] - c * v;
    }
    std::size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < p) ++at;
    rows_.insert(rows_.begin() + static_cast<long>(at), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<long>(at), p);
    return true;
  }

  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // ambient coordinates that are not pivots: a basis of the quotient
  std::vector<std::size_t> freeCoordinates() const {
    std::vector<std::size_t> free;
    std::size_t r = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      if (r < pivots_.size() && pivots_[r] == j)
        ++r;
      else
        free.push_back(j);
    }
    return free;
  }

 private:
  std::size_t n_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

inline std::size_t Matrix::rank() const {
  Subspace s(cols_);
  for (const auto& r : a_) s.insert(r);
  return s.dim();
}

inline std::vector<Vec> Matrix::kernelBasis() const {
  // RREF of the matrix, then read off the free-variable solutions
  Subspace s(cols_);
  for (const auto& r : a_) s.insert(r);
  const auto& rows = s.basis();
  const auto& piv = s.pivots();
  std::vector<Vec> out;
  for (std::size_t j : s.freeCoordinates()) {
    Vec v = zeroVec(cols_);
    v[j] = Scalar(1);
    for (std::size_t r = 0; r < rows.size(); ++r) v[piv[r]] = -rows[r][j];
    out.push_back(std::move(v));
  }
  return out;
}

inline std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  std::size_t n = rows_;
  // Gauss-Jordan on [A | I]
  std::vector<Vec> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = zeroVec(2 * n);
    for (std::size_t j = 0; j < n; ++j) w[i][j] = at(i, j);
    w[i][n + i] = Scalar(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && w[p][col].isZero()) ++p;
    if (p == n) return std::nullopt;
    std::swap(w[col], w[p]);
    Vec piv = w[col][col].inverse() * w[col];
    w[col] = piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || w[i][col].isZero()) continue;
      w[i] = w[i] - w[i][col] * piv;
    }
  }
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = w[i][n + j];
  return inv;
}

inline std::optional<Vec> Matrix::solve(const Vec& rhs) const {
  if (rhs.size() != rows_) throw DimensionMismatch("solve rhs");
  // eliminate on [A^T; e_j]-style augmented rows: work with columns as unknowns
  std::vector<Vec> w(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    w[i] = zeroVec(cols_ + 1);
    for (std::size_t j = 0; j < cols_; ++j) w[i][j] = at(i, j);
    w[i][cols_] = rhs[i];
  }
  std::vector<long> pivotOfCol(cols_, -1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t p = rank;
    while (p < rows_ && w[p][col].isZero()) ++p;
    if (p == rows_) continue;
    std::swap(w[rank], w[p]);
    Vec piv = w[rank][col].inverse() * w[rank];
    w[rank] = piv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == rank || w[i][col].isZero()) continue;
      w[i] = w[i] - w[i][col] * piv;
    }
    pivotOfCol[col] = static_cast<long>(rank);
    ++rank;
  }
  for (std::size_t i = rank; i < rows_; ++i)
    if (!w[i][cols_].isZero()) return std::nullopt;  // inconsistent
  Vec x = zeroVec(cols_);
  for (std::size_t col = 0; col < cols_; ++col)
    if (pivotOfCol[col] >= 0) x[col] = w[static_cast<std::size_t>(pivotOfCol[col])][cols_];
  return x;
}

}  // namespace hopfkit
