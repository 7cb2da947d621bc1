#pragma once

#include <plesken/scalar.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace plesken {

using Vector = std::vector<Scalar>;

inline Vector zero_vector(std::size_t n) { return Vector(n); }

inline Vector unit_vector(std::size_t n, std::size_t k) {
  Vector v(n);
  v.at(k) = 1;
  return v;
}

inline bool is_zero(std::span<const Scalar> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline Vector operator+(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

inline Vector operator-(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}

inline Vector operator*(const Scalar& c, Vector v) {
  for (auto& x : v) x *= c;
  return v;
}

inline Vector conj(Vector v) {
  for (auto& x : v) x = x.conj();
  return v;
}

/// Dense row-major matrix over Gaussian rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
    return m;
  }

  /// Stacks vectors as rows; all must share `cols` entries.
  static Matrix from_rows(std::span<const Vector> rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const { return {row(r).begin(), row(r).end()}; }

  Vector column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const { return plesken::is_zero(data_); }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if ((*this)(r, c) != Scalar(r == c ? 1 : 0)) return false;
    return true;
  }

  bool is_symmetric() const { return rows_ == cols_ && *this == transpose(); }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const Scalar& c, Matrix m) {
    for (auto& x : m.data_) x *= c;
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& lhs = a(r, k);
        if (lhs.is_zero()) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) add_product(out(r, c), lhs, b(k, c));
      }
    return out;
  }

  friend Vector operator*(const Matrix& a, std::span<const Scalar> x) {
    if (a.cols_ != x.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    Vector out(a.rows_);
    for (std::size_t c = 0; c < a.cols_; ++c) {
      if (x[c].is_zero()) continue;
      for (std::size_t r = 0; r < a.rows_; ++r) add_product(out[r], a(r, c), x[c]);
    }
    return out;
  }
  friend Vector operator*(const Matrix& a, const Vector& x) { return a * std::span<const Scalar>(x); }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

struct RowEchelon {
  Matrix matrix;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by Gauss-Jordan elimination with unit pivots.
inline RowEchelon rref(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t r = lead_row;
    while (r < m.rows() && m(r, c).is_zero()) ++r;
    if (r == m.rows()) continue;
    if (r != lead_row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(r, k), m(lead_row, k));

    Scalar inv = m(lead_row, c).inverse();
    for (std::size_t k = c; k < m.cols(); ++k)
      if (!m(lead_row, k).is_zero()) m(lead_row, k) *= inv;

    for (std::size_t other = 0; other < m.rows(); ++other) {
      if (other == lead_row || m(other, c).is_zero()) continue;
      Scalar factor = m(other, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        const Scalar& p = m(lead_row, k);
        if (!p.is_zero()) m(other, k) -= factor * p;
      }
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

namespace detail {

inline std::vector<Vector> nonzero_rows(const RowEchelon& e) {
  std::vector<Vector> rows;
  rows.reserve(e.pivots.size());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) rows.push_back(e.matrix.row_vector(r));
  return rows;
}

}  // namespace detail

/// Right null space of `m`, returned as the rows of its reduced echelon form.
inline std::vector<Vector> kernel_basis(const Matrix& m) {
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<Vector> raw;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.matrix(r, f);
    raw.push_back(std::move(v));
  }
  if (raw.empty()) return raw;
  return detail::nonzero_rows(rref(Matrix::from_rows(raw, m.cols())));
}

/// Any exact solution of m x = rhs, or nullopt if the system is inconsistent.
inline std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = rhs[r];
  }
  RowEchelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.matrix(r, m.cols());
  return x;
}

/// A subspace of K^n held as a reduced echelon basis; equal subspaces have
/// identical representations.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace span(std::span<const Vector> vectors, std::size_t ambient) {
    Subspace s(ambient);
    if (vectors.empty()) return s;
    RowEchelon e = rref(Matrix::from_rows(vectors, ambient));
    s.basis_ = detail::nonzero_rows(e);
    s.pivots_ = std::move(e.pivots);
    return s;
  }

  static Subspace whole(std::size_t ambient) {
    std::vector<Vector> units;
    for (std::size_t k = 0; k < ambient; ++k) units.push_back(unit_vector(ambient, k));
    return span(units, ambient);
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Coordinates of v in basis(), or nullopt when v is not in the subspace.
  std::optional<Vector> coordinates(std::span<const Scalar> v) const {
    if (v.size() != ambient_) throw std::invalid_argument("subspace: vector length mismatch");
    Vector coords(basis_.size());
    Vector residual(v.begin(), v.end());
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      coords[r] = residual[pivots_[r]];
      if (coords[r].is_zero()) continue;
      for (std::size_t c = pivots_[r]; c < ambient_; ++c)
        if (!basis_[r][c].is_zero()) residual[c] -= coords[r] * basis_[r][c];
    }
    if (!plesken::is_zero(residual)) return std::nullopt;
    return coords;
  }

  bool contains(std::span<const Scalar> v) const { return coordinates(v).has_value(); }

  bool contains(const Subspace& other) const {
    for (const auto& v : other.basis_)
      if (!contains(v)) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace plesken
