#pragma once

// Dense exact linear algebra over FieldValue: reduced row-echelon form,
// determinants, kernels, system solving and inversion.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fdalg/error.hpp"
#include "fdalg/field.hpp"

namespace fdalg {

using Vector = std::vector<FieldValue>;

class Matrix {
 public:
  Matrix() = default;

  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(field),
        rows_(rows),
        cols_(cols),
        data_(rows * cols, field.zero()) {}

  static Matrix identity(Field field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  /// Row-major entries; every entry must belong to `field`.
  static Matrix from_rows(Field field,
                          const std::vector<std::vector<FieldValue>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) {
        throw Error(Errc::DimensionMismatch, "ragged matrix rows");
      }
      for (std::size_t c = 0; c < cols; ++c) {
        if (rows[r][c].field() != field) {
          throw Error(Errc::MixedFields, "matrix entry from a different field");
        }
        m(r, c) = rows[r][c];
      }
    }
    return m;
  }

  static Matrix from_integers(Field field,
                              const std::vector<std::vector<long long>>& rows) {
    std::vector<std::vector<FieldValue>> values;
    for (const auto& row : rows) {
      auto& out = values.emplace_back();
      for (long long v : row) out.push_back(field.from_integer(v));
    }
    return from_rows(field, values);
  }

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  FieldValue& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const FieldValue& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const FieldValue> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  Vector column(std::size_t c) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) {
      std::swap((*this)(a, c), (*this)(b, c));
    }
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!v.is_zero()) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }

  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }

  Matrix& operator*=(const FieldValue& s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw Error(Errc::DimensionMismatch, "matrix product shape mismatch");
    }
    if (a.field_ != b.field_) {
      throw Error(Errc::MixedFields, "matrix product across fields");
    }
    Matrix out(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const FieldValue& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (b(k, j).is_zero()) continue;
          out(i, j) += aik * b(k, j);
        }
      }
    }
    return out;
  }

  friend Vector operator*(const Matrix& a, const Vector& x) {
    if (a.cols_ != x.size()) {
      throw Error(Errc::DimensionMismatch, "matrix-vector shape mismatch");
    }
    Vector out(a.rows_, a.field_.zero());
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < a.cols_; ++j) {
        if (a(i, j).is_zero() || x[j].is_zero()) continue;
        out[i] += a(i, j) * x[j];
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t r = 0; r < rows_; ++r) {
      out += "[";
      for (std::size_t c = 0; c < cols_; ++c) {
        if (c) out += ", ";
        out += (*this)(r, c).to_string();
      }
      out += "]\n";
    }
    return out;
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw Error(Errc::DimensionMismatch, "matrix shapes differ");
    }
  }

  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldValue> data_;
};

/// [m | rhs] with rhs as extra columns.
inline Matrix augment(const Matrix& m, const Matrix& rhs) {
  if (m.rows() != rhs.rows()) {
    throw Error(Errc::DimensionMismatch, "augment: row counts differ");
  }
  Matrix out(m.field(), m.rows(), m.cols() + rhs.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
    for (std::size_t c = 0; c < rhs.cols(); ++c) out(r, m.cols() + c) = rhs(r, c);
  }
  return out;
}

inline Matrix augment(const Matrix& m, const Vector& rhs) {
  Matrix col(m.field(), rhs.size(), 1);
  for (std::size_t r = 0; r < rhs.size(); ++r) col(r, 0) = rhs[r];
  return augment(m, col);
}

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;

  std::size_t rank() const noexcept { return pivot_columns.size(); }
};

/// Gauss-Jordan elimination to the unique reduced row-echelon form.
/// Pivot search stops at `column_limit` (columns beyond it are carried along).
inline RowEchelon rref(Matrix m, std::size_t column_limit) {
  RowEchelon out;
  std::size_t lead_row = 0;
  const std::size_t limit = std::min(column_limit, m.cols());
  for (std::size_t c = 0; c < limit && lead_row < m.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(pivot, lead_row);

    const FieldValue scale = m(lead_row, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) *= scale;

    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c).is_zero()) continue;
      const FieldValue factor = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (m(lead_row, j).is_zero()) continue;
        m(r, j) -= factor * m(lead_row, j);
      }
    }
    out.pivot_columns.push_back(c);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

inline RowEchelon rref(Matrix m) {
  const std::size_t cols = m.cols();
  return rref(std::move(m), cols);
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank(); }

namespace detail {

// Fraction-free elimination on integers: every intermediate quotient is
// exact, and the last pivot is the determinant.
inline mpz_class bareiss_det(std::vector<std::vector<mpz_class>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace detail

/// Exact determinant. Over the rationals each row is scaled to integers and
/// reduced by Bareiss elimination; over GF(p) plain elimination suffices.
inline FieldValue det(const Matrix& m) {
  if (!m.is_square()) throw Error(Errc::NotSquare, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  const Field& f = m.field();

  if (f.is_rational()) {
    std::vector<std::vector<mpz_class>> ints(n, std::vector<mpz_class>(n));
    mpz_class scale = 1;
    for (std::size_t r = 0; r < n; ++r) {
      mpz_class l = 1;
      for (std::size_t c = 0; c < n; ++c) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
                m(r, c).rational().get_den_mpz_t());
      }
      for (std::size_t c = 0; c < n; ++c) {
        const mpq_class& q = m(r, c).rational();
        ints[r][c] = q.get_num() * (l / q.get_den());
      }
      scale *= l;
    }
    return f.from_fraction(detail::bareiss_det(std::move(ints)), scale);
  }

  Matrix a = m;
  FieldValue result = f.one();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return f.zero();
    if (pivot != k) {
      a.swap_rows(pivot, k);
      result = -result;
    }
    result *= a(k, k);
    const FieldValue inv = a(k, k).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const FieldValue factor = a(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
    }
  }
  return result;
}

/// Canonical right null-space basis: one vector per free column, with that
/// free variable 1 and the other free variables 0.
inline std::vector<Vector> kernel_from_rref(const RowEchelon& e, std::size_t cols) {
  const Field& f = e.reduced.field();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t pc : e.pivot_columns) is_pivot[pc] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols, f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) {
      v[e.pivot_columns[r]] = -e.reduced(r, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::vector<Vector> kernel(const Matrix& m) {
  return kernel_from_rref(rref(m), m.cols());
}

template <typename V>
struct Unique {
  V x;
};

template <typename V>
struct Affine {
  V particular;
  std::vector<V> kernel;
};

/// rank([m | rhs]) = rank(m) + 1 for an inconsistent system.
struct Inconsistent {
  std::size_t rank = 0;
  std::size_t augmented_rank = 0;
};

template <typename V>
using SolveOutcome = std::variant<Unique<V>, Affine<V>, Inconsistent>;

/// Classifies m·x = rhs. The particular solution sets free variables to 0;
/// the kernel basis follows `kernel_from_rref`.
inline SolveOutcome<Vector> solve_system(const Matrix& m, const Vector& rhs) {
  if (m.rows() != rhs.size()) {
    throw Error(Errc::DimensionMismatch,
                "right-hand side has " + std::to_string(rhs.size()) +
                    " entries, matrix has " + std::to_string(m.rows()) + " rows");
  }
  for (const auto& v : rhs) {
    if (v.field() != m.field()) {
      throw Error(Errc::MixedFields, "right-hand side from a different field");
    }
  }
  const std::size_t cols = m.cols();
  RowEchelon e = rref(augment(m, rhs), cols);
  const std::size_t r = e.rank();

  // Rows below the pivots are zero in the coefficient part.
  for (std::size_t row = r; row < m.rows(); ++row) {
    if (!e.reduced(row, cols).is_zero()) return Inconsistent{r, r + 1};
  }

  Vector particular(cols, m.field().zero());
  for (std::size_t row = 0; row < r; ++row) {
    particular[e.pivot_columns[row]] = e.reduced(row, cols);
  }
  if (r == cols) return Unique<Vector>{std::move(particular)};
  return Affine<Vector>{std::move(particular), kernel_from_rref(e, cols)};
}

/// Inverse of a square matrix, or nullopt when it is singular.
inline std::optional<Matrix> invert_matrix(const Matrix& m) {
  if (!m.is_square()) throw Error(Errc::NotSquare, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  RowEchelon e = rref(augment(m, Matrix::identity(m.field(), n)), n);
  if (e.rank() < n) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

}  // namespace fdalg
