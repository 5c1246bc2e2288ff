#pragma once

// Independent reference computations used to freeze and cross-check
// results. Nothing here calls the elimination routines under test.

#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "fdalg/algebra.hpp"
#include "fdalg/linalg.hpp"
#include "fdalg/operator.hpp"

namespace fdalg::testing {

/// Laplace expansion along the first row.
inline FieldValue cofactor_det(const Matrix& m) {
  const std::size_t n = m.rows();
  const Field& f = m.field();
  if (n == 0) return f.one();
  if (n == 1) return m(0, 0);
  FieldValue total = f.zero();
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    Matrix minor(f, n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == c) continue;
        minor(r - 1, cc++) = m(r, k);
      }
    }
    FieldValue term = m(0, c) * cofactor_det(minor);
    if (c % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

inline std::vector<std::uint64_t> residues(const Vector& v) {
  std::vector<std::uint64_t> out;
  for (const auto& x : v) out.push_back(x.residue());
  return out;
}

/// Rank over GF(p) from the size of the row space, enumerating every
/// combination of rows.
inline std::size_t brute_force_rank(const Matrix& m) {
  const Field& f = m.field();
  const std::uint64_t p = f.characteristic();
  std::set<std::vector<std::uint64_t>> span;
  std::vector<std::uint64_t> coeff(m.rows(), 0);
  while (true) {
    Vector v(m.cols(), f.zero());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const FieldValue c = f.from_integer(static_cast<long long>(coeff[r]));
      for (std::size_t k = 0; k < m.cols(); ++k) v[k] += c * m(r, k);
    }
    span.insert(residues(v));
    std::size_t r = 0;
    while (r < m.rows() && ++coeff[r] == p) coeff[r++] = 0;
    if (r == m.rows()) break;
  }
  std::size_t rank = 0;
  for (std::size_t size = 1; size < span.size(); size *= p) ++rank;
  return rank;
}

struct BruteForceSolutions {
  std::size_t count = 0;
  std::optional<Vector> any;
};

/// Every x in GF(p)^cols with m·x = rhs.
inline BruteForceSolutions brute_force_solve(const Matrix& m, const Vector& rhs) {
  const Field& f = m.field();
  const std::uint64_t p = f.characteristic();
  BruteForceSolutions out;
  std::vector<std::uint64_t> digits(m.cols(), 0);
  while (true) {
    Vector x;
    for (auto d : digits) x.push_back(f.from_integer(static_cast<long long>(d)));
    bool ok = true;
    for (std::size_t r = 0; r < m.rows() && ok; ++r) {
      FieldValue s = f.zero();
      for (std::size_t c = 0; c < m.cols(); ++c) s += m(r, c) * x[c];
      ok = s == rhs[r];
    }
    if (ok) {
      ++out.count;
      if (!out.any) out.any = x;
    }
    std::size_t c = 0;
    while (c < digits.size() && ++digits[c] == p) digits[c++] = 0;
    if (c == digits.size()) break;
  }
  return out;
}

/// expr(x) evaluated term by term with explicit products.
inline Element apply_by_products(const OperatorExpression& expr, const Element& x) {
  Element out = Element::zero(x.algebra());
  for (const auto& t : expr.terms()) {
    out += t.grouping == Grouping::LeftFirst ? multiply(multiply(t.left, x), t.right)
                                             : multiply(t.left, multiply(x, t.right));
  }
  return out;
}

/// Matrix whose column j is expr(e_j), built from explicit products.
inline Matrix operator_matrix_by_products(const OperatorExpression& expr) {
  const Algebra& alg = expr.algebra();
  Matrix m(alg.field(), alg.dim(), alg.dim());
  for (std::size_t j = 0; j < alg.dim(); ++j) {
    Element col = apply_by_products(expr, Element::basis(alg, j));
    for (std::size_t k = 0; k < alg.dim(); ++k) m(k, j) = col[k];
  }
  return m;
}

/// Entries of an element of matrix_algebra(m) as an m×m matrix.
inline Matrix as_square_matrix(const Element& e) {
  const std::size_t m = static_cast<std::size_t>(std::lround(std::sqrt(double(e.dim()))));
  Matrix out(e.algebra().field(), m, m);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q) out(p, q) = e[p * m + q];
  return out;
}

inline FieldValue power(FieldValue base, std::size_t exp) {
  FieldValue out = base.field().one();
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace fdalg::testing
