#pragma once

// Linear "sandwich" equations
//
//   Σ_s a_s0 · x · a_s1 = b
//
// over a finite-dimensional algebra. Each term is reduced to an n×n matrix
// over the base field, so the equation becomes an ordinary linear system
// whose solution set is unique, affine or empty. In associative algebras the
// inverse of a bijective operator is returned again as a sum of sandwiches,
//
//   x = Σ_{p,q} c^{pq} (e_p · b) · e_q.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "fdalg/algebra.hpp"
#include "fdalg/error.hpp"
#include "fdalg/linalg.hpp"

namespace fdalg {

/// Parenthesization of a term; only matters in nonassociative algebras.
enum class Grouping {
  LeftFirst,   // (left · x) · right
  RightFirst,  // left · (x · right)
};

struct SandwichTerm {
  Element left;
  Element right;
  Grouping grouping = Grouping::LeftFirst;

  Element apply(const Element& x) const {
    return grouping == Grouping::LeftFirst ? (left * x) * right : left * (x * right);
  }
};

/// x ↦ Σ_s term_s(x). Non-empty; every coefficient lives in one algebra.
class OperatorExpression {
 public:
  explicit OperatorExpression(std::vector<SandwichTerm> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw Error(Errc::EmptyExpression, "operator expression has no terms");
    const Algebra& alg = terms_.front().left.algebra();
    for (const auto& t : terms_) {
      require_same_algebra(alg, t.left.algebra());
      require_same_algebra(alg, t.right.algebra());
    }
  }

  const Algebra& algebra() const noexcept { return terms_.front().left.algebra(); }
  std::span<const SandwichTerm> terms() const noexcept { return terms_; }

  /// Evaluates the expression by explicit products.
  Element apply(const Element& x) const {
    require_same_algebra(algebra(), x.algebra());
    Element out = Element::zero(algebra());
    for (const auto& t : terms_) out += t.apply(x);
    return out;
  }

 private:
  std::vector<SandwichTerm> terms_;
};

/// Matrix of x ↦ (left·x)·right, i.e. R_right · L_left, or of
/// x ↦ left·(x·right), i.e. L_left · R_right.
inline Matrix term_matrix(const SandwichTerm& t) {
  t.left.require_same_algebra(t.right);
  const Matrix l = left_mul_matrix(t.left);
  const Matrix r = right_mul_matrix(t.right);
  return t.grouping == Grouping::LeftFirst ? r * l : l * r;
}

/// M with coords(expr(x)) = M · coords(x).
inline Matrix operator_matrix(const OperatorExpression& expr) {
  const Algebra& alg = expr.algebra();
  Matrix m(alg.field(), alg.dim(), alg.dim());
  for (const auto& t : expr.terms()) m += term_matrix(t);
  return m;
}

namespace detail {

inline std::vector<Element> to_elements(const Algebra& alg, std::vector<Vector> vs) {
  std::vector<Element> out;
  out.reserve(vs.size());
  for (auto& v : vs) out.emplace_back(alg, std::move(v));
  return out;
}

inline SolveOutcome<Element> lift(const Algebra& alg, SolveOutcome<Vector> outcome) {
  if (auto* u = std::get_if<Unique<Vector>>(&outcome)) {
    return Unique<Element>{Element(alg, std::move(u->x))};
  }
  if (auto* a = std::get_if<Affine<Vector>>(&outcome)) {
    return Affine<Element>{Element(alg, std::move(a->particular)),
                           to_elements(alg, std::move(a->kernel))};
  }
  return std::get<Inconsistent>(outcome);
}

}  // namespace detail

/// Solves expr(x) = b. Unique exactly when det(operator_matrix) ≠ 0.
inline SolveOutcome<Element> solve_linear(const OperatorExpression& expr, const Element& b) {
  require_same_algebra(expr.algebra(), b.algebra());
  return detail::lift(expr.algebra(), solve_system(operator_matrix(expr), b.coords()));
}

/// b ↦ Σ_{p,q} c^{pq} (e_p · b) · e_q, with c stored as an n×n matrix.
struct TensorOperator {
  Algebra algebra;
  Matrix coefficients;
};

inline TensorOperator identity_tensor(const Algebra& alg) {
  auto unit = alg.unit();
  if (!unit) throw Error(Errc::NoUnit, "algebra has no unit");
  Matrix c(alg.field(), alg.dim(), alg.dim());
  for (std::size_t p = 0; p < alg.dim(); ++p)
    for (std::size_t q = 0; q < alg.dim(); ++q) c(p, q) = (*unit)[p] * (*unit)[q];
  return {alg, std::move(c)};
}

inline Element apply_tensor(const TensorOperator& t, const Element& b) {
  require_same_algebra(t.algebra, b.algebra());
  const Algebra& alg = t.algebra;
  const std::size_t n = alg.dim();
  Element out = Element::zero(alg);
  for (std::size_t p = 0; p < n; ++p) {
    bool row_used = false;
    for (std::size_t q = 0; q < n && !row_used; ++q) row_used = !t.coefficients(p, q).is_zero();
    if (!row_used) continue;
    const Element eb = Element::basis(alg, p) * b;
    for (std::size_t q = 0; q < n; ++q) {
      if (t.coefficients(p, q).is_zero()) continue;
      out += t.coefficients(p, q) * (eb * Element::basis(alg, q));
    }
  }
  return out;
}

/// Writes a linear map of an associative algebra as Σ c^{pq} R_{e_q} L_{e_p}
/// by solving for c entrywise (n² equations, n² unknowns). Free
/// coefficients are set to 0. Throws NotRepresentable when `target` lies
/// outside the span of the basis sandwiches.
inline TensorOperator standard_form(const Algebra& alg, const Matrix& target) {
  const std::size_t n = alg.dim();
  if (target.rows() != n || target.cols() != n) {
    throw Error(Errc::DimensionMismatch, "target map has the wrong shape");
  }
  if (!alg.is_associative()) {
    throw Error(Errc::NonassociativeUnsupported,
                "tensor form requires an associative algebra");
  }
  const Field& f = alg.field();
  std::vector<Matrix> left, right;
  for (std::size_t p = 0; p < n; ++p) {
    left.push_back(left_mul_matrix(Element::basis(alg, p)));
    right.push_back(right_mul_matrix(Element::basis(alg, p)));
  }
  Matrix system(f, n * n, n * n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      const Matrix s = right[q] * left[p];
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) system(r * n + c, p * n + q) = s(r, c);
    }
  }
  Vector rhs;
  rhs.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) rhs.push_back(target(r, c));

  auto outcome = solve_system(system, rhs);
  const Vector* coeffs = nullptr;
  if (auto* u = std::get_if<Unique<Vector>>(&outcome)) coeffs = &u->x;
  if (auto* a = std::get_if<Affine<Vector>>(&outcome)) coeffs = &a->particular;
  if (!coeffs) {
    throw Error(Errc::NotRepresentable, "map is not a linear combination of basis sandwiches");
  }
  Matrix c(f, n, n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) c(p, q) = (*coeffs)[p * n + q];
  return {alg, std::move(c)};
}

/// Inverse of a bijective operator in tensor form: the coefficients solve
///
///   Σ_{p,q} c^{pq} R_{e_q} L_{e_p} = M⁻¹,   M = operator_matrix(expr).
///
/// Throws NonassociativeUnsupported, Singular (det M = 0) or NotRepresentable.
inline TensorOperator inverse_tensor(const OperatorExpression& expr) {
  const Algebra& alg = expr.algebra();
  if (!alg.is_associative()) {
    throw Error(Errc::NonassociativeUnsupported,
                "tensor-form inverse requires an associative algebra");
  }
  auto inverse = invert_matrix(operator_matrix(expr));
  if (!inverse) throw Error(Errc::Singular, "operator is singular");
  return standard_form(alg, *inverse);
}

/// a has a right inverse iff L_a is nonsingular.
inline bool is_right_invertible(const Element& a) {
  return !det(left_mul_matrix(a)).is_zero();
}

/// The unique x with a·x = 1, or nullopt. Throws NoUnit on unitless algebras.
inline std::optional<Element> right_inverse(const Element& a) {
  auto unit = a.algebra().unit();
  if (!unit) throw Error(Errc::NoUnit, "algebra has no unit");
  OperatorExpression expr({{a, *unit, Grouping::LeftFirst}});
  auto outcome = solve_linear(expr, *unit);
  if (auto* u = std::get_if<Unique<Element>>(&outcome)) return std::move(u->x);
  return std::nullopt;
}

/// x ↦ a·x − x·a.
inline OperatorExpression commutator_expression(const Element& a) {
  auto unit = a.algebra().unit();
  if (!unit) throw Error(Errc::NoUnit, "algebra has no unit");
  return OperatorExpression({{a, *unit, Grouping::LeftFirst}, {-*unit, a, Grouping::LeftFirst}});
}

/// Solves a·x − x·a = 1.
inline SolveOutcome<Element> commutator_unit_solve(const Element& a) {
  auto unit = a.algebra().unit();
  if (!unit) throw Error(Errc::NoUnit, "algebra has no unit");
  return solve_linear(commutator_expression(a), *unit);
}

}  // namespace fdalg
