#pragma once

// Finite-dimensional algebras given by structure constants
//
//   e_i · e_j = Σ_k B^k_ij e_k
//
// so that (a·b)^k = Σ_{i,j} B^k_ij a^i b^j. No identities are imposed on
// the constants: algebras may be nonassociative, noncommutative or unitless.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "fdalg/error.hpp"
#include "fdalg/field.hpp"
#include "fdalg/linalg.hpp"

namespace fdalg {

struct StructureConstant {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  FieldValue value;
};

class Element;

namespace detail {

struct AlgebraData {
  std::string name;
  Field field;
  std::size_t dim = 0;
  std::vector<std::string> basis_names;
  // Sorted by (i, j, k); zero values are never stored.
  std::vector<StructureConstant> constants;

  // Lazily computed structural properties. std::call_once publishes each
  // result exactly once, so concurrent readers are safe.
  mutable std::once_flag associative_once;
  mutable bool associative = false;
  mutable std::once_flag commutative_once;
  mutable bool commutative = false;
  mutable std::once_flag unit_once;
  mutable std::optional<Vector> unit;
};

inline bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s.front())) && s.front() != '_')
    return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace detail

/// Shared, immutable handle to an algebra. Copies refer to the same algebra;
/// elements remember which one they belong to.
class Algebra {
 public:
  /// Validates indices and uniqueness of (i, j, k); zero values are dropped.
  static Algebra create(Field field, std::size_t dim,
                        std::vector<StructureConstant> constants,
                        std::vector<std::string> basis_names = {},
                        std::string name = {}) {
    if (dim == 0) {
      throw Error(Errc::DimensionMismatch, "algebra dimension must be at least 1");
    }
    if (basis_names.empty()) {
      for (std::size_t i = 0; i < dim; ++i) basis_names.push_back("e" + std::to_string(i));
    }
    if (basis_names.size() != dim) {
      throw Error(Errc::DimensionMismatch,
                  "expected " + std::to_string(dim) + " basis names, got " +
                      std::to_string(basis_names.size()));
    }
    std::set<std::string_view> seen_names;
    for (const auto& n : basis_names) {
      if (!detail::is_identifier(n)) {
        throw Error(Errc::BadBasisName, "basis name '" + n + "' is not an identifier");
      }
      if (!seen_names.insert(n).second) {
        throw Error(Errc::BadBasisName, "duplicate basis name '" + n + "'");
      }
    }

    auto key = [](const StructureConstant& c) { return std::tie(c.i, c.j, c.k); };
    for (const auto& c : constants) {
      if (c.i >= dim || c.j >= dim || c.k >= dim) {
        throw Error(Errc::IndexOutOfRange,
                    "structure constant (" + std::to_string(c.i) + ", " +
                        std::to_string(c.j) + ", " + std::to_string(c.k) +
                        ") outside dimension " + std::to_string(dim));
      }
      if (c.value.field() != field) {
        throw Error(Errc::BadField, "structure constant not in " + field.to_string());
      }
    }
    std::sort(constants.begin(), constants.end(),
              [&](const auto& a, const auto& b) { return key(a) < key(b); });
    for (std::size_t n = 1; n < constants.size(); ++n) {
      if (key(constants[n - 1]) == key(constants[n])) {
        const auto& c = constants[n];
        throw Error(Errc::DuplicateTriple,
                    "structure constant (" + std::to_string(c.i) + ", " +
                        std::to_string(c.j) + ", " + std::to_string(c.k) +
                        ") given twice");
      }
    }
    std::erase_if(constants, [](const auto& c) { return c.value.is_zero(); });

    auto data = std::make_shared<detail::AlgebraData>();
    data->name = std::move(name);
    data->field = field;
    data->dim = dim;
    data->basis_names = std::move(basis_names);
    data->constants = std::move(constants);
    return Algebra(std::move(data));
  }

  const std::string& name() const noexcept { return data_->name; }
  const Field& field() const noexcept { return data_->field; }
  std::size_t dim() const noexcept { return data_->dim; }
  const std::vector<std::string>& basis_names() const noexcept {
    return data_->basis_names;
  }
  std::span<const StructureConstant> constants() const noexcept {
    return data_->constants;
  }

  /// B^k_ij.
  FieldValue constant(std::size_t i, std::size_t j, std::size_t k) const {
    const auto& cs = data_->constants;
    auto it = std::lower_bound(cs.begin(), cs.end(), std::tie(i, j, k),
                               [](const StructureConstant& c, const auto& key) {
                                 return std::tie(c.i, c.j, c.k) < key;
                               });
    if (it != cs.end() && it->i == i && it->j == j && it->k == k) return it->value;
    return field().zero();
  }

  std::optional<std::size_t> basis_index(std::string_view name) const {
    const auto& names = data_->basis_names;
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return i;
    return std::nullopt;
  }

  /// Identity, not structure: two separately built copies are distinct.
  bool same(const Algebra& o) const noexcept { return data_ == o.data_; }

  /// Same field, dimension and structure constants (names are ignored).
  friend bool structurally_equal(const Algebra& a, const Algebra& b) {
    if (a.field() != b.field() || a.dim() != b.dim()) return false;
    const auto& x = a.data_->constants;
    const auto& y = b.data_->constants;
    return std::equal(x.begin(), x.end(), y.begin(), y.end(),
                      [](const auto& p, const auto& q) {
                        return p.i == q.i && p.j == q.j && p.k == q.k &&
                               p.value == q.value;
                      });
  }

  bool is_associative() const;
  bool is_commutative() const;
  std::optional<Element> unit() const;

 private:
  explicit Algebra(std::shared_ptr<const detail::AlgebraData> data)
      : data_(std::move(data)) {}

  std::shared_ptr<const detail::AlgebraData> data_;
};

class Element {
 public:
  Element(Algebra algebra, Vector coords)
      : algebra_(std::move(algebra)), coords_(std::move(coords)) {
    if (coords_.size() != algebra_.dim()) {
      throw Error(Errc::DimensionMismatch,
                  "element has " + std::to_string(coords_.size()) +
                      " coordinates, algebra dimension is " +
                      std::to_string(algebra_.dim()));
    }
    for (const auto& c : coords_) {
      if (c.field() != algebra_.field()) {
        throw Error(Errc::MixedFields, "coordinate not in " + algebra_.field().to_string());
      }
    }
  }

  static Element zero(const Algebra& algebra) {
    return Element(algebra, Vector(algebra.dim(), algebra.field().zero()));
  }

  static Element basis(const Algebra& algebra, std::size_t index) {
    if (index >= algebra.dim()) {
      throw Error(Errc::IndexOutOfRange, "basis index " + std::to_string(index) +
                                             " outside dimension " +
                                             std::to_string(algebra.dim()));
    }
    Element e = zero(algebra);
    e.coords_[index] = algebra.field().one();
    return e;
  }

  const Algebra& algebra() const noexcept { return algebra_; }
  const Vector& coords() const noexcept { return coords_; }
  const FieldValue& operator[](std::size_t i) const { return coords_[i]; }
  std::size_t dim() const noexcept { return coords_.size(); }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(),
                       [](const auto& c) { return c.is_zero(); });
  }

  Element& operator+=(const Element& o) {
    require_same_algebra(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  Element& operator-=(const Element& o) {
    require_same_algebra(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  Element& operator*=(const FieldValue& s) {
    for (auto& c : coords_) c *= s;
    return *this;
  }

  Element operator-() const {
    Element out(*this);
    for (auto& c : out.coords_) c = -c;
    return out;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const FieldValue& s, Element a) { return a *= s; }
  friend Element operator*(Element a, const FieldValue& s) { return a *= s; }

  /// Elements of distinct algebras compare unequal.
  friend bool operator==(const Element& a, const Element& b) {
    return a.algebra_.same(b.algebra_) && a.coords_ == b.coords_;
  }

  void require_same_algebra(const Element& o) const {
    if (!algebra_.same(o.algebra_)) {
      throw Error(Errc::MixedAlgebras, "elements belong to different algebras");
    }
  }

 private:
  Algebra algebra_;
  Vector coords_;
};

inline void require_same_algebra(const Algebra& a, const Algebra& b) {
  if (!a.same(b)) throw Error(Errc::MixedAlgebras, "elements belong to different algebras");
}

/// (a·b)^k = Σ_{i,j} B^k_ij a^i b^j.
inline Element multiply(const Element& a, const Element& b) {
  a.require_same_algebra(b);
  const Algebra& alg = a.algebra();
  Vector out(alg.dim(), alg.field().zero());
  for (const auto& c : alg.constants()) {
    if (a[c.i].is_zero() || b[c.j].is_zero()) continue;
    out[c.k] += c.value * a[c.i] * b[c.j];
  }
  return Element(alg, std::move(out));
}

inline Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

/// L_a with (L_a)^k_j = Σ_i B^k_ij a^i, so coords(a·x) = L_a · coords(x).
inline Matrix left_mul_matrix(const Element& a) {
  const Algebra& alg = a.algebra();
  Matrix m(alg.field(), alg.dim(), alg.dim());
  for (const auto& c : alg.constants()) {
    if (a[c.i].is_zero()) continue;
    m(c.k, c.j) += c.value * a[c.i];
  }
  return m;
}

/// R_a with (R_a)^k_i = Σ_j B^k_ij a^j, so coords(x·a) = R_a · coords(x).
inline Matrix right_mul_matrix(const Element& a) {
  const Algebra& alg = a.algebra();
  Matrix m(alg.field(), alg.dim(), alg.dim());
  for (const auto& c : alg.constants()) {
    if (a[c.j].is_zero()) continue;
    m(c.k, c.i) += c.value * a[c.j];
  }
  return m;
}

namespace detail {

// products[i][j] = coords(e_i · e_j)
inline std::vector<std::vector<Vector>> basis_products(const Algebra& alg) {
  const std::size_t n = alg.dim();
  std::vector<std::vector<Vector>> p(n, std::vector<Vector>(n, Vector(n, alg.field().zero())));
  for (const auto& c : alg.constants()) p[c.i][c.j][c.k] = c.value;
  return p;
}

// Trilinearity reduces associativity to basis triples.
inline bool compute_associative(const Algebra& alg) {
  const std::size_t n = alg.dim();
  const auto p = basis_products(alg);
  const Field& f = alg.field();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t out = 0; out < n; ++out) {
          FieldValue lhs = f.zero(), rhs = f.zero();
          for (std::size_t m = 0; m < n; ++m) {
            if (!p[i][j][m].is_zero() && !p[m][k][out].is_zero())
              lhs += p[i][j][m] * p[m][k][out];
            if (!p[j][k][m].is_zero() && !p[i][m][out].is_zero())
              rhs += p[j][k][m] * p[i][m][out];
          }
          if (lhs != rhs) return false;
        }
      }
    }
  }
  return true;
}

inline bool compute_commutative(const Algebra& alg) {
  for (const auto& c : alg.constants()) {
    if (alg.constant(c.j, c.i, c.k) != c.value) return false;
  }
  return true;
}

// A unit u satisfies L_u = I and R_u = I; both are linear in u's
// coordinates, giving 2n² equations in n unknowns.
inline std::optional<Vector> compute_unit(const Algebra& alg) {
  const std::size_t n = alg.dim();
  const Field& f = alg.field();
  Matrix system(f, 2 * n * n, n);
  Vector rhs(2 * n * n, f.zero());
  for (const auto& c : alg.constants()) {
    system(c.k * n + c.j, c.i) += c.value;          // (L_u)^k_j
    system(n * n + c.k * n + c.i, c.j) += c.value;  // (R_u)^k_i
  }
  for (std::size_t k = 0; k < n; ++k) {
    rhs[k * n + k] = f.one();
    rhs[n * n + k * n + k] = f.one();
  }
  auto outcome = solve_system(system, rhs);
  if (auto* u = std::get_if<Unique<Vector>>(&outcome)) return u->x;
  // Two-sided units are unique, so a consistent system always has rank n.
  if (auto* a = std::get_if<Affine<Vector>>(&outcome)) return a->particular;
  return std::nullopt;
}

}  // namespace detail

inline bool Algebra::is_associative() const {
  std::call_once(data_->associative_once,
                 [this] { data_->associative = detail::compute_associative(*this); });
  return data_->associative;
}

inline bool Algebra::is_commutative() const {
  std::call_once(data_->commutative_once,
                 [this] { data_->commutative = detail::compute_commutative(*this); });
  return data_->commutative;
}

inline std::optional<Element> Algebra::unit() const {
  std::call_once(data_->unit_once, [this] { data_->unit = detail::compute_unit(*this); });
  if (!data_->unit) return std::nullopt;
  return Element(*this, *data_->unit);
}

inline bool is_associative(const Algebra& alg) { return alg.is_associative(); }
inline bool is_commutative(const Algebra& alg) { return alg.is_commutative(); }
inline std::optional<Element> find_unit(const Algebra& alg) { return alg.unit(); }

}  // namespace fdalg
