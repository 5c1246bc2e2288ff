#pragma once

// Catalog of classical algebras: "rational", "complex", "quaternions",
// "octonions", "dual" and "matrix <m>".

#include <array>
#include <cctype>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fdalg/algebra.hpp"
#include "fdalg/error.hpp"
#include "fdalg/field.hpp"

namespace fdalg {

/// Full matrix algebra M_m. Basis e^p_q (named `e<p>_<q>`, 1-based) is
/// ordered row-major, index (p-1)·m + (q-1), with e^p_q · e^s_t = δ^s_q e^p_t.
inline Algebra matrix_algebra(std::size_t m, Field field = Field::rational()) {
  if (m == 0) throw Error(Errc::UnknownBuiltin, "matrix algebra order must be at least 1");
  std::vector<StructureConstant> cs;
  std::vector<std::string> names;
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = 0; q < m; ++q) {
      names.push_back("e" + std::to_string(p + 1) + "_" + std::to_string(q + 1));
      for (std::size_t t = 0; t < m; ++t) {
        cs.push_back({p * m + q, q * m + t, p * m + t, field.one()});
      }
    }
  }
  return Algebra::create(field, m * m, std::move(cs), std::move(names),
                         "matrix " + std::to_string(m));
}

namespace detail {

// Octonion multiplication: e0 is the unit, e_a² = -e0 for a ≥ 1, and for
// each line (a, b, c) of the Fano plane below, e_a e_b = e_c with cyclic
// shifts, and anticommuting order reversals.
inline constexpr std::array<std::array<std::size_t, 3>, 7> fano_lines{{
    {1, 2, 3},
    {1, 4, 5},
    {1, 7, 6},
    {2, 4, 6},
    {2, 5, 7},
    {3, 4, 7},
    {3, 6, 5},
}};

inline Algebra imaginary_units_algebra(std::size_t dim, Field f, std::string name,
                                           std::span<const std::array<std::size_t, 3>> lines) {
  std::vector<StructureConstant> cs;
  const FieldValue one = f.one();
  const FieldValue minus_one = -one;
  cs.push_back({0, 0, 0, one});
  for (std::size_t a = 1; a < dim; ++a) {
    cs.push_back({0, a, a, one});
    cs.push_back({a, 0, a, one});
    cs.push_back({a, a, 0, minus_one});
  }
  for (const auto& line : lines) {
    for (std::size_t s = 0; s < 3; ++s) {
      std::size_t a = line[s], b = line[(s + 1) % 3], c = line[(s + 2) % 3];
      cs.push_back({a, b, c, one});
      cs.push_back({b, a, c, minus_one});
    }
  }
  return Algebra::create(f, dim, std::move(cs), {}, std::move(name));
}

}  // namespace detail

inline Algebra rational_algebra(Field f = Field::rational()) {
  return Algebra::create(f, 1, {{0, 0, 0, f.one()}}, {}, "rational");
}

inline Algebra complex_algebra(Field f = Field::rational()) {
  return Algebra::create(
      f, 2, {{0, 0, 0, f.one()}, {0, 1, 1, f.one()}, {1, 0, 1, f.one()}, {1, 1, 0, -f.one()}},
      {}, "complex");
}

/// Basis 1, i, j, k as e0..e3 with i² = j² = k² = -1 and ij = k cyclically.
inline Algebra quaternion_algebra(Field f = Field::rational()) {
  static constexpr std::array<std::array<std::size_t, 3>, 1> line{{{1, 2, 3}}};
  return detail::imaginary_units_algebra(4, f, "quaternions", line);
}

inline Algebra octonion_algebra(Field f = Field::rational()) {
  return detail::imaginary_units_algebra(8, f, "octonions", detail::fano_lines);
}

/// Dual numbers a + bε with ε² = 0.
inline Algebra dual_algebra(Field f = Field::rational()) {
  return Algebra::create(f, 2, {{0, 0, 0, f.one()}, {0, 1, 1, f.one()}, {1, 0, 1, f.one()}},
                         {}, "dual");
}

inline Algebra builtin(std::string_view name, Field field = Field::rational()) {
  std::string s(name);
  s.erase(0, s.find_first_not_of(" \t"));
  s.erase(s.find_last_not_of(" \t") + 1);
  if (s == "rational") return rational_algebra(field);
  if (s == "complex") return complex_algebra(field);
  if (s == "quaternions") return quaternion_algebra(field);
  if (s == "octonions") return octonion_algebra(field);
  if (s == "dual") return dual_algebra(field);
  if (s.rfind("matrix", 0) == 0) {
    std::string rest = s.substr(6);
    bool spaced = !rest.empty() && std::isspace(static_cast<unsigned char>(rest.front()));
    rest.erase(0, rest.find_first_not_of(" \t"));
    if (spaced && !rest.empty() && rest.size() <= 3 &&
        rest.find_first_not_of("0123456789") == std::string::npos) {
      std::size_t m = std::stoul(rest);
      if (m >= 1) return matrix_algebra(m, field);
    }
  }
  throw Error(Errc::UnknownBuiltin, "unknown builtin algebra '" + s + "'");
}

}  // namespace fdalg
