#pragma once

#include <cstdint>
#include <random>

#include "fdalg/algebra.hpp"
#include "fdalg/field.hpp"
#include "fdalg/linalg.hpp"

namespace fdalg::testing {

using Rng = std::mt19937_64;

/// Small rationals num/den with |num| <= bound, 1 <= den <= 4; uniform
/// residues over GF(p) (restricted to [0, bound] for large p).
inline FieldValue random_value(const Field& f, Rng& rng, long bound = 5) {
  if (f.is_rational()) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, 4);
    return f.from_fraction(mpz_class(num(rng)), mpz_class(den(rng)));
  }
  const std::uint64_t p = f.characteristic();
  std::uniform_int_distribution<std::uint64_t> r(0, p - 1);
  return f.from_integer(mpz_class(static_cast<unsigned long>(r(rng))));
}

inline FieldValue random_nonzero_value(const Field& f, Rng& rng) {
  while (true) {
    FieldValue v = random_value(f, rng);
    if (!v.is_zero()) return v;
  }
}

inline Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng,
                            double zero_probability = 0.0) {
  std::bernoulli_distribution zero(zero_probability);
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (!zero(rng)) m(r, c) = random_value(f, rng);
  return m;
}

inline Vector random_vector(const Field& f, std::size_t n, Rng& rng) {
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_value(f, rng));
  return v;
}

inline Element random_element(const Algebra& alg, Rng& rng, double zero_probability = 0.0) {
  std::bernoulli_distribution zero(zero_probability);
  Vector v;
  for (std::size_t i = 0; i < alg.dim(); ++i)
    v.push_back(zero(rng) ? alg.field().zero() : random_value(alg.field(), rng));
  return Element(alg, std::move(v));
}

inline Element random_nonzero_element(const Algebra& alg, Rng& rng) {
  while (true) {
    Element e = random_element(alg, rng);
    if (!e.is_zero()) return e;
  }
}

}  // namespace fdalg::testing
