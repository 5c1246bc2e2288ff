#pragma once

// Exact scalars for the two supported base fields: the rationals (backed by
// GMP) and prime fields GF(p) with p < 2^63.

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>

#include "fdalg/error.hpp"

namespace fdalg {

class FieldValue;

/// Descriptor of a scalar field. Characteristic 0 means the rationals.
class Field {
 public:
  static constexpr std::uint64_t max_prime = std::uint64_t{1} << 63;

  constexpr Field() = default;

  static Field rational() { return Field(); }

  static Field prime(std::uint64_t p) {
    if (p < 2 || p >= max_prime) {
      throw Error(Errc::BadField,
                  "prime field modulus out of range: " + std::to_string(p));
    }
    mpz_class z(static_cast<unsigned long>(p));
    if (mpz_probab_prime_p(z.get_mpz_t(), 30) == 0) {
      throw Error(Errc::BadField, "modulus is not prime: " + std::to_string(p));
    }
    Field f;
    f.p_ = p;
    return f;
  }

  /// Accepts "rational" or "gf <p>".
  static Field parse(std::string_view text);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint64_t characteristic() const noexcept { return p_; }

  FieldValue zero() const;
  FieldValue one() const;
  FieldValue from_integer(long long v) const;
  FieldValue from_integer(const mpz_class& v) const;
  FieldValue from_fraction(const mpz_class& num, const mpz_class& den) const;

  /// Scalar literal `[-]digits[/digits]`.
  FieldValue parse_value(std::string_view text) const;

  std::string to_string() const {
    return is_rational() ? std::string("rational")
                         : "gf " + std::to_string(p_);
  }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  std::uint64_t p_ = 0;
};

class FieldValue {
 public:
  /// Rational zero.
  FieldValue() = default;

  const Field& field() const noexcept { return field_; }

  bool is_zero() const noexcept {
    return field_.is_rational() ? sgn(q_) == 0 : r_ == 0;
  }
  bool is_one() const noexcept {
    return field_.is_rational() ? q_ == 1 : r_ == 1;
  }

  /// Only meaningful over the rationals.
  const mpq_class& rational() const noexcept { return q_; }
  /// Only meaningful over GF(p).
  std::uint64_t residue() const noexcept { return r_; }

  FieldValue& operator+=(const FieldValue& o) {
    check(o);
    if (field_.is_rational()) {
      q_ += o.q_;
    } else {
      r_ = add_mod(r_, o.r_, field_.characteristic());
    }
    return *this;
  }

  FieldValue& operator-=(const FieldValue& o) {
    check(o);
    if (field_.is_rational()) {
      q_ -= o.q_;
    } else {
      r_ = add_mod(r_, neg_mod(o.r_, field_.characteristic()),
                   field_.characteristic());
    }
    return *this;
  }

  FieldValue& operator*=(const FieldValue& o) {
    check(o);
    if (field_.is_rational()) {
      q_ *= o.q_;
    } else {
      r_ = mul_mod(r_, o.r_, field_.characteristic());
    }
    return *this;
  }

  FieldValue& operator/=(const FieldValue& o) { return *this *= o.inverse(); }

  FieldValue operator-() const {
    FieldValue out(*this);
    if (field_.is_rational()) {
      out.q_ = -q_;
    } else {
      out.r_ = neg_mod(r_, field_.characteristic());
    }
    return out;
  }

  FieldValue inverse() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
    FieldValue out(*this);
    if (field_.is_rational()) {
      out.q_ = 1 / q_;
    } else {
      out.r_ = inv_mod(r_, field_.characteristic());
    }
    return out;
  }

  friend FieldValue operator+(FieldValue a, const FieldValue& b) { return a += b; }
  friend FieldValue operator-(FieldValue a, const FieldValue& b) { return a -= b; }
  friend FieldValue operator*(FieldValue a, const FieldValue& b) { return a *= b; }
  friend FieldValue operator/(FieldValue a, const FieldValue& b) { return a /= b; }

  /// Values of different fields compare unequal.
  friend bool operator==(const FieldValue& a, const FieldValue& b) {
    if (a.field_ != b.field_) return false;
    return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
  }

  /// Canonical text: "p/q", or "p" when q = 1; residues in [0, p).
  std::string to_string() const {
    return field_.is_rational() ? q_.get_str() : std::to_string(r_);
  }

  friend std::ostream& operator<<(std::ostream& os, const FieldValue& v) {
    return os << v.to_string();
  }

 private:
  friend class Field;

  void check(const FieldValue& o) const {
    if (field_ != o.field_) {
      throw Error(Errc::MixedFields, "cannot combine values of " +
                                         field_.to_string() + " and " +
                                         o.field_.to_string());
    }
  }

  static std::uint64_t add_mod(std::uint64_t a, std::uint64_t b,
                               std::uint64_t p) {
    // a, b < p < 2^63, so a + b cannot wrap.
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  static std::uint64_t neg_mod(std::uint64_t a, std::uint64_t p) {
    return a == 0 ? 0 : p - a;
  }
  static std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b,
                               std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
  }
  static std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    // Extended Euclid on signed 128-bit to stay clear of overflow.
    __int128 t = 0, new_t = 1;
    __int128 r = p, new_r = a;
    while (new_r != 0) {
      __int128 q = r / new_r;
      __int128 tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += p;
    return static_cast<std::uint64_t>(t);
  }

  Field field_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

inline FieldValue Field::zero() const {
  FieldValue v;
  v.field_ = *this;
  return v;
}

inline FieldValue Field::one() const { return from_integer(1); }

inline FieldValue Field::from_integer(long long v) const {
  return from_integer(mpz_class(static_cast<long>(v)));
}

inline FieldValue Field::from_integer(const mpz_class& v) const {
  FieldValue out = zero();
  if (is_rational()) {
    out.q_ = v;
  } else {
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    out.r_ = mpz_fdiv_ui(v.get_mpz_t(), p_);
  }
  return out;
}

inline FieldValue Field::from_fraction(const mpz_class& num,
                                       const mpz_class& den) const {
  FieldValue d = from_integer(den);
  if (d.is_zero()) throw Error(Errc::DivisionByZero, "zero denominator");
  if (is_rational()) {
    FieldValue out = zero();
    out.q_ = mpq_class(num, den);
    out.q_.canonicalize();
    return out;
  }
  return from_integer(num) / d;
}

inline FieldValue Field::parse_value(std::string_view text) const {
  std::string_view s = text;
  auto trim = [](std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front())))
      v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back())))
      v.remove_suffix(1);
    return v;
  };
  s = trim(s);
  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
  } else if (s.substr(0, 3) == "\xE2\x88\x92") {  // U+2212 MINUS SIGN
    negative = true;
    s.remove_prefix(3);
  }
  auto digits = [](std::string_view v) {
    if (v.empty()) return false;
    for (char c : v)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view num = s, den;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
    if (!digits(den)) {
      throw ParseError("malformed scalar literal '" + std::string(text) + "'");
    }
  }
  if (!digits(num)) {
    throw ParseError("malformed scalar literal '" + std::string(text) + "'");
  }
  mpz_class n{std::string(num)};
  if (negative) n = -n;
  mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den));
  if (d == 0) {
    throw Error(Errc::DivisionByZero,
                "zero denominator in literal '" + std::string(text) + "'");
  }
  return from_fraction(n, d);
}

inline Field Field::parse(std::string_view text) {
  std::string s(text);
  std::size_t b = s.find_first_not_of(" \t");
  std::size_t e = s.find_last_not_of(" \t");
  if (b == std::string::npos) throw Error(Errc::BadField, "empty field descriptor");
  s = s.substr(b, e - b + 1);
  if (s == "rational") return rational();
  if (s.rfind("gf", 0) == 0 && s.size() > 2 &&
      std::isspace(static_cast<unsigned char>(s[2]))) {
    std::string rest = s.substr(3);
    rest.erase(0, rest.find_first_not_of(" \t"));
    if (rest.empty() || rest.size() > 19 ||
        rest.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(Errc::BadField, "bad prime in field descriptor '" + s + "'");
    }
    return prime(std::stoull(rest));
  }
  throw Error(Errc::BadField, "unknown field descriptor '" + s + "'");
}

}  // namespace fdalg
