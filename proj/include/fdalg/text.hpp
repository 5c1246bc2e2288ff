#pragma once

// Text formats: algebra definition files and element literals.
//
// Algebra file (line-oriented, `#` starts a comment):
//
//   algebra complex
//   field rational          # or: field gf 7
//   dim 2
//   basis one i             # optional, defaults to e0 .. e{n-1}
//   sc 0 0 0 1              # e_0 · e_0 gains 1 · e_0
//   sc 0 1 1 1
//   sc 1 0 1 1
//   sc 1 1 0 -1
//   unit [1, 0]             # optional, verified against the computed unit
//   end
//
// or a reference to the catalog: `builtin quaternions` (optionally with a
// `field` line).
//
// Element literals are either coordinate vectors "[1, -2/3, 0, 0]" or named
// sums "3/2*e0 + -1*e3" (also "e1 - 2*e2", and "0").

#include <cctype>
#include <cstddef>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "fdalg/algebra.hpp"
#include "fdalg/builtin.hpp"
#include "fdalg/error.hpp"
#include "fdalg/field.hpp"

namespace fdalg {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

inline std::optional<std::size_t> parse_index(std::string_view s) {
  if (s.empty() || s.size() > 9) return std::nullopt;
  std::size_t v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

}  // namespace detail

/// Resolves a basis name; "e<k>" is accepted for any k < dim unless the
/// algebra uses that spelling for another vector.
inline std::optional<std::size_t> resolve_basis(const Algebra& alg, std::string_view name) {
  if (auto idx = alg.basis_index(name)) return idx;
  if (name.size() > 1 && name.front() == 'e') {
    if (auto k = detail::parse_index(name.substr(1)); k && *k < alg.dim()) return k;
  }
  return std::nullopt;
}

inline Element parse_element(std::string_view text, const Algebra& alg) {
  const Field& f = alg.field();
  std::string_view s = detail::trim(text);
  if (s.empty()) throw ParseError("empty element literal");

  if (s.front() == '[') {
    if (s.back() != ']') throw ParseError("unterminated coordinate vector '" + std::string(s) + "'");
    std::string_view body = detail::trim(s.substr(1, s.size() - 2));
    Vector coords;
    if (!body.empty()) {
      std::size_t start = 0;
      while (true) {
        std::size_t comma = body.find(',', start);
        std::string_view part = body.substr(start, comma == std::string_view::npos
                                                       ? std::string_view::npos
                                                       : comma - start);
        coords.push_back(f.parse_value(part));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
    }
    if (coords.size() != alg.dim()) {
      throw Error(Errc::DimensionMismatch,
                  "coordinate vector has " + std::to_string(coords.size()) +
                      " entries, algebra dimension is " + std::to_string(alg.dim()));
    }
    return Element(alg, std::move(coords));
  }

  if (s == "0") return Element::zero(alg);

  Vector coords(alg.dim(), f.zero());
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError(msg + " in '" + std::string(s) + "'", 0, pos + 1);
  };

  bool negate = false;
  bool expect_term = true;
  while (true) {
    skip_ws();
    if (expect_term) {
      // Leading signs belong to the term.
      while (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
        if (s[pos] == '-') negate = !negate;
        ++pos;
        skip_ws();
      }
      if (pos == s.size()) throw fail("expected a term");
      FieldValue coeff = f.one();
      if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
        std::size_t start = pos;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
          ++pos;
        coeff = f.parse_value(s.substr(start, pos - start));
        skip_ws();
        if (pos == s.size() || s[pos] != '*') throw fail("expected '*' after coefficient");
        ++pos;
        skip_ws();
      }
      std::size_t start = pos;
      while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      std::string_view name = s.substr(start, pos - start);
      if (name.empty() || std::isdigit(static_cast<unsigned char>(name.front()))) {
        throw fail("expected a basis name");
      }
      auto idx = resolve_basis(alg, name);
      if (!idx) throw fail("unknown basis name '" + std::string(name) + "'");
      coords[*idx] += negate ? -coeff : coeff;
      negate = false;
      expect_term = false;
    } else {
      if (pos == s.size()) break;
      if (s[pos] == '+') {
        ++pos;
      } else if (s[pos] == '-') {
        negate = true;
        ++pos;
      } else {
        throw fail("expected '+' or '-'");
      }
      expect_term = true;
    }
  }
  return Element(alg, std::move(coords));
}

/// Canonical named-sum form: nonzero terms in basis order, "c*name" or
/// "name" when c = 1, joined by " + "; the zero element prints as "0".
inline std::string format_element(const Element& e) {
  const auto& names = e.algebra().basis_names();
  std::string out;
  for (std::size_t i = 0; i < e.dim(); ++i) {
    if (e[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (!e[i].is_one()) out += e[i].to_string() + "*";
    out += names[i];
  }
  return out.empty() ? "0" : out;
}

/// "[c0, c1, ...]".
inline std::string format_coords(const Element& e) {
  std::string out = "[";
  for (std::size_t i = 0; i < e.dim(); ++i) {
    if (i) out += ", ";
    out += e[i].to_string();
  }
  return out + "]";
}

struct AlgebraFile {
  struct Constant {
    StructureConstant value;
    std::size_t line = 0;
  };

  std::string name;
  Field field;
  bool field_declared = false;
  std::optional<std::size_t> dim;
  std::vector<std::string> basis_names;
  std::vector<Constant> constants;
  std::optional<std::string> unit_literal;
  std::size_t unit_line = 0;
  std::optional<std::string> builtin_name;

  /// Constructs the algebra; a declared unit must equal the computed one.
  Algebra build() const {
    if (builtin_name) return builtin(*builtin_name, field);
    std::vector<StructureConstant> cs;
    cs.reserve(constants.size());
    for (const auto& c : constants) cs.push_back(c.value);
    Algebra alg = [&] {
      try {
        return Algebra::create(field, *dim, std::move(cs), basis_names, name);
      } catch (const Error& e) {
        throw ParseError(e.what());
      }
    }();
    if (unit_literal) {
      Element declared = [&] {
        try {
          return parse_element(*unit_literal, alg);
        } catch (const Error& e) {
          throw ParseError(std::string("bad unit: ") + e.what(), unit_line);
        }
      }();
      auto computed = alg.unit();
      if (!computed || *computed != declared) {
        throw ParseError("declared unit is not a two-sided unit of the algebra", unit_line);
      }
    }
    return alg;
  }
};

inline AlgebraFile parse_algebra_file(std::string_view text) {
  AlgebraFile file;
  std::vector<std::pair<std::string, std::size_t>> raw_values;  // sc values, parsed once the field is known
  std::vector<std::size_t> value_columns;
  std::size_t basis_line = 0;
  bool have_name = false, have_basis = false, ended = false;
  std::size_t line_no = 0;
  std::size_t first_structural_line = 0;

  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos
                                                                             : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto tokens = detail::tokenize(line);
    if (tokens.empty()) continue;
    if (ended) throw ParseError("content after 'end'", line_no, tokens[0].column);

    const std::string_view key = tokens[0].text;
    auto rest = [&] {
      return std::string(detail::trim(line.substr(tokens[0].column - 1 + key.size())));
    };
    auto need_args = [&](std::size_t n) {
      if (tokens.size() != n + 1) {
        throw ParseError("'" + std::string(key) + "' expects " + std::to_string(n) +
                             " argument" + (n == 1 ? "" : "s"),
                         line_no, tokens[0].column);
      }
    };

    if (key == "algebra") {
      if (have_name) throw ParseError("duplicate 'algebra' line", line_no, 1);
      if (tokens.size() < 2) throw ParseError("'algebra' expects a name", line_no, tokens[0].column);
      file.name = rest();
      have_name = true;
    } else if (key == "field") {
      if (file.field_declared) throw ParseError("duplicate 'field' line", line_no, 1);
      try {
        file.field = Field::parse(rest());
      } catch (const Error& e) {
        throw ParseError(e.what(), line_no, tokens.size() > 1 ? tokens[1].column : 1);
      }
      file.field_declared = true;
    } else if (key == "dim") {
      if (file.dim) throw ParseError("duplicate 'dim' line", line_no, 1);
      need_args(1);
      auto d = detail::parse_index(tokens[1].text);
      if (!d || *d == 0) throw ParseError("dimension must be a positive integer", line_no, tokens[1].column);
      file.dim = d;
      if (!first_structural_line) first_structural_line = line_no;
    } else if (key == "basis") {
      if (have_basis) throw ParseError("duplicate 'basis' line", line_no, 1);
      for (std::size_t t = 1; t < tokens.size(); ++t) {
        if (!detail::is_identifier(tokens[t].text)) {
          throw ParseError("basis name is not an identifier", line_no, tokens[t].column);
        }
        file.basis_names.emplace_back(tokens[t].text);
      }
      have_basis = true;
      basis_line = line_no;
      if (!first_structural_line) first_structural_line = line_no;
    } else if (key == "sc") {
      need_args(4);
      AlgebraFile::Constant c;
      std::size_t* slots[3] = {&c.value.i, &c.value.j, &c.value.k};
      for (std::size_t t = 0; t < 3; ++t) {
        auto idx = detail::parse_index(tokens[t + 1].text);
        if (!idx) throw ParseError("index must be a non-negative integer", line_no, tokens[t + 1].column);
        *slots[t] = *idx;
      }
      c.line = line_no;
      file.constants.push_back(c);
      raw_values.emplace_back(std::string(tokens[4].text), line_no);
      value_columns.push_back(tokens[4].column);
      if (!first_structural_line) first_structural_line = line_no;
    } else if (key == "unit") {
      if (file.unit_literal) throw ParseError("duplicate 'unit' line", line_no, 1);
      if (tokens.size() < 2) throw ParseError("'unit' expects an element", line_no, tokens[0].column);
      file.unit_literal = rest();
      file.unit_line = line_no;
    } else if (key == "builtin") {
      if (file.builtin_name) throw ParseError("duplicate 'builtin' line", line_no, 1);
      if (tokens.size() < 2) throw ParseError("'builtin' expects a name", line_no, tokens[0].column);
      file.builtin_name = rest();
    } else if (key == "end") {
      need_args(0);
      ended = true;
    } else {
      throw ParseError("unknown directive '" + std::string(key) + "'", line_no, tokens[0].column);
    }
  }

  if (file.builtin_name) {
    if (first_structural_line || file.unit_literal) {
      throw ParseError("a builtin reference cannot also define structure",
                       first_structural_line ? first_structural_line : file.unit_line);
    }
    try {
      (void)builtin(*file.builtin_name, file.field);
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
    if (!have_name) file.name = *file.builtin_name;
    return file;
  }

  if (!file.dim) throw ParseError("missing 'dim' line", line_no);
  const std::size_t n = *file.dim;
  if (have_basis && file.basis_names.size() != n) {
    throw ParseError("'basis' lists " + std::to_string(file.basis_names.size()) +
                         " names for dimension " + std::to_string(n),
                     basis_line);
  }
  for (std::size_t a = 0; a < file.basis_names.size(); ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (file.basis_names[a] == file.basis_names[b])
        throw ParseError("duplicate basis name '" + file.basis_names[a] + "'", basis_line);
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (std::size_t c = 0; c < file.constants.size(); ++c) {
    auto& sc = file.constants[c];
    if (sc.value.i >= n || sc.value.j >= n || sc.value.k >= n) {
      throw ParseError("structure constant index out of range for dimension " + std::to_string(n),
                       sc.line);
    }
    try {
      sc.value.value = file.field.parse_value(raw_values[c].first);
    } catch (const Error& e) {
      throw ParseError(e.what(), sc.line, value_columns[c]);
    }
    if (!seen.insert({sc.value.i, sc.value.j, sc.value.k}).second) {
      throw ParseError("duplicate structure constant", sc.line);
    }
  }
  return file;
}

/// `builtin:<name>` or a path to an algebra file. `field` applies to
/// builtin references only.
inline Algebra load_algebra(std::string_view source, std::optional<Field> field = std::nullopt) {
  constexpr std::string_view prefix = "builtin:";
  if (source.substr(0, prefix.size()) == prefix) {
    try {
      return builtin(source.substr(prefix.size()), field.value_or(Field::rational()));
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  }
  std::ifstream in{std::string(source)};
  if (!in) throw ParseError("cannot read algebra file '" + std::string(source) + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  AlgebraFile file = parse_algebra_file(buf.str());
  if (field) {
    if (!file.builtin_name) {
      throw Error(Errc::BadField, "a field override applies only to builtin algebras");
    }
    file.field = *field;
  }
  return file.build();
}

}  // namespace fdalg
