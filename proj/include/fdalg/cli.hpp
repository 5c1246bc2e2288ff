#pragma once

// Command-line front end for the `alg` tool. Output is line-oriented: an
// outcome label (UNIQUE, AFFINE, INCONSISTENT, ...) followed by `key: value`
// lines.

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fdalg/algebra.hpp"
#include "fdalg/error.hpp"
#include "fdalg/field.hpp"
#include "fdalg/linalg.hpp"
#include "fdalg/operator.hpp"
#include "fdalg/text.hpp"

namespace fdalg::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int negative = 1;     // inconsistent, no right inverse, no unit
inline constexpr int no_operator = 2;  // singular or not representable
inline constexpr int usage = 64;
inline constexpr int parse = 65;
inline constexpr int internal = 70;
}  // namespace exit_code

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t at = s.find(sep, start);
    out.emplace_back(s.substr(start, at == std::string_view::npos ? std::string_view::npos
                                                                   : at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

/// LEFT:RIGHT[:L|R]
inline SandwichTerm parse_term(std::string_view text, const Algebra& alg, bool negate) {
  auto parts = split(text, ':');
  if (parts.size() < 2 || parts.size() > 3) {
    throw ParseError("term must be LEFT:RIGHT[:L|R], got '" + std::string(text) + "'");
  }
  Grouping g = Grouping::LeftFirst;
  if (parts.size() == 3) {
    std::string_view flag = fdalg::detail::trim(parts[2]);
    if (flag == "L") {
      g = Grouping::LeftFirst;
    } else if (flag == "R") {
      g = Grouping::RightFirst;
    } else {
      throw ParseError("grouping must be L or R, got '" + std::string(flag) + "'");
    }
  }
  Element left = parse_element(parts[0], alg);
  if (negate) left = -left;
  return {std::move(left), parse_element(parts[1], alg), g};
}

inline std::size_t parse_basis_ref(std::string_view text, const Algebra& alg) {
  std::string_view s = fdalg::detail::trim(text);
  if (auto idx = fdalg::detail::parse_index(s)) {
    if (*idx < alg.dim()) return *idx;
  } else if (auto b = resolve_basis(alg, s)) {
    return *b;
  }
  throw ParseError("unknown basis vector '" + std::string(s) + "'");
}

inline int report_outcome(const SolveOutcome<Element>& outcome, const Matrix& m,
                          std::ostream& out) {
  const std::string det_line = "det: " + det(m).to_string() + "\n";
  if (auto* u = std::get_if<Unique<Element>>(&outcome)) {
    out << "UNIQUE\n" << det_line << "x: " << format_element(u->x) << "\n";
    return exit_code::ok;
  }
  if (auto* a = std::get_if<Affine<Element>>(&outcome)) {
    out << "AFFINE\n"
        << det_line << "particular: " << format_element(a->particular) << "\n"
        << "kernel-dim: " << a->kernel.size() << "\n";
    for (const auto& v : a->kernel) out << "kernel: " << format_element(v) << "\n";
    return exit_code::ok;
  }
  const auto& inc = std::get<Inconsistent>(outcome);
  out << "INCONSISTENT\n"
      << det_line << "rank: " << inc.rank << "\n"
      << "augmented-rank: " << inc.augmented_rank << "\n";
  return exit_code::negative;
}

inline bool is_input_error(Errc code) {
  switch (code) {
    case Errc::ParseError:
    case Errc::DivisionByZero:
    case Errc::BadField:
    case Errc::DimensionMismatch:
    case Errc::IndexOutOfRange:
    case Errc::DuplicateTriple:
    case Errc::BadBasisName:
    case Errc::UnknownBuiltin:
    case Errc::MixedFields:
      return true;
    default:
      return false;
  }
}

}  // namespace detail

/// Runs one command; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solver for linear equations in finite-dimensional algebras", "alg"};
  app.require_subcommand(1);

  std::string algebra_source;
  std::string field_text;
  std::vector<std::string> terms, minus_terms, coefs;
  std::string element_text, rhs_text, left_text, right_text;

  auto add_algebra = [&](CLI::App* sub) {
    sub->add_option("--algebra", algebra_source, "algebra file or builtin:<name>")->required();
    sub->add_option("--field", field_text, "field for builtin algebras: rational | gf <p>");
  };
  auto add_terms = [&](CLI::App* sub) {
    sub->add_option("--term", terms, "sandwich term LEFT:RIGHT[:L|R]")
        ->allow_extra_args(false);
    sub->add_option("--minus-term", minus_terms, "term with negated left coefficient")
        ->allow_extra_args(false);
  };

  auto* info = app.add_subcommand("info", "dimension, structural flags and unit");
  add_algebra(info);

  auto* mul = app.add_subcommand("mul", "product of two elements");
  add_algebra(mul);
  mul->add_option("--left", left_text)->required();
  mul->add_option("--right", right_text)->required();

  auto* solve = app.add_subcommand("solve", "solve sum of sandwich terms = rhs");
  add_algebra(solve);
  add_terms(solve);
  solve->add_option("--rhs", rhs_text)->required();

  auto* invert = app.add_subcommand("invert-op", "inverse operator in tensor form");
  add_algebra(invert);
  add_terms(invert);

  auto* apply = app.add_subcommand("apply-tensor", "apply sum of c^{pq} (e_p b) e_q to b");
  add_algebra(apply);
  apply->add_option("--coef", coefs, "coefficient P:Q:VALUE")->allow_extra_args(false);
  apply->add_option("--element", element_text)->required();

  auto* rinv = app.add_subcommand("right-inverse", "solve a x = 1");
  add_algebra(rinv);
  rinv->add_option("--element", element_text)->required();

  auto* detl = app.add_subcommand("det-left", "determinant of left multiplication");
  add_algebra(detl);
  detl->add_option("--element", element_text)->required();

  auto* comm = app.add_subcommand("commutator-unit", "solve a x - x a = 1");
  add_algebra(comm);
  comm->add_option("--element", element_text)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_code::ok : exit_code::usage;
  }

  try {
    std::optional<Field> field;
    if (!field_text.empty()) field = Field::parse(field_text);
    const Algebra alg = load_algebra(algebra_source, field);

    auto collect_terms = [&] {
      std::vector<SandwichTerm> ts;
      for (const auto& t : terms) ts.push_back(detail::parse_term(t, alg, false));
      for (const auto& t : minus_terms) ts.push_back(detail::parse_term(t, alg, true));
      if (ts.empty()) throw UsageError("at least one --term or --minus-term is required");
      return OperatorExpression(std::move(ts));
    };

    if (info->parsed()) {
      auto unit = alg.unit();
      out << "dim " << alg.dim() << "\n"
          << "associative: " << (alg.is_associative() ? "yes" : "no") << "\n"
          << "commutative: " << (alg.is_commutative() ? "yes" : "no") << "\n"
          << "unit: " << (unit ? format_element(*unit) : "none") << "\n";
      return exit_code::ok;
    }
    if (mul->parsed()) {
      out << "product: "
          << format_element(parse_element(left_text, alg) * parse_element(right_text, alg))
          << "\n";
      return exit_code::ok;
    }
    if (solve->parsed()) {
      const OperatorExpression expr = collect_terms();
      const Element b = parse_element(rhs_text, alg);
      return detail::report_outcome(solve_linear(expr, b), operator_matrix(expr), out);
    }
    if (invert->parsed()) {
      const OperatorExpression expr = collect_terms();
      try {
        const TensorOperator t = inverse_tensor(expr);
        out << "INVERSE\n";
        const auto& names = alg.basis_names();
        for (std::size_t p = 0; p < alg.dim(); ++p)
          for (std::size_t q = 0; q < alg.dim(); ++q)
            if (!t.coefficients(p, q).is_zero())
              out << "c " << names[p] << " " << names[q] << ": " << t.coefficients(p, q) << "\n";
        return exit_code::ok;
      } catch (const Error& e) {
        switch (e.code()) {
          case Errc::Singular: out << "SINGULAR\n"; return exit_code::no_operator;
          case Errc::NotRepresentable: out << "NOT-REPRESENTABLE\n"; return exit_code::no_operator;
          case Errc::NonassociativeUnsupported:
            out << "NONASSOCIATIVE-UNSUPPORTED\n";
            return exit_code::no_operator;
          default: throw;
        }
      }
    }
    if (apply->parsed()) {
      TensorOperator t{alg, Matrix(alg.field(), alg.dim(), alg.dim())};
      for (const auto& c : coefs) {
        auto parts = detail::split(c, ':');
        if (parts.size() != 3) throw ParseError("coefficient must be P:Q:VALUE, got '" + c + "'");
        const std::size_t p = detail::parse_basis_ref(parts[0], alg);
        const std::size_t q = detail::parse_basis_ref(parts[1], alg);
        t.coefficients(p, q) += alg.field().parse_value(parts[2]);
      }
      out << "result: " << format_element(apply_tensor(t, parse_element(element_text, alg)))
          << "\n";
      return exit_code::ok;
    }
    if (rinv->parsed()) {
      const Element a = parse_element(element_text, alg);
      if (!alg.unit()) {
        out << "NO-UNIT\n";
        return exit_code::negative;
      }
      auto x = right_inverse(a);
      if (!x) {
        out << "NO-RIGHT-INVERSE\n";
        return exit_code::negative;
      }
      out << "RIGHT-INVERSE\n" << "x: " << format_element(*x) << "\n";
      return exit_code::ok;
    }
    if (detl->parsed()) {
      out << "det-left: " << det(left_mul_matrix(parse_element(element_text, alg))) << "\n";
      return exit_code::ok;
    }
    if (comm->parsed()) {
      const Element a = parse_element(element_text, alg);
      if (!alg.unit()) {
        out << "NO-UNIT\n";
        return exit_code::negative;
      }
      const OperatorExpression expr = commutator_expression(a);
      return detail::report_outcome(solve_linear(expr, *alg.unit()), operator_matrix(expr), out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const Error& e) {
    err << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
    return detail::is_input_error(e.code()) ? exit_code::parse : exit_code::internal;
  }
  return exit_code::internal;
}

}  // namespace fdalg::cli
