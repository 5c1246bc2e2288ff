// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "fdalg/fdalg.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace fdalg;
using namespace fdalg::testing;

namespace {

// Collects the first mismatch of a criterion.
struct Check {
  std::string failure;
  void expect(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
  }
  bool passed() const { return failure.empty(); }
};

Element el(const Algebra& alg, std::initializer_list<long long> coords) {
  Vector v;
  for (long long c : coords) v.push_back(alg.field().from_integer(c));
  return Element(alg, std::move(v));
}

OperatorExpression random_expression(const Algebra& alg, Rng& rng, bool mixed_grouping) {
  std::uniform_int_distribution<int> count(1, 3), coin(0, 1);
  std::vector<SandwichTerm> terms;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    const Grouping g = mixed_grouping && coin(rng) ? Grouping::RightFirst : Grouping::LeftFirst;
    terms.push_back({random_element(alg, rng, 0.4), random_element(alg, rng, 0.4), g});
  }
  return OperatorExpression(std::move(terms));
}

Check quaternion_commutator() {
  Check c;
  Rng rng(101);
  const Algebra h = builtin("quaternions");
  int done = 0;
  while (done < 100) {
    const Element a = random_element(h, rng, 0.3);
    if (a[1].is_zero() && a[2].is_zero() && a[3].is_zero()) continue;  // central
    c.expect(std::holds_alternative<Inconsistent>(commutator_unit_solve(a)),
             "solvable for a = " + format_element(a));
    ++done;
  }
  return c;
}

Check matrix_commutator() {
  Check c;
  Rng rng(102);
  const Algebra m2 = builtin("matrix 2");
  for (int trial = 0; trial < 100; ++trial) {
    const Element a = random_element(m2, rng, 0.3);
    c.expect(std::holds_alternative<Inconsistent>(commutator_unit_solve(a)),
             "solvable for a = " + format_element(a));
  }
  return c;
}

Check characteristic_two() {
  Check c;
  const Algebra m2 = builtin("matrix 2", Field::prime(2));
  const Element one = *m2.unit();
  auto nth = [&](int n) { return el(m2, {n & 1, (n >> 1) & 1, (n >> 2) & 1, (n >> 3) & 1}); };
  int pairs = 0;
  for (int ai = 0; ai < 16; ++ai) {
    const Element a = nth(ai);
    bool found = false;
    for (int xi = 0; xi < 16; ++xi) {
      const Element x = nth(xi);
      if (a * x - x * a == one) {
        found = true;
        ++pairs;
      }
    }
    const auto outcome = commutator_unit_solve(a);
    const bool solved = !std::holds_alternative<Inconsistent>(outcome);
    c.expect(solved == found, "solver disagrees with enumeration at a = " + format_element(a));
    if (auto* u = std::get_if<Unique<Element>>(&outcome)) {
      c.expect(a * u->x - u->x * a == one, "bad solution");
    } else if (auto* af = std::get_if<Affine<Element>>(&outcome)) {
      c.expect(a * af->particular - af->particular * a == one, "bad particular solution");
    }
  }
  c.expect(pairs > 0, "no solvable pair in GF(2)");
  return c;
}

Check matrix_right_inverse() {
  Check c;
  Rng rng(104);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + trial % 3;
    const Algebra alg = matrix_algebra(m);
    const Element a = random_element(alg, rng, trial % 2 ? 0.5 : 0.1);
    const FieldValue d = cofactor_det(as_square_matrix(a));
    c.expect(det(left_mul_matrix(a)) == power(d, m), "det L_a != (det a)^m");
    c.expect(is_right_invertible(a) == !d.is_zero(), "invertibility mismatch");
    if (auto x = right_inverse(a)) c.expect(a * *x == *alg.unit(), "a x != 1");
  }
  return c;
}

Check trichotomy() {
  Check c;
  Rng rng(105);
  std::vector<Algebra> algebras;
  for (const Field& f : {Field::rational(), Field::prime(2), Field::prime(3)}) {
    for (const char* name : {"rational", "complex", "dual", "quaternions", "octonions",
                             "matrix 2", "matrix 3"}) {
      algebras.push_back(builtin(name, f));
    }
  }
  std::array<int, 3> seen{};
  for (int trial = 0; trial < 500; ++trial) {
    const Algebra& alg = algebras[trial % algebras.size()];
    const auto expr = random_expression(alg, rng, true);
    const Element b = trial % 4 == 0 ? apply_by_products(expr, random_element(alg, rng))
                                     : random_element(alg, rng, 0.3);
    const Matrix m = operator_matrix(expr);
    const auto outcome = solve_linear(expr, b);
    ++seen[outcome.index()];
    const std::string where = alg.name() + " over " + alg.field().to_string();
    if (auto* u = std::get_if<Unique<Element>>(&outcome)) {
      c.expect(!det(m).is_zero(), "unique but singular in " + where);
      c.expect(apply_by_products(expr, u->x) == b, "unique solution fails in " + where);
    } else if (auto* a = std::get_if<Affine<Element>>(&outcome)) {
      c.expect(det(m).is_zero(), "affine but nonsingular in " + where);
      c.expect(apply_by_products(expr, a->particular) == b, "particular fails in " + where);
      c.expect(a->kernel.size() == alg.dim() - rank(m), "kernel size in " + where);
      for (const auto& k : a->kernel)
        c.expect(!k.is_zero() && apply_by_products(expr, k).is_zero(), "kernel in " + where);
    } else {
      const auto& w = std::get<Inconsistent>(outcome);
      c.expect(w.rank == rank(m) && w.augmented_rank == w.rank + 1 &&
                   rank(augment(m, b.coords())) == w.augmented_rank,
               "inconsistent witness in " + where);
    }
  }
  c.expect(seen[0] > 0 && seen[1] > 0 && seen[2] > 0, "not every outcome class was exercised");
  return c;
}

Check inverse_round_trip() {
  Check c;
  Rng rng(106);
  const std::array<Algebra, 2> algebras{builtin("quaternions"), builtin("matrix 2")};
  int done = 0;
  for (int trial = 0; done < 100 && trial < 1000; ++trial) {
    const Algebra& alg = algebras[trial % 2];
    const auto expr = random_expression(alg, rng, false);
    if (det(operator_matrix(expr)).is_zero()) continue;
    try {
      const auto t = inverse_tensor(expr);
      for (std::size_t m = 0; m < alg.dim(); ++m) {
        const Element e = Element::basis(alg, m);
        c.expect(apply_tensor(t, apply_by_products(expr, e)) == e, "round trip in " + alg.name());
      }
    } catch (const Error& e) {
      c.expect(false, std::string("inverse_tensor failed: ") + errc_name(e.code()));
    }
    ++done;
  }
  c.expect(done == 100, "too few nonsingular expressions");
  return c;
}

Check octonions() {
  Check c;
  Rng rng(107);
  const Algebra o = builtin("octonions");
  c.expect(!o.is_associative(), "octonions reported associative");
  for (int trial = 0; trial < 100; ++trial) {
    const Element a = random_nonzero_element(o, rng);
    c.expect(!det(left_mul_matrix(a)).is_zero(), "singular L_a for " + format_element(a));
  }
  for (int trial = 0; trial < 50; ++trial) {
    const Element a = random_element(o, rng, 0.5), b = random_element(o, rng, 0.5);
    for (Grouping g : {Grouping::LeftFirst, Grouping::RightFirst}) {
      const OperatorExpression expr({{a, b, g}});
      const Matrix m = operator_matrix(expr);
      for (std::size_t j = 0; j < 8; ++j) {
        const Element e = Element::basis(o, j);
        c.expect(Element(o, m * e.coords()) == apply_by_products(expr, e), "grouping oracle");
      }
    }
  }
  return c;
}

Check linear_algebra() {
  Check c;
  Rng rng(108);
  for (int trial = 0; trial < 200; ++trial) {
    const Field f = trial % 2 ? Field::prime(5) : Field::rational();
    std::uniform_int_distribution<std::size_t> size(1, 5);
    const std::size_t n = size(rng);
    const double zeros = trial % 3 == 0 ? 0.6 : 0.1;
    const Matrix sq = random_matrix(f, n, n, rng, zeros);
    c.expect(det(sq) == cofactor_det(sq), "det mismatch");

    const std::size_t rows = size(rng), cols = size(rng);
    const Matrix m = random_matrix(f, rows, cols, rng, zeros);
    const std::size_t r = rank(m);
    const auto k = kernel(m);
    c.expect(r + k.size() == cols, "rank-nullity");
    for (const auto& v : k) {
      for (const auto& x : m * v) c.expect(x.is_zero(), "kernel vector not annihilated");
    }

    if (!f.is_rational() && cols <= 4) {
      c.expect(r == brute_force_rank(m), "rank vs row-space enumeration");
      const Vector rhs = random_vector(f, rows, rng);
      const auto brute = brute_force_solve(m, rhs);
      const auto outcome = solve_system(m, rhs);
      std::size_t expected_count = 0;
      if (std::holds_alternative<Unique<Vector>>(outcome)) expected_count = 1;
      if (auto* a = std::get_if<Affine<Vector>>(&outcome)) {
        expected_count = 1;
        for (std::size_t i = 0; i < a->kernel.size(); ++i) expected_count *= 5;
      }
      c.expect(brute.count == expected_count, "solution count vs enumeration");
    }
  }
  return c;
}

struct Run {
  int code = -1;
  std::string out;
};

std::string quote(const std::string& s) { return "'" + s + "'"; }

Run run_cli(const std::vector<std::string>& args) {
  std::string cmd = quote(FDALG_ALG_BINARY);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 256> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
  return r;
}

Check cli_examples() {
  Check c;
  const std::string data = FDALG_DATA_DIR;
  const Run solve = run_cli({"solve", "--algebra", data + "/quat.alg", "--term",
                             "[0,1,0,0]:[1,0,0,0]", "--minus-term", "[1,0,0,0]:[0,1,0,0]",
                             "--rhs", "[1,0,0,0]"});
  c.expect(solve.out.rfind("INCONSISTENT\n", 0) == 0 && solve.code == 1,
           "solve example: exit " + std::to_string(solve.code));

  const Run info = run_cli({"info", "--algebra", "builtin:octonions"});
  c.expect(info.out == "dim 8\nassociative: no\ncommutative: no\nunit: e0\n" && info.code == 0,
           "info example");

  const Run rinv =
      run_cli({"right-inverse", "--algebra", "builtin:matrix 2", "--element", "[1,0,0,0]"});
  c.expect(rinv.out == "NO-RIGHT-INVERSE\n" && rinv.code == 1, "right-inverse example");
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"quaternion commutator has no solution (100 non-central a)", quaternion_commutator},
      {"2x2 rational matrix commutator has no solution (100 a)", matrix_commutator},
      {"GF(2) 2x2 matrices: enumeration finds ax - xa = 1, solver agrees", characteristic_two},
      {"det L_a = (det a)^m and right invertibility, m = 1..3 (200 a)", matrix_right_inverse},
      {"solve outcomes re-substitute exactly (500 equations)", trichotomy},
      {"tensor-form inverses round-trip (100 operators)", inverse_round_trip},
      {"octonions: nonassociative, nonsingular L_a, groupings match products", octonions},
      {"exact det, rank-nullity and GF(5) enumeration (200 matrices)", linear_algebra},
      {"CLI examples: output and exit codes", cli_examples},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.failure = std::string("exception: ") + e.what();
    }
    std::cout << (c.passed() ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first;
    if (!c.passed()) std::cout << ": " << c.failure;
    std::cout << "\n";
    failed += !c.passed();
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed")
            << "\n";
  return failed ? 1 : 0;
}
