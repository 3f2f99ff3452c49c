#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gkm/errors.hpp"
#include "gkm/matrix.hpp"
#include "gkm/polynomial.hpp"
#include "oracles.hpp"

using namespace gkm;

namespace {

std::vector<std::vector<Int>> random_rows(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<std::vector<Int>> rows(r, std::vector<Int>(c));
  for (auto& row : rows)
    for (auto& x : row) x = d(rng);
  return rows;
}

Polynomial random_poly(std::mt19937& rng, VarTablePtr vars, int max_deg, int terms) {
  std::uniform_int_distribution<int> coef(-4, 4), deg(0, max_deg);
  Polynomial p(vars);
  for (int t = 0; t < terms; ++t) {
    auto basis = graded_piece_basis(static_cast<int>(vars->size()), deg(rng));
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    p.add_term(basis[pick(rng)], coef(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("graded pieces are lexicographically descending") {
  auto b = graded_piece_basis(2, 2);
  REQUIRE(b.size() == 3);
  CHECK(b[0] == Exponent{2, 0});
  CHECK(b[1] == Exponent{1, 1});
  CHECK(b[2] == Exponent{0, 2});
  CHECK(graded_piece_basis(3, 4).size() == 15);
  CHECK(graded_piece_basis(0, 0).size() == 1);
  CHECK(graded_piece_basis(0, 2).empty());
}

TEST_CASE("polynomial formatting and parsing round trip") {
  auto v = torus_vars(2, true);
  Polynomial p = parse_polynomial("3*e1^2*x - e2 + 1", v);
  CHECK(p.to_string() == "3*e1^2*x - e2 + 1");
  CHECK(parse_polynomial("(e1 + x)^2", v).to_string() == "e1^2 + 2*e1*x + x^2");
  CHECK(parse_polynomial("0", v).to_string() == "0");
  CHECK(parse_polynomial("-(e1 - e2)", v).to_string() == "-e1 + e2");
  CHECK_THROWS_AS(parse_polynomial("e3", v), ParseError);
  CHECK_THROWS_AS(parse_polynomial("e1 +", v), ParseError);
  CHECK_THROWS_AS(parse_polynomial("(e1", v), ParseError);
}

TEST_CASE("polynomial ring axioms on random inputs") {
  std::mt19937 rng(7);
  auto v = torus_vars(2, true);
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial a = random_poly(rng, v, 3, 4), b = random_poly(rng, v, 3, 4), c = random_poly(rng, v, 2, 3);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == Polynomial(v));
    CHECK(parse_polynomial(a.to_string(), v) == a);
    if (!b.is_zero()) {
      auto q = (a * b).divide_exact(b);
      REQUIRE(q.has_value());
      CHECK(*q == a);
    }
  }
}

TEST_CASE("exact division detects remainders") {
  auto v = torus_vars(2, true);
  Polynomial f = parse_polynomial("e1^2 - e2^2", v);
  auto q = f.divide_exact(parse_polynomial("e1 - e2", v));
  REQUIRE(q.has_value());
  CHECK(q->to_string() == "e1 + e2");
  CHECK_FALSE(f.divide_exact(parse_polynomial("e1 + x", v)).has_value());
  CHECK_FALSE(parse_polynomial("e1 + 1", v).divide_exact(parse_polynomial("2", v)).has_value());
}

TEST_CASE("substitution evaluates linear changes of variables") {
  auto v = torus_vars(2, false);
  auto w = make_vars({"a", "b"});
  Polynomial f = parse_polynomial("e1*e2 + e2^2", v);
  std::vector<Polynomial> img{parse_polynomial("a + b", w), parse_polynomial("a - b", w)};
  CHECK(f.substitute(img, w).to_string() == "2*a^2 - 2*a*b");
}

TEST_CASE("rank agrees with rational elimination") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t r = 1 + trial % 6, c = 1 + (trial * 5) % 7;
    auto rows = random_rows(rng, r, c, -3, 3);
    if (trial % 3 == 0 && r > 1) rows[r - 1] = rows[0];  // force dependence
    CHECK(matrix_rank(rows, c) == oracle::rational_rank(rows, c));
  }
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 1 + trial % 5;
    auto rows = random_rows(rng, n, n, -5, 5);
    CHECK(determinant(IntMatrix::from_rows(rows, n)) == oracle::cofactor_det(rows));
  }
}

TEST_CASE("Hermite kernel is a saturated basis of the kernel") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t r = 1 + trial % 4, c = 2 + trial % 5;
    auto rows = random_rows(rng, r, c, -4, 4);
    IntMatrix m = IntMatrix::from_rows(rows, c);
    auto ker = hermite_kernel(m);
    CHECK(ker.size() == c - oracle::rational_rank(rows, c));
    for (const auto& k : ker)
      for (const Int& x : m.apply(k)) CHECK(x == 0);
    // saturation: a kernel vector divided by its content stays in the lattice
    if (ker.size() >= 2) {
      std::vector<Int> v(c);
      Int g = 0;
      for (std::size_t j = 0; j < c; ++j) {
        v[j] = 3 * ker[0][j] + 5 * ker[1][j];
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[j].get_mpz_t());
      }
      for (auto& x : v) x /= g;
      CHECK(in_lattice(ker, v));
    }
    if (!ker.empty()) {
      auto again = hermite_rows(ker, c);
      CHECK(again == ker);  // canonical form is stable
    }
  }
}

TEST_CASE("lattice membership") {
  std::vector<std::vector<Int>> h = hermite_rows({{2, 0}, {0, 3}}, 2);
  CHECK(in_lattice(h, {4, 6}));
  CHECK_FALSE(in_lattice(h, {1, 0}));
  auto coords = lattice_coordinates(h, {4, -3});
  REQUIRE(coords.has_value());
  CHECK((*coords)[0] == 2);
  CHECK((*coords)[1] == -1);
}

TEST_CASE("integral solve") {
  IntMatrix a = IntMatrix::from_rows({{1, 1}, {0, 1}}, 2);
  auto s = solve_integral(a, {3, 1});
  REQUIRE(s.has_value());
  CHECK((*s)[0] == 2);
  CHECK((*s)[1] == 1);
  CHECK_FALSE(solve_integral(IntMatrix::from_rows({{2, 0}, {0, 1}}, 2), {1, 1}).has_value());
  CHECK_FALSE(solve_integral(IntMatrix::from_rows({{1, 1}, {1, 1}}, 2), {1, 1}).has_value());
}

TEST_CASE("lattice helpers") {
  CHECK(is_multiple({4, -6, 0}, {2, -3, 0}));
  CHECK_FALSE(is_multiple({4, -5, 0}, {2, -3, 0}));
  CHECK(lattice_rank({{1, 0, 0}, {2, 0, 0}, {0, 1, 1}}) == 2);
  CHECK(lattice_to_string({1, -2}) == "[1,-2]");
  CHECK(residual(2) == LatticeVector{0, 0, 1});
}
