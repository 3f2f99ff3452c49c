#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gkm/arrangements.hpp"
#include "gkm/cohomology.hpp"
#include "gkm/errors.hpp"
#include "gkm/matrix.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace gkm;
using support::prepared;

namespace {

struct Case {
  std::string id;
  ValidGraph vg;
};

std::vector<Case> passing() {
  std::vector<Case> out;
  for (auto id : {"fig2_left", "fig7_pentagon", "fig8_line5", "local_model(2)"}) out.push_back({id, prepared(id)});
  out.push_back({"klm212", support::klm(2, 1, 2)});
  return out;
}

std::vector<Case> everything() {
  auto out = passing();
  out.push_back({"fig11_sphere", prepared("fig11_sphere")});
  out.push_back({"fig2_right", prepared("fig2_right")});
  out.push_back({"local_model(3)", prepared("local_model(3)")});
  return out;
}

std::set<std::set<std::string>> family_names(const PresentationRing& ring, const Arrangement& arr) {
  std::set<std::set<std::string>> out;
  for (const auto& f : ring.empty_families) {
    std::set<std::string> s;
    for (int i : f) s.insert(arr.hs.list[i].name);
    out.insert(s);
  }
  return out;
}

// All monomials of degree <= d over the ring variables.
std::vector<Polynomial> monomials_upto(const VarTablePtr& vars, int d) {
  std::vector<Polynomial> out;
  for (int k = 0; k <= d; ++k)
    for (const auto& e : graded_piece_basis(static_cast<int>(vars->size()), k))
      out.push_back(Polynomial::monomial(vars, e));
  return out;
}

}  // namespace

TEST_CASE("solver ranks agree with the witness formulation") {
  for (const auto& c : everything()) {
    for (bool forgetful : {false, true})
      for (int k = 0; k <= 3; ++k) {
        CAPTURE(c.id);
        CAPTURE(forgetful);
        CAPTURE(k);
        auto piece = cohomology_basis(c.vg, k, forgetful);
        CHECK(piece.rank() == oracle::witness_cohomology_rank(c.vg.graph, k, forgetful));
        for (std::size_t i = 0; i < piece.rank(); ++i) CHECK(is_cohomology_class(c.vg, piece.element(i), forgetful));
      }
  }
}

TEST_CASE("graded piece coordinates round trip") {
  ValidGraph vg = prepared("fig7_pentagon");
  auto piece = cohomology_basis(vg, 2, false);
  for (std::size_t i = 0; i < piece.rank(); ++i) CHECK(piece.coordinates(piece.element(i)) == piece.basis[i]);
  CHECK_THROWS_AS(piece.coordinates(constant_class(vg, false, 1)), DimensionError);
}

TEST_CASE("class arithmetic") {
  ValidGraph vg = prepared("fig2_left");
  auto x = residual(2);
  auto chi = linear_class(vg, false, std::vector<LatticeVector>(3, x));
  CHECK(is_cohomology_class(vg, chi, false));
  CHECK(is_cohomology_class(vg, chi * chi, false));
  CHECK(forget_class(vg, chi) == forget_class(vg, constant_class(vg, false, 0)));
  // a class that is not divisible along an edge
  LatticeVector e1{1, 0, 0}, z{0, 0, 0};
  auto bad = linear_class(vg, false, {e1, z, z});
  CHECK_FALSE(is_cohomology_class(vg, bad, false));
}

TEST_CASE("presentation ring relations") {
  SUBCASE("klm forgetful relations are the empty intersections") {
    for (auto [k, l, m] : std::vector<std::array<int, 3>>{{1, 1, 1}, {2, 1, 2}, {2, 2, 2}}) {
      ValidGraph vg = support::klm(k, l, m);
      Arrangement arr = build_arrangement(vg);
      auto ring = presentation_ring(vg, arr, true);
      std::set<std::set<std::string>> expect;
      auto nm = [](char c, int i) { return std::string(1, c) + std::to_string(i); };
      for (int a = 1; a <= k; ++a)
        for (int b = a + 1; b <= k; ++b) expect.insert({nm('X', a), nm('X', b)});
      for (int a = 1; a <= l; ++a)
        for (int b = a + 1; b <= l; ++b) expect.insert({nm('Y', a), nm('Y', b)});
      for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b) expect.insert({nm('Z', a), nm('Z', b)});
      for (int r = 1; r <= k; ++r)
        for (int s = 1; s <= l; ++s)
          for (int t = 1; t <= m; ++t) expect.insert({nm('X', r), nm('Y', s), nm('Z', t)});
      CHECK(family_names(ring, arr) == expect);
    }
  }
  SUBCASE("fig8 relations are the products of distinct points") {
    ValidGraph vg = prepared("fig8_line5");
    Arrangement arr = build_arrangement(vg);
    auto ring = presentation_ring(vg, arr, true);
    CHECK(ring.empty_families.size() == 10);
    for (const auto& f : ring.empty_families) CHECK(f.size() == 2);
  }
  SUBCASE("empty families match brute force") {
    for (const auto& c : passing()) {
      CAPTURE(c.id);
      Arrangement arr = build_arrangement(c.vg);
      auto forg = presentation_ring(c.vg, arr, true);
      std::vector<std::vector<char>> sets;
      for (const auto& h : arr.hs.list) sets.push_back(h.sub.vin);
      auto fams = forg.empty_families;
      std::sort(fams.begin(), fams.end());
      CHECK(fams == oracle::minimal_empty_families(sets));
      // full ring: families of halfspaces, indexed like the variables X, H_i, Hbar_i
      auto full = presentation_ring(c.vg, arr, false);
      std::vector<std::vector<char>> sides{std::vector<char>(c.vg.graph.num_vertices(), 1)};
      for (const auto& pr : arr.sides) sides.push_back(pr.h.sub.vin);
      for (const auto& pr : arr.sides) sides.push_back(pr.hbar.sub.vin);
      fams = full.empty_families;
      std::sort(fams.begin(), fams.end());
      CHECK(fams == oracle::minimal_empty_families(sides));
    }
  }
  SUBCASE("assumption (2) is required unless waived") {
    ValidGraph vg = prepared("fig11_sphere");
    Arrangement arr = build_arrangement(vg);
    CHECK_THROWS_AS(presentation_ring(vg, arr, true), AssumptionViolation);
    auto ring = presentation_ring(vg, arr, true, false);
    CHECK_FALSE(ring.assumption2);
  }
}

TEST_CASE("Psi respects the relations") {
  for (const auto& c : passing()) {
    CAPTURE(c.id);
    Arrangement arr = build_arrangement(c.vg);
    for (bool forgetful : {false, true}) {
      auto ring = presentation_ring(c.vg, arr, forgetful);
      auto zero = constant_class(c.vg, forgetful, 0);
      for (const auto& r : ring.relations()) {
        CAPTURE(r.to_string());
        CHECK(evaluate(c.vg, arr, ring, r) == zero);
      }
    }
    auto full = presentation_ring(c.vg, arr, false);
    auto X = evaluate(c.vg, arr, full, parse_polynomial("X", full.vars));
    CHECK(X == linear_class(c.vg, false, std::vector<LatticeVector>(c.vg.graph.num_vertices(), residual(c.vg.n()))));
    for (const auto& h : arr.hs.list) {
      auto s = parse_polynomial("H_" + h.name + " + Hbar_" + h.name, full.vars);
      CHECK(evaluate(c.vg, arr, full, s) == X);
    }
  }
}

TEST_CASE("forgetting commutes with the presentations") {
  for (const auto& c : passing()) {
    CAPTURE(c.id);
    Arrangement arr = build_arrangement(c.vg);
    auto full = presentation_ring(c.vg, arr, false);
    auto forg = presentation_ring(c.vg, arr, true);
    auto mons = monomials_upto(full.vars, c.vg.graph.num_vertices() > 8 ? 2 : 3);
    for (const auto& f : mons) {
      auto lhs = forget_class(c.vg, evaluate(c.vg, arr, full, f));
      auto rhs = evaluate(c.vg, arr, forg, phi(full, forg, phi_prime(full, f)));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("homogeneous parts of products of Thom classes lie in the graded pieces") {
  ValidGraph vg = prepared("fig7_pentagon");
  Arrangement arr = build_arrangement(vg);
  auto full = presentation_ring(vg, arr, false);
  auto f = parse_polynomial("H_L1*Hbar_L3 + X*H_L2*H_L4 + 3*Hbar_L5 + 2", full.vars);
  auto cls = evaluate(vg, arr, full, f);
  CohomologyClass sum = constant_class(vg, false, 0);
  for (int k = 0; k <= 3; ++k) {
    CohomologyClass part = cls;
    for (auto& v : part.values) v = v.homogeneous_part(k);
    auto piece = cohomology_basis(vg, k, false);
    CHECK(in_lattice(piece.basis, piece.coordinates(part)));
    sum = sum + part;
  }
  CHECK(sum == cls);
}

TEST_CASE("verify_iso on the passing fixtures") {
  for (const auto& c : passing()) {
    Arrangement arr = build_arrangement(c.vg);
    for (bool forgetful : {false, true}) {
      CAPTURE(c.id);
      CAPTURE(forgetful);
      auto rep = verify_iso(c.vg, arr, 3, forgetful);
      CHECK(rep.ok());
      for (const auto& d : rep.degrees) {
        CHECK(d.lattice_match);
        CHECK(d.solver_rank == oracle::witness_cohomology_rank(c.vg.graph, d.degree, forgetful));
      }
    }
  }
}

TEST_CASE("verify_iso ranks") {
  auto ranks = [](const ValidGraph& vg, bool forgetful) {
    Arrangement arr = build_arrangement(vg);
    std::vector<std::size_t> out;
    for (const auto& d : verify_iso(vg, arr, 3, forgetful).degrees) out.push_back(d.solver_rank);
    return out;
  };
  CHECK(ranks(prepared("fig2_left"), true) == std::vector<std::size_t>{1, 3, 6, 9});
  CHECK(ranks(prepared("fig2_left"), false) == std::vector<std::size_t>{1, 4, 10, 19});
  CHECK(ranks(prepared("fig7_pentagon"), true) == std::vector<std::size_t>{1, 5, 10, 15});
  CHECK(ranks(prepared("fig7_pentagon"), false) == std::vector<std::size_t>{1, 6, 16, 31});
  CHECK(ranks(prepared("fig8_line5"), true) == std::vector<std::size_t>{1, 5, 5, 5});
  CHECK(ranks(prepared("fig8_line5"), false) == std::vector<std::size_t>{1, 6, 11, 16});
  CHECK(ranks(support::klm(2, 1, 2), true) == std::vector<std::size_t>{1, 5, 13, 21});
  CHECK(ranks(support::klm(2, 1, 2), false) == std::vector<std::size_t>{1, 6, 19, 40});
}

TEST_CASE("fig11 has a rank deficit") {
  ValidGraph vg = prepared("fig11_sphere");
  Arrangement arr = build_arrangement(vg);
  auto rep = verify_iso(vg, arr, 4, true);
  CHECK_FALSE(rep.assumption2);
  CHECK_FALSE(rep.ok());
  // degrees 0 and 1 agree, degree 2 is the first deficit
  REQUIRE(rep.degrees.size() == 5);
  CHECK(rep.degrees[1].match());
  CHECK(rep.degrees[2].solver_rank == oracle::witness_cohomology_rank(vg.graph, 2, true));
  CHECK(rep.degrees[2].solver_rank == 4);
  CHECK(rep.degrees[2].image_rank == 3);
  CHECK(rep.degrees[3].solver_rank == 6);
  CHECK(rep.degrees[3].image_rank == 4);
  auto full = verify_iso(vg, arr, 2, false);
  CHECK(full.degrees[2].solver_rank == oracle::witness_cohomology_rank(vg.graph, 2, false));
  CHECK(full.degrees[2].solver_rank > full.degrees[2].image_rank);
}

TEST_CASE("verify_iso refuses assumption (1) failures") {
  ValidGraph vg = prepared("fig2_right");
  CHECK_THROWS_AS(build_arrangement(vg), AssumptionViolation);
}

TEST_CASE("kernel of forgetting is generated by chi") {
  for (const auto& c : everything()) {
    CAPTURE(c.id);
    for (const auto& k : kernel_forgetful_check(c.vg, 3)) CHECK(k.passed);
  }
}

TEST_CASE("localization") {
  ValidGraph vg = prepared("fig2_left");
  Arrangement arr = build_arrangement(vg);
  auto full = presentation_ring(vg, arr, false);
  int p = vg.graph.vertex_index("p"), q = vg.graph.vertex_index("q");
  auto x = localize(vg, arr, full, parse_polynomial("X^2", full.vars));
  CHECK(x.values[p].to_string() == "x^2");
  // H_L2 * Hbar_L2 is supported on L2 = {p, r}
  auto hh = localize(vg, arr, full, parse_polynomial("H_L2*Hbar_L2", full.vars));
  CHECK(hh.values[q].is_zero());
  CHECK_FALSE(hh.values[p].is_zero());
  auto forg = presentation_ring(vg, arr, true);
  auto l = localize(vg, arr, forg, parse_polynomial("L1*L2", forg.vars));
  CHECK_FALSE(l.values[p].is_zero());
  CHECK(l.values[q].is_zero());
}
