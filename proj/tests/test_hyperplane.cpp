#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "gkm/arrangements.hpp"
#include "gkm/errors.hpp"
#include "gkm/hyperplane.hpp"
#include "gkm/shelling.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace gkm;
using support::prepared;

namespace {

LatticeVector lv(std::initializer_list<int> xs) {
  LatticeVector v;
  for (int x : xs) v.push_back(x);
  return v;
}

std::vector<std::pair<std::string, ValidGraph>> passing() {
  std::vector<std::pair<std::string, ValidGraph>> out;
  for (auto id : {"fig2_left", "fig7_pentagon", "fig8_line5", "local_model(2)", "local_model(3)"})
    out.emplace_back(id, prepared(id));
  out.emplace_back("klm212", support::klm(2, 1, 2));
  out.emplace_back("klm321", support::klm(3, 2, 1));
  return out;
}

std::map<std::string, LatticeVector> by_vertex(const ValidGraph& vg, const ThomClass& t) {
  std::map<std::string, LatticeVector> m;
  for (std::size_t v = 0; v < t.size(); ++v) m[vg.graph.vertices[v]] = t[v];
  return m;
}

}  // namespace

TEST_CASE("hyperplane counts") {
  std::vector<std::pair<std::string, std::size_t>> expect = {
      {"fig2_left", 3}, {"fig7_pentagon", 5}, {"fig8_line5", 5}, {"fig11_sphere", 2}, {"fig2_right", 8},
      {"local_model(2)", 2}, {"local_model(3)", 3}};
  for (const auto& [id, n] : expect) {
    CAPTURE(id);
    CHECK(all_hyperplanes(prepared(id)).list.size() == n);
  }
  CHECK(all_hyperplanes(support::klm(2, 1, 2)).list.size() == 5);
  CHECK(all_hyperplanes(support::klm(3, 2, 1)).list.size() == 6);
}

TEST_CASE("hyperplanes are closed, connected and (2n-2)-valent") {
  for (auto id : {"fig2_left", "fig2_right", "fig7_pentagon", "fig8_line5", "fig11_sphere"}) {
    ValidGraph vg = prepared(id);
    auto hs = all_hyperplanes(vg);
    const auto& g = vg.graph;
    for (const auto& h : hs.list) {
      CAPTURE(h.name);
      CHECK(is_connected(g, h.sub));
      for (int v : h.sub.vertex_list()) CHECK(h.sub.valence(g, v) == 2 * vg.n() - 2);
      // closed under the connection along its own edges
      for (int e : h.sub.dart_list()) {
        if (!g.darts[e].is_edge()) continue;
        for (int d : g.out[g.darts[e].from])
          if (h.sub.din[d]) CHECK(h.sub.din[vg.conn[e].at(d)]);
      }
    }
    // each vertex lies on exactly n hyperplanes
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      int on = 0;
      for (const auto& h : hs.list) on += h.sub.vin[v];
      CHECK(on == vg.n());
    }
  }
}

TEST_CASE("fig8 hyperplanes are single vertices") {
  ValidGraph vg = prepared("fig8_line5");
  auto hs = all_hyperplanes(vg);
  for (const auto& h : hs.list) {
    CHECK(h.sub.vertex_list().size() == 1);
    CHECK(h.sub.dart_list().empty());
  }
  // the sides are the closed rays
  for (std::size_t i = 0; i < hs.list.size(); ++i) {
    auto pr = halfspace_pair(vg, hs, static_cast<int>(i));
    std::size_t a = pr.h.sub.vertex_list().size(), b = pr.hbar.sub.vertex_list().size();
    CHECK(a + b == 6);
    CHECK(is_connected(vg.graph, pr.h.sub));
    CHECK(is_connected(vg.graph, pr.hbar.sub));
  }
}

TEST_CASE("halfspace pairs meet in the hyperplane") {
  for (const auto& [id, vg] : passing()) {
    CAPTURE(id);
    auto hs = all_hyperplanes(vg);
    auto chi = chi_class(vg);
    for (std::size_t i = 0; i < hs.list.size(); ++i) {
      auto pr = halfspace_pair(vg, hs, static_cast<int>(i));
      const auto& L = hs.list[i].sub;
      for (std::size_t v = 0; v < vg.graph.num_vertices(); ++v) {
        CHECK((pr.h.sub.vin[v] && pr.hbar.sub.vin[v]) == static_cast<bool>(L.vin[v]));
        CHECK((pr.h.sub.vin[v] || pr.hbar.sub.vin[v]));
      }
      CHECK(is_halfspace(vg, pr.h));
      CHECK(is_halfspace(vg, pr.hbar));
      CHECK(opposite_side(vg, pr.h).sub == pr.hbar.sub);
      auto b = boundary(vg, pr.h);
      REQUIRE(b.hyperplanes.size() == 1);
      CHECK(b.hyperplanes[0] == L);
      auto th = thom_class(vg, pr.h), tb = thom_class(vg, pr.hbar);
      CHECK(satisfies_congruence(vg, th));
      CHECK(satisfies_congruence(vg, tb));
      for (std::size_t v = 0; v < th.size(); ++v) CHECK(lattice_add(th[v], tb[v]) == chi[v]);
    }
  }
}

TEST_CASE("Thom classes of the vertical hyperplane of fig2_left") {
  ValidGraph vg = prepared("fig2_left");
  auto hs = all_hyperplanes(vg);
  int i = hs.index_of("L2");  // through p and r
  REQUIRE(i >= 0);
  auto pr = halfspace_pair(vg, hs, i);
  auto a = by_vertex(vg, thom_class(vg, pr.h)), b = by_vertex(vg, thom_class(vg, pr.hbar));
  if (a["q"] != lv({0, 0, 1})) std::swap(a, b);
  // side containing q: x at the interior vertex, the outward labels on L2
  CHECK(a["q"] == lv({0, 0, 1}));
  CHECK(a["p"] == lv({0, -1, 1}));
  CHECK(a["r"] == lv({1, -1, 1}));
  // opposite side: 0 at q
  CHECK(b["q"] == lv({0, 0, 0}));
  CHECK(b["p"] == lv({0, 1, 0}));
  CHECK(b["r"] == lv({-1, 1, 0}));
}

TEST_CASE("pre-halfspace axioms") {
  ValidGraph vg = prepared("fig2_left");
  Subgraph whole(vg.graph.num_vertices(), vg.graph.num_darts());
  std::fill(whole.vin.begin(), whole.vin.end(), 1);
  std::fill(whole.din.begin(), whole.din.end(), 1);
  CHECK_FALSE(pre_halfspace_problems(vg, whole).empty());
  CHECK_THROWS_AS(make_pre_halfspace(vg, whole), NotPreHalfspace);
}

TEST_CASE("assumption outcomes") {
  for (auto id : {"fig2_left", "fig7_pentagon", "fig8_line5", "local_model(3)"}) {
    CAPTURE(id);
    ValidGraph vg = prepared(id);
    auto rep = check_assumptions(vg, all_hyperplanes(vg));
    CHECK(rep.ok1());
    CHECK(rep.ok2());
  }
  SUBCASE("fig2_right fails assumption (1) only") {
    ValidGraph vg = prepared("fig2_right");
    auto hs = all_hyperplanes(vg);
    auto rep = check_assumptions(vg, hs);
    CHECK_FALSE(rep.ok1());
    CHECK(rep.ok2());
    std::vector<std::string> failing;
    for (const auto& o : rep.assumption1)
      if (!o.passed) {
        failing.push_back(hs.list[o.hyperplane].name);
        CHECK(o.check == "boundary");
      }
    CHECK(failing == std::vector<std::string>{"L2", "L4", "L6", "L8"});
    CHECK_THROWS_AS(halfspace_pair(vg, hs, hs.index_of("L2")), AssumptionOneViolation);
    CHECK_THROWS_AS(build_arrangement(vg), AssumptionViolation);
  }
  SUBCASE("fig11 fails assumption (2) only") {
    ValidGraph vg = prepared("fig11_sphere");
    auto hs = all_hyperplanes(vg);
    auto rep = check_assumptions(vg, hs);
    CHECK(rep.ok1());
    CHECK_FALSE(rep.ok2());
    REQUIRE(rep.assumption2_failures.size() == 1);
    CHECK(rep.assumption2_failures[0].subset == std::vector<int>{0, 1});
    CHECK(rep.assumption2_failures[0].components == 2);
  }
}

TEST_CASE("intersections") {
  ValidGraph vg = prepared("fig7_pentagon");
  auto hs = all_hyperplanes(vg);
  auto k = intersect_hyperplanes(vg, hs, {hs.index_of("L1"), hs.index_of("L2")});
  CHECK_FALSE(k.empty);
  CHECK(k.components == 1);
  CHECK(k.valence == 0);
  CHECK(k.sub.vertex_list() == std::vector<int>{vg.graph.vertex_index("L1.L2")});
  CHECK(intersect_hyperplanes(vg, hs, {hs.index_of("L1"), hs.index_of("L3")}).empty);
  auto one = intersect_hyperplanes(vg, hs, {hs.index_of("L4")});
  CHECK(one.valence == 2);
  CHECK(one.components == 1);
}

TEST_CASE("forgetful Thom classes and characteristic functions") {
  for (const auto& [id, vg] : passing()) {
    CAPTURE(id);
    Arrangement arr = build_arrangement(vg);
    auto chi = chi_class(vg);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      CHECK(satisfies_congruence(vg, arr.tau_h[i]));
      for (std::size_t v = 0; v < chi.size(); ++v) CHECK(lattice_add(arr.tau_h[i][v], arr.tau_hbar[i][v]) == chi[v]);
      auto t = thom_class_forgetful(vg, arr, static_cast<int>(i));
      for (std::size_t v = 0; v < t.size(); ++v) {
        CHECK(t[v] == forget(arr.tau_h[i][v]));
        if (!arr.hs.list[i].sub.vin[v]) CHECK(lattice_is_zero(t[v]));
      }
    }
    // sum_i <e_j, lambda(L_i)> tau_{L_i} localizes to e_j everywhere
    auto lam = lambda_table(vg, arr);
    for (int j = 0; j < vg.n(); ++j)
      for (std::size_t v = 0; v < vg.graph.num_vertices(); ++v) {
        LatticeVector sum(vg.n(), Int(0));
        for (std::size_t i = 0; i < arr.size(); ++i) {
          auto t = thom_class_forgetful(vg, arr, static_cast<int>(i));
          for (int c = 0; c < vg.n(); ++c) sum[c] += lam[i][j] * t[v][c];
        }
        LatticeVector ej(vg.n(), Int(0));
        ej[j] = 1;
        CHECK(sum == ej);
      }
  }
}

TEST_CASE("lambda values") {
  auto check = [](const ValidGraph& vg, const std::map<std::string, LatticeVector>& expect,
                  const std::string& orientation) {
    Arrangement arr = build_arrangement(vg);
    CHECK(arr.orientation == orientation);
    auto lam = lambda_table(vg, arr);
    for (const auto& [name, v] : expect) {
      int i = arr.hs.index_of(name);
      REQUIRE(i >= 0);
      CAPTURE(name);
      CHECK(lam[i] == v);
    }
  };
  check(support::klm(2, 1, 2),
        {{"X1", lv({1, 0})}, {"X2", lv({1, 0})}, {"Y1", lv({0, 1})}, {"Z1", lv({-1, -1})}, {"Z2", lv({-1, -1})}},
        "klm");
  check(prepared("fig8_line5"), {{"L1", lv({-1})}, {"L2", lv({1})}, {"L5", lv({1})}}, "lexicographic");
  check(prepared("fig7_pentagon"),
        {{"L1", lv({-1, 0})}, {"L2", lv({0, -1})}, {"L3", lv({1, -1})}, {"L4", lv({0, 1})}, {"L5", lv({-1, 1})}},
        "lexicographic");
}

TEST_CASE("klm naming is recognised") {
  ValidGraph vg = support::klm(2, 2, 2);
  CHECK(is_klm_naming(vg, all_hyperplanes(vg)));
  ValidGraph f = prepared("fig7_pentagon");
  CHECK_FALSE(is_klm_naming(f, all_hyperplanes(f)));
}

TEST_CASE("empty families agree with brute force") {
  for (const auto& [id, vg] : passing()) {
    CAPTURE(id);
    auto hs = all_hyperplanes(vg);
    std::vector<std::vector<char>> sets;
    for (const auto& h : hs.list) sets.push_back(h.sub.vin);
    auto fams = oracle::minimal_empty_families(sets);
    // every minimal family really has empty intersection, and dropping any
    // member makes it nonempty
    for (const auto& f : fams) {
      CHECK(intersect_hyperplanes(vg, hs, f).empty);
      for (std::size_t d = 0; d < f.size(); ++d) {
        auto g = f;
        g.erase(g.begin() + d);
        if (!g.empty()) CHECK_FALSE(intersect_hyperplanes(vg, hs, g).empty);
      }
    }
  }
}
