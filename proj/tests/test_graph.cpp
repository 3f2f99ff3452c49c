#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <set>

#include "gkm/arrangements.hpp"
#include "gkm/errors.hpp"
#include "gkm/graph.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace gkm;
using support::read_fixture;

namespace {

LatticeVector lv(std::initializer_list<int> xs) {
  LatticeVector v;
  for (int x : xs) v.push_back(x);
  return v;
}

const std::vector<std::pair<std::string, std::string>> kFiles = {
    {"fig2_left", "fig2_left.json"},         {"fig2_right", "fig2_right.json"},
    {"fig7_pentagon", "fig7_pentagon.json"}, {"fig8_line5", "fig8_line5.json"},
    {"fig11_sphere", "fig11_sphere.json"},   {"local_model(2)", "local_model2.json"},
    {"local_model(3)", "local_model3.json"}};

std::vector<GkmGraph> all_graphs() {
  std::vector<GkmGraph> out;
  for (const auto& id : fixture_ids()) out.push_back(fixture(id));
  out.push_back(local_model(2));
  out.push_back(local_model(3));
  out.push_back(gen_klm({2, 1, 2}));
  out.push_back(gen_klm({2, 2, 2}));
  return out;
}

// fig7 with one label replaced through the JSON form.
GkmGraph mutated(const std::string& dart, const LatticeVector& axial) {
  auto j = nlohmann::json::parse(serialize_graph(fixture("fig7_pentagon")));
  for (auto& d : j["darts"])
    if (d["id"] == dart) {
      d["axial"] = nlohmann::json::array();
      for (const auto& x : axial) d["axial"].push_back(x.get_si());
    }
  return load_graph(j.dump());
}

}  // namespace

TEST_CASE("builder rejects structural defects") {
  SUBCASE("valence") {
    GraphBuilder gb(1);
    gb.vertex("a").leg("a>1", "a", lv({1, 0}));
    CHECK_THROWS_AS(gb.build(), StructuralError);
  }
  SUBCASE("axial length") {
    GraphBuilder gb(1);
    gb.vertex("a").leg("a>1", "a", lv({1})).leg("a>2", "a", lv({-1, 1}));
    CHECK_THROWS_AS(gb.build(), StructuralError);
  }
  SUBCASE("duplicate dart") {
    GraphBuilder gb(1);
    gb.vertex("a").leg("a>1", "a", lv({1, 0})).leg("a>1", "a", lv({-1, 1}));
    CHECK_THROWS_AS(gb.build(), StructuralError);
  }
  SUBCASE("disconnected") {
    GraphBuilder gb(1);
    gb.vertex("a").vertex("b");
    gb.leg("a>1", "a", lv({1, 0})).leg("a>2", "a", lv({-1, 1}));
    gb.leg("b>1", "b", lv({1, 0})).leg("b>2", "b", lv({-1, 1}));
    CHECK_THROWS_AS(gb.build(), StructuralError);
  }
  SUBCASE("dangling opposite") {
    GraphBuilder gb(1);
    gb.vertex("a").vertex("b");
    gb.raw_dart("a>b", "a", "b", "nowhere", lv({1, 0}));
    CHECK_THROWS_AS(gb.build(), StructuralError);
  }
  SUBCASE("rank zero") {
    GraphBuilder gb(0);
    gb.vertex("a");
    CHECK_THROWS_AS(gb.build(), StructuralError);
  }
}

TEST_CASE("loader reports parse errors") {
  CHECK_THROWS_AS(load_graph("{"), ParseError);
  CHECK_THROWS_AS(load_graph("[]"), ParseError);
  CHECK_THROWS_AS(load_graph(R"({"rank":1,"vertices":["a"]})"), ParseError);
  CHECK_THROWS_AS(load_graph(R"({"rank":"1","vertices":[],"darts":[]})"), ParseError);
  CHECK_THROWS_AS(
      load_graph(R"({"rank":1,"vertices":["a"],"darts":[{"id":"d","from":"a","to":null,"opposite":null,"axial":[1]}]})"),
      ParseError);
}

TEST_CASE("serialization round trips") {
  for (const auto& g : all_graphs()) {
    CHECK(load_graph(serialize_graph(g)) == g);
    GkmGraph withc = with_connection(g, derive_connection(g));
    GkmGraph back = load_graph(serialize_graph(withc));
    if (g.num_edges() == 0) continue;  // nothing to store
    CHECK(back == withc);
    REQUIRE(back.stored_connection.has_value());
    CHECK(*back.stored_connection == derive_connection(g));
    CHECK(forget_connection(back) == g);
  }
}

TEST_CASE("fixture files match the built-in graphs") {
  for (const auto& [id, file] : kFiles) {
    CAPTURE(id);
    CHECK(load_graph(read_fixture(file)) == fixture(id));
  }
  CHECK(load_graph(read_fixture("klm_2_1_2.json")) == gen_klm({2, 1, 2}));
}

TEST_CASE("all fixtures validate") {
  for (const auto& g : all_graphs()) {
    auto rep = validate_axial(g);
    CHECK(rep.ok());
    CHECK_NOTHROW(prepare(g));
  }
}

TEST_CASE("connection is the unique compatible one") {
  for (const auto& g : all_graphs()) {
    auto choices = oracle::connection_choices(g);
    Connection c = derive_connection(g);
    for (std::size_t e = 0; e < g.darts.size(); ++e) {
      if (!g.darts[e].is_edge()) continue;
      CAPTURE(g.darts[e].id);
      CHECK(choices[e] == 1);
      // derived map is a bijection onto out(to) sending e to its opposite
      CHECK(c[e].at(static_cast<int>(e)) == g.darts[e].opposite);
      std::set<int> img;
      for (auto [a, b] : c[e]) img.insert(b);
      CHECK(img.size() == g.out[g.darts[e].to].size());
    }
  }
}

TEST_CASE("pairs are x-complements and are preserved") {
  for (const auto& g : all_graphs()) {
    ValidGraph vg = prepare(g);
    const auto& pd = vg.pairs;
    auto x = residual(g.rank);
    for (std::size_t d = 0; d < g.darts.size(); ++d) {
      int p = pd.partner[d];
      REQUIRE(p >= 0);
      CHECK(lattice_add(g.darts[d].axial, g.darts[p].axial) == x);
      CHECK(pd.partner[p] == static_cast<int>(d));
    }
    for (std::size_t e = 0; e < g.darts.size(); ++e)
      for (auto [a, b] : vg.conn[e]) CHECK(vg.conn[e].at(pd.partner[a]) == pd.partner[b]);
  }
}

TEST_CASE("mutated labels fail validation") {
  SUBCASE("opposite sign") {
    auto rep = validate_axial(mutated("L1.L2>L2.L3", lv({2, 0, 0})));
    CHECK_FALSE(rep.ok());
    CHECK(rep.failed("opposite_sign"));
    CHECK_THROWS_AS(prepare(mutated("L1.L2>L2.L3", lv({2, 0, 0}))), ValidationFailed);
  }
  SUBCASE("no congruent partner") {
    auto rep = validate_axial(mutated("L1.L2>leg1", lv({-1, 3, 1})));
    CHECK_FALSE(rep.ok());
  }
  SUBCASE("residual label") {
    auto rep = validate_axial(mutated("L1.L2>leg1", lv({0, 0, 1})));
    CHECK_FALSE(rep.ok());
  }
}

TEST_CASE("x-forgetful labels") {
  SUBCASE("fig2_left at p") {
    GkmGraph g = fixture("fig2_left");
    auto fg = forgetful_graph(g);
    CHECK_FALSE(fg.is_gkm);
    std::multiset<LatticeVector> at_p;
    for (int d : g.out[g.vertex_index("p")]) at_p.insert(fg.axial[d]);
    CHECK(at_p == std::multiset<LatticeVector>{lv({1, 0}), lv({0, 1}), lv({-1, 0}), lv({0, -1})});
  }
  SUBCASE("local model") {
    GkmGraph g = local_model(3);
    auto fg = forgetful_graph(g);
    for (std::size_t d = 0; d < g.darts.size(); ++d) {
      CHECK(fg.axial[d].size() == 3);
      CHECK(fg.axial[d] == forget(g.darts[d].axial));
    }
  }
  SUBCASE("fig11") {
    GkmGraph g = fixture("fig11_sphere");
    auto fg = forgetful_graph(g);
    for (const auto& v : {"bottom", "top"}) {
      std::multiset<LatticeVector> at;
      for (int d : g.out[g.vertex_index(v)]) at.insert(fg.axial[d]);
      CHECK(at == std::multiset<LatticeVector>{lv({1, 0}), lv({0, 1}), lv({-1, 0}), lv({0, -1})});
    }
  }
}

TEST_CASE("local model has one vertex") {
  GkmGraph g = local_model(3);
  CHECK(g.num_vertices() == 1);
  CHECK(g.num_legs() == 6);
  CHECK(g.num_edges() == 0);
}
