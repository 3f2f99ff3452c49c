#include "gkm/report.hpp"

#include <algorithm>

namespace gkm {

namespace {

Json int_array(const std::vector<Int>& v) {
  Json a = Json::array();
  for (const Int& x : v) {
    if (x.fits_slong_p()) a.push_back(x.get_si());
    else a.push_back(x.get_str());
  }
  return a;
}

}  // namespace

Json error_json(const std::string& kind, const std::string& message) {
  return Json{{"error", {{"kind", kind}, {"message", message}}}};
}

Json validation_json(const ValidationReport& rep) {
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json j{{"name", c.name}, {"passed", c.passed}};
    if (!c.passed) {
      j["ids"] = c.ids;
      j["message"] = c.message;
    }
    checks.push_back(j);
  }
  Json failing = Json::array();
  for (const auto& c : rep.failures())
    if (std::find(failing.begin(), failing.end(), c.name) == failing.end()) failing.push_back(c.name);
  return Json{{"ok", rep.ok()}, {"checks", checks}, {"failing", failing}};
}

Json hyperplanes_json(const ValidGraph& vg, const HyperplaneSet& hs) {
  const GkmGraph& g = vg.graph;
  Json list = Json::array();
  for (const auto& h : hs.list) {
    Json vs = Json::array(), ds = Json::array();
    for (int v : h.sub.vertex_list()) vs.push_back(g.vertices[v]);
    for (int d : h.sub.dart_list()) ds.push_back(g.darts[d].id);
    list.push_back({{"name", h.name}, {"id", h.id}, {"vertices", vs}, {"darts", ds}});
  }
  return Json{{"count", hs.list.size()}, {"hyperplanes", list}};
}

Json assumptions_json(const HyperplaneSet& hs, const AssumptionReport& rep) {
  Json f1 = Json::array();
  for (const auto& o : rep.assumption1)
    if (!o.passed)
      f1.push_back({{"hyperplane", hs.list[o.hyperplane].name}, {"check", o.check}, {"message", o.message}});
  Json f2 = Json::array();
  for (const auto& t : rep.assumption2_failures) {
    Json names = Json::array();
    for (int i : t.subset) names.push_back(hs.list[i].name);
    f2.push_back({{"hyperplanes", names}, {"components", t.components}});
  }
  Json failing = Json::array();
  if (!rep.ok1()) failing.push_back("assumption1");
  if (!rep.ok2()) failing.push_back("assumption2");
  return Json{{"ok", rep.ok1() && rep.ok2()},
              {"failing", failing},
              {"assumption1", {{"ok", rep.ok1()}, {"failures", f1}}},
              {"assumption2",
               {{"ok", rep.ok2()},
                {"failures", f2},
                {"subsets_checked", rep.subsets_checked},
                {"truncated", rep.truncated}}}};
}

Json class_json(const ValidGraph& vg, const CohomologyClass& f) {
  Json j = Json::object();
  for (std::size_t v = 0; v < f.values.size(); ++v) j[vg.graph.vertices[v]] = f.values[v].to_string();
  return j;
}

Json cohomology_json(const ValidGraph& vg, const std::vector<GradedPiece>& pieces) {
  Json degrees = Json::object();
  bool forgetful = false;
  for (const auto& p : pieces) {
    forgetful = p.forgetful;
    Json basis = Json::array();
    for (std::size_t i = 0; i < p.rank(); ++i) basis.push_back(class_json(vg, p.element(i)));
    degrees[std::to_string(p.degree)] = {{"rank", p.rank()}, {"basis", basis}};
  }
  return Json{{"forgetful", forgetful}, {"degrees", degrees}};
}

Json iso_json(const IsoReport& rep, const std::string& orientation) {
  Json degrees = Json::object();
  for (const auto& d : rep.degrees)
    degrees[std::to_string(d.degree)] = {{"solver_rank", d.solver_rank},   {"image_rank", d.image_rank},
                                         {"match", d.match()},             {"monomials", d.monomials},
                                         {"relation_rank", d.relation_rank}, {"surjective", d.surjective},
                                         {"injective", d.injective},       {"lattice_match", d.lattice_match}};
  return Json{{"forgetful", rep.forgetful},
              {"assumption2", rep.assumption2},
              {"orientation", orientation},
              {"ok", rep.ok()},
              {"degrees", degrees}};
}

Json face_json(const HyperplaneSet& hs, const Face& f) {
  Json a = Json::array();
  for (int i : f) a.push_back(hs.list[i].name);
  return a;
}

Json basis_json(const ValidGraph& vg, const Arrangement& arr, const SimplicialComplex& c, const ShellingData& s) {
  Json order = Json::array(), mu = Json::array(), vertices = Json::array(), basis = Json::array();
  for (std::size_t i = 0; i < s.order.size(); ++i) {
    order.push_back(face_json(arr.hs, c.facets[s.order[i]]));
    mu.push_back(face_json(arr.hs, s.mu[i]));
    vertices.push_back(vg.graph.vertices[c.facet_vertex[s.order[i]]]);
  }
  for (const auto& b : module_basis(vg, arr, s)) basis.push_back(b.to_string());
  Json lambda = Json::object();
  auto lam = lambda_table(vg, arr);
  for (std::size_t i = 0; i < lam.size(); ++i) lambda[arr.hs.list[i].name] = int_array(lam[i]);
  std::size_t edges = 0;
  for (const auto& f : c.faces)
    if (f.size() == 2) ++edges;
  return Json{{"basis", basis},
              {"order", order},
              {"mu", mu},
              {"facet_vertices", vertices},
              {"method", s.method},
              {"orientation", arr.orientation},
              {"lambda", lambda},
              {"complex", {{"vertices", c.num_vertices}, {"facets", c.facets.size()}, {"edges", edges}, {"dim", c.dim}}}};
}

Json expansion_json(const std::vector<Polynomial>& basis, const BasisExpansion& e) {
  Json j = Json::object();
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!e.coeffs[i].is_zero()) j[basis[i].to_string()] = e.coeffs[i].to_string();
  return j;
}

Json structure_json(const Arrangement& arr, const StructureTable& t) {
  Json basis = Json::array();
  for (const auto& b : t.basis) basis.push_back(b.to_string());
  Json products = Json::object();
  for (std::size_t i = 0; i < t.basis.size(); ++i)
    for (std::size_t j = i; j < t.basis.size(); ++j)
      products[t.basis[i].to_string() + "*" + t.basis[j].to_string()] = expansion_json(t.basis, t.products[i][j]);
  Json ranks = Json::array();
  for (auto r : t.ranks) ranks.push_back(r);
  Json j{{"basis", basis}, {"products", products}, {"ordinary", t.ordinary}, {"orientation", arr.orientation}};
  if (t.ordinary) j["ranks"] = ranks;
  return j;
}

}  // namespace gkm
