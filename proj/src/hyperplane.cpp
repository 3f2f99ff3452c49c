#include "gkm/hyperplane.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <regex>
#include <functional>
#include <optional>
#include <numeric>
#include <set>
#include <sstream>

#include "gkm/errors.hpp"
#include "gkm/matrix.hpp"

namespace gkm {

std::vector<int> Subgraph::vertex_list() const {
  std::vector<int> r;
  for (std::size_t i = 0; i < vin.size(); ++i)
    if (vin[i]) r.push_back(static_cast<int>(i));
  return r;
}

std::vector<int> Subgraph::dart_list() const {
  std::vector<int> r;
  for (std::size_t i = 0; i < din.size(); ++i)
    if (din[i]) r.push_back(static_cast<int>(i));
  return r;
}

bool Subgraph::has_vertices() const {
  return std::any_of(vin.begin(), vin.end(), [](char c) { return c != 0; });
}

int Subgraph::valence(const GkmGraph& g, int v) const {
  int c = 0;
  for (int d : g.out[v]) c += din[d] != 0;
  return c;
}

int component_count(const GkmGraph& g, const Subgraph& s) {
  std::vector<char> seen(g.num_vertices(), 0);
  int comps = 0;
  for (std::size_t v0 = 0; v0 < g.num_vertices(); ++v0) {
    if (!s.vin[v0] || seen[v0]) continue;
    ++comps;
    std::vector<int> stack{static_cast<int>(v0)};
    seen[v0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int d : g.out[v]) {
        int w = g.darts[d].to;
        if (s.din[d] && w >= 0 && s.vin[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return comps;
}

bool is_connected(const GkmGraph& g, const Subgraph& s) { return component_count(g, s) == 1; }

int HyperplaneSet::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < list.size(); ++i)
    if (list[i].name == name) return static_cast<int>(i);
  return -1;
}

namespace {

std::string hex64(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) s[i] = digits[h & 15];
  return s;
}

std::string canonical_key(const GkmGraph& g, const Subgraph& s) {
  std::string k;
  for (int v : s.vertex_list()) k += g.vertices[v] + ",";
  k += "|";
  for (int d : s.dart_list()) k += g.darts[d].id + ",";
  return k;
}

std::string stable_id(const std::string& key) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return "h" + hex64(h);
}

std::vector<std::string> tokens(const std::string& id) {
  std::vector<std::string> t;
  std::stringstream ss(id);
  std::string item;
  while (std::getline(ss, item, '.')) t.push_back(item);
  return t;
}

// Names like X10 compare as (X, 10).
bool natural_less(const std::string& a, const std::string& b) {
  auto split = [](const std::string& s) {
    std::size_t k = s.size();
    while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
    long long num = k < s.size() ? std::stoll(s.substr(k)) : -1;
    return std::make_pair(s.substr(0, k), num);
  };
  auto sa = split(a), sb = split(b);
  if (sa != sb) return sa < sb;
  return a < b;
}

// Token names must be usable as polynomial variables next to e1..en, x and
// the halfspace generators.
bool usable_name(const std::string& s) {
  static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
  static const std::regex reserved("e[0-9]+|x|X|H_.*|Hbar_.*");
  return std::regex_match(s, ident) && !std::regex_match(s, reserved);
}

}  // namespace

Hyperplane hyperplane_through(const ValidGraph& vg, int p, int pair_slot) {
  const GkmGraph& g = vg.graph;
  const auto& pairs = vg.pairs;
  Subgraph s(g.num_vertices(), g.num_darts());
  std::map<int, std::set<int>> at;
  auto ex = pairs.pairs.at(p).at(pair_slot);
  for (int d : g.out[p])
    if (d != ex[0] && d != ex[1]) at[p].insert(d);
  std::vector<int> queue{p};
  s.vin[p] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (int e : at[v]) {
      if (!g.darts[e].is_edge()) continue;
      int w = g.darts[e].to;
      std::set<int> image;
      for (int d : at[v]) image.insert(vg.conn[e].at(d));
      std::vector<int> rest;
      for (int d : g.out[w])
        if (!image.count(d)) rest.push_back(d);
      if (rest.size() != 2 || pairs.partner[rest[0]] != rest[1])
        throw ClosureFailure("edge " + g.darts[e].id + ": image of the dart set does not omit exactly one pair");
      if (!s.vin[w]) {
        s.vin[w] = 1;
        at[w] = std::move(image);
        queue.push_back(w);
      } else if (at[w] != image) {
        throw ClosureFailure("edge " + g.darts[e].id + ": closure reaches " + g.vertices[w] +
                             " with two different dart sets");
      }
    }
  }
  for (const auto& [v, ds] : at)
    for (int d : ds) s.din[d] = 1;
  Hyperplane h;
  h.sub = std::move(s);
  h.id = stable_id(canonical_key(g, h.sub));
  return h;
}

HyperplaneSet all_hyperplanes(const ValidGraph& vg) {
  const GkmGraph& g = vg.graph;
  HyperplaneSet hs;
  hs.through.assign(g.num_vertices(), std::vector<int>(g.rank, -1));
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    for (int j = 0; j < g.rank; ++j) {
      if (hs.through[v][j] >= 0) continue;
      Hyperplane h = hyperplane_through(vg, static_cast<int>(v), j);
      int idx = static_cast<int>(hs.list.size());
      for (int w : h.sub.vertex_list()) {
        int slot = -1;
        for (int d : g.out[w])
          if (!h.sub.din[d]) slot = vg.pairs.pair_slot[d];
        if (hs.through[w][slot] >= 0 && hs.through[w][slot] != idx)
          throw ClosureFailure("two hyperplanes claim vertex " + g.vertices[w]);
        hs.through[w][slot] = idx;
      }
      hs.list.push_back(std::move(h));
    }

  std::vector<std::string> names(hs.list.size());
  bool named = true;
  for (std::size_t i = 0; i < hs.list.size() && named; ++i) {
    std::set<std::string> common;
    bool first = true;
    for (int v : hs.list[i].sub.vertex_list()) {
      auto t = tokens(g.vertices[v]);
      std::set<std::string> ts(t.begin(), t.end());
      if (first) {
        common = ts;
        first = false;
      } else {
        std::set<std::string> keep;
        std::set_intersection(common.begin(), common.end(), ts.begin(), ts.end(),
                              std::inserter(keep, keep.begin()));
        common = std::move(keep);
      }
    }
    if (common.size() != 1) named = false;
    else if (!usable_name(*common.begin())) named = false;
    else names[i] = *common.begin();
  }
  if (named && std::set<std::string>(names.begin(), names.end()).size() != names.size()) named = false;

  std::vector<std::size_t> order(hs.list.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::string> keys;
  for (const auto& h : hs.list) keys.push_back(canonical_key(g, h.sub));
  if (named)
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return natural_less(names[a], names[b]); });
  else
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return keys[a] < keys[b]; });
  std::vector<int> rank_of(hs.list.size());
  std::vector<Hyperplane> sorted;
  for (std::size_t k = 0; k < order.size(); ++k) {
    rank_of[order[k]] = static_cast<int>(k);
    sorted.push_back(std::move(hs.list[order[k]]));
    sorted.back().name = named ? names[order[k]] : "L" + std::to_string(k + 1);
  }
  hs.list = std::move(sorted);
  for (auto& row : hs.through)
    for (int& i : row) i = rank_of[i];
  return hs;
}

std::vector<std::string> pre_halfspace_problems(const ValidGraph& vg, const Subgraph& s,
                                                std::map<int, int>* normals) {
  const GkmGraph& g = vg.graph;
  const int full = 2 * g.rank;
  std::vector<std::string> probs;
  std::vector<int> val(g.num_vertices(), 0);
  std::map<int, int> nrm;
  bool has_boundary = false;
  for (std::size_t d = 0; d < g.num_darts(); ++d)
    if (s.din[d] && !s.vin[g.darts[d].from])
      probs.push_back("dart " + g.darts[d].id + " leaves from a vertex outside the subgraph");
  for (int v : s.vertex_list()) {
    val[v] = s.valence(g, v);
    if (val[v] == full - 1) {
      has_boundary = true;
      for (int d : g.out[v])
        if (!s.din[d]) nrm[v] = d;
    } else if (val[v] != full) {
      probs.push_back("vertex " + g.vertices[v] + " has " + std::to_string(val[v]) + " darts");
    }
  }
  if (!has_boundary) probs.push_back("no vertex of valence 2n-1");
  if (!probs.empty()) return probs;
  LatticeVector x = residual(g.rank);
  for (std::size_t e = 0; e < g.num_darts(); ++e) {
    const Dart& ed = g.darts[e];
    if (!s.din[e] || !ed.is_edge() || !s.vin[ed.to]) continue;
    int a = val[ed.from], b = val[ed.to];
    if (a == full && b == full - 1) continue;
    for (int d : g.out[ed.from])
      if (s.din[d] && !s.din[vg.conn[e].at(d)])
        probs.push_back("edge " + ed.id + ": connection sends " + g.darts[d].id + " outside the subgraph");
    if (a == full - 1 && b == full &&
        !is_multiple(lattice_sub(g.darts[nrm[ed.from]].axial, x), ed.axial))
      probs.push_back("edge " + ed.id + ": normal label minus x not divisible by the edge label");
  }
  if (normals) *normals = std::move(nrm);
  return probs;
}

Halfspace make_pre_halfspace(const ValidGraph& vg, const Subgraph& s) {
  Halfspace h;
  auto probs = pre_halfspace_problems(vg, s, &h.normal);
  if (!probs.empty()) throw NotPreHalfspace(probs.front());
  h.sub = s;
  return h;
}

Boundary boundary(const ValidGraph& vg, const Halfspace& h) {
  const GkmGraph& g = vg.graph;
  Boundary b;
  b.sub = Subgraph(g.num_vertices(), g.num_darts());
  std::set<std::string> seen;
  for (const auto& [v, nd] : h.normal) {
    Hyperplane L = hyperplane_through(vg, v, vg.pairs.pair_slot[nd]);
    if (!seen.insert(L.id).second) continue;
    for (std::size_t i = 0; i < L.sub.vin.size(); ++i) b.sub.vin[i] |= L.sub.vin[i];
    for (std::size_t i = 0; i < L.sub.din.size(); ++i) b.sub.din[i] |= L.sub.din[i];
    b.hyperplanes.push_back(std::move(L.sub));
  }
  return b;
}

Halfspace opposite_side(const ValidGraph& vg, const Halfspace& h) {
  const GkmGraph& g = vg.graph;
  Boundary b = boundary(vg, h);
  Subgraph s(g.num_vertices(), g.num_darts());
  for (std::size_t v = 0; v < s.vin.size(); ++v) s.vin[v] = !h.sub.vin[v] || b.sub.vin[v];
  for (std::size_t d = 0; d < s.din.size(); ++d) s.din[d] = !h.sub.din[d] || b.sub.din[d];
  return make_pre_halfspace(vg, s);
}

bool is_halfspace(const ValidGraph& vg, const Halfspace& h) {
  if (!is_connected(vg.graph, h.sub)) return false;
  try {
    return is_connected(vg.graph, opposite_side(vg, h).sub);
  } catch (const NotPreHalfspace&) {
    return false;
  }
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct Sides {
  bool separated = false;
  bool extra = false;
  Subgraph a, b;  // material outside the cut on each side
};

// Splits everything outside the cut into the classes reached from the two
// darts a0, b0, gluing across the cut only along the connection.
Sides split(const ValidGraph& vg, const Subgraph& cut, int a0, int b0) {
  const GkmGraph& g = vg.graph;
  std::size_t nv = g.num_vertices();
  UnionFind uf(nv + g.num_darts());
  auto D = [&](int d) { return static_cast<int>(nv) + d; };
  for (std::size_t d = 0; d < g.num_darts(); ++d) {
    if (cut.din[d]) continue;
    const Dart& dd = g.darts[d];
    if (!cut.vin[dd.from]) uf.unite(D(d), dd.from);
    if (dd.is_edge()) {
      if (!cut.vin[dd.to]) uf.unite(D(d), dd.to);
      if (!cut.din[dd.opposite]) uf.unite(D(d), D(dd.opposite));
    }
  }
  for (std::size_t e = 0; e < g.num_darts(); ++e) {
    const Dart& ed = g.darts[e];
    if (!cut.din[e] || !ed.is_edge()) continue;
    for (int d : g.out[ed.from])
      if (!cut.din[d]) uf.unite(D(d), D(vg.conn[e].at(d)));
  }
  Sides s;
  s.a = Subgraph(nv, g.num_darts());
  s.b = Subgraph(nv, g.num_darts());
  int ca = uf.find(D(a0)), cb = uf.find(D(b0));
  s.separated = ca != cb;
  for (std::size_t v = 0; v < nv; ++v) {
    if (cut.vin[v]) continue;
    int c = uf.find(static_cast<int>(v));
    if (c == ca) s.a.vin[v] = 1;
    else if (c == cb) s.b.vin[v] = 1;
    else s.extra = true;
  }
  for (std::size_t d = 0; d < g.num_darts(); ++d) {
    if (cut.din[d]) continue;
    int c = uf.find(D(d));
    if (c == ca) s.a.din[d] = 1;
    else if (c == cb) s.b.din[d] = 1;
    else s.extra = true;
  }
  return s;
}

Subgraph unite(const Subgraph& x, const Subgraph& y) {
  Subgraph r = x;
  for (std::size_t i = 0; i < r.vin.size(); ++i) r.vin[i] |= y.vin[i];
  for (std::size_t i = 0; i < r.din.size(); ++i) r.din[i] |= y.din[i];
  return r;
}

[[noreturn]] void violation(const std::string& check, const std::string& detail) {
  throw AssumptionOneViolation(check + ": " + detail);
}

}  // namespace

HalfspacePair halfspace_pair(const ValidGraph& vg, const HyperplaneSet& hs, int index) {
  const GkmGraph& g = vg.graph;
  const Hyperplane& L = hs.list.at(index);
  int p0 = L.sub.vertex_list().front();
  int a0 = -1, b0 = -1;
  for (int d : g.out[p0])
    if (!L.sub.din[d]) (a0 < 0 ? a0 : b0) = d;
  Sides s = split(vg, L.sub, a0, b0);

  if (!s.separated) {
    // Look for a second hyperplane whose removal separates the pair: the
    // resulting candidate halfspace then has a disconnected boundary.
    for (std::size_t j = 0; j < hs.list.size(); ++j) {
      if (static_cast<int>(j) == index) continue;
      Subgraph cut = unite(L.sub, hs.list[j].sub);
      if (cut.din[a0] || cut.din[b0]) continue;
      Sides t = split(vg, cut, a0, b0);
      if (!t.separated || t.extra) continue;
      std::map<int, int> nrm;
      Subgraph cand = unite(cut, t.a);
      if (!pre_halfspace_problems(vg, cand, &nrm).empty()) continue;
      Halfspace h{cand, nrm};
      Boundary b = boundary(vg, h);
      violation("boundary", "candidate halfspace of " + L.name + " has boundary made of " +
                                std::to_string(b.hyperplanes.size()) + " hyperplanes (" + L.name + ", " +
                                hs.list[j].name + ")");
    }
    violation("pair_same_side", "both darts of the excluded pair at " + g.vertices[p0] +
                                    " reach the same component of the complement of " + L.name);
  }
  if (s.extra) violation("extra_component", "complement of " + L.name + " has a component reached from neither side");

  Subgraph ha = unite(L.sub, s.a), hb = unite(L.sub, s.b);
  int smallest = -1;
  for (std::size_t d = 0; d < g.num_darts() && smallest < 0; ++d)
    if (!L.sub.din[d]) smallest = static_cast<int>(d);
  if (!ha.din[smallest]) std::swap(ha, hb);

  HalfspacePair hp;
  for (auto [sub, out] : {std::pair{&ha, &hp.h}, std::pair{&hb, &hp.hbar}}) {
    auto probs = pre_halfspace_problems(vg, *sub, &out->normal);
    if (!probs.empty()) violation("pre_halfspace", L.name + ": " + probs.front());
    out->sub = *sub;
    if (!is_connected(g, out->sub)) violation("disconnected_side", "a side of " + L.name + " is disconnected");
    Boundary b = boundary(vg, *out);
    if (!(b.sub == L.sub))
      violation("boundary", "candidate halfspace of " + L.name + " has boundary made of " +
                                std::to_string(b.hyperplanes.size()) + " hyperplanes");
  }
  if (!(opposite_side(vg, hp.h).sub == hp.hbar.sub))
    violation("opposite_side", "the two sides of " + L.name + " are not opposite");
  return hp;
}

ThomClass chi_class(const ValidGraph& vg) {
  return ThomClass(vg.graph.num_vertices(), residual(vg.graph.rank));
}

bool satisfies_congruence(const ValidGraph& vg, const ThomClass& t) {
  const GkmGraph& g = vg.graph;
  for (const Dart& d : g.darts)
    if (d.is_edge() && !is_multiple(lattice_sub(t[d.from], t[d.to]), d.axial)) return false;
  return true;
}

ThomClass thom_class(const ValidGraph& vg, const Halfspace& h) {
  const GkmGraph& g = vg.graph;
  std::map<int, int> nrm;
  auto probs = pre_halfspace_problems(vg, h.sub, &nrm);
  if (!probs.empty()) throw NotPreHalfspace(probs.front());
  ThomClass t(g.num_vertices(), LatticeVector(g.rank + 1, Int(0)));
  for (int v : h.sub.vertex_list()) {
    auto it = nrm.find(v);
    t[v] = it == nrm.end() ? residual(g.rank) : g.darts[it->second].axial;
  }
  if (!satisfies_congruence(vg, t)) throw CongruenceFailure("Thom class violates a congruence relation");
  return t;
}

Intersection intersect_hyperplanes(const ValidGraph& vg, const HyperplaneSet& hs,
                                   const std::vector<int>& subset) {
  const GkmGraph& g = vg.graph;
  Intersection r;
  r.sub = Subgraph(g.num_vertices(), g.num_darts());
  std::fill(r.sub.vin.begin(), r.sub.vin.end(), 1);
  std::fill(r.sub.din.begin(), r.sub.din.end(), 1);
  for (int i : subset) {
    const Subgraph& s = hs.list.at(i).sub;
    for (std::size_t k = 0; k < s.vin.size(); ++k) r.sub.vin[k] &= s.vin[k];
    for (std::size_t k = 0; k < s.din.size(); ++k) r.sub.din[k] &= s.din[k];
  }
  r.empty = !r.sub.has_vertices();
  if (r.empty) return r;
  r.components = component_count(g, r.sub);
  auto vs = r.sub.vertex_list();
  r.valence = r.sub.valence(g, vs.front());
  for (int v : vs)
    if (r.sub.valence(g, v) != r.valence) r.valence = -1;
  return r;
}

bool AssumptionReport::ok1() const {
  return std::all_of(assumption1.begin(), assumption1.end(), [](const One& o) { return o.passed; });
}

AssumptionReport check_assumptions(const ValidGraph& vg, const HyperplaneSet& hs,
                                   std::size_t subset_cap, Exec exec) {
  AssumptionReport rep;
  rep.assumption1.resize(hs.list.size());
  for_each_index(hs.list.size(), exec, [&](std::size_t i) {
    auto& o = rep.assumption1[i];
    o.hyperplane = static_cast<int>(i);
    o.passed = true;
    try {
      halfspace_pair(vg, hs, static_cast<int>(i));
    } catch (const AssumptionOneViolation& e) {
      o.passed = false;
      std::string w = e.what();
      auto c = w.find(": ");
      o.check = w.substr(0, c);
      o.message = c == std::string::npos ? w : w.substr(c + 2);
    }
  });

  const GkmGraph& g = vg.graph;
  std::vector<int> subset;
  std::function<void(std::size_t, const Subgraph&)> dfs = [&](std::size_t start, const Subgraph& cur) {
    for (std::size_t i = start; i < hs.list.size(); ++i) {
      if (rep.truncated) return;
      Subgraph next = cur;
      const Subgraph& s = hs.list[i].sub;
      for (std::size_t k = 0; k < s.vin.size(); ++k) next.vin[k] &= s.vin[k];
      for (std::size_t k = 0; k < s.din.size(); ++k) next.din[k] &= s.din[k];
      if (!next.has_vertices()) continue;
      if (++rep.subsets_checked > subset_cap) {
        rep.truncated = true;
        return;
      }
      subset.push_back(static_cast<int>(i));
      int comps = component_count(g, next);
      if (comps > 1) rep.assumption2_failures.push_back({subset, comps});
      dfs(i + 1, next);
      subset.pop_back();
    }
  };
  Subgraph all(g.num_vertices(), g.num_darts());
  std::fill(all.vin.begin(), all.vin.end(), 1);
  std::fill(all.din.begin(), all.din.end(), 1);
  dfs(0, all);
  return rep;
}

}  // namespace gkm

namespace gkm {

bool is_klm_naming(const ValidGraph& vg, const HyperplaneSet& hs) {
  if (vg.graph.rank != 2) return false;
  std::set<char> letters;
  for (const auto& h : hs.list) {
    const std::string& s = h.name;
    if (s.size() < 2 || (s[0] != 'X' && s[0] != 'Y' && s[0] != 'Z')) return false;
    for (std::size_t i = 1; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    letters.insert(s[0]);
  }
  return letters.size() == 3;
}

std::vector<Int> characteristic_function(const ValidGraph& vg, const Subgraph& L, const Halfspace& h) {
  const GkmGraph& g = vg.graph;
  const int n = g.rank;
  std::optional<std::vector<Int>> lambda;
  for (int p : L.vertex_list()) {
    auto it = h.normal.find(p);
    if (it == h.normal.end())
      throw InconsistentLambda("vertex " + g.vertices[p] + " of the hyperplane is not on the boundary");
    IntMatrix a(n, n);
    int row = 0;
    for (const auto& pr : vg.pairs.pairs[p]) {
      if (!L.din[pr[0]]) continue;
      LatticeVector f = forget(g.darts[pr[0]].axial);
      for (int j = 0; j < n; ++j) a(row, j) = f[j];
      ++row;
    }
    LatticeVector f = forget(g.darts[it->second].axial);
    for (int j = 0; j < n; ++j) a(n - 1, j) = f[j];
    std::vector<Int> rhs(n, Int(0));
    rhs[n - 1] = 1;
    auto sol = solve_integral(a, rhs);
    if (!sol) throw InconsistentLambda("local basis at " + g.vertices[p] + " is not unimodular");
    if (lambda && *lambda != *sol)
      throw InconsistentLambda("characteristic function differs at " + g.vertices[p]);
    lambda = sol;
  }
  if (!lambda) throw InconsistentLambda("empty hyperplane");
  return *lambda;
}

Arrangement build_arrangement(const ValidGraph& vg, Exec exec) {
  Arrangement arr;
  arr.hs = all_hyperplanes(vg);
  std::size_t m = arr.hs.list.size();
  arr.sides.resize(m);
  arr.tau_h.resize(m);
  arr.tau_hbar.resize(m);
  for_each_index(m, exec, [&](std::size_t i) {
    try {
      arr.sides[i] = halfspace_pair(vg, arr.hs, static_cast<int>(i));
    } catch (const AssumptionOneViolation& e) {
      throw AssumptionViolation("assumption (1) fails for " + arr.hs.list[i].name + ": " + e.what());
    }
  });
  arr.orientation = "lexicographic";
  if (is_klm_naming(vg, arr.hs)) {
    arr.orientation = "klm";
    for (std::size_t i = 0; i < m; ++i) {
      char c = arr.hs.list[i].name[0];
      std::vector<Int> want = c == 'X' ? std::vector<Int>{1, 0}
                              : c == 'Y' ? std::vector<Int>{0, 1}
                                         : std::vector<Int>{-1, -1};
      auto lam = characteristic_function(vg, arr.hs.list[i].sub, arr.sides[i].h);
      if (lam != want) std::swap(arr.sides[i].h, arr.sides[i].hbar);
    }
  }
  for_each_index(m, exec, [&](std::size_t i) {
    arr.tau_h[i] = thom_class(vg, arr.sides[i].h);
    arr.tau_hbar[i] = thom_class(vg, arr.sides[i].hbar);
  });
  return arr;
}

std::vector<LatticeVector> thom_class_forgetful(const ValidGraph& vg, const Arrangement& arr, int i) {
  const GkmGraph& g = vg.graph;
  std::vector<LatticeVector> t;
  for (const auto& v : arr.tau_h.at(i)) t.push_back(forget(v));
  for (const Dart& d : g.darts)
    if (d.is_edge() && !is_multiple(lattice_sub(t[d.from], t[d.to]), forget(d.axial)))
      throw CongruenceFailure("forgetful Thom class of " + arr.hs.list[i].name + " fails at edge " + d.id);
  return t;
}

}  // namespace gkm
