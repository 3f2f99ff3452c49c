#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gkm/errors.hpp"
#include "gkm/shelling.hpp"

namespace gkm {

namespace {

bool subset_of(const Face& a, const Face& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

std::string face_string(const HyperplaneSet* hs, const Face& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ",";
    s += hs ? hs->list[f[i]].name : std::to_string(f[i]);
  }
  return s + "}";
}

void collect_faces(const std::vector<std::vector<char>>& sets, std::size_t start, Face& cur,
                   const std::vector<char>& inter, std::vector<Face>& out) {
  for (std::size_t j = start; j < sets.size(); ++j) {
    std::vector<char> next(inter.size());
    bool any = false;
    for (std::size_t v = 0; v < inter.size(); ++v) any |= (next[v] = inter[v] && sets[j][v]) != 0;
    if (!any) continue;
    cur.push_back(static_cast<int>(j));
    out.push_back(cur);
    collect_faces(sets, j + 1, cur, next, out);
    cur.pop_back();
  }
}

PresentationRing forgetful_generators(const Arrangement& arr) {
  PresentationRing r;
  r.forgetful = true;
  r.m = arr.size();
  VarTable names;
  for (const auto& h : arr.hs.list) names.push_back(h.name);
  r.vars = make_vars(names);
  return r;
}

Int pairing(const LatticeVector& u, const std::vector<Int>& lambda) {
  Int s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * lambda[i];
  return s;
}

}  // namespace

bool SimplicialComplex::contains(const Face& f) const {
  return std::binary_search(faces.begin(), faces.end(), f);
}

int SimplicialComplex::facet_index(const Face& f) const {
  auto it = std::lower_bound(facets.begin(), facets.end(), f);
  return it != facets.end() && *it == f ? static_cast<int>(it - facets.begin()) : -1;
}

SimplicialComplex build_complex(const ValidGraph& vg, const HyperplaneSet& hs) {
  const GkmGraph& g = vg.graph;
  SimplicialComplex c;
  c.num_vertices = hs.list.size();
  c.dim = vg.n() - 1;
  std::vector<std::vector<char>> sets;
  for (const auto& h : hs.list) sets.push_back(h.sub.vin);
  Face cur;
  c.faces.push_back({});
  collect_faces(sets, 0, cur, std::vector<char>(g.num_vertices(), 1), c.faces);
  std::sort(c.faces.begin(), c.faces.end());
  std::set<Face> face_set(c.faces.begin(), c.faces.end());
  for (const auto& f : c.faces) {
    bool maximal = true;
    for (std::size_t j = 0; j < c.num_vertices && maximal; ++j) {
      if (std::binary_search(f.begin(), f.end(), static_cast<int>(j))) continue;
      Face bigger = f;
      bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), static_cast<int>(j)), static_cast<int>(j));
      if (face_set.count(bigger)) maximal = false;
    }
    if (!maximal) continue;
    if (static_cast<int>(f.size()) != vg.n())
      throw PurityFailure("maximal face " + face_string(&hs, f) + " has dimension " +
                          std::to_string(static_cast<int>(f.size()) - 1) + ", expected " + std::to_string(c.dim));
    c.facets.push_back(f);
  }
  std::vector<int> seen(g.num_vertices(), 0);
  for (const auto& f : c.facets) {
    int vertex = -1, count = 0;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      bool all = std::all_of(f.begin(), f.end(), [&](int i) { return sets[i][v] != 0; });
      if (all) vertex = static_cast<int>(v), ++count;
    }
    if (count != 1)
      throw PurityFailure("facet " + face_string(&hs, f) + " meets " + std::to_string(count) + " vertices");
    ++seen[vertex];
    c.facet_vertex.push_back(vertex);
  }
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    if (seen[v] != 1) throw PurityFailure("vertex " + g.vertices[v] + " is not the point of exactly one facet");
  return c;
}

int ShellingData::interval_of(const SimplicialComplex& c, const Face& f) const {
  for (std::size_t j = 0; j < order.size(); ++j)
    if (subset_of(mu[j], f) && subset_of(f, c.facets[order[j]])) return static_cast<int>(j);
  return -1;
}

std::optional<Face> minimal_new_face(const SimplicialComplex& c, const std::vector<int>& earlier, int facet) {
  const Face& s = c.facets.at(facet);
  std::optional<Face> meet;
  std::vector<Face> fresh;
  for (unsigned mask = 0; mask < (1u << s.size()); ++mask) {
    Face sub;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (mask & (1u << i)) sub.push_back(s[i]);
    bool old = std::any_of(earlier.begin(), earlier.end(), [&](int e) { return subset_of(sub, c.facets[e]); });
    if (old) continue;
    if (!meet) {
      meet = sub;
    } else {
      Face m;
      std::set_intersection(meet->begin(), meet->end(), sub.begin(), sub.end(), std::back_inserter(m));
      meet = m;
    }
  }
  if (!meet) return std::nullopt;
  bool old = std::any_of(earlier.begin(), earlier.end(), [&](int e) { return subset_of(*meet, c.facets[e]); });
  if (old) return std::nullopt;
  return meet;
}

ShellingData verify_shelling(const SimplicialComplex& c, const std::vector<int>& order) {
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i) || sorted.size() != c.facets.size())
      throw NotShellable("order is not a permutation of the facets");
  if (sorted.size() != c.facets.size()) throw NotShellable("order is not a permutation of the facets");
  ShellingData s;
  s.method = "given";
  std::vector<int> earlier;
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto mu = minimal_new_face(c, earlier, order[i]);
    if (!mu) throw NotShellable("step " + std::to_string(i + 1) + ": facet " + face_string(nullptr, c.facets[order[i]]) +
                                " has no unique minimal new face");
    s.order.push_back(order[i]);
    s.mu.push_back(*mu);
    earlier.push_back(order[i]);
  }
  return s;
}

namespace {

bool search(const SimplicialComplex& c, ShellingData& s, std::vector<char>& used, std::size_t budget) {
  if (s.order.size() == c.facets.size()) return true;
  if (++s.nodes > budget) throw NotShellable("search budget of " + std::to_string(budget) + " nodes exhausted");
  struct Cand {
    int pref, facet;
    Face mu;
  };
  std::vector<Cand> cands;
  for (std::size_t f = 0; f < c.facets.size(); ++f) {
    if (used[f]) continue;
    auto mu = minimal_new_face(c, s.order, static_cast<int>(f));
    if (mu) cands.push_back({mu->size() == 1 ? 0 : 1, static_cast<int>(f), *mu});
  }
  std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.pref < b.pref; });
  for (auto& cand : cands) {
    used[cand.facet] = 1;
    s.order.push_back(cand.facet);
    s.mu.push_back(cand.mu);
    if (search(c, s, used, budget)) return true;
    used[cand.facet] = 0;
    s.order.pop_back();
    s.mu.pop_back();
  }
  return false;
}

}  // namespace

ShellingData find_shelling(const SimplicialComplex& c, std::size_t budget) {
  ShellingData s;
  s.method = "search";
  std::vector<char> used(c.facets.size(), 0);
  if (!search(c, s, used, budget)) throw NotShellable("no shelling order exists");
  return s;
}

std::size_t search_budget() {
  const char* env = std::getenv("GKM_SEARCH_BUDGET");
  if (!env || !*env) return 1000000;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) return 1000000;
  return static_cast<std::size_t>(v);
}

std::optional<std::vector<int>> klm_canonical_order(const SimplicialComplex& c, const HyperplaneSet& hs) {
  std::map<char, int> count;
  for (const auto& h : hs.list) {
    if (h.name.empty()) return std::nullopt;
    ++count[h.name[0]];
  }
  auto idx = [&](char letter, int i) { return hs.index_of(std::string(1, letter) + std::to_string(i)); };
  std::vector<Face> seq;
  auto add = [&](int a, int b) {
    Face f{a, b};
    std::sort(f.begin(), f.end());
    seq.push_back(f);
  };
  int k = count['X'], l = count['Y'], m = count['Z'];
  if (k + l + m != static_cast<int>(hs.list.size())) return std::nullopt;
  for (int r = 1; r <= k; ++r) {
    for (int s = 1; s <= l; ++s) add(idx('X', r), idx('Y', s));
    for (int t = 1; t <= m; ++t) add(idx('X', r), idx('Z', t));
  }
  for (int s = 1; s <= l; ++s)
    for (int t = 1; t <= m; ++t) add(idx('Y', s), idx('Z', t));
  std::vector<int> order;
  for (const auto& f : seq) {
    if (std::find(f.begin(), f.end(), -1) != f.end()) return std::nullopt;
    int i = c.facet_index(f);
    if (i < 0) return std::nullopt;
    order.push_back(i);
  }
  if (order.size() != c.facets.size()) return std::nullopt;
  return order;
}

ShellingData shell(const ValidGraph& vg, const Arrangement& arr, const SimplicialComplex& c) {
  if (is_klm_naming(vg, arr.hs)) {
    if (auto order = klm_canonical_order(c, arr.hs)) {
      ShellingData s = verify_shelling(c, *order);
      s.method = "canonical";
      return s;
    }
  }
  return find_shelling(c, search_budget());
}

LambdaTable lambda_table(const ValidGraph& vg, const Arrangement& arr) {
  LambdaTable t;
  for (std::size_t i = 0; i < arr.size(); ++i)
    t.push_back(characteristic_function(vg, arr.hs.list[i].sub, arr.sides[i].h));
  return t;
}

VarTablePtr module_vars(const ValidGraph& vg, const Arrangement& arr) {
  VarTable names;
  for (const auto& h : arr.hs.list) names.push_back(h.name);
  for (int i = 1; i <= vg.n(); ++i) names.push_back("e" + std::to_string(i));
  return make_vars(names);
}

std::vector<Polynomial> module_basis(const ValidGraph& vg, const Arrangement& arr, const ShellingData& s) {
  VarTablePtr vars = module_vars(vg, arr);
  std::vector<Polynomial> out;
  for (const auto& mu : s.mu) {
    Exponent e(vars->size(), 0);
    for (int i : mu) e[i] = 1;
    out.push_back(Polynomial::monomial(vars, e));
  }
  return out;
}

BasisExpansion express_in_basis(const ValidGraph& vg, const Arrangement& arr, const SimplicialComplex& c,
                                const ShellingData& s, const Polynomial& f) {
  PresentationRing ring = forgetful_generators(arr);
  VarTablePtr evars = class_vars(vg, true);
  std::vector<Polynomial> F = evaluate(vg, arr, ring, f).values;
  auto basis = module_basis(vg, arr, s);
  BasisExpansion out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::vector<Polynomial> Xi = evaluate(vg, arr, ring, basis[i]).values;
    int p = c.facet_vertex[s.order[i]];
    if (Xi[p].is_zero()) throw InexactDivision("basis element " + basis[i].to_string() + " vanishes at its own vertex");
    auto a = F[p].divide_exact(Xi[p]);
    if (!a)
      throw InexactDivision(F[p].to_string() + " is not divisible by " + Xi[p].to_string() + " at " +
                            vg.graph.vertices[p]);
    for (std::size_t q = 0; q < F.size(); ++q) F[q] -= *a * Xi[q];
    out.coeffs.push_back(*a);
  }
  for (std::size_t q = 0; q < F.size(); ++q)
    if (!F[q].is_zero())
      throw InexactDivision("residual " + F[q].to_string() + " remains at " + vg.graph.vertices[q]);
  return out;
}

Polynomial algebra_relation(const ValidGraph& vg, const Arrangement& arr, const LambdaTable& lam,
                            const LatticeVector& u) {
  VarTablePtr vars = module_vars(vg, arr);
  std::size_t m = arr.size();
  LatticeVector coeffs(vars->size(), Int(0));
  for (std::size_t i = 0; i < m; ++i) coeffs[i] = pairing(u, lam[i]);
  for (std::size_t i = 0; i < u.size(); ++i) coeffs[m + i] = -u[i];
  return Polynomial::linear(vars, coeffs);
}

Polynomial relation_for_Lj(const ValidGraph& vg, const Arrangement& arr, const LambdaTable& lam,
                           const SimplicialComplex& c, int facet, int j) {
  const Face& sigma = c.facets.at(facet);
  if (!std::binary_search(sigma.begin(), sigma.end(), j))
    throw DimensionError("hyperplane " + arr.hs.list.at(j).name + " is not in the facet");
  int p = c.facet_vertex[facet];
  LatticeVector u = forget(arr.tau_h[j][p]);
  for (int k : sigma)
    if (pairing(u, lam[k]) != (k == j ? 1 : 0))
      throw InconsistentLambda("local duality fails at " + vg.graph.vertices[p]);
  // L_j = u - sum over the rest, since the facet members pair to delta.
  Polynomial rel = algebra_relation(vg, arr, lam, u);
  Polynomial lj = Polynomial::variable(rel.vars(), j);
  return lj - rel;
}

BasisExpansion descent_normal_form(const ValidGraph& vg, const Arrangement& arr, const LambdaTable& lam,
                                   const SimplicialComplex& c, const ShellingData& s, const Polynomial& f) {
  VarTablePtr vars = module_vars(vg, arr);
  VarTablePtr evars = class_vars(vg, true);
  const std::size_t m = arr.size();
  const std::size_t d = s.order.size();
  Polynomial g = f.rename(vars);

  // L-exponent -> coefficient in Z[e]
  std::map<Exponent, Polynomial> work;
  auto add = [&](const Polynomial& p) {
    for (const auto& [e, a] : p.terms()) {
      Exponent le(e.begin(), e.begin() + m), ee(e.begin() + m, e.end());
      auto it = work.try_emplace(le, Polynomial(evars)).first;
      it->second.add_term(ee, a);
      if (it->second.is_zero()) work.erase(it);
    }
  };
  add(g);
  std::map<std::pair<int, int>, Polynomial> cache;
  BasisExpansion out;
  out.coeffs.assign(d, Polynomial(evars));
  while (!work.empty()) {
    auto it = work.begin();
    Exponent b = it->first;
    Polynomial coef = it->second;
    work.erase(it);
    Face gamma;
    for (std::size_t i = 0; i < m; ++i)
      if (b[i] > 0) gamma.push_back(static_cast<int>(i));
    if (!c.contains(gamma)) continue;
    int j = s.interval_of(c, gamma);
    if (j < 0) throw NotShellable("face " + face_string(&arr.hs, gamma) + " lies in no interval");
    const Face& mu = s.mu[j];
    int v = -1;
    if (gamma != mu) {
      for (int i : gamma)
        if (!std::binary_search(mu.begin(), mu.end(), i)) {
          v = i;
          break;
        }
    } else {
      for (int i : gamma)
        if (b[i] > 1) {
          v = i;
          break;
        }
    }
    if (v < 0) {
      out.coeffs[j] += coef;
      continue;
    }
    auto key = std::make_pair(s.order[j], v);
    auto ct = cache.find(key);
    if (ct == cache.end()) ct = cache.emplace(key, relation_for_Lj(vg, arr, lam, c, s.order[j], v)).first;
    Exponent rest(vars->size(), 0);
    for (std::size_t i = 0; i < m; ++i) rest[i] = b[i];
    rest[v] -= 1;
    Exponent none(m, 0);
    Polynomial lifted(vars);
    for (const auto& [e, a] : coef.terms()) {
      Exponent full = none;
      full.insert(full.end(), e.begin(), e.end());
      lifted.add_term(full, a);
    }
    add(lifted * Polynomial::monomial(vars, rest) * ct->second);
  }
  return out;
}

std::vector<std::vector<Polynomial>> localization_matrix(const ValidGraph& vg, const Arrangement& arr,
                                                         const SimplicialComplex& c, const ShellingData& s) {
  PresentationRing ring = forgetful_generators(arr);
  auto basis = module_basis(vg, arr, s);
  std::vector<std::vector<Polynomial>> cols;
  for (const auto& x : basis) cols.push_back(evaluate(vg, arr, ring, x).values);
  std::vector<std::vector<Polynomial>> mat(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) mat[i].push_back(cols[j][c.facet_vertex[s.order[i]]]);
  return mat;
}

bool is_lower_triangular(const std::vector<std::vector<Polynomial>>& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i][i].is_zero()) return false;
    for (std::size_t j = i + 1; j < m[i].size(); ++j)
      if (!m[i][j].is_zero()) return false;
  }
  return true;
}

std::size_t hilbert_function(const ShellingData& s, int n, int k) {
  std::size_t total = 0;
  for (const auto& mu : s.mu) {
    int r = k - static_cast<int>(mu.size());
    if (r < 0) continue;
    // monomials of degree r in n variables
    std::size_t c = 1;
    for (int i = 1; i <= n - 1; ++i) c = c * (r + i) / i;
    total += c;
  }
  return total;
}

StructureTable structure_constants(const ValidGraph& vg, const Arrangement& arr, const SimplicialComplex& c,
                                   const ShellingData& s, bool ordinary, Exec exec) {
  StructureTable t;
  t.ordinary = ordinary;
  t.basis = module_basis(vg, arr, s);
  LambdaTable lam = lambda_table(vg, arr);
  const std::size_t d = t.basis.size();
  t.products.resize(d);
  for (std::size_t i = 0; i < d; ++i) t.products[i].resize(d);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) pairs.emplace_back(i, j);
  VarTablePtr evars = class_vars(vg, true);
  for_each_index(pairs.size(), exec, [&](std::size_t q) {
    auto [i, j] = pairs[q];
    BasisExpansion e = descent_normal_form(vg, arr, lam, c, s, t.basis[i] * t.basis[j]);
    if (ordinary)
      for (auto& a : e.coeffs) a = Polynomial::constant(evars, a.constant_term());
    t.products[i][j] = std::move(e);
  });
  for (const auto& mu : s.mu) {
    if (t.ranks.size() <= mu.size()) t.ranks.resize(mu.size() + 1, 0);
    ++t.ranks[mu.size()];
  }
  return t;
}

}  // namespace gkm
