#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gkm/cohomology.hpp"
#include "gkm/errors.hpp"
#include "gkm/matrix.hpp"

namespace gkm {

namespace {

using VertexSet = std::vector<char>;

bool empty_set(const VertexSet& s) {
  return std::none_of(s.begin(), s.end(), [](char c) { return c != 0; });
}

VertexSet meet(const VertexSet& a, const VertexSet& b) {
  VertexSet r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] && b[i];
  return r;
}

VertexSet meet_all(const std::vector<VertexSet>& sets, const std::vector<int>& family, int skip) {
  VertexSet r(sets.front().size(), 1);
  for (int j : family)
    if (j != skip) r = meet(r, sets[j]);
  return r;
}

void minimal_empty(const std::vector<VertexSet>& sets, std::size_t start, std::vector<int>& cur,
                   const VertexSet& inter, std::vector<std::vector<int>>& out) {
  for (std::size_t j = start; j < sets.size(); ++j) {
    VertexSet next = meet(inter, sets[j]);
    cur.push_back(static_cast<int>(j));
    if (empty_set(next)) {
      bool minimal = true;
      for (std::size_t i = 0; i + 1 < cur.size() && minimal; ++i)
        if (empty_set(meet_all(sets, cur, cur[i]))) minimal = false;
      if (minimal) out.push_back(cur);
    } else {
      minimal_empty(sets, j + 1, cur, next, out);
    }
    cur.pop_back();
  }
}

// Linear value of each ring generator at each vertex.
std::vector<std::vector<LatticeVector>> generator_values(const ValidGraph& vg, const Arrangement& arr,
                                                         const PresentationRing& ring) {
  std::size_t nv = vg.graph.num_vertices();
  std::vector<std::vector<LatticeVector>> vals;
  if (ring.forgetful) {
    for (std::size_t i = 0; i < ring.m; ++i) {
      std::vector<LatticeVector> t;
      for (const auto& v : arr.tau_h[i]) t.push_back(forget(v));
      vals.push_back(std::move(t));
    }
  } else {
    vals.push_back(std::vector<LatticeVector>(nv, residual(vg.n())));
    for (std::size_t i = 0; i < ring.m; ++i) vals.push_back(arr.tau_h[i]);
    for (std::size_t i = 0; i < ring.m; ++i) vals.push_back(arr.tau_hbar[i]);
  }
  return vals;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::vector<Polynomial> PresentationRing::relations() const {
  std::vector<Polynomial> r = linear_relations;
  for (const auto& f : empty_families) {
    Exponent e(vars->size(), 0);
    for (int j : f) e[j] += 1;
    r.push_back(Polynomial::monomial(vars, e));
  }
  return r;
}

std::vector<Exponent> PresentationRing::image_monomials(int k) const {
  return graded_piece_basis(image_nvars(), k);
}

PresentationRing presentation_ring(const ValidGraph& vg, const Arrangement& arr, bool forgetful, bool require2) {
  PresentationRing ring;
  ring.forgetful = forgetful;
  ring.m = arr.size();
  auto report = check_assumptions(vg, arr.hs, 1000000, Exec::serial);
  ring.assumption2 = report.ok2();
  if (!ring.assumption2 && require2) throw AssumptionViolation("assumption (2) fails");

  VarTable names;
  std::vector<VertexSet> sets;
  if (forgetful) {
    for (const auto& h : arr.hs.list) {
      names.push_back(h.name);
      sets.push_back(h.sub.vin);
    }
  } else {
    names.push_back("X");
    for (const auto& h : arr.hs.list) names.push_back("H_" + h.name);
    for (const auto& h : arr.hs.list) names.push_back("Hbar_" + h.name);
    for (const auto& s : arr.sides) sets.push_back(s.h.sub.vin);
    for (const auto& s : arr.sides) sets.push_back(s.hbar.sub.vin);
  }
  ring.vars = make_vars(names);
  if (!forgetful) {
    for (std::size_t i = 0; i < ring.m; ++i) {
      Polynomial r = Polynomial::variable(ring.vars, 1 + static_cast<int>(i)) +
                     Polynomial::variable(ring.vars, 1 + static_cast<int>(ring.m + i)) -
                     Polynomial::variable(ring.vars, 0);
      ring.linear_relations.push_back(r);
    }
  }
  if (!sets.empty()) {
    std::vector<int> cur;
    VertexSet all(vg.graph.num_vertices(), 1);
    std::vector<std::vector<int>> fams;
    minimal_empty(sets, 0, cur, all, fams);
    int offset = forgetful ? 0 : 1;
    for (auto& f : fams) {
      for (int& j : f) j += offset;
      ring.empty_families.push_back(f);
    }
  }
  return ring;
}

CohomologyClass evaluate(const ValidGraph& vg, const Arrangement& arr, const PresentationRing& ring,
                         const Polynomial& f) {
  VarTablePtr target = class_vars(vg, ring.forgetful);
  auto vals = generator_values(vg, arr, ring);
  std::map<std::string, int> ring_index, class_index;
  for (std::size_t i = 0; i < ring.vars->size(); ++i) ring_index[(*ring.vars)[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < target->size(); ++i) class_index[(*target)[i]] = static_cast<int>(i);
  const VarTable& fv = f.vars() ? *f.vars() : VarTable{};
  CohomologyClass out;
  for (std::size_t p = 0; p < vg.graph.num_vertices(); ++p) {
    std::vector<Polynomial> images;
    for (const auto& name : fv) {
      if (auto it = ring_index.find(name); it != ring_index.end())
        images.push_back(Polynomial::linear(target, vals[it->second][p]));
      else if (auto jt = class_index.find(name); jt != class_index.end())
        images.push_back(Polynomial::variable(target, jt->second));
      else
        throw VariableTableMismatch("unknown variable " + name);
    }
    out.values.push_back(f.substitute(images, target));
  }
  return out;
}

CohomologyClass localize(const ValidGraph& vg, const Arrangement& arr, const PresentationRing& ring,
                         const Polynomial& f) {
  return evaluate(vg, arr, ring, f);
}

Polynomial phi_prime(const PresentationRing& full, const Polynomial& f) {
  if (full.forgetful) throw VariableTableMismatch("phi' acts on Z[G]");
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < full.vars->size(); ++i) {
    if (i > full.m)
      images.push_back(Polynomial::variable(full.vars, 0) -
                       Polynomial::variable(full.vars, static_cast<int>(i - full.m)));
    else
      images.push_back(Polynomial::variable(full.vars, static_cast<int>(i)));
  }
  return f.rename(full.vars).substitute(images, full.vars);
}

Polynomial phi(const PresentationRing& full, const PresentationRing& forgetful, const Polynomial& f) {
  Polynomial g = phi_prime(full, f);
  std::vector<Polynomial> images{Polynomial(forgetful.vars)};
  for (std::size_t i = 0; i < full.m; ++i) images.push_back(Polynomial::variable(forgetful.vars, static_cast<int>(i)));
  for (std::size_t i = 0; i < full.m; ++i) images.push_back(-Polynomial::variable(forgetful.vars, static_cast<int>(i)));
  return g.substitute(images, forgetful.vars);
}

std::vector<std::vector<Int>> image_rows(const ValidGraph& vg, const Arrangement& arr, const PresentationRing& ring,
                                         const GradedPiece& piece, Exec exec) {
  auto monos = ring.image_monomials(piece.degree);
  auto vals = generator_values(vg, arr, ring);
  std::size_t nv = vg.graph.num_vertices();
  // Linear forms per generator and vertex, reused by every monomial.
  std::vector<std::vector<Polynomial>> lin(monos.empty() ? 0 : monos.front().size());
  for (std::size_t i = 0; i < lin.size(); ++i)
    for (std::size_t p = 0; p < nv; ++p) lin[i].push_back(Polynomial::linear(piece.vars, vals[i][p]));
  std::vector<std::vector<Int>> rows(monos.size());
  for_each_index(monos.size(), exec, [&](std::size_t r) {
    CohomologyClass f;
    for (std::size_t p = 0; p < nv; ++p) {
      Polynomial v = Polynomial::constant(piece.vars, 1);
      for (std::size_t i = 0; i < lin.size(); ++i)
        if (monos[r][i] > 0) v = v * lin[i][p].pow(monos[r][i]);
      f.values.push_back(std::move(v));
    }
    rows[r] = piece.coordinates(f);
  });
  return rows;
}

bool IsoReport::ok() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const DegreeReport& d) { return d.match(); });
}

namespace {

// Rank of the degree-k piece of the ideal generated by the empty-family
// products, after Hbar_i -> X - H_i, inside Z[X, H]_k.
std::size_t product_ideal_rank(const PresentationRing& ring, int k) {
  auto monos = ring.image_monomials(k);
  std::map<Exponent, std::size_t> index;
  for (std::size_t j = 0; j < monos.size(); ++j) index[monos[j]] = j;
  std::size_t nimg = ring.image_nvars();
  std::vector<std::vector<Int>> rows;
  for (const auto& fam : ring.empty_families) {
    int d = static_cast<int>(fam.size());
    if (d > k) continue;
    Exponent e(ring.vars->size(), 0);
    for (int j : fam) e[j] += 1;
    Polynomial prod = phi_prime(ring, Polynomial::monomial(ring.vars, e));
    for (const auto& cof : graded_piece_basis(static_cast<int>(nimg), k - d)) {
      Exponent ce(ring.vars->size(), 0);
      std::copy(cof.begin(), cof.end(), ce.begin());
      Polynomial p = prod * Polynomial::monomial(ring.vars, ce);
      std::vector<Int> row(monos.size(), Int(0));
      for (const auto& [ex, c] : p.terms()) {
        Exponent head(ex.begin(), ex.begin() + nimg);
        row[index.at(head)] = c;
      }
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return 0;
  return matrix_rank(hermite_rows(rows, monos.size()), monos.size());
}

// Monomials of degree k in L_1..L_m whose support contains an empty family.
std::size_t monomial_ideal_rank(const PresentationRing& ring, int k) {
  std::size_t count = 0;
  for (const auto& e : ring.image_monomials(k)) {
    for (const auto& fam : ring.empty_families) {
      if (std::all_of(fam.begin(), fam.end(), [&](int j) { return e[j] > 0; })) {
        ++count;
        break;
      }
    }
  }
  return count;
}

}  // namespace

IsoReport verify_iso(const ValidGraph& vg, const Arrangement& arr, int max_degree, bool forgetful, Exec exec) {
  if (max_degree < 0) throw DimensionError("negative degree");
  PresentationRing ring = presentation_ring(vg, arr, forgetful, false);
  IsoReport rep;
  rep.forgetful = forgetful;
  rep.assumption2 = ring.assumption2;
  rep.degrees.resize(max_degree + 1);
  for_each_index(rep.degrees.size(), exec, [&](std::size_t k) {
    DegreeReport& d = rep.degrees[k];
    d.degree = static_cast<int>(k);
    GradedPiece piece = cohomology_basis(vg, d.degree, forgetful);
    d.solver_rank = piece.rank();
    auto rows = image_rows(vg, arr, ring, piece, Exec::serial);
    auto h = rows.empty() ? rows : hermite_rows(rows, piece.width());
    d.image_rank = h.size();
    d.lattice_match = h == piece.basis;
    if (forgetful) {
      d.monomials = rows.size();
      d.relation_rank = monomial_ideal_rank(ring, d.degree);
    } else {
      d.monomials = binomial(ring.vars->size() + k - 1, k);
      d.relation_rank = (d.monomials - rows.size()) + product_ideal_rank(ring, d.degree);
    }
    d.surjective = d.image_rank == d.solver_rank;
    d.injective = d.relation_rank + d.image_rank == d.monomials;
  });
  return rep;
}

}  // namespace gkm
