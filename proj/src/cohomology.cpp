#include <map>
#include <string>
#include <vector>

#include "gkm/cohomology.hpp"
#include "gkm/errors.hpp"
#include "gkm/matrix.hpp"

namespace gkm {

VarTablePtr class_vars(const ValidGraph& vg, bool forgetful) {
  return torus_vars(vg.n(), !forgetful);
}

namespace {

LatticeVector label(const Dart& d, bool forgetful) {
  return forgetful ? forget(d.axial) : d.axial;
}

void check_shape(const CohomologyClass& a, const CohomologyClass& b) {
  if (a.values.size() != b.values.size()) throw DimensionError("classes on different vertex sets");
}

}  // namespace

bool is_cohomology_class(const ValidGraph& vg, const CohomologyClass& f, bool forgetful) {
  const GkmGraph& g = vg.graph;
  if (f.values.size() != g.num_vertices()) return false;
  VarTablePtr vars = class_vars(vg, forgetful);
  for (const Dart& d : g.darts) {
    if (!d.is_edge()) continue;
    Polynomial diff = f.values[d.from] - f.values[d.to];
    if (!diff.divide_exact(Polynomial::linear(vars, label(d, forgetful)))) return false;
  }
  return true;
}

CohomologyClass constant_class(const ValidGraph& vg, bool forgetful, const Int& c) {
  VarTablePtr vars = class_vars(vg, forgetful);
  return {std::vector<Polynomial>(vg.graph.num_vertices(), Polynomial::constant(vars, c))};
}

CohomologyClass linear_class(const ValidGraph& vg, bool forgetful, const std::vector<LatticeVector>& values) {
  VarTablePtr vars = class_vars(vg, forgetful);
  CohomologyClass f;
  for (const auto& v : values) f.values.push_back(Polynomial::linear(vars, v));
  return f;
}

CohomologyClass operator*(const CohomologyClass& a, const CohomologyClass& b) {
  check_shape(a, b);
  CohomologyClass r;
  for (std::size_t i = 0; i < a.values.size(); ++i) r.values.push_back(a.values[i] * b.values[i]);
  return r;
}

CohomologyClass operator+(const CohomologyClass& a, const CohomologyClass& b) {
  check_shape(a, b);
  CohomologyClass r;
  for (std::size_t i = 0; i < a.values.size(); ++i) r.values.push_back(a.values[i] + b.values[i]);
  return r;
}

CohomologyClass operator-(const CohomologyClass& a, const CohomologyClass& b) {
  check_shape(a, b);
  CohomologyClass r;
  for (std::size_t i = 0; i < a.values.size(); ++i) r.values.push_back(a.values[i] - b.values[i]);
  return r;
}

CohomologyClass forget_class(const ValidGraph& vg, const CohomologyClass& f) {
  VarTablePtr target = class_vars(vg, true);
  std::vector<Polynomial> images;
  for (int i = 0; i < vg.n(); ++i) images.push_back(Polynomial::variable(target, i));
  images.push_back(Polynomial(target));
  CohomologyClass r;
  for (const auto& v : f.values) r.values.push_back(v.substitute(images, target));
  return r;
}

CohomologyClass GradedPiece::element(std::size_t i) const { return from_coordinates(basis.at(i)); }

CohomologyClass GradedPiece::from_coordinates(const std::vector<Int>& c) const {
  if (c.size() != width()) throw DimensionError("coordinate vector has wrong length");
  CohomologyClass f;
  std::size_t mm = monomials.size();
  for (std::size_t v = 0; v < num_vertices; ++v) {
    Polynomial p(vars);
    for (std::size_t j = 0; j < mm; ++j)
      if (c[v * mm + j] != 0) p.add_term(monomials[j], c[v * mm + j]);
    f.values.push_back(std::move(p));
  }
  return f;
}

std::vector<Int> GradedPiece::coordinates(const CohomologyClass& f) const {
  if (f.values.size() != num_vertices) throw DimensionError("class has wrong number of vertices");
  std::map<Exponent, std::size_t> index;
  for (std::size_t j = 0; j < monomials.size(); ++j) index[monomials[j]] = j;
  std::vector<Int> c(width(), Int(0));
  for (std::size_t v = 0; v < num_vertices; ++v) {
    if (f.values[v].nvars() != static_cast<int>(vars->size()))
      throw VariableTableMismatch("class variables do not match the graded piece");
    for (const auto& [e, a] : f.values[v].terms()) {
      auto it = index.find(e);
      if (it == index.end()) throw DimensionError("class is not homogeneous of degree " + std::to_string(degree));
      c[v * monomials.size() + it->second] = a;
    }
  }
  return c;
}

GradedPiece graded_piece(const ValidGraph& vg, int k, bool forgetful) {
  if (k < 0) throw DimensionError("negative degree");
  GradedPiece p;
  p.degree = k;
  p.forgetful = forgetful;
  p.vars = class_vars(vg, forgetful);
  p.num_vertices = vg.graph.num_vertices();
  p.monomials = graded_piece_basis(static_cast<int>(p.vars->size()), k);
  return p;
}

// f(v) - f(w) is divisible by the primitive form l iff it vanishes on the
// lattice ker(l): substitute y = M z with M a basis of ker(l) and require
// every z-coefficient to vanish.
GradedPiece cohomology_basis(const ValidGraph& vg, int k, bool forgetful) {
  GradedPiece piece = graded_piece(vg, k, forgetful);
  const GkmGraph& g = vg.graph;
  const int nv = static_cast<int>(piece.vars->size());
  const std::size_t mm = piece.monomials.size();

  VarTable znames;
  for (int i = 1; i < nv; ++i) znames.push_back("z" + std::to_string(i));
  VarTablePtr zvars = make_vars(znames);
  auto zmonos = graded_piece_basis(nv - 1, k);
  std::map<Exponent, std::size_t> zindex;
  for (std::size_t j = 0; j < zmonos.size(); ++j) zindex[zmonos[j]] = j;

  std::vector<std::vector<Int>> rows;
  for (std::size_t e = 0; e < g.num_darts(); ++e) {
    const Dart& d = g.darts[e];
    if (!d.is_edge() || d.opposite < static_cast<int>(e)) continue;
    IntMatrix lm(1, nv);
    LatticeVector l = label(d, forgetful);
    for (int i = 0; i < nv; ++i) lm(0, i) = l[i];
    auto ker = hermite_kernel(lm);
    // y_i as a linear form in z.
    std::vector<Polynomial> y;
    for (int i = 0; i < nv; ++i) {
      LatticeVector coeffs;
      for (const auto& kv : ker) coeffs.push_back(kv[i]);
      y.push_back(Polynomial::linear(zvars, coeffs));
    }
    std::vector<Polynomial> images;
    for (const auto& a : piece.monomials) {
      Polynomial p = Polynomial::constant(zvars, 1);
      for (int i = 0; i < nv; ++i)
        if (a[i] > 0) p = p * y[i].pow(a[i]);
      images.push_back(std::move(p));
    }
    for (std::size_t b = 0; b < zmonos.size(); ++b) {
      std::vector<Int> row(piece.width(), Int(0));
      bool nonzero = false;
      for (std::size_t a = 0; a < mm; ++a) {
        Int c = images[a].coefficient(zmonos[b]);
        if (c == 0) continue;
        nonzero = true;
        row[d.from * mm + a] += c;
        row[d.to * mm + a] -= c;
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  piece.basis = hermite_kernel(IntMatrix::from_rows(rows, piece.width()));
  return piece;
}

std::vector<KernelCheck> kernel_forgetful_check(const ValidGraph& vg, int max_degree) {
  std::vector<KernelCheck> out;
  GradedPiece prev;
  for (int k = 0; k <= max_degree; ++k) {
    GradedPiece cur = cohomology_basis(vg, k, false);
    GradedPiece target = graded_piece(vg, k, true);
    std::vector<std::vector<Int>> images;
    for (std::size_t i = 0; i < cur.rank(); ++i)
      images.push_back(target.coordinates(forget_class(vg, cur.element(i))));
    KernelCheck kc;
    kc.degree = k;
    kc.passed = true;
    if (!images.empty()) {
      IntMatrix a = IntMatrix::from_rows(images, target.width());
      auto ker = hermite_kernel(a.transpose());
      kc.kernel_rank = ker.size();
      std::vector<std::vector<Int>> chi_multiples;
      if (k > 0) {
        CohomologyClass chi = linear_class(vg, false, std::vector<LatticeVector>(vg.graph.num_vertices(),
                                                                                   residual(vg.n())));
        for (std::size_t i = 0; i < prev.rank(); ++i)
          chi_multiples.push_back(cur.coordinates(chi * prev.element(i)));
      }
      auto lattice = chi_multiples.empty() ? chi_multiples : hermite_rows(chi_multiples, cur.width());
      for (const auto& c : ker) {
        std::vector<Int> f(cur.width(), Int(0));
        for (std::size_t i = 0; i < c.size(); ++i)
          if (c[i] != 0)
            for (std::size_t j = 0; j < f.size(); ++j) f[j] += c[i] * cur.basis[i][j];
        if (!in_lattice(lattice, f)) kc.passed = false;
      }
    }
    out.push_back(kc);
    prev = std::move(cur);
  }
  return out;
}

}  // namespace gkm
