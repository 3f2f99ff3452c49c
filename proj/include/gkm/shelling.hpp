#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gkm/cohomology.hpp"
#include "gkm/hyperplane.hpp"
#include "gkm/polynomial.hpp"

namespace gkm {

using Face = std::vector<int>;  // sorted hyperplane indices

struct SimplicialComplex {
  std::size_t num_vertices = 0;       // hyperplanes
  int dim = -1;                       // n - 1
  std::vector<Face> faces;            // every face, the empty face first
  std::vector<Face> facets;           // sorted
  std::vector<int> facet_vertex;      // graph vertex p_sigma of each facet
  bool contains(const Face& f) const;
  int facet_index(const Face& f) const;  // -1 if not a facet
};

// Faces are the subsets with nonempty common intersection. Throws
// PurityFailure when a maximal face has fewer than n hyperplanes or the
// facets are not in bijection with the vertices.
SimplicialComplex build_complex(const ValidGraph& vg, const HyperplaneSet& hs);

struct ShellingData {
  std::vector<int> order;  // facet indices sigma_1..sigma_d
  std::vector<Face> mu;    // minimal new faces, mu_1 empty
  std::string method;      // "canonical", "given" or "search"
  std::size_t nodes = 0;   // backtracking nodes visited
  // interval index j with mu_j <= f <= sigma_j, or -1
  int interval_of(const SimplicialComplex& c, const Face& f) const;
};

// Unique minimal face of sigma not contained in any earlier facet.
std::optional<Face> minimal_new_face(const SimplicialComplex& c, const std::vector<int>& earlier, int facet);

// Throws NotShellable naming the first failing step.
ShellingData verify_shelling(const SimplicialComplex& c, const std::vector<int>& order);

// Backtracking over facet orders, preferring facets that attach along a
// single ridge, ties by facet order. Throws NotShellable.
ShellingData find_shelling(const SimplicialComplex& c, std::size_t budget);

// GKM_SEARCH_BUDGET, default 10^6.
std::size_t search_budget();

// The X/Y/Z family order: for each r, {X_r,Y_s} for all s then {X_r,Z_t}
// for all t; then {Y_s,Z_t}.
std::optional<std::vector<int>> klm_canonical_order(const SimplicialComplex& c, const HyperplaneSet& hs);

// Canonical order for X/Y/Z names, otherwise search.
ShellingData shell(const ValidGraph& vg, const Arrangement& arr, const SimplicialComplex& c);

using LambdaTable = std::vector<std::vector<Int>>;
LambdaTable lambda_table(const ValidGraph& vg, const Arrangement& arr);

// Hyperplane names followed by e1..en.
VarTablePtr module_vars(const ValidGraph& vg, const Arrangement& arr);

// x_{mu_i} over module_vars.
std::vector<Polynomial> module_basis(const ValidGraph& vg, const Arrangement& arr, const ShellingData& s);

struct BasisExpansion {
  std::vector<Polynomial> coeffs;  // over e1..en, one per basis element
};

// Forward substitution at the facet vertices sigma_1..sigma_d. Throws
// InexactDivision when a division is not exact or a residual remains.
BasisExpansion express_in_basis(const ValidGraph& vg, const Arrangement& arr, const SimplicialComplex& c,
                                const ShellingData& s, const Polynomial& f);

// sum_i <u, lambda(L_i)> L_i - u, which vanishes in the ring.
Polynomial algebra_relation(const ValidGraph& vg, const Arrangement& arr, const LambdaTable& lam,
                            const LatticeVector& u);

// L_j = -sum_{k not in sigma} <u, lambda(L_k)> L_k + u with u = tau_{L_j}(p_sigma),
// returned as the right-hand side.
Polynomial relation_for_Lj(const ValidGraph& vg, const Arrangement& arr, const LambdaTable& lam,
                           const SimplicialComplex& c, int facet, int j);

// Normal form by rewriting with relation_for_Lj along the shelling intervals.
BasisExpansion descent_normal_form(const ValidGraph& vg, const Arrangement& arr, const LambdaTable& lam,
                                   const SimplicialComplex& c, const ShellingData& s, const Polynomial& f);

// [rho_{p_{sigma_i}}(x_{mu_j})]
std::vector<std::vector<Polynomial>> localization_matrix(const ValidGraph& vg, const Arrangement& arr,
                                                         const SimplicialComplex& c, const ShellingData& s);
bool is_lower_triangular(const std::vector<std::vector<Polynomial>>& m);

// Rank of the degree-2k piece of the free module with basis x_{mu_i}.
std::size_t hilbert_function(const ShellingData& s, int n, int k);

struct StructureTable {
  std::vector<Polynomial> basis;
  // products[i][j] for i <= j: coefficient per basis element.
  std::vector<std::vector<BasisExpansion>> products;
  bool ordinary = false;  // e's set to zero
  std::vector<std::size_t> ranks;  // ordinary ranks per degree
};

StructureTable structure_constants(const ValidGraph& vg, const Arrangement& arr, const SimplicialComplex& c,
                                   const ShellingData& s, bool ordinary, Exec exec = Exec::parallel);

}  // namespace gkm
