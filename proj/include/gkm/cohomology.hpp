#pragma once

#include <string>
#include <vector>

#include "gkm/hyperplane.hpp"
#include "gkm/polynomial.hpp"

namespace gkm {

// Per-vertex values, indexed like graph.vertices.
struct CohomologyClass {
  std::vector<Polynomial> values;
  bool operator==(const CohomologyClass& o) const { return values == o.values; }
};

// e1..en,x for H*(G); e1..en for the x-forgetful graph.
VarTablePtr class_vars(const ValidGraph& vg, bool forgetful);

// Exact edge divisibility by alpha (or its x-forgetful image).
bool is_cohomology_class(const ValidGraph& vg, const CohomologyClass& f, bool forgetful);

CohomologyClass constant_class(const ValidGraph& vg, bool forgetful, const Int& c);
CohomologyClass linear_class(const ValidGraph& vg, bool forgetful,
                             const std::vector<LatticeVector>& values);
CohomologyClass operator*(const CohomologyClass& a, const CohomologyClass& b);
CohomologyClass operator+(const CohomologyClass& a, const CohomologyClass& b);
CohomologyClass operator-(const CohomologyClass& a, const CohomologyClass& b);
// Sets x to 0 at every vertex.
CohomologyClass forget_class(const ValidGraph& vg, const CohomologyClass& f);

// Degree-2k piece, as a sublattice of the direct sum over vertices of Sym^k.
// Coordinate of (vertex v, monomial j) is v * monomials.size() + j.
struct GradedPiece {
  int degree = 0;
  bool forgetful = false;
  VarTablePtr vars;
  std::size_t num_vertices = 0;
  std::vector<Exponent> monomials;
  std::vector<std::vector<Int>> basis;  // Hermite rows
  std::size_t rank() const { return basis.size(); }
  std::size_t width() const { return num_vertices * monomials.size(); }
  CohomologyClass element(std::size_t i) const;
  CohomologyClass from_coordinates(const std::vector<Int>& c) const;
  // Throws DimensionError when f is not homogeneous of this degree.
  std::vector<Int> coordinates(const CohomologyClass& f) const;
};

GradedPiece graded_piece(const ValidGraph& vg, int k, bool forgetful);
GradedPiece cohomology_basis(const ValidGraph& vg, int k, bool forgetful);

struct PresentationRing {
  bool forgetful = false;
  // Z[G]: X, H_<L>..., Hbar_<L>...; Z[G~]: the hyperplane names.
  VarTablePtr vars;
  std::vector<Polynomial> linear_relations;       // H + Hbar - X
  std::vector<std::vector<int>> empty_families;   // inclusion-minimal
  bool assumption2 = true;                        // intersections checked
  std::size_t m = 0;
  std::vector<Polynomial> relations() const;
  // Graded-lex monomials of degree k over the generators used for the image:
  // X, H_i for Z[G]; L_i for Z[G~].
  std::vector<Exponent> image_monomials(int k) const;
  int image_nvars() const { return forgetful ? static_cast<int>(m) : static_cast<int>(m) + 1; }
};

// Throws AssumptionViolation when assumption (2) fails and require2 is set.
PresentationRing presentation_ring(const ValidGraph& vg, const Arrangement& arr, bool forgetful,
                                   bool require2 = true);

// Pointwise image under Psi (Z[G]) or Psi' (Z[G~]). Variables of f are
// looked up by name among the ring generators and e1..en (and x).
CohomologyClass evaluate(const ValidGraph& vg, const Arrangement& arr, const PresentationRing& ring,
                         const Polynomial& f);
// Same as evaluate; named for the restriction map rho.
CohomologyClass localize(const ValidGraph& vg, const Arrangement& arr, const PresentationRing& ring,
                         const Polynomial& f);

// phi': Hbar_i -> X - H_i. phi: X -> 0, H_i -> L_i into the forgetful ring.
Polynomial phi_prime(const PresentationRing& full, const Polynomial& f);
Polynomial phi(const PresentationRing& full, const PresentationRing& forgetful, const Polynomial& f);

struct DegreeReport {
  int degree = 0;
  std::size_t solver_rank = 0;
  std::size_t image_rank = 0;
  std::size_t monomials = 0;      // degree-k monomials of the presentation
  std::size_t relation_rank = 0;  // rank of the relation ideal in degree k
  bool surjective = false;        // image_rank == solver_rank
  bool injective = false;         // relation_rank == monomials - image_rank
  bool lattice_match = false;     // image lattice equals the solver lattice
  bool match() const { return surjective && injective; }
};

struct IsoReport {
  bool forgetful = false;
  bool assumption2 = true;
  std::vector<DegreeReport> degrees;
  bool ok() const;
};

// Throws AssumptionViolation when assumption (1) fails. A failure of
// assumption (2) is recorded in the report rather than refused, so that
// rank deficits can be exhibited.
IsoReport verify_iso(const ValidGraph& vg, const Arrangement& arr, int max_degree, bool forgetful,
                     Exec exec = Exec::parallel);

// Rows Psi(monomial) in the coordinates of `piece`.
std::vector<std::vector<Int>> image_rows(const ValidGraph& vg, const Arrangement& arr,
                                         const PresentationRing& ring, const GradedPiece& piece,
                                         Exec exec = Exec::parallel);

struct KernelCheck {
  int degree = 0;
  std::size_t kernel_rank = 0;
  bool passed = false;
};
std::vector<KernelCheck> kernel_forgetful_check(const ValidGraph& vg, int max_degree);

}  // namespace gkm
