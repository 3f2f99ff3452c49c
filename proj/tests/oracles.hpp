#pragma once

// Independent reference computations used only by the tests. They share no
// linear algebra with the library.

#include <gmpxx.h>

#include <map>
#include <vector>

#include "gkm/graph.hpp"
#include "gkm/hyperplane.hpp"

namespace oracle {

using Rat = mpq_class;

// Rank over Q by plain Gaussian elimination on rationals.
std::size_t rational_rank(const std::vector<std::vector<mpz_class>>& rows, std::size_t cols);

// Determinant by cofactor expansion.
mpz_class cofactor_det(const std::vector<std::vector<mpz_class>>& m);

// dim_Q of H^{2k}: unknowns are the Sym^k coefficients of f(p) and the
// Sym^{k-1} coefficients of one witness A_e per edge, with
// f(i(e)) - f(t(e)) = A_e * alpha(e).
std::size_t witness_cohomology_rank(const gkm::GkmGraph& g, int k, bool forgetful);

// Every connection compatible with alpha, by trying all bijections at each
// edge that send e to its opposite. Returns the number of choices per edge.
std::vector<std::size_t> connection_choices(const gkm::GkmGraph& g);

// Vertex bijections preserving edges and the multiset of axial vectors.
bool isomorphic(const gkm::GkmGraph& a, const gkm::GkmGraph& b);

// Inclusion-minimal families of vertex sets with empty common intersection,
// by enumerating all subsets.
std::vector<std::vector<int>> minimal_empty_families(const std::vector<std::vector<char>>& sets);

}  // namespace oracle
