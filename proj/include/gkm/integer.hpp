#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace gkm {

using Int = mpz_class;

// Element of H^2(BT^n) + Zx; the residual coordinate is last.
using LatticeVector = std::vector<Int>;

inline std::string to_string(const Int& a) { return a.get_str(); }

LatticeVector lattice_add(const LatticeVector& a, const LatticeVector& b);
LatticeVector lattice_sub(const LatticeVector& a, const LatticeVector& b);
LatticeVector lattice_neg(const LatticeVector& a);
bool lattice_is_zero(const LatticeVector& a);
// x = (0,...,0,1) in Z^{n+1}.
LatticeVector residual(std::size_t n);
// True iff v is an integer multiple of a (a nonzero).
bool is_multiple(const LatticeVector& v, const LatticeVector& a);
// Rank of the subgroup of Z^d generated by the vectors.
int lattice_rank(const std::vector<LatticeVector>& vectors);
Int lattice_det(const std::vector<LatticeVector>& rows);
std::string lattice_to_string(const LatticeVector& v);

}  // namespace gkm
