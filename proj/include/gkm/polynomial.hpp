#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gkm/integer.hpp"

namespace gkm {

using Exponent = std::vector<int>;
using VarTable = std::vector<std::string>;
using VarTablePtr = std::shared_ptr<const VarTable>;

VarTablePtr make_vars(VarTable names);
// e1..en, optionally followed by x.
VarTablePtr torus_vars(int n, bool with_residual);

// All exponent vectors of the given total degree, lexicographically
// descending: (2,0),(1,1),(0,2).
std::vector<Exponent> graded_piece_basis(int nvars, int degree);

class Polynomial {
 public:
  using Terms = std::map<Exponent, Int, std::greater<Exponent>>;

  Polynomial() = default;
  explicit Polynomial(VarTablePtr vars) : vars_(std::move(vars)) {}
  static Polynomial constant(VarTablePtr vars, const Int& c);
  static Polynomial variable(VarTablePtr vars, int index);
  static Polynomial monomial(VarTablePtr vars, Exponent e, const Int& c = 1);
  // Linear form sum v_i * var_i.
  static Polynomial linear(VarTablePtr vars, const LatticeVector& v);

  const VarTablePtr& vars() const { return vars_; }
  int nvars() const { return vars_ ? static_cast<int>(vars_->size()) : 0; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for zero
  bool is_homogeneous() const;
  Polynomial homogeneous_part(int degree) const;
  Int coefficient(const Exponent& e) const;
  Int constant_term() const;
  // Coefficients of a linear form, or nullopt when not linear homogeneous.
  std::optional<LatticeVector> as_linear() const;

  void add_term(const Exponent& e, const Int& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Int& c) const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial pow(int e) const;
  // Replace variable i by images[i]; all images share one table.
  Polynomial substitute(const std::vector<Polynomial>& images,
                        VarTablePtr target) const;
  // Exact quotient this / d, or nullopt if d does not divide.
  std::optional<Polynomial> divide_exact(const Polynomial& d) const;
  // Re-express over another table containing every used variable name.
  Polynomial rename(VarTablePtr target) const;

  std::string to_string() const;

 private:
  void check_same(const Polynomial& o) const;
  VarTablePtr vars_;
  Terms terms_;
};

std::string monomial_to_string(const VarTable& vars, const Exponent& e);

// Parses sums of products of integers, variables, powers and parentheses.
Polynomial parse_polynomial(const std::string& text, VarTablePtr vars);

Polynomial poly_mul(const Polynomial& a, const Polynomial& b);

}  // namespace gkm
