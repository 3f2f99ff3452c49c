#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gkm/integer.hpp"

namespace gkm {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows,
                             std::size_t cols);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }
  std::vector<Int> row(std::size_t i) const;
  IntMatrix transpose() const;
  std::vector<Int> apply(const std::vector<Int>& v) const;  // M * v
  void append_row(const std::vector<Int>& r);
  void swap_rows(std::size_t i, std::size_t j);
  // row_i -= q * row_j
  void sub_row_multiple(std::size_t i, std::size_t j, const Int& q);
  bool operator==(const IntMatrix& o) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

struct Echelon {
  IntMatrix form;                // U * A
  IntMatrix transform;           // unimodular U (empty unless requested)
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

// Integer row echelon form by unimodular row operations, always pivoting on
// the entry of smallest absolute value.
Echelon row_echelon(IntMatrix a, bool with_transform = false);

// Hermite normal form rows (positive pivots, reduced above) of the row
// lattice; zero rows dropped. Canonical for the lattice.
std::vector<std::vector<Int>> hermite_rows(const IntMatrix& a);
std::vector<std::vector<Int>> hermite_rows(
    const std::vector<std::vector<Int>>& rows, std::size_t cols);

// Hermite-reduced Z-basis of {v : M v = 0}.
std::vector<std::vector<Int>> hermite_kernel(const IntMatrix& m);

std::size_t matrix_rank(const IntMatrix& a);
std::size_t matrix_rank(const std::vector<std::vector<Int>>& rows,
                        std::size_t cols);

// Membership of v in the lattice spanned by Hermite rows h.
bool in_lattice(const std::vector<std::vector<Int>>& h, std::vector<Int> v);
// Integer coordinates of v over Hermite rows h, if v lies in the lattice.
std::optional<std::vector<Int>> lattice_coordinates(
    const std::vector<std::vector<Int>>& h, std::vector<Int> v);

Int determinant(const IntMatrix& a);

// Unique rational solution of A y = b for square nonsingular A; nullopt if
// singular or the solution is not integral.
std::optional<std::vector<Int>> solve_integral(const IntMatrix& a,
                                               const std::vector<Int>& b);

}  // namespace gkm
