#include "gkm/matrix.hpp"

#include "gkm/errors.hpp"

namespace gkm {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows,
                               std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
  return {a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_};
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  std::vector<Int> r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0 && v[j] != 0) r[i] += (*this)(i, j) * v[j];
  return r;
}

void IntMatrix::append_row(const std::vector<Int>& r) {
  if (r.size() != cols_) throw DimensionError("appended row has wrong length");
  a_.insert(a_.end(), r.begin(), r.end());
  ++rows_;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::sub_row_multiple(std::size_t i, std::size_t j, const Int& q) {
  for (std::size_t c = 0; c < cols_; ++c)
    if ((*this)(j, c) != 0) (*this)(i, c) -= q * (*this)(j, c);
}

namespace {

void sub_from(IntMatrix& m, std::size_t i, std::size_t j, const Int& q,
              std::size_t start) {
  for (std::size_t c = start; c < m.cols(); ++c)
    if (m(j, c) != 0) m(i, c) -= q * m(j, c);
}

}  // namespace

Echelon row_echelon(IntMatrix a, bool with_transform) {
  Echelon e;
  if (with_transform) e.transform = IntMatrix::identity(a.rows());
  std::size_t r = 0;
  Int q;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    for (;;) {
      std::size_t best = a.rows();
      for (std::size_t i = r; i < a.rows(); ++i) {
        if (a(i, c) == 0) continue;
        if (best == a.rows() || mpz_cmpabs(a(i, c).get_mpz_t(), a(best, c).get_mpz_t()) < 0) best = i;
      }
      if (best == a.rows()) break;
      a.swap_rows(r, best);
      if (with_transform) e.transform.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < a.rows(); ++i) {
        if (a(i, c) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
        sub_from(a, i, r, q, c);
        if (with_transform) e.transform.sub_row_multiple(i, r, q);
        if (a(i, c) != 0) clean = false;
      }
      if (clean) {
        e.pivots.push_back(c);
        ++r;
        break;
      }
    }
  }
  e.form = std::move(a);
  return e;
}

std::vector<std::vector<Int>> hermite_rows(const IntMatrix& a) {
  Echelon e = row_echelon(a);
  IntMatrix& m = e.form;
  std::size_t rank = e.rank();
  Int q;
  for (std::size_t i = 0; i < rank; ++i) {
    std::size_t pc = e.pivots[i];
    if (m(i, pc) < 0)
      for (std::size_t c = pc; c < m.cols(); ++c) m(i, c) = -m(i, c);
    for (std::size_t k = 0; k < i; ++k) {
      if (m(k, pc) == 0) continue;
      mpz_fdiv_q(q.get_mpz_t(), m(k, pc).get_mpz_t(), m(i, pc).get_mpz_t());
      if (q != 0) sub_from(m, k, i, q, pc);
    }
  }
  std::vector<std::vector<Int>> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(m.row(i));
  return out;
}

std::vector<std::vector<Int>> hermite_rows(
    const std::vector<std::vector<Int>>& rows, std::size_t cols) {
  return hermite_rows(IntMatrix::from_rows(rows, cols));
}

std::vector<std::vector<Int>> hermite_kernel(const IntMatrix& m) {
  Echelon e = row_echelon(m.transpose(), true);
  std::vector<std::vector<Int>> ker;
  for (std::size_t i = e.rank(); i < m.cols(); ++i) ker.push_back(e.transform.row(i));
  if (ker.empty()) return ker;
  return hermite_rows(ker, m.cols());
}

std::size_t matrix_rank(const IntMatrix& a) { return row_echelon(a).rank(); }

std::size_t matrix_rank(const std::vector<std::vector<Int>>& rows,
                        std::size_t cols) {
  return matrix_rank(IntMatrix::from_rows(rows, cols));
}

std::optional<std::vector<Int>> lattice_coordinates(
    const std::vector<std::vector<Int>>& h, std::vector<Int> v) {
  std::vector<Int> coords(h.size());
  std::size_t done = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i].size() != v.size()) throw DimensionError("lattice vector length mismatch");
    std::size_t pc = 0;
    while (h[i][pc] == 0) ++pc;
    for (; done < pc; ++done)
      if (v[done] != 0) return std::nullopt;
    if (v[pc] % h[i][pc] != 0) return std::nullopt;
    coords[i] = v[pc] / h[i][pc];
    if (coords[i] != 0)
      for (std::size_t c = pc; c < v.size(); ++c) v[c] -= coords[i] * h[i][c];
  }
  for (const Int& c : v)
    if (c != 0) return std::nullopt;
  return coords;
}

bool in_lattice(const std::vector<std::vector<Int>>& h, std::vector<Int> v) {
  return lattice_coordinates(h, std::move(v)).has_value();
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("determinant needs a square matrix");
  std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && m(s, k) == 0) ++s;
      if (s == n) return 0;
      m.swap_rows(k, s);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::optional<std::vector<Int>> solve_integral(const IntMatrix& a,
                                               const std::vector<Int>& b) {
  std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw DimensionError("solve needs a square system");
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
    m[i][n] = b[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      mpq_class f = m[i][c] / m[c][c];
      for (std::size_t j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<Int> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    mpq_class v = m[i][n] / m[i][i];
    if (v.get_den() != 1) return std::nullopt;
    y[i] = v.get_num();
  }
  return y;
}

}  // namespace gkm
