#include "gkm/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "gkm/errors.hpp"
#include "gkm/matrix.hpp"

namespace gkm {

LatticeVector lattice_add(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw DimensionError("lattice vectors differ in length");
  LatticeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

LatticeVector lattice_sub(const LatticeVector& a, const LatticeVector& b) {
  return lattice_add(a, lattice_neg(b));
}

LatticeVector lattice_neg(const LatticeVector& a) {
  LatticeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

bool lattice_is_zero(const LatticeVector& a) {
  return std::all_of(a.begin(), a.end(), [](const Int& c) { return c == 0; });
}

LatticeVector residual(std::size_t n) {
  LatticeVector x(n + 1, Int(0));
  x[n] = 1;
  return x;
}

bool is_multiple(const LatticeVector& v, const LatticeVector& a) {
  if (v.size() != a.size()) throw DimensionError("lattice vectors differ in length");
  std::size_t k = 0;
  while (k < a.size() && a[k] == 0) ++k;
  if (k == a.size()) return lattice_is_zero(v);
  if (v[k] % a[k] != 0) return false;
  Int q = v[k] / a[k];
  for (std::size_t i = 0; i < a.size(); ++i)
    if (v[i] != q * a[i]) return false;
  return true;
}

int lattice_rank(const std::vector<LatticeVector>& vectors) {
  if (vectors.empty()) return 0;
  std::size_t d = vectors.front().size();
  for (const auto& v : vectors)
    if (v.size() != d) throw DimensionError("lattice vectors differ in length");
  return static_cast<int>(matrix_rank(vectors, d));
}

Int lattice_det(const std::vector<LatticeVector>& rows) {
  std::size_t d = rows.size();
  for (const auto& r : rows)
    if (r.size() != d) throw DimensionError("determinant needs a square matrix");
  return determinant(IntMatrix::from_rows(rows, d));
}

std::string lattice_to_string(const LatticeVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + "]";
}

VarTablePtr make_vars(VarTable names) {
  return std::make_shared<const VarTable>(std::move(names));
}

VarTablePtr torus_vars(int n, bool with_residual) {
  VarTable names;
  for (int i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
  if (with_residual) names.push_back("x");
  return make_vars(std::move(names));
}

namespace {

void fill_piece(int nvars, int idx, int remaining, Exponent& cur,
                std::vector<Exponent>& out) {
  if (idx == nvars - 1) {
    cur[idx] = remaining;
    out.push_back(cur);
    return;
  }
  for (int a = remaining; a >= 0; --a) {
    cur[idx] = a;
    fill_piece(nvars, idx + 1, remaining - a, cur, out);
  }
}

}  // namespace

std::vector<Exponent> graded_piece_basis(int nvars, int degree) {
  std::vector<Exponent> out;
  if (nvars < 0 || degree < 0) return out;
  if (nvars == 0) {
    if (degree == 0) out.push_back({});
    return out;
  }
  Exponent cur(nvars, 0);
  fill_piece(nvars, 0, degree, cur, out);
  return out;
}

Polynomial Polynomial::constant(VarTablePtr vars, const Int& c) {
  Polynomial p(std::move(vars));
  p.add_term(Exponent(p.nvars(), 0), c);
  return p;
}

Polynomial Polynomial::variable(VarTablePtr vars, int index) {
  Polynomial p(std::move(vars));
  Exponent e(p.nvars(), 0);
  e.at(index) = 1;
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::monomial(VarTablePtr vars, Exponent e, const Int& c) {
  Polynomial p(std::move(vars));
  if (static_cast<int>(e.size()) != p.nvars())
    throw DimensionError("exponent length does not match variable table");
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::linear(VarTablePtr vars, const LatticeVector& v) {
  Polynomial p(std::move(vars));
  if (static_cast<int>(v.size()) != p.nvars())
    throw DimensionError("linear form length does not match variable table");
  for (int i = 0; i < p.nvars(); ++i) {
    Exponent e(p.nvars(), 0);
    e[i] = 1;
    p.add_term(e, v[i]);
  }
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int a : e) s += a;
    d = std::max(d, s);
  }
  return d;
}

bool Polynomial::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int a : e) s += a;
    if (d >= 0 && s != d) return false;
    d = s;
  }
  return true;
}

Polynomial Polynomial::homogeneous_part(int degree) const {
  Polynomial r(vars_);
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int a : e) s += a;
    if (s == degree) r.terms_.emplace(e, c);
  }
  return r;
}

Int Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

Int Polynomial::constant_term() const {
  return coefficient(Exponent(nvars(), 0));
}

std::optional<LatticeVector> Polynomial::as_linear() const {
  LatticeVector v(nvars(), Int(0));
  for (const auto& [e, c] : terms_) {
    int s = 0, at = -1;
    for (int i = 0; i < nvars(); ++i) {
      s += e[i];
      if (e[i]) at = i;
    }
    if (s != 1) return std::nullopt;
    v[at] = c;
  }
  return v;
}

void Polynomial::add_term(const Exponent& e, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_same(const Polynomial& o) const {
  if (!vars_ || !o.vars_ || vars_ == o.vars_) return;
  if (*vars_ != *o.vars_)
    throw VariableTableMismatch("polynomials use different variable tables");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  r -= o;
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same(o);
  if (!vars_) vars_ = o.vars_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same(o);
  if (!vars_) vars_ = o.vars_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same(o);
  Polynomial r(vars_ ? vars_ : o.vars_);
  Exponent e(r.nvars());
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < r.nvars(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Polynomial Polynomial::operator*(const Int& c) const {
  Polynomial r(vars_);
  if (c == 0) return r;
  for (const auto& [e, a] : terms_) r.terms_.emplace(e, a * c);
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  check_same(o);
  return terms_ == o.terms_;
}

Polynomial Polynomial::pow(int k) const {
  Polynomial r = constant(vars_, 1);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images,
                                  VarTablePtr target) const {
  if (static_cast<int>(images.size()) != nvars())
    throw DimensionError("substitution needs one image per variable");
  Polynomial r(target);
  std::vector<std::vector<Polynomial>> powers(nvars());
  for (const auto& [e, c] : terms_) {
    Polynomial t = constant(target, c);
    for (int i = 0; i < nvars(); ++i) {
      if (!e[i]) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(target, 1));
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * images[i]);
      t = t * pw[e[i]];
    }
    r += t;
  }
  return r;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& d) const {
  check_same(d);
  if (d.is_zero()) return std::nullopt;
  Polynomial q(vars_), r = *this;
  const auto& [ed, cd] = *d.terms_.begin();
  Exponent shift(nvars());
  while (!r.is_zero()) {
    const auto& [er, cr] = *r.terms_.begin();
    for (int i = 0; i < nvars(); ++i) {
      shift[i] = er[i] - ed[i];
      if (shift[i] < 0) return std::nullopt;
    }
    if (cr % cd != 0) return std::nullopt;
    Polynomial t = monomial(vars_, shift, cr / cd);
    q += t;
    r -= t * d;
  }
  return q;
}

Polynomial Polynomial::rename(VarTablePtr target) const {
  std::vector<int> where(nvars());
  for (int i = 0; i < nvars(); ++i) {
    auto it = std::find(target->begin(), target->end(), (*vars_)[i]);
    if (it == target->end())
      throw VariableTableMismatch("variable " + (*vars_)[i] + " missing from target table");
    where[i] = static_cast<int>(it - target->begin());
  }
  Polynomial r(target);
  for (const auto& [e, c] : terms_) {
    Exponent f(target->size(), 0);
    for (int i = 0; i < nvars(); ++i) f[where[i]] += e[i];
    r.add_term(f, c);
  }
  return r;
}

std::string monomial_to_string(const VarTable& vars, const Exponent& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool neg = c < 0;
    Int a = neg ? Int(-c) : c;
    bool unit = std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
    std::string body;
    if (unit) body = a.get_str();
    else if (a == 1) body = monomial_to_string(*vars_, e);
    else body = a.get_str() + "*" + monomial_to_string(*vars_, e);
    if (first) s += neg ? "-" + body : body;
    else s += (neg ? " - " : " + ") + body;
    first = false;
  }
  return s;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }

namespace {

class Parser {
 public:
  Parser(const std::string& text, VarTablePtr vars) : s_(text), vars_(std::move(vars)) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw ParseError("polynomial '" + s_ + "' at offset " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Polynomial expr() {
    Polynomial p = term();
    for (;;) {
      if (eat('+')) p += term();
      else if (eat('-')) p -= term();
      else return p;
    }
  }
  Polynomial term() {
    Polynomial p = factor();
    while (eat('*')) p = p * factor();
    return p;
  }
  Polynomial factor() {
    if (eat('-')) return -factor();
    Polynomial p = primary();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      p = p.pow(std::stoi(s_.substr(start, pos_ - start)));
    }
    return p;
  }
  Polynomial primary() {
    skip();
    if (eat('(')) {
      Polynomial p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (pos_ >= s_.size()) fail("unexpected end");
    std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Polynomial::constant(vars_, Int(s_.substr(start, pos_ - start)));
    }
    auto ident = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    while (pos_ < s_.size() && ident(s_[pos_])) ++pos_;
    if (start == pos_) fail("expected term");
    std::string name = s_.substr(start, pos_ - start);
    auto it = std::find(vars_->begin(), vars_->end(), name);
    if (it == vars_->end()) fail("unknown variable " + name);
    return Polynomial::variable(vars_, static_cast<int>(it - vars_->begin()));
  }

  std::string s_;
  VarTablePtr vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, VarTablePtr vars) {
  return Parser(text, std::move(vars)).parse();
}

}  // namespace gkm
