#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "gkm/arrangements.hpp"
#include "gkm/errors.hpp"

namespace gkm {

namespace {

// a*e1 + b*e2 + c*x
LatticeVector lv(int a, int b, int c) { return {Int(a), Int(b), Int(c)}; }

struct Line {
  std::string name;
  int kind;  // 0 horizontal, 1 vertical, 2 diagonal
  long c;    // Y = c, X = c, X + Y = c
  std::array<long, 2> u;
};

// Positive side: above, right, lower-left.
long side(const Line& L, long X, long Y) {
  switch (L.kind) {
    case 0: return Y - L.c;
    case 1: return X - L.c;
    default: return L.c - (X + Y);
  }
}

std::array<long, 2> direction(const Line& L) {
  switch (L.kind) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    default: return {1, -1};
  }
}

// Forgetful label of a step (dX, dY) is dY*e1 + dX*e2.
std::array<long, 2> step_label(std::array<long, 2> d) { return {d[1], d[0]}; }

long pairing(std::array<long, 2> a, std::array<long, 2> b) { return a[0] * b[0] + a[1] * b[1]; }

}  // namespace

// Along each line a dart and its pair partner carry alpha and x - alpha.
// The dart toward the positive side of L_i, at a crossing p of L_i and L_j,
// has alpha = beta + c x where beta is dual to {u_i, u_j} and
// c = -sum <beta, u_l> over lines l having p on their negative side.
GkmGraph gen_klm(const KlmSpec& spec) {
  if (spec.k < 1 || spec.l < 1 || spec.m < 1) throw DimensionError("gen_klm needs k, l, m >= 1");
  std::vector<Line> lines;
  for (int r = 1; r <= spec.k; ++r) lines.push_back({"X" + std::to_string(r), 0, 2L * r, {1, 0}});
  for (int s = 1; s <= spec.l; ++s) lines.push_back({"Y" + std::to_string(s), 1, 2L * s, {0, 1}});
  for (int t = 1; t <= spec.m; ++t)
    lines.push_back({"Z" + std::to_string(t), 2, 2L * (spec.k + spec.l) + 2L * t + 1, {-1, -1}});

  struct Vertex {
    std::string id;
    long X, Y;
    int a, b;  // line indices
  };
  std::vector<Vertex> verts;
  for (std::size_t a = 0; a < lines.size(); ++a)
    for (std::size_t b = a + 1; b < lines.size(); ++b) {
      const Line &La = lines[a], &Lb = lines[b];
      if (La.kind == Lb.kind) continue;
      long X, Y;
      if (La.kind == 0 && Lb.kind == 1) X = Lb.c, Y = La.c;
      else if (La.kind == 0) Y = La.c, X = Lb.c - La.c;
      else X = La.c, Y = Lb.c - La.c;
      verts.push_back({La.name + "." + Lb.name, X, Y, static_cast<int>(a), static_cast<int>(b)});
    }

  GraphBuilder gb(2);
  for (const auto& v : verts) gb.vertex(v.id);
  for (std::size_t j = 0; j < lines.size(); ++j) {
    const Line& Lj = lines[j];
    std::vector<const Vertex*> on;
    for (const auto& v : verts)
      if (v.a == static_cast<int>(j) || v.b == static_cast<int>(j)) on.push_back(&v);
    auto pos = [&](const Vertex* v) { return Lj.kind == 1 ? v->Y : v->X; };
    std::sort(on.begin(), on.end(), [&](auto x, auto y) { return pos(x) < pos(y); });
    for (std::size_t q = 0; q < on.size(); ++q) {
      const Vertex& p = *on[q];
      const Line& Li = lines[p.a == static_cast<int>(j) ? p.b : p.a];
      // beta dual to {u_i, u_j}
      long det = Li.u[0] * Lj.u[1] - Li.u[1] * Lj.u[0];
      std::array<long, 2> beta{Lj.u[1] / det, -Lj.u[0] / det};
      if (pairing(beta, Li.u) != 1 || pairing(beta, Lj.u) != 0) throw StructuralError("non-unimodular crossing");
      long c = 0;
      for (const auto& Ll : lines)
        if (side(Ll, p.X, p.Y) < 0) c -= pairing(beta, Ll.u);
      auto d = direction(Lj);
      bool forward_is_z = side(Li, p.X + d[0], p.Y + d[1]) > 0;
      auto fl = step_label(d);
      std::array<long, 2> zlabel = forward_is_z ? fl : std::array<long, 2>{-fl[0], -fl[1]};
      if (zlabel != beta) throw StructuralError("dual basis does not match the step direction");
      LatticeVector az = lv(beta[0], beta[1], c);
      LatticeVector aw = lv(-beta[0], -beta[1], 1 - c);
      for (int dir : {+1, -1}) {
        bool is_z = (dir == 1) == forward_is_z;
        const LatticeVector& a = is_z ? az : aw;
        std::optional<std::size_t> nb;
        if (dir == 1 && q + 1 < on.size()) nb = q + 1;
        if (dir == -1 && q > 0) nb = q - 1;
        if (nb) {
          const std::string& to = on[*nb]->id;
          gb.raw_dart(p.id + ">" + to, p.id, to, to + ">" + p.id, a);
        } else {
          gb.raw_dart(p.id + ">" + Lj.name + (dir == 1 ? "/fwd" : "/back"), p.id, std::nullopt, std::nullopt, a);
        }
      }
    }
  }
  return gb.build();
}

GkmGraph local_model(int n) {
  if (n < 1) throw DimensionError("local model needs n >= 1");
  GraphBuilder gb(n);
  gb.vertex("o");
  for (int i = 0; i < n; ++i) {
    LatticeVector e(n + 1, Int(0)), f(n + 1, Int(0));
    e[i] = 1;
    f[i] = -1;
    f[n] = 1;
    gb.leg("o>e" + std::to_string(i + 1), "o", e);
    gb.leg("o>x-e" + std::to_string(i + 1), "o", f);
  }
  return gb.build();
}

namespace {

void edge(GraphBuilder& gb, const std::string& a, const std::string& b, LatticeVector ab, LatticeVector ba,
          const std::string& tag = "") {
  gb.edge(a + ">" + b + tag, b + ">" + a + tag, a, b, std::move(ab), std::move(ba));
}

void legs(GraphBuilder& gb, const std::string& v, std::vector<LatticeVector> vals) {
  for (std::size_t i = 0; i < vals.size(); ++i) gb.leg(v + ">leg" + std::to_string(i + 1), v, vals[i]);
}

GkmGraph fig2_left() {
  GraphBuilder gb(2);
  for (auto v : {"p", "q", "r"}) gb.vertex(v);
  edge(gb, "p", "r", lv(1, 0, 0), lv(-1, 0, 0));
  edge(gb, "p", "q", lv(0, 1, 0), lv(0, -1, 0));
  edge(gb, "q", "r", lv(1, -1, 0), lv(-1, 1, 0));
  legs(gb, "p", {lv(-1, 0, 1), lv(0, -1, 1)});
  legs(gb, "q", {lv(0, 1, 1), lv(-1, 1, 1)});
  legs(gb, "r", {lv(1, 0, 1), lv(1, -1, 1)});
  return gb.build();
}

GkmGraph fig2_right() {
  GraphBuilder gb(2);
  for (auto v : {"p", "q", "r", "s", "t", "u", "v", "w"}) gb.vertex(v);
  edge(gb, "p", "q", lv(1, 0, 0), lv(-1, 0, 0));
  edge(gb, "p", "w", lv(-1, 0, 1), lv(1, 0, -1));
  edge(gb, "q", "r", lv(0, -1, -1), lv(0, 1, 1));
  edge(gb, "r", "s", lv(0, -1, 0), lv(0, 1, 0));
  edge(gb, "s", "t", lv(-1, 0, 0), lv(1, 0, 0));
  edge(gb, "t", "u", lv(-1, 0, 1), lv(1, 0, -1));
  edge(gb, "u", "v", lv(0, 1, 0), lv(0, -1, 0));
  edge(gb, "v", "w", lv(0, 1, 1), lv(0, -1, -1));
  legs(gb, "p", {lv(0, 1, 2), lv(0, -1, -1)});
  legs(gb, "q", {lv(1, 0, 1), lv(0, 1, 2)});
  legs(gb, "r", {lv(1, 0, 1), lv(-1, 0, 0)});
  legs(gb, "s", {lv(0, -1, 1), lv(1, 0, 1)});
  legs(gb, "t", {lv(0, 1, 0), lv(0, -1, 1)});
  legs(gb, "u", {lv(-1, 0, 2), lv(0, -1, 1)});
  legs(gb, "v", {lv(1, 0, -1), lv(-1, 0, 2)});
  legs(gb, "w", {lv(-1, 0, 2), lv(0, 1, 2)});
  return gb.build();
}

// p_i = L_i ∩ L_{i+1}: p = p1, r = p2, t = p3, s = p4, q = p5.
GkmGraph fig7_pentagon() {
  const std::string p = "L1.L2", q = "L1.L5", r = "L2.L3", s = "L4.L5", t = "L3.L4";
  GraphBuilder gb(2);
  for (const auto& v : {p, q, r, s, t}) gb.vertex(v);
  edge(gb, p, r, lv(1, 0, 0), lv(-1, 0, 0));
  edge(gb, p, q, lv(0, 1, 0), lv(0, -1, 0));
  edge(gb, q, s, lv(1, 1, 0), lv(-1, -1, 0));
  edge(gb, r, t, lv(1, 1, 0), lv(-1, -1, 0));
  edge(gb, s, t, lv(1, 0, 0), lv(-1, 0, 0));
  legs(gb, p, {lv(-1, 0, 1), lv(0, -1, 1)});
  legs(gb, q, {lv(0, 1, 1), lv(-1, -1, 1)});
  legs(gb, r, {lv(1, 0, 1), lv(-1, -1, 1)});
  legs(gb, s, {lv(1, 1, 1), lv(-1, 0, 1)});
  legs(gb, t, {lv(1, 0, 1), lv(1, 1, 1)});
  return gb.build();
}

// Right dart at L_i: e1 + (i-1)x; left dart: -e1 + (2-i)x.
GkmGraph fig8_line5() {
  GraphBuilder gb(1);
  auto name = [](int i) { return "L" + std::to_string(i); };
  for (int i = 1; i <= 5; ++i) gb.vertex(name(i));
  for (int i = 1; i < 5; ++i)
    edge(gb, name(i), name(i + 1), {Int(1), Int(i - 1)}, {Int(-1), Int(1 - i)});
  gb.leg("L1>left", "L1", {Int(-1), Int(1)});
  gb.leg("L5>right", "L5", {Int(1), Int(4)});
  return gb.build();
}

// Two vertices joined by two edges; each edge label is unsigned.
GkmGraph fig11_sphere() {
  GraphBuilder gb(2);
  gb.vertex("bottom").vertex("top");
  edge(gb, "bottom", "top", lv(0, 1, 0), lv(0, 1, 0), ":A");
  edge(gb, "bottom", "top", lv(1, 0, 0), lv(1, 0, 0), ":B");
  legs(gb, "bottom", {lv(0, -1, 1), lv(-1, 0, 1)});
  legs(gb, "top", {lv(0, -1, 1), lv(-1, 0, 1)});
  return gb.build();
}

}  // namespace

std::vector<std::string> fixture_ids() {
  return {"fig2_left", "fig2_right", "fig7_pentagon", "fig8_line5", "fig11_sphere"};
}

GkmGraph fixture(const std::string& id) {
  if (id == "fig2_left") return fig2_left();
  if (id == "fig2_right") return fig2_right();
  if (id == "fig7_pentagon") return fig7_pentagon();
  if (id == "fig8_line5") return fig8_line5();
  if (id == "fig11_sphere") return fig11_sphere();
  static const std::regex local(R"(local_model\(([1-9][0-9]?)\))");
  std::smatch m;
  if (std::regex_match(id, m, local)) return local_model(std::stoi(m[1]));
  throw UnknownFixture("unknown fixture '" + id + "'");
}

}  // namespace gkm
