#include "gkm/graph.hpp"

#include <algorithm>
#include <set>

#include "gkm/errors.hpp"

namespace gkm {

int GkmGraph::vertex_index(const std::string& id) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), id);
  return (it != vertices.end() && *it == id) ? static_cast<int>(it - vertices.begin()) : -1;
}

int GkmGraph::dart_index(const std::string& id) const {
  auto it = std::lower_bound(darts.begin(), darts.end(), id,
                             [](const Dart& d, const std::string& s) { return d.id < s; });
  return (it != darts.end() && it->id == id) ? static_cast<int>(it - darts.begin()) : -1;
}

std::size_t GkmGraph::num_edges() const {
  std::size_t e = 0;
  for (const auto& d : darts) e += d.is_edge();
  return e / 2;
}

std::size_t GkmGraph::num_legs() const { return darts.size() - 2 * num_edges(); }

bool GkmGraph::operator==(const GkmGraph& o) const {
  if (rank != o.rank || vertices != o.vertices || darts.size() != o.darts.size()) return false;
  for (std::size_t i = 0; i < darts.size(); ++i) {
    const Dart &a = darts[i], &b = o.darts[i];
    if (a.id != b.id || a.from != b.from || a.to != b.to || a.opposite != b.opposite ||
        a.axial != b.axial)
      return false;
  }
  return stored_connection == o.stored_connection;
}

GraphBuilder& GraphBuilder::vertex(const std::string& id) {
  vertices_.push_back(id);
  return *this;
}

GraphBuilder& GraphBuilder::leg(const std::string& id, const std::string& from,
                                LatticeVector axial) {
  return raw_dart(id, from, std::nullopt, std::nullopt, std::move(axial));
}

GraphBuilder& GraphBuilder::edge(const std::string& id, const std::string& rev_id,
                                 const std::string& from, const std::string& to,
                                 LatticeVector axial, LatticeVector rev_axial) {
  raw_dart(id, from, to, rev_id, std::move(axial));
  return raw_dart(rev_id, to, from, id, std::move(rev_axial));
}

GraphBuilder& GraphBuilder::raw_dart(const std::string& id, const std::string& from,
                                     std::optional<std::string> to,
                                     std::optional<std::string> opposite,
                                     LatticeVector axial) {
  darts_.push_back({id, from, std::move(to), std::move(opposite), std::move(axial)});
  return *this;
}

GraphBuilder& GraphBuilder::connection(const std::string& edge, const std::string& src,
                                       const std::string& dst) {
  connection_[edge][src] = dst;
  return *this;
}

GkmGraph GraphBuilder::build() const {
  if (rank_ < 1) throw StructuralError("rank must be at least 1");
  GkmGraph g;
  g.rank = rank_;
  g.vertices = vertices_;
  std::sort(g.vertices.begin(), g.vertices.end());
  if (std::adjacent_find(g.vertices.begin(), g.vertices.end()) != g.vertices.end())
    throw StructuralError("duplicate vertex id");
  if (g.vertices.empty()) throw StructuralError("graph has no vertices");

  std::vector<RawDart> raw = darts_;
  std::sort(raw.begin(), raw.end(), [](const RawDart& a, const RawDart& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < raw.size(); ++i)
    if (raw[i].id == raw[i - 1].id) throw StructuralError("duplicate dart id " + raw[i].id);

  g.darts.resize(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    Dart& d = g.darts[i];
    d.id = raw[i].id;
    d.from = g.vertex_index(raw[i].from);
    if (d.from < 0) throw StructuralError("dart " + d.id + ": unknown source vertex " + raw[i].from);
    if (raw[i].axial.size() != static_cast<std::size_t>(rank_ + 1))
      throw StructuralError("dart " + d.id + ": axial vector must have " +
                            std::to_string(rank_ + 1) + " entries");
    d.axial = raw[i].axial;
  }
  for (std::size_t i = 0; i < raw.size(); ++i) {
    Dart& d = g.darts[i];
    if (raw[i].to.has_value() != raw[i].opposite.has_value())
      throw StructuralError("dart " + d.id + ": target and opposite must both be set or both null");
    if (!raw[i].to) continue;
    d.to = g.vertex_index(*raw[i].to);
    if (d.to < 0) throw StructuralError("dart " + d.id + ": unknown target vertex " + *raw[i].to);
    d.opposite = g.dart_index(*raw[i].opposite);
    if (d.opposite < 0)
      throw StructuralError("dart " + d.id + ": dangling opposite " + *raw[i].opposite);
  }
  for (const Dart& d : g.darts) {
    if (!d.is_edge()) continue;
    const Dart& o = g.darts[d.opposite];
    if (o.opposite < 0 || g.darts[o.opposite].id != d.id || o.from != d.to || o.to != d.from)
      throw StructuralError("dart " + d.id + ": opposite " + o.id + " is not its reverse");
  }

  g.out.assign(g.vertices.size(), {});
  for (std::size_t i = 0; i < g.darts.size(); ++i) g.out[g.darts[i].from].push_back(static_cast<int>(i));
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    if (g.out[v].size() != static_cast<std::size_t>(2 * rank_))
      throw StructuralError("vertex " + g.vertices[v] + " has valence " +
                            std::to_string(g.out[v].size()) + ", expected " +
                            std::to_string(2 * rank_));

  std::vector<char> seen(g.vertices.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int d : g.out[v]) {
      int w = g.darts[d].to;
      if (w >= 0 && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  for (std::size_t v = 0; v < seen.size(); ++v)
    if (!seen[v]) throw StructuralError("graph is disconnected: vertex " + g.vertices[v] + " unreachable");

  if (!connection_.empty()) {
    Connection c(g.darts.size());
    for (const auto& [eid, m] : connection_) {
      int e = g.dart_index(eid);
      if (e < 0 || !g.darts[e].is_edge())
        throw StructuralError("connection key " + eid + " is not an edge dart");
      for (const auto& [s, t] : m) {
        int a = g.dart_index(s), b = g.dart_index(t);
        if (a < 0 || b < 0) throw StructuralError("connection of " + eid + " names unknown darts");
        c[e][a] = b;
      }
    }
    g.stored_connection = std::move(c);
  }
  return g;
}

GkmGraph forget_connection(GkmGraph g) {
  g.stored_connection.reset();
  return g;
}

GkmGraph with_connection(GkmGraph g, const Connection& c) {
  g.stored_connection = c;
  return g;
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::vector<ValidationCheck> ValidationReport::failures() const {
  std::vector<ValidationCheck> f;
  for (const auto& c : checks)
    if (!c.passed) f.push_back(c);
  return f;
}

bool ValidationReport::failed(const std::string& name) const {
  for (const auto& c : checks)
    if (!c.passed && c.name == name) return true;
  return false;
}

namespace {

enum class DeriveStatus { ok, none, ambiguous, not_bijective };

struct EdgeMap {
  DeriveStatus status = DeriveStatus::ok;
  std::map<int, int> map;
  int culprit = -1;
};

EdgeMap derive_edge(const GkmGraph& g, int e) {
  EdgeMap r;
  const Dart& ed = g.darts[e];
  std::set<int> used;
  for (int d : g.out[ed.from]) {
    if (d == e) {
      r.map[d] = ed.opposite;
    } else {
      int found = -1, count = 0;
      for (int c : g.out[ed.to]) {
        if (c == ed.opposite) continue;
        if (is_multiple(lattice_sub(g.darts[d].axial, g.darts[c].axial), ed.axial)) {
          found = c;
          ++count;
        }
      }
      if (count != 1) {
        r.status = count == 0 ? DeriveStatus::none : DeriveStatus::ambiguous;
        r.culprit = d;
        return r;
      }
      r.map[d] = found;
    }
    if (!used.insert(r.map[d]).second) {
      r.status = DeriveStatus::not_bijective;
      r.culprit = d;
      return r;
    }
  }
  return r;
}

bool inverse_consistent(const GkmGraph& g, const Connection& c, int e) {
  int o = g.darts[e].opposite;
  for (const auto& [a, b] : c[e]) {
    auto it = c[o].find(b);
    if (it == c[o].end() || it->second != a) return false;
  }
  return c[e].size() == c[o].size();
}

}  // namespace

Connection derive_connection(const GkmGraph& g) {
  Connection c(g.darts.size());
  for (std::size_t e = 0; e < g.darts.size(); ++e) {
    if (!g.darts[e].is_edge()) continue;
    EdgeMap m = derive_edge(g, static_cast<int>(e));
    std::string where = "edge " + g.darts[e].id;
    switch (m.status) {
      case DeriveStatus::none:
        throw NoValidConnection(where + ": dart " + g.darts[m.culprit].id + " has no congruent partner");
      case DeriveStatus::ambiguous:
        throw AmbiguousConnection(where + ": dart " + g.darts[m.culprit].id + " has several congruent partners");
      case DeriveStatus::not_bijective:
        throw NoValidConnection(where + ": congruent matching is not a bijection");
      case DeriveStatus::ok:
        break;
    }
    c[e] = std::move(m.map);
  }
  for (std::size_t e = 0; e < g.darts.size(); ++e)
    if (g.darts[e].is_edge() && !inverse_consistent(g, c, static_cast<int>(e)))
      throw NoValidConnection("edge " + g.darts[e].id + ": reverse map is not the inverse");
  return c;
}

namespace {

// Partner search shared by the validator and pair_decomposition. Returns an
// empty vector of pairs for a vertex whose matching fails, and records the
// offending dart.
bool match_vertex(const GkmGraph& g, int v, std::vector<std::array<int, 2>>& pairs, int& bad) {
  LatticeVector x = residual(g.rank);
  std::vector<int> partner_of(g.out[v].size(), -1);
  for (std::size_t i = 0; i < g.out[v].size(); ++i) {
    int d = g.out[v][i];
    LatticeVector want = lattice_sub(x, g.darts[d].axial);
    int count = 0;
    for (std::size_t j = 0; j < g.out[v].size(); ++j)
      if (j != i && g.darts[g.out[v][j]].axial == want) {
        partner_of[i] = static_cast<int>(j);
        ++count;
      }
    if (count != 1) {
      bad = d;
      return false;
    }
  }
  for (std::size_t i = 0; i < partner_of.size(); ++i) {
    std::size_t j = partner_of[i];
    if (static_cast<std::size_t>(partner_of[j]) != i) {
      bad = g.out[v][i];
      return false;
    }
    if (i < j) pairs.push_back({g.out[v][i], g.out[v][j]});
  }
  return true;
}

}  // namespace

ValidationReport validate_axial(const GkmGraph& g) {
  ValidationReport rep;
  auto fail = [&](const std::string& name, std::vector<std::string> ids, const std::string& msg) {
    rep.checks.push_back({name, false, std::move(ids), msg});
  };
  const auto& D = g.darts;
  LatticeVector x = residual(g.rank);

  for (std::size_t e = 0; e < D.size(); ++e) {
    if (!D[e].is_edge() || static_cast<int>(e) > D[e].opposite) continue;
    const LatticeVector& a = D[e].axial;
    const LatticeVector& b = D[D[e].opposite].axial;
    if (b != a && b != lattice_neg(a))
      fail("opposite_sign", {D[e].id, D[D[e].opposite].id}, "axial vectors of opposite darts differ beyond sign");
  }
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const auto& o = g.out[v];
    for (std::size_t i = 0; i < o.size(); ++i)
      for (std::size_t j = i + 1; j < o.size(); ++j)
        if (lattice_rank({D[o[i]].axial, D[o[j]].axial}) < 2)
          fail("pairwise_independent", {g.vertices[v], D[o[i]].id, D[o[j]].id}, "linearly dependent pair");
    for (std::size_t i = 0; i < o.size(); ++i)
      for (std::size_t j = i + 1; j < o.size(); ++j)
        for (std::size_t k = j + 1; k < o.size(); ++k)
          if (lattice_rank({D[o[i]].axial, D[o[j]].axial, D[o[k]].axial}) < 3)
            fail("three_independent", {g.vertices[v], D[o[i]].id, D[o[j]].id, D[o[k]].id},
                 "linearly dependent triple");
  }
  for (const auto& d : D)
    if (d.axial == x) fail("not_residual", {d.id}, "axial vector equals the residual basis x");

  Connection conn(D.size());
  bool have_conn = true;
  if (g.stored_connection) {
    conn = *g.stored_connection;
    if (conn.size() != D.size()) conn.resize(D.size());
    for (std::size_t e = 0; e < D.size(); ++e) {
      if (!D[e].is_edge()) {
        if (!conn[e].empty()) {
          fail("connection", {D[e].id}, "connection given on a leg");
          have_conn = false;
        }
        continue;
      }
      const auto& m = conn[e];
      std::set<int> keys, vals;
      for (const auto& [a, b] : m) {
        keys.insert(a);
        vals.insert(b);
        if (D[a].from != D[e].from || D[b].from != D[e].to) {
          keys.clear();
          break;
        }
      }
      std::set<int> src(g.out[D[e].from].begin(), g.out[D[e].from].end());
      std::set<int> dst(g.out[D[e].to].begin(), g.out[D[e].to].end());
      if (keys != src || vals != dst || m.size() != src.size()) {
        fail("connection", {D[e].id}, "stored map is not a bijection between the dart sets");
        have_conn = false;
      } else if (m.at(e) != D[e].opposite) {
        fail("connection", {D[e].id}, "stored map does not send the edge to its opposite");
        have_conn = false;
      }
    }
    if (have_conn)
      for (std::size_t e = 0; e < D.size(); ++e)
        if (D[e].is_edge() && !inverse_consistent(g, conn, static_cast<int>(e))) {
          fail("connection", {D[e].id}, "map of the opposite dart is not the inverse");
          have_conn = false;
        }
  } else {
    for (std::size_t e = 0; e < D.size(); ++e) {
      if (!D[e].is_edge()) continue;
      EdgeMap m = derive_edge(g, static_cast<int>(e));
      if (m.status == DeriveStatus::none) {
        fail("congruence", {D[e].id, D[m.culprit].id}, "no dart at the target is congruent modulo the edge label");
        have_conn = false;
      } else if (m.status != DeriveStatus::ok) {
        fail("connection", {D[e].id, D[m.culprit].id}, "congruent matching is ambiguous or not a bijection");
        have_conn = false;
      } else {
        conn[e] = std::move(m.map);
      }
    }
    if (have_conn)
      for (std::size_t e = 0; e < D.size(); ++e)
        if (D[e].is_edge() && !inverse_consistent(g, conn, static_cast<int>(e))) {
          fail("connection", {D[e].id}, "map of the opposite dart is not the inverse");
          have_conn = false;
        }
  }
  if (have_conn)
    for (std::size_t e = 0; e < D.size(); ++e) {
      if (!D[e].is_edge()) continue;
      for (const auto& [a, b] : conn[e])
        if (!is_multiple(lattice_sub(D[a].axial, D[b].axial), D[e].axial))
          fail("congruence", {D[e].id, D[a].id, D[b].id}, "alpha(a) - alpha(image) not divisible by the edge label");
    }

  std::vector<std::vector<std::array<int, 2>>> pairs(g.vertices.size());
  bool pairs_ok = true;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    int bad = -1;
    if (!match_vertex(g, static_cast<int>(v), pairs[v], bad)) {
      fail("pair_decomposition", {g.vertices[v], D[bad].id}, "dart has no unique x-complement partner");
      pairs_ok = false;
      pairs[v].clear();
    }
  }
  if (pairs_ok && have_conn) {
    std::vector<int> partner(D.size(), -1);
    for (const auto& pv : pairs)
      for (const auto& p : pv) {
        partner[p[0]] = p[1];
        partner[p[1]] = p[0];
      }
    for (std::size_t e = 0; e < D.size(); ++e)
      for (const auto& [a, b] : conn[e])
        if (conn[e].at(partner[a]) != partner[b])
          fail("pairs_preserved", {D[e].id, D[a].id}, "connection does not map a pair to a pair");
  }
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (pairs[v].empty()) continue;
    std::vector<LatticeVector> rows;
    for (const auto& p : pairs[v]) rows.push_back(D[p[0]].axial);
    rows.push_back(x);
    Int det = lattice_det(rows);
    if (det != 1 && det != -1)
      fail("span", {g.vertices[v]}, "pair labels with x do not span the lattice (det " + det.get_str() + ")");
  }

  for (const char* name : {"opposite_sign", "pairwise_independent", "three_independent", "congruence",
                           "connection", "pair_decomposition", "pairs_preserved", "span", "not_residual"})
    if (!rep.failed(name)) rep.checks.push_back({name, true, {}, ""});
  return rep;
}

PairDecomposition pair_decomposition(const GkmGraph& g, const Connection& c) {
  PairDecomposition pd;
  pd.pairs.resize(g.vertices.size());
  pd.partner.assign(g.darts.size(), -1);
  pd.pair_slot.assign(g.darts.size(), -1);
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    int bad = -1;
    if (!match_vertex(g, static_cast<int>(v), pd.pairs[v], bad))
      throw NoPartner("vertex " + g.vertices[v] + ": dart " + g.darts[bad].id + " has no x-complement partner");
    for (std::size_t j = 0; j < pd.pairs[v].size(); ++j) {
      auto [a, b] = pd.pairs[v][j];
      pd.partner[a] = b;
      pd.partner[b] = a;
      pd.pair_slot[a] = pd.pair_slot[b] = static_cast<int>(j);
    }
  }
  for (std::size_t e = 0; e < g.darts.size(); ++e)
    for (const auto& [a, b] : c[e])
      if (c[e].at(pd.partner[a]) != pd.partner[b])
        throw PairNotPreserved("edge " + g.darts[e].id + " maps the pair of " + g.darts[a].id +
                               " onto a non-pair");
  return pd;
}

ValidGraph prepare(const GkmGraph& g) {
  ValidationReport rep = validate_axial(g);
  if (!rep.ok()) {
    auto f = rep.failures().front();
    std::string ids;
    for (const auto& i : f.ids) ids += (ids.empty() ? "" : ",") + i;
    throw ValidationFailed(f.name + " [" + ids + "]: " + f.message);
  }
  ValidGraph vg;
  vg.graph = g;
  vg.conn = g.stored_connection ? *g.stored_connection : derive_connection(g);
  vg.conn.resize(g.darts.size());
  vg.pairs = pair_decomposition(g, vg.conn);
  return vg;
}

LatticeVector forget(const LatticeVector& v) { return {v.begin(), v.end() - 1}; }

ForgetfulGraph forgetful_graph(const GkmGraph& g) {
  ForgetfulGraph f;
  f.base = &g;
  for (const auto& d : g.darts) f.axial.push_back(forget(d.axial));
  return f;
}

}  // namespace gkm
