#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gkm/integer.hpp"

namespace gkm {

struct Dart {
  std::string id;
  int from = -1;
  int to = -1;        // -1 for a leg
  int opposite = -1;  // -1 for a leg
  LatticeVector axial;
  bool is_edge() const { return to >= 0; }
};

// For each edge dart e (indexed by dart), a bijection from darts at from(e)
// to darts at to(e). Legs carry an empty map.
using Connection = std::vector<std::map<int, int>>;

class GkmGraph {
 public:
  int rank = 0;
  std::vector<std::string> vertices;  // sorted
  std::vector<Dart> darts;            // sorted by id
  std::vector<std::vector<int>> out;  // darts at each vertex, by id
  std::optional<Connection> stored_connection;

  std::size_t num_vertices() const { return vertices.size(); }
  std::size_t num_darts() const { return darts.size(); }
  int vertex_index(const std::string& id) const;  // -1 if absent
  int dart_index(const std::string& id) const;    // -1 if absent
  std::size_t num_edges() const;  // undirected
  std::size_t num_legs() const;
  bool operator==(const GkmGraph& o) const;
};

// Assembles a graph from named parts and enforces the structural
// invariants: valence 2n, opposite symmetry, legs without opposite,
// connectivity, axial length n+1.
class GraphBuilder {
 public:
  explicit GraphBuilder(int rank) : rank_(rank) {}
  GraphBuilder& vertex(const std::string& id);
  GraphBuilder& leg(const std::string& id, const std::string& from, LatticeVector axial);
  // Edge from -> to with darts id (forward) and rev_id (backward).
  GraphBuilder& edge(const std::string& id, const std::string& rev_id,
                     const std::string& from, const std::string& to,
                     LatticeVector axial, LatticeVector rev_axial);
  GraphBuilder& raw_dart(const std::string& id, const std::string& from,
                         std::optional<std::string> to,
                         std::optional<std::string> opposite, LatticeVector axial);
  GraphBuilder& connection(const std::string& edge, const std::string& src,
                           const std::string& dst);
  GkmGraph build() const;

 private:
  struct RawDart {
    std::string id, from;
    std::optional<std::string> to, opposite;
    LatticeVector axial;
  };
  int rank_;
  std::vector<std::string> vertices_;
  std::vector<RawDart> darts_;
  std::map<std::string, std::map<std::string, std::string>> connection_;
};

GkmGraph load_graph(const std::string& text);
std::string serialize_graph(const GkmGraph& g);
GkmGraph forget_connection(GkmGraph g);
GkmGraph with_connection(GkmGraph g, const Connection& c);

struct ValidationCheck {
  std::string name;
  bool passed = true;
  std::vector<std::string> ids;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool ok() const;
  std::vector<ValidationCheck> failures() const;
  bool failed(const std::string& name) const;
};

// Check names: opposite_sign, pairwise_independent, three_independent,
// congruence, connection, pair_decomposition, pairs_preserved, span,
// not_residual.
ValidationReport validate_axial(const GkmGraph& g);

Connection derive_connection(const GkmGraph& g);

struct PairDecomposition {
  // pairs[v][j] = {a, b}, a the smaller dart index.
  std::vector<std::vector<std::array<int, 2>>> pairs;
  std::vector<int> partner;   // per dart
  std::vector<int> pair_slot; // per dart: j with dart in pairs[from][j]
};

// Matching by x-complement; asserts that every connection map sends pairs
// to pairs.
PairDecomposition pair_decomposition(const GkmGraph& g, const Connection& c);

// Graph with a verified connection and pair decomposition.
struct ValidGraph {
  GkmGraph graph;
  Connection conn;
  PairDecomposition pairs;
  int n() const { return graph.rank; }
};

// Throws ValidationFailed naming the first failing check.
ValidGraph prepare(const GkmGraph& g);

// alpha with the residual coordinate dropped.
LatticeVector forget(const LatticeVector& v);

struct ForgetfulGraph {
  const GkmGraph* base = nullptr;
  std::vector<LatticeVector> axial;  // per dart, length n
  bool is_gkm = false;               // never: pair labels are negatives
};
ForgetfulGraph forgetful_graph(const GkmGraph& g);

}  // namespace gkm
