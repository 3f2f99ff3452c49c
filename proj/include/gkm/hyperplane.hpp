#pragma once

#include <map>
#include <string>
#include <vector>

#include "gkm/graph.hpp"
#include "gkm/parallel.hpp"

namespace gkm {

struct Subgraph {
  std::vector<char> vin, din;
  Subgraph() = default;
  Subgraph(std::size_t nv, std::size_t nd) : vin(nv, 0), din(nd, 0) {}
  std::vector<int> vertex_list() const;
  std::vector<int> dart_list() const;
  bool has_vertices() const;
  int valence(const GkmGraph& g, int v) const;
  bool operator==(const Subgraph& o) const = default;
};

bool is_connected(const GkmGraph& g, const Subgraph& s);
int component_count(const GkmGraph& g, const Subgraph& s);

struct Hyperplane {
  Subgraph sub;
  std::string name;  // user-facing
  std::string id;    // stable hash of the sorted vertex and dart ids
};

struct HyperplaneSet {
  std::vector<Hyperplane> list;
  // through[v][j]: index of the hyperplane at v excluding pair j
  std::vector<std::vector<int>> through;
  int index_of(const std::string& name) const;  // -1 if absent
};

// Iterated connection closure from E_p minus the excluded pair.
Hyperplane hyperplane_through(const ValidGraph& vg, int p, int pair_slot);
HyperplaneSet all_hyperplanes(const ValidGraph& vg);

struct Halfspace {
  Subgraph sub;
  std::map<int, int> normal;  // boundary vertex -> normal dart
};

// Empty when s satisfies the pre-halfspace axioms; fills normals.
std::vector<std::string> pre_halfspace_problems(const ValidGraph& vg, const Subgraph& s,
                                                std::map<int, int>* normals = nullptr);
// Throws NotPreHalfspace.
Halfspace make_pre_halfspace(const ValidGraph& vg, const Subgraph& s);

struct Boundary {
  Subgraph sub;
  std::vector<Subgraph> hyperplanes;  // distinct
};
Boundary boundary(const ValidGraph& vg, const Halfspace& h);
Halfspace opposite_side(const ValidGraph& vg, const Halfspace& h);
bool is_halfspace(const ValidGraph& vg, const Halfspace& h);

struct HalfspacePair {
  Halfspace h, hbar;
};

// h contains the smallest dart id outside L. Throws AssumptionOneViolation
// with message "<check>: <detail>".
HalfspacePair halfspace_pair(const ValidGraph& vg, const HyperplaneSet& hs, int index);

using ThomClass = std::vector<LatticeVector>;  // per vertex
// Throws NotPreHalfspace or CongruenceFailure.
ThomClass thom_class(const ValidGraph& vg, const Halfspace& h);
ThomClass chi_class(const ValidGraph& vg);
bool satisfies_congruence(const ValidGraph& vg, const ThomClass& t);

struct Intersection {
  Subgraph sub;
  bool empty = true;
  int components = 0;
  int valence = -1;  // common valence, -1 if empty or not uniform
};
Intersection intersect_hyperplanes(const ValidGraph& vg, const HyperplaneSet& hs,
                                   const std::vector<int>& subset);

struct AssumptionReport {
  struct One {
    int hyperplane;
    bool passed;
    std::string check, message;
  };
  struct Two {
    std::vector<int> subset;
    int components;
  };
  std::vector<One> assumption1;
  std::vector<Two> assumption2_failures;
  std::size_t subsets_checked = 0;
  bool truncated = false;
  bool ok1() const;
  bool ok2() const { return assumption2_failures.empty() && !truncated; }
};

AssumptionReport check_assumptions(const ValidGraph& vg, const HyperplaneSet& hs,
                                   std::size_t subset_cap = 1000000,
                                   Exec exec = Exec::parallel);

}  // namespace gkm

namespace gkm {

// Hyperplanes with a chosen side each. Thom classes of the chosen side
// orient the x-forgetful classes tau_L and the characteristic functions.
struct Arrangement {
  HyperplaneSet hs;
  std::vector<HalfspacePair> sides;  // sides[i].h is the chosen side
  std::vector<ThomClass> tau_h, tau_hbar;
  std::string orientation;  // "lexicographic" or "klm"
  std::size_t size() const { return hs.list.size(); }
};

// Throws AssumptionViolation when some hyperplane has no halfspace pair.
Arrangement build_arrangement(const ValidGraph& vg, Exec exec = Exec::parallel);

// F o tau_H for the chosen side: per-vertex vectors of length n.
std::vector<LatticeVector> thom_class_forgetful(const ValidGraph& vg, const Arrangement& arr, int i);

// lambda(L) dual to the local basis at each vertex of L, with the normal of
// h as last member; throws InconsistentLambda if vertices disagree.
std::vector<Int> characteristic_function(const ValidGraph& vg, const Subgraph& L, const Halfspace& h);

// True when the hyperplane names are X*, Y*, Z* in rank 2.
bool is_klm_naming(const ValidGraph& vg, const HyperplaneSet& hs);

}  // namespace gkm
