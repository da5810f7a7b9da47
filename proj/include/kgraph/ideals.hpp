#pragma once

#include "kgraph/boundary.hpp"

#include <memory>

namespace kg {

using VertexSet = std::set<int>;

VertexSet hereditary_closure(const KGraph& g, const VertexSet& X);
bool is_hereditary(const KGraph& g, const VertexSet& H);
// Saturation against a family of exhaustive sets (normally a bounded satiation).
VertexSet saturate(const KGraph& g, const VertexSet& H, const std::vector<PathSet>& family);
bool is_saturated(const KGraph& g, const VertexSet& H, const std::vector<PathSet>& family);

// The subgraph Lambda \ Lambda H, with vertex and edge ids kept.
KGraph quotient_graph(const KGraph& g, const VertexSet& H);
// Carries a path of g avoiding H into the quotient (by edge ids).
Path to_quotient(const KGraph& g, const KGraph& q, const Path& p);
PathSet to_quotient(const KGraph& g, const KGraph& q, const PathSet& E);

// { E \ EH : E in family, r(E) not in H }, expressed in the quotient graph.
std::vector<PathSet> ee_h(const KGraph& g, const KGraph& q, const std::vector<PathSet>& family,
                          const VertexSet& H);

struct IdealPair {
  VertexSet H;
  std::shared_ptr<KGraph> quotient;
  Family B;                           // closed family over the quotient
  std::vector<PathSet> B_generators;  // in the quotient
  std::string exactness;              // exact | bounded | generated
};

struct IdealLattice {
  std::vector<IdealPair> pairs;
  std::vector<std::pair<int, int>> hasse;  // (lower, upper) covering pairs
  std::string exactness;
  Degree D;
  bool truncated = false;
};

bool is_ck_family(const KGraph& g, const std::vector<PathSet>& Ee);

IdealLattice list_gauge_invariant_ideals(const KGraph& g, const std::vector<PathSet>& Ee,
                                         const Degree& D);
bool pair_leq(const KGraph& g, const IdealPair& p1, const IdealPair& p2);

std::vector<VertexSet> saturated_hereditary_sets(const KGraph& g,
                                                 const std::vector<PathSet>& family,
                                                 bool* generated = nullptr);

}  // namespace kg
