#pragma once

#include "kgraph/io.hpp"
#include "kgraph/simplicity.hpp"

namespace fx {

using namespace kg;

// One vertex, a (color 1), b (color 2), ab = ba.
inline KGraph g1(bool with_square = true) {
  KGraph g(2);
  g.add_vertex("v");
  g.add_edge("a", 1, "v", "v");
  g.add_edge("b", 2, "v", "v");
  if (with_square) g.add_square("a", "b", "b", "a");
  g.finalize();
  return g;
}

// One vertex with two loops: the Cuntz algebra O_2.
inline KGraph g2() {
  KGraph g(1);
  g.add_vertex("v");
  g.add_edge("e", 1, "v", "v");
  g.add_edge("f", 1, "v", "v");
  g.finalize();
  return g;
}

// Directed 3-cycle v0 <- v1 <- v2 <- v0.
inline KGraph g3() {
  KGraph g(1);
  for (auto v : {"v0", "v1", "v2"}) g.add_vertex(v);
  g.add_edge("e0", 1, "v0", "v1");
  g.add_edge("e1", 1, "v1", "v2");
  g.add_edge("e2", 1, "v2", "v0");
  g.finalize();
  return g;
}

// Two disjoint loops.
inline KGraph g4() {
  KGraph g(1);
  g.add_vertex("u");
  g.add_vertex("w");
  g.add_edge("lu", 1, "u", "u");
  g.add_edge("lw", 1, "w", "w");
  g.finalize();
  return g;
}

inline KGraph k3() {
  KGraph g(3);
  g.add_vertex("v");
  g.add_edge("a", 1, "v", "v");
  g.add_edge("b", 2, "v", "v");
  g.add_edge("c", 3, "v", "v");
  g.add_square("a", "b", "b", "a");
  g.add_square("a", "c", "c", "a");
  g.add_square("b", "c", "c", "b");
  g.finalize();
  return g;
}

// Two vertices swapped by every edge; Per = {m : m1 + m2 even}.
inline KGraph p2() {
  KGraph g(2);
  g.add_vertex("u");
  g.add_vertex("w");
  g.add_edge("x", 1, "u", "w");
  g.add_edge("x2", 1, "w", "u");
  g.add_edge("y", 2, "u", "w");
  g.add_edge("y2", 2, "w", "u");
  g.add_square("x", "y2", "y", "x2");
  g.add_square("x2", "y", "y2", "x");
  g.finalize();
  return g;
}

// A 2-graph with two edges of each color per vertex pair, used for rewrite tests.
inline KGraph flip2() {
  KGraph g(2);
  g.add_vertex("v");
  g.add_edge("a1", 1, "v", "v");
  g.add_edge("a2", 1, "v", "v");
  g.add_edge("b1", 2, "v", "v");
  g.add_edge("b2", 2, "v", "v");
  // a_i b_j = b_{j'} a_{i'} via a fixed bijection.
  g.add_square("a1", "b1", "b2", "a2");
  g.add_square("a1", "b2", "b1", "a1");
  g.add_square("a2", "b1", "b1", "a2");
  g.add_square("a2", "b2", "b2", "a1");
  g.finalize();
  return g;
}

inline TwoCocycleZk rot(const Phase& t) { return TwoCocycleZk::rotation(t); }
inline TwoCocycleZk rank1(const Phase& t) { return TwoCocycleZk(1, {{t}}); }

// The three cocycles used across the numeric suites, adapted to the graph's rank.
inline std::vector<CategoricalCocycle> standard_cocycles(int k) {
  std::vector<Phase> ts{Phase(Q(0)), Phase(Q(1, 3)), Phase::real(0.6180339887498949)};
  std::vector<CategoricalCocycle> out;
  for (const auto& t : ts) out.emplace_back(k == 1 ? rank1(t) : rot(t));
  return out;
}

// A few terms t_mu t_nu^* with d(mu), d(nu) <= bound and small exact coefficients.
inline SpanElement random_span(const KGraph& g, std::mt19937_64& rng, const Degree& bound,
                               int max_terms = 3) {
  auto ps = paths_up_to(g, std::nullopt, bound);
  std::uniform_int_distribution<size_t> pick(0, ps.size() - 1);
  std::uniform_int_distribution<int> coef(-3, 3), nterms(1, max_terms);
  SpanElement x(&g);
  int n = nterms(rng);
  for (int i = 0, tries = 0; i < n && tries < 1000; ++tries) {
    const Path& mu = ps[pick(rng)];
    const Path& nu = ps[pick(rng)];
    if (mu.source != nu.source) continue;
    int w = coef(rng);
    if (w == 0) continue;
    x.add(mu, nu, Scalar(Q(w)));
    ++i;
  }
  return x;
}

inline Path P(const KGraph& g, const std::string& s) { return parse_path(g, s); }

inline PathSet S(const KGraph& g, std::initializer_list<const char*> xs) {
  PathSet out;
  for (auto x : xs) out.insert(parse_path(g, x));
  return out;
}

}  // namespace fx
