#include "oracles.hpp"

#include <doctest.h>

using namespace kg;
using namespace fx;

namespace {
// Two loops u, w and an edge from w into u.
KGraph bridge() {
  KGraph g(1);
  g.add_vertex("u");
  g.add_vertex("w");
  g.add_edge("lu", 1, "u", "u");
  g.add_edge("lw", 1, "w", "w");
  g.add_edge("x", 1, "u", "w");
  g.finalize();
  return g;
}
}  // namespace

TEST_CASE("hereditary closure follows edges backwards") {
  KGraph g = bridge();
  int u = g.vertex_index("u"), w = g.vertex_index("w");
  CHECK(hereditary_closure(g, {u}) == VertexSet{u, w});
  CHECK(hereditary_closure(g, {w}) == VertexSet{w});
  CHECK(is_hereditary(g, {w}));
  CHECK_FALSE(is_hereditary(g, {u}));
}

TEST_CASE("saturated hereditary sets match subset enumeration") {
  for (const auto& g : {g2(), g3(), g4(), bridge(), p2(), g1()}) {
    auto fam = ck_generators(g);
    auto got = saturated_hereditary_sets(g, fam);
    auto want = oracle::ck_saturated_hereditary(g);
    CHECK(std::set<VertexSet>(got.begin(), got.end()) == std::set<VertexSet>(want.begin(), want.end()));
    for (const auto& H : got) CHECK(is_saturated(g, H, fam));
  }
}

TEST_CASE("saturation pulls in a vertex whose edges all land in H") {
  KGraph g = bridge();
  auto fam = ck_generators(g);
  int u = g.vertex_index("u"), w = g.vertex_index("w");
  CHECK(saturate(g, {w}, fam) == VertexSet{w});
  // Removing the loop at u makes {w} force u.
  KGraph h(1);
  h.add_vertex("u");
  h.add_vertex("w");
  h.add_edge("lw", 1, "w", "w");
  h.add_edge("x", 1, "u", "w");
  h.finalize();
  CHECK(saturate(h, {h.vertex_index("w")}, ck_generators(h)) ==
        VertexSet{h.vertex_index("u"), h.vertex_index("w")});
  (void)u;
}

TEST_CASE("quotient graph and relative family") {
  KGraph g = bridge();
  VertexSet H{g.vertex_index("w")};
  KGraph q = quotient_graph(g, H);
  CHECK(q.num_vertices() == 1);
  CHECK(q.num_edges() == 1);
  CHECK(q.vertex_name(0) == "u");
  auto fam = ee_h(g, q, ck_generators(g), H);
  REQUIRE(fam.size() == 1);
  CHECK(q.str(*fam[0].begin()) == "lu");
  CHECK_THROWS_AS(quotient_graph(g, {g.vertex_index("u")}), Error);
  CHECK(q.str(to_quotient(g, q, P(g, "lu.lu"))) == "lu.lu");
}

TEST_CASE("ideal lattices in the Cuntz-Krieger case") {
  KGraph g = g4();
  auto L = list_gauge_invariant_ideals(g, ck_generators(g), {2});
  CHECK(L.exactness == "exact");
  REQUIRE(L.pairs.size() == 4);
  CHECK(L.hasse.size() == 4);
  std::set<VertexSet> Hs;
  for (const auto& p : L.pairs) Hs.insert(p.H);
  CHECK(Hs.size() == 4);
  // Diamond: bottom below two atoms below top.
  std::map<int, int> up, down;
  for (auto [lo, hi] : L.hasse) {
    ++up[lo];
    ++down[hi];
    CHECK(pair_leq(g, L.pairs[lo], L.pairs[hi]));
  }
  int bottoms = 0, tops = 0;
  for (int i = 0; i < 4; ++i) {
    if (down[i] == 0) ++bottoms;
    if (up[i] == 0) ++tops;
  }
  CHECK(bottoms == 1);
  CHECK(tops == 1);

  CHECK(list_gauge_invariant_ideals(g2(), ck_generators(g2()), {2}).pairs.size() == 2);
  CHECK(list_gauge_invariant_ideals(g3(), ck_generators(g3()), {2}).pairs.size() == 2);
  CHECK(list_gauge_invariant_ideals(bridge(), ck_generators(bridge()), {2}).pairs.size() == 3);
}

TEST_CASE("relative families give more ideals than the CK family") {
  KGraph g = g2();
  auto L = list_gauge_invariant_ideals(g, {}, {1});
  CHECK(L.exactness != "exact");
  CHECK(L.pairs.size() > 2);
  CHECK(is_ck_family(g, ck_generators(g)));
  CHECK_FALSE(is_ck_family(g, {}));
}
