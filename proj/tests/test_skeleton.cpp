#include "fixtures.hpp"

#include <doctest.h>

using namespace kg;
using namespace fx;

TEST_CASE("test graphs validate") {
  for (const auto& g : {g1(), g2(), g3(), g4(), k3(), p2(), flip2()}) {
    CHECK(g.valid());
    CHECK(g.no_sources());
  }
}

TEST_CASE("missing square is reported with the uncovered pair") {
  KGraph g = g1(false);
  CHECK_FALSE(g.valid());
  REQUIRE_FALSE(g.report().square_witnesses.empty());
  CHECK(g.report().square_witnesses.front().find("composable pair (a,b) uncovered") !=
        std::string::npos);
  CHECK_THROWS_AS(g.require_valid(), Error);
}

TEST_CASE("duplicate square image is rejected") {
  KGraph g(2);
  g.add_vertex("v");
  g.add_edge("a1", 1, "v", "v");
  g.add_edge("a2", 1, "v", "v");
  g.add_edge("b", 2, "v", "v");
  g.add_square("a1", "b", "b", "a1");
  g.add_square("a2", "b", "b", "a1");
  g.finalize();
  CHECK_FALSE(g.valid());
}

TEST_CASE("compose rewrites into color order") {
  KGraph g = g1();
  Path ba = compose(g, P(g, "b"), P(g, "a"));
  CHECK(ba.degree == Degree{1, 1});
  CHECK(g.str(ba) == "a.b");
  auto [x, y] = factorize(g, ba, {0, 1});
  CHECK(g.str(x) == "b");
  CHECK(g.str(y) == "a");
}

TEST_CASE("non-composable pairs throw") {
  KGraph g = g3();
  CHECK_THROWS_AS(compose(g, P(g, "e0"), P(g, "e0")), Error);
}

TEST_CASE("enumerate_paths counts") {
  CHECK(enumerate_paths(g1(), 0, {1, 1}).size() == 1);
  CHECK(enumerate_paths(g2(), 0, {3}).size() == 8);
  KGraph g = g3();
  auto cyc = enumerate_paths(g, g.vertex_index("v0"), {3});
  REQUIRE(cyc.size() == 1);
  CHECK(cyc[0].source == g.vertex_index("v0"));
  CHECK(g.vertex_name(vertex_at(g, P(g, "e0.e1"), {1})) == "v1");
}

TEST_CASE("factorize after compose is the identity on split pairs") {
  for (const auto& g : {g1(), flip2(), k3(), p2()}) {
    Degree box = deg::filled(g.rank(), 2);
    for (const auto& p : paths_up_to(g, std::nullopt, box))
      for (const auto& m : deg::box(p.degree)) {
        auto [a, b] = factorize(g, p, m);
        CHECK(a.degree == m);
        CHECK(compose(g, a, b) == p);
        CHECK(factorize(g, compose(g, a, b), m) == std::make_pair(a, b));
      }
  }
}

TEST_CASE("random rewrite order reaches the same normal form") {
  std::mt19937_64 rng(7);
  for (const auto& g : {flip2(), k3(), p2()}) {
    for (int trial = 0; trial < 200; ++trial) {
      // A random composable word with random color order.
      std::vector<int> word;
      int at = std::uniform_int_distribution<int>(0, g.num_vertices() - 1)(rng);
      int len = std::uniform_int_distribution<int>(1, 6)(rng);
      for (int i = 0; i < len; ++i) {
        int c = std::uniform_int_distribution<int>(0, g.rank() - 1)(rng);
        const auto& in = g.in_edges(at, c);
        if (in.empty()) continue;
        int e = in[std::uniform_int_distribution<size_t>(0, in.size() - 1)(rng)];
        word.push_back(e);
        at = g.edge(e).source;
      }
      if (word.empty()) continue;
      CHECK(normalize_word_random(g, word, rng) == normalize_word(g, word));
    }
  }
}

TEST_CASE("paths_up_to is sorted and complete") {
  KGraph g = g2();
  auto ps = paths_up_to(g, std::nullopt, {2});
  CHECK(ps.size() == 7);
  CHECK(std::is_sorted(ps.begin(), ps.end()));
}
