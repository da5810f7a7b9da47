#include "fixtures.hpp"

#include <doctest.h>

#ifndef KGRAPH_DATA_DIR
#define KGRAPH_DATA_DIR "data"
#endif

using namespace kg;
using namespace fx;

namespace {
std::string data(const std::string& f) { return std::string(KGRAPH_DATA_DIR) + "/" + f; }
}  // namespace

TEST_CASE("data files load and match the in-code fixtures") {
  KGraph g = graph_from_json(read_json_file(data("g1.json")));
  CHECK(g.valid());
  CHECK(g.num_edges() == 2);
  CHECK_FALSE(graph_from_json(read_json_file(data("g1_broken.json"))).valid());
  for (auto f : {"g2.json", "g3.json", "g4.json", "k3.json", "p2.json"})
    CHECK(graph_from_json(read_json_file(data(f))).valid());
  auto c = cocycle_from_json(read_json_file(data("third.json")), g);
  CHECK(c.pullback.theta(1, 0) == Phase(Q(1, 3)));
  CHECK(c.pullback.theta(0, 1).is_zero());
  auto gold = cocycle_from_json(read_json_file(data("golden.json")), g);
  CHECK_FALSE(gold.exact());
  KGraph h = graph_from_json(read_json_file(data("g2.json")));
  auto ee = ee_from_json(read_json_file(data("ee_g2.json")), h);
  REQUIRE(ee.size() == 1);
  CHECK(ee[0] == S(h, {"e", "f"}));
}

TEST_CASE("parse errors name the field") {
  auto msg = [](const std::string& text) {
    try {
      graph_from_json(json::parse(text));
    } catch (const Error& e) {
      CHECK(e.code() == Errc::Parse);
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(msg(R"({"vertices":[],"edges":[]})").find("graph.rank") != std::string::npos);
  CHECK(msg(R"({"rank":1,"vertices":["v"],"edges":[{"id":"e","color":"x","range":"v","source":"v"}]})")
            .find("graph.edges[0].color") != std::string::npos);
  CHECK(msg(R"({"rank":1,"vertices":["v"],"edges":[{"id":"e","color":1,"range":"q","source":"v"}]})")
            .find("graph.edges[0]: unknown vertex") != std::string::npos);
  CHECK_THROWS_AS(read_json_file(data("missing.json")), Error);

  KGraph g = g1();
  CHECK_THROWS_AS(cocycle_from_json(json::parse(R"({"theta":[["0"]]})"), g), Error);
  CHECK_THROWS_AS(cocycle_from_json(json::parse(R"({"type":"other","theta":[[0,0],[0,0]]})"), g),
                  Error);
  CHECK_THROWS_AS(cocycle_from_json(json::parse(R"({"theta":[[0,0],["1/x",0]]})"), g), Error);
}

TEST_CASE("edge weights and paths") {
  KGraph g = g1();
  auto c = cocycle_from_json(json::parse(R"({"theta":[[0,0],["1/3",0]],"edge_weights":{"a":"1/4"}})"), g);
  CHECK(c.weights.at(g.edge_index("a")) == Phase(Q(1, 4)));
  CHECK(parse_path(g, "v").is_vertex());
  CHECK(g.str(parse_path(g, "b.a")) == "a.b");
  CHECK(pathset_json(g, S(g, {"a", "b"})) == json::array({"b", "a"}));
  KGraph h = g2();
  auto j = filter_json(h, BoundedFilter::periodic(h.vertex(0), P(h, "f")));
  CHECK(j["kind"] == "periodic");
  CHECK(j["cycle"] == "f");
}
