#include "oracles.hpp"

#include <doctest.h>

using namespace kg;
using namespace fx;

TEST_CASE("pq splits m into positive and negative parts") {
  auto [p, q] = pq({2, -1});
  CHECK(p == Degree{2, 0});
  CHECK(q == Degree{0, 1});
  auto [p2, q2] = pq({1, 0}, Degree{1, 1});
  CHECK(p2 == Degree{1, 1});
  CHECK(q2 == Degree{0, 1});
}

TEST_CASE("sim_check agrees with the ray oracle") {
  for (const auto& g : {g1(), g2(), g3(), p2(), flip2()}) {
    Degree b = deg::filled(g.rank(), 2);
    auto ps = paths_up_to(g, std::nullopt, b);
    for (const auto& mu : ps)
      for (const auto& nu : ps) {
        if (mu.source != nu.source) continue;
        auto v = sim_check(g, mu, nu, 3);
        bool want = oracle::sim(g, mu, nu);
        CHECK(v.kind != SimVerdict::ProbableSim);
        CHECK((v.kind == SimVerdict::Sim) == want);
        if (v.kind == SimVerdict::NotSim) {
          REQUIRE(v.tau);
          CHECK(mce(g, compose(g, mu, *v.tau), compose(g, nu, *v.tau)).empty());
        }
      }
  }
  KGraph g = g3();
  CHECK_THROWS_AS(sim_check(g, P(g, "e0"), P(g, "v0"), 3), Error);
}

TEST_CASE("Per agrees with the oracle") {
  struct Case {
    KGraph g;
    int D;
  };
  for (auto& [g, D] : std::vector<Case>{{g1(), 2}, {g2(), 3}, {g3(), 4}, {p2(), 2}, {k3(), 1}}) {
    auto pd = per_group(g, D);
    CHECK(pd.per == oracle::per(g, D));
    CHECK_FALSE(pd.probable);
  }
  CHECK(per_group(g3(), 4).per.basis() == std::vector<ZVec>{{3}});
  CHECK(per_group(p2(), 2).per == ZkSubgroup(2, {{1, 1}, {0, 2}}));
  CHECK_THROWS_AS(per_group(KGraph([] {
                              KGraph h(1);
                              h.add_vertex("u");
                              h.add_vertex("w");
                              h.add_edge("x", 1, "u", "w");
                              h.finalize();
                              return h;
                            }()),
                            2),
                  Error);
}

TEST_CASE("theta tables are mutually inverse bijections") {
  KGraph g = g1();
  auto pd = per_group(g, 2);
  const auto& t = theta_table(g, pd, {1, 0}, {0, 1});
  const auto& s = theta_table(g, pd, {0, 1}, {1, 0});
  REQUIRE(t.size() == 1);
  for (const auto& [mu, nu] : t) {
    CHECK(s.at(nu) == mu);
    CHECK(sim_check(g, mu, nu, 3).kind == SimVerdict::Sim);
  }
  KGraph h = p2();
  auto ph = per_group(h, 2);
  const auto& th = theta_table(h, ph, {1, 1}, {0, 0});
  CHECK(th.size() == 2);
  for (const auto& [mu, nu] : th) CHECK(nu.is_vertex());
  CHECK_THROWS_AS(theta_table(h, ph, {1, 0}, {0, 0}), Error);
}

TEST_CASE("aperiodicity") {
  auto a = is_aperiodic(g2(), 2);
  CHECK(a.kind == AperiodicityResult::Aperiodic);
  KGraph g = g2();
  for (const auto& [mu, nu, tau] : a.witnesses)
    CHECK(mce(g, compose(g, mu, tau), compose(g, nu, tau)).empty());
  auto b = is_aperiodic(g1(), 2);
  CHECK(b.kind == AperiodicityResult::Periodic);
  REQUIRE(b.pair);
  CHECK(b.pair->first != b.pair->second);
}

TEST_CASE("cofinality agrees with the ray oracle") {
  for (const auto& g : {g1(), g2(), g3(), g4(), p2()}) CHECK(is_cofinal(g).cofinal == oracle::cofinal(g));
  KGraph g = g4();
  auto r = is_cofinal(g);
  REQUIRE_FALSE(r.cofinal);
  REQUIRE(r.witness);
  for (int s : filter_sources(g, *r.witness)) CHECK_FALSE(oracle::reaches(g, r.vertex).count(s));
  CHECK(backward_reach(g, g.vertex_index("u")) == VertexSet{g.vertex_index("u")});
}

TEST_CASE("generalized cycle with an entrance") {
  KGraph g = g2();
  auto gc = find_generalized_cycle_with_entrance(g, 1);
  REQUIRE(gc);
  CHECK(mce(g, gc->mu, compose(g, gc->nu, gc->tau)).empty());
  CHECK_FALSE(find_generalized_cycle_with_entrance(g3(), 3).has_value());
}
