#include "oracles.hpp"

#include <doctest.h>

using namespace kg;
using namespace fx;

TEST_CASE("phase arithmetic stays exact and reduces mod 1") {
  Phase a(Q(2, 3)), b(Q(1, 2));
  CHECK((a + b) == Phase(Q(1, 6)));
  CHECK((a - a).is_zero());
  CHECK(a.scaled(3).is_zero());
  CHECK_FALSE((a + Phase::real(0.1)).exact());
  CHECK(Phase::parse("-1/3") == Phase(Q(2, 3)));
  CHECK_THROWS_AS(Phase::parse("x/3"), Error);
}

TEST_CASE("bicharacter is a 2-cocycle and cc* is skew") {
  for (const auto& t : {Phase(Q(1, 3)), Phase::real(0.6180339887498949)}) {
    TwoCocycleZk c = rot(t);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int i = 0; i < 100; ++i) {
      ZVec x{d(rng), d(rng)}, y{d(rng), d(rng)}, z{d(rng), d(rng)};
      ZVec xy{x[0] + y[0], x[1] + y[1]}, yz{y[0] + z[0], y[1] + z[1]};
      Phase lhs = c.eval(x, y) + c.eval(xy, z), rhs = c.eval(y, z) + c.eval(x, yz);
      CHECK(dist_to_int((lhs - rhs).turns()) < 1e-12);
    }
    TwoCocycleZk s = cc_star(c);
    CHECK(s.is_skew());
  }
}

TEST_CASE("categorical cocycle identity holds on the test graphs") {
  for (const auto& g : {g1(), flip2(), p2(), k3()})
    for (const auto& c : standard_cocycles(g.rank() == 3 ? 3 : 2)) {
      if (c.pullback.rank() != g.rank()) continue;
      CHECK(validate_cocycle_identity(g, c, deg::filled(g.rank(), 2)).ok);
    }
  KGraph g = g1();
  CategoricalCocycle c(rot(Phase(Q(1, 3))));
  c.weights[g.edge_index("a")] = Phase(Q(1, 5));
  CHECK(validate_cocycle_identity(g, c, {2, 2}).ok);
}

TEST_CASE("a non-cocycle is rejected with a witness") {
  KGraph g = g1();
  CocycleFn bad = [&](const Path& m, const Path& n) {
    return Phase(Q(m.word.size() * n.word.size() * n.word.size(), 7));
  };
  auto r = validate_cocycle_identity(g, bad, {2, 2});
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.witness.empty());
}

TEST_CASE("hermite form and subgroup membership") {
  ZkSubgroup H(2, {{2, 4}, {0, 6}, {4, 2}});
  CHECK(H.rank() == 2);
  CHECK(H.contains({2, 4}));
  CHECK(H.contains({6, 6}));
  CHECK_FALSE(H.contains({1, 0}));
  CHECK(ZkSubgroup(2, {{1, 1}, {0, 2}}) == ZkSubgroup(2, {{1, -1}, {2, 0}}));
  CHECK(ZkSubgroup(1, {{3}, {6}}).basis() == std::vector<ZVec>{{3}});
}

TEST_CASE("nondegeneracy on Z^2 against a box search") {
  for (int q = 2; q <= 7; ++q)
    for (int p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      TwoCocycleZk s = cc_star(rot(Phase(Q(p, q))));
      auto nd = is_nondegenerate_on(s, ZkSubgroup::full(2));
      REQUIRE(nd.kind == Nondegeneracy::Degenerate);
      CHECK(nd.exact);
      CHECK(nd.witness == ZVec{q, 0});
      auto w = oracle::degenerate_witness(s, q);
      CHECK(w.has_value());
    }
  auto nd = is_nondegenerate_on(cc_star(rot(Phase::real(0.6180339887498949))),
                                ZkSubgroup::full(2));
  CHECK(nd.kind == Nondegeneracy::Nondegenerate);
  CHECK(nd.smallest_sv > 1e-6);
  CHECK_FALSE(oracle::degenerate_witness(cc_star(rot(Phase::real(0.6180339887498949))), 6));
}

TEST_CASE("nondegeneracy on a proper subgroup") {
  // On the index-2 sublattice the pairing is a multiple of 2*theta.
  TwoCocycleZk s = cc_star(rot(Phase(Q(1, 2))));
  ZkSubgroup P(2, {{1, 1}, {0, 2}});
  auto nd = is_nondegenerate_on(s, P);
  CHECK(nd.kind == Nondegeneracy::Degenerate);
  CHECK(P.contains(nd.witness));
  for (const auto& b : P.basis()) CHECK(s.eval(nd.witness, b).is_zero(1e-12));
}

TEST_CASE("rationalize") {
  CHECK(rationalize(1.0 / 3.0, 10000, 1e-12) == Q(1, 3));
  CHECK_FALSE(rationalize(0.6180339887498949, 10000, 1e-12).has_value());
}
