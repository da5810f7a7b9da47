#include "oracles.hpp"

#include <doctest.h>

using namespace kg;
using namespace fx;

TEST_CASE("filter membership") {
  KGraph g = g2();
  auto S = BoundedFilter::periodic(P(g, "e"), P(g, "f"));
  CHECK(S.is_ultrafilter());
  CHECK(filter_member(g, S, {3}) == P(g, "e.f.f"));
  CHECK(filter_contains(g, S, P(g, "e.f")));
  CHECK_FALSE(filter_contains(g, S, P(g, "f")));
  auto T = BoundedFilter::principal(P(g, "e.f"));
  CHECK_FALSE(T.is_ultrafilter());
  CHECK_FALSE(filter_member(g, T, {3}).has_value());
  CHECK(filter_members(g, T, {4}).size() == 3);
  CHECK(same_members(g, shift_filter(g, P(g, "e"), BoundedFilter::periodic(g.vertex(0), P(g, "f"))),
                     S, {5}));
}

TEST_CASE("filter sources follow the cycle") {
  KGraph g = g3();
  auto S = BoundedFilter::periodic(g.vertex(g.vertex_index("v0")), P(g, "e0.e1.e2"));
  CHECK(filter_sources(g, S).size() == 3);
  KGraph h = g4();
  auto U = BoundedFilter::periodic(P(h, "lw"), P(h, "lw"));
  CHECK(filter_sources(h, U) == std::set<int>{h.vertex_index("w")});
}

TEST_CASE("satiation of the Cuntz generator at D = 2") {
  KGraph g = g2();
  Satiation sat = satiate(g, {S(g, {"e", "f"})}, {2});
  CHECK(sat.contains(S(g, {"e", "f"})));
  CHECK(sat.contains(S(g, {"e.e", "e.f", "f"})));
  CHECK(sat.contains(S(g, {"e", "f.e", "f.f"})));
  CHECK(sat.contains(S(g, {"e.e", "e.f", "f.e", "f.f"})));
  CHECK(sat.contains(S(g, {"f", "e.e", "e.f"})));
  // Nothing outside D, nothing non-exhaustive.
  for (const auto& F : sat.sets) {
    CHECK(is_exhaustive(g, F, 0));
    for (const auto& p : F) CHECK(deg::leq(p.degree, {2}));
  }
  // A second pass adds nothing.
  std::vector<PathSet> again(sat.sets.begin(), sat.sets.end());
  CHECK(satiate(g, again, {2}).sets == sat.sets);
  CHECK(is_in_satiation(g, S(g, {"e"}), sat) == Membership::No);
  CHECK(is_in_satiation(g, S(g, {"e.e.e"}), sat) == Membership::OutOfUniverse);
  CHECK_THROWS_AS(is_in_satiation(g, S(g, {"v"}), sat), Error);
}

TEST_CASE("satiation closure on a 2-graph is a fixed point") {
  KGraph g = g1();
  Satiation sat = satiate(g, {S(g, {"a"}), S(g, {"b"})}, {1, 1});
  CHECK(sat.contains(S(g, {"a.b"})));
  std::vector<PathSet> again(sat.sets.begin(), sat.sets.end());
  CHECK(satiate(g, again, {1, 1}).sets == sat.sets);
}

TEST_CASE("bad generators are rejected") {
  KGraph g = g2();
  CHECK_THROWS_AS(satiate(g, {S(g, {"e"})}, {2}), Error);
  CHECK_THROWS_AS(satiate(g, {S(g, {"v"})}, {2}), Error);
  CHECK_THROWS_AS(satiate(g, {S(g, {"e.e", "e.f", "f"})}, {1}), Error);
}

TEST_CASE("compatibility") {
  KGraph g = g2();
  Satiation sat = satiate(g, {S(g, {"e", "f"})}, {2});
  CHECK(is_compatible(g, BoundedFilter::periodic(g.vertex(0), P(g, "f")), sat));
  CHECK_FALSE(is_compatible(g, BoundedFilter::principal(P(g, "e")), sat));
  CHECK(is_compatible(g, BoundedFilter::principal(P(g, "e")), satiate(g, {}, {2})));
}

TEST_CASE("delta_vanishes") {
  KGraph g = g2();
  auto d = delta_vanishes(g, S(g, {"e"}), 0, {}, {2});
  REQUIRE(d.kind == DeltaVerdict::Nonzero);
  REQUIRE(d.certificate);
  CHECK_FALSE(filter_contains(g, *d.certificate, P(g, "e")));
  CHECK(delta_vanishes(g, S(g, {"e", "f"}), 0, {S(g, {"e", "f"})}, {2}).kind == DeltaVerdict::Zero);
  CHECK(delta_vanishes(g, S(g, {"v"}), 0, {}, {2}).kind == DeltaVerdict::Zero);
  CHECK_THROWS_AS(delta_vanishes(g3(), S(g3(), {"e1"}), 0, {}, {2}), Error);

  CategoricalCocycle c(rank1(Phase(Q(0))));
  TruncatedRep rep = restrict_to_filter_target(TruncatedRep(g, c, {4}), *d.certificate);
  auto n = compressed_norm(delta(g, c, S(g, {"e"})), rep, {1});
  CHECK(std::abs(n.value - 1.0) <= 1e-12);
}

TEST_CASE("Cuntz-Krieger generators") {
  KGraph g = g1();
  CHECK(ck_generators(g) == std::vector<PathSet>{S(g, {"a"}), S(g, {"b"})});
  CHECK(ck_generators(g3()).size() == 3);
}
