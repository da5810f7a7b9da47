#include "oracles.hpp"

#include <doctest.h>

using namespace kg;
using namespace fx;

TEST_CASE("scalar group ring arithmetic") {
  Scalar zero(Q(0));
  CHECK(zero.is_zero());
  Scalar w = Scalar::phase(Phase(Q(1, 3)));
  Scalar w3 = w * w * w;
  CHECK(w3.exact());
  CHECK(std::abs(w3.value() - cd(1.0, 0.0)) < 1e-15);
  CHECK((w - w).is_zero());
  CHECK((w * w.conj()).terms().size() == 1);
  Scalar f = Scalar::phase(Phase::real(0.25));
  CHECK_FALSE(f.exact());
  CHECK(std::abs(f.value() - cd(0.0, 1.0)) < 1e-15);
}

TEST_CASE("product of generators") {
  KGraph g = g1();
  CategoricalCocycle c(rot(Phase(Q(1, 3))));
  auto ta = SpanElement::t(g, P(g, "a")), tb = SpanElement::t(g, P(g, "b"));
  // t_a* t_a = t_v
  CHECK(span_equal(multiply(g, c, SpanElement::tstar(g, P(g, "a")), ta), SpanElement::unit(g, 0)));
  // t_b t_a = c(b,a) t_ab, t_a t_b = c(a,b) t_ab
  auto ab = SpanElement::t(g, P(g, "a.b"));
  auto lhs = multiply(g, c, tb, ta);
  auto rhs = ab.scaled(Scalar::phase(eval_categorical(g, c, P(g, "b"), P(g, "a"))));
  CHECK(span_equal(lhs, rhs));
  auto rhs2 = ab.scaled(Scalar::phase(eval_categorical(g, c, P(g, "a"), P(g, "b"))));
  CHECK(span_equal(multiply(g, c, ta, tb), rhs2));
}

TEST_CASE("multiplication is associative and adjoint reverses order") {
  std::mt19937_64 rng(11);
  for (const auto& g : {g1(), flip2(), p2()})
    for (const auto& c : standard_cocycles(2))
      for (int i = 0; i < 15; ++i) {
        auto x = random_span(g, rng, {1, 1}), y = random_span(g, rng, {1, 1}),
             z = random_span(g, rng, {1, 1});
        auto l = multiply(g, c, multiply(g, c, x, y), z);
        auto r = multiply(g, c, x, multiply(g, c, y, z));
        CHECK(span_max_diff(l, r) < 1e-12);
        CHECK(span_max_diff(multiply(g, c, x, y).adjoint(),
                            multiply(g, c, y.adjoint(), x.adjoint())) < 1e-12);
        if (c.exact()) CHECK(span_equal(l, r));
      }
}

TEST_CASE("span product matches the truncated representation") {
  std::mt19937_64 rng(5);
  KGraph g = g1();
  for (const auto& c : standard_cocycles(2)) {
    TruncatedRep rep(g, c, {4, 4});
    SpMat P = rep.compatible({2, 2});
    for (int i = 0; i < 20; ++i) {
      auto x = random_span(g, rng, {1, 1}), y = random_span(g, rng, {1, 1});
      SpMat lhs = represent(multiply(g, c, x, y), rep);
      SpMat rhs = represent(x, rep) * represent(y, rep);
      CHECK(compressed_deviation(lhs, rhs, P) < 1e-10);
    }
  }
}

TEST_CASE("delta and its commutation") {
  KGraph g = g1();
  CategoricalCocycle c(rot(Phase(Q(1, 3))));
  PathSet E = S(g, {"a", "b"});
  SpanElement d = delta(g, c, E);
  CHECK(span_equal(multiply(g, c, d, d), d));
  CHECK(span_equal(d.adjoint(), d));
  CHECK(delta_commutation_check(g, c, E, P(g, "a")));
  CHECK(span_equal(delta(g, c, {}, 0), SpanElement::unit(g, 0)));
  // t_v - q_a - q_b + q_ab
  SpanElement want = SpanElement::unit(g, 0) - SpanElement::q(g, P(g, "a")) -
                     SpanElement::q(g, P(g, "b")) + SpanElement::q(g, P(g, "a.b"));
  CHECK(span_equal(d, want));
}

TEST_CASE("matrix units on {a, b, ab}") {
  KGraph g = g1();
  for (const auto& c : standard_cocycles(2)) {
    auto blk = theta_block(g, c, S(g, {"a", "b", "a.b"}));
    CHECK(blk.relations_ok);
    CHECK(blk.expansion_ok);
    Path a = P(g, "a"), ab = P(g, "a.b");
    CHECK(span_max_diff(blk.at(a, a) + blk.at(ab, ab), SpanElement::q(g, a)) < 1e-12);
  }
}

TEST_CASE("expectations") {
  KGraph g = g1();
  SpanElement x = SpanElement::term(g, P(g, "a"), P(g, "b")) + SpanElement::q(g, P(g, "a")) +
                  SpanElement::term(g, P(g, "a.b"), P(g, "a.b"));
  SpanElement e = expectation(x, ExpectationMode::Gauge);
  CHECK(e.size() == 2);
  SpanElement id = tilde_expectation(x, [](const Path& m, const Path& n) { return m == n; });
  CHECK(span_equal(id, e));
  SpanElement all = tilde_expectation(x, [](const Path&, const Path&) { return true; });
  CHECK(span_equal(all, x));
}

TEST_CASE("mismatched sources are rejected") {
  KGraph g = g3();
  SpanElement x(&g);
  CHECK_THROWS_AS(x.add(P(g, "e0"), P(g, "e1"), Scalar(Q(1))), Error);
}
