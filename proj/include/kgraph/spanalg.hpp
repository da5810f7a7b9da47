#pragma once

#include "kgraph/align.hpp"
#include "kgraph/twist.hpp"

#include <functional>
#include <map>

namespace kg {

// Element of Q[Q/Z] (exact phases with rational weights) plus a float remainder.
// Anything touched by a float phase lives in the remainder.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(Q w);
  explicit Scalar(cd z);
  static Scalar phase(const Phase& p);

  bool exact() const { return fl_ == cd{0.0, 0.0}; }
  cd value() const;
  bool is_zero() const;
  const std::map<Q, Q>& terms() const { return ex_; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& o) const;
  Scalar times(const Phase& p) const;
  Scalar conj() const;

  std::string str() const;

 private:
  std::map<Q, Q> ex_;  // phase (turns) -> weight
  cd fl_{0.0, 0.0};
  void prune();
};

// Finite linear combination of t_mu t_nu^* with s(mu) = s(nu).
class SpanElement {
 public:
  using Key = std::pair<Path, Path>;

  SpanElement() = default;
  explicit SpanElement(const KGraph* g) : g_(g) {}

  static SpanElement term(const KGraph& g, const Path& mu, const Path& nu, Scalar s = Scalar(Q(1)));
  static SpanElement t(const KGraph& g, const Path& mu);      // t_mu
  static SpanElement tstar(const KGraph& g, const Path& mu);  // t_mu^*
  static SpanElement q(const KGraph& g, const Path& mu);      // t_mu t_mu^*
  static SpanElement unit(const KGraph& g, int v);            // t_v

  const KGraph* graph() const { return g_; }
  const std::map<Key, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool exact() const;
  size_t size() const { return terms_.size(); }

  void add(const Path& mu, const Path& nu, const Scalar& s);
  SpanElement operator+(const SpanElement& o) const;
  SpanElement operator-(const SpanElement& o) const;
  SpanElement scaled(const Scalar& s) const;
  SpanElement adjoint() const;

  std::string str() const;

 private:
  const KGraph* g_ = nullptr;
  std::map<Key, Scalar> terms_;
};

SpanElement multiply(const KGraph& g, const CategoricalCocycle& c, const SpanElement& x,
                     const SpanElement& y);

// Exact comparison when both sides are exact, otherwise max coefficient gap <= tol.
bool span_equal(const SpanElement& x, const SpanElement& y, double tol = 1e-12);
double span_max_diff(const SpanElement& x, const SpanElement& y);

// prod_{lambda in E} (t_v - q_lambda); t_v for empty E.
SpanElement delta(const KGraph& g, const CategoricalCocycle& c, const PathSet& E, int v);
SpanElement delta(const KGraph& g, const CategoricalCocycle& c, const PathSet& E);

bool delta_commutation_check(const KGraph& g, const CategoricalCocycle& c, const PathSet& E,
                             const Path& mu);

struct MatrixUnitBlock {
  PathSet E;
  std::map<std::pair<Path, Path>, SpanElement> units;  // Theta^E_{mu,nu}
  bool relations_ok = false;
  bool expansion_ok = false;
  std::string failure;

  const SpanElement& at(const Path& mu, const Path& nu) const { return units.at({mu, nu}); }
};

MatrixUnitBlock theta_block(const KGraph& g, const CategoricalCocycle& c, const PathSet& E);
// sum_{mu.alpha in E} c(mu,alpha) conj(c(nu,alpha)) Theta_{mu alpha, nu alpha}
SpanElement theta_expansion(const KGraph& g, const CategoricalCocycle& c,
                            const MatrixUnitBlock& blk, const Path& mu, const Path& nu);

enum class ExpectationMode { Gauge, Diagonal };
SpanElement expectation(const SpanElement& x, ExpectationMode mode);

using SimPredicate = std::function<bool(const Path&, const Path&)>;
SpanElement tilde_expectation(const SpanElement& x, const SimPredicate& sim);

}  // namespace kg
