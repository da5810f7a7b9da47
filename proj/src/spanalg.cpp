#include "kgraph/spanalg.hpp"

#include <cmath>
#include <sstream>

namespace kg {

namespace {
constexpr double kFloatFloor = 1e-13;

cd exact_value(const std::map<Q, Q>& ex) {
  cd z{0.0, 0.0};
  for (const auto& [ph, w] : ex) z += double(w.numerator()) / double(w.denominator()) * Phase(ph).value();
  return z;
}
}  // namespace

Scalar::Scalar(Q w) {
  if (w.numerator() != 0) ex_[Q(0)] = w;
}

Scalar::Scalar(cd z) : fl_(z) { prune(); }

Scalar Scalar::phase(const Phase& p) {
  if (p.exact()) {
    Scalar s;
    s.ex_[p.rational()] = Q(1);
    return s;
  }
  return Scalar(p.value());
}

cd Scalar::value() const { return exact_value(ex_) + fl_; }

bool Scalar::is_zero() const { return ex_.empty() && fl_ == cd{0.0, 0.0}; }

void Scalar::prune() {
  for (auto it = ex_.begin(); it != ex_.end();) it = it->second.numerator() == 0 ? ex_.erase(it) : std::next(it);
  if (std::abs(fl_) < kFloatFloor) fl_ = {0.0, 0.0};
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& [ph, w] : o.ex_) ex_[ph] += w;
  fl_ += o.fl_;
  prune();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& [ph, w] : o.ex_) ex_[ph] -= w;
  fl_ -= o.fl_;
  prune();
  return *this;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar s = *this;
  s += o;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar s = *this;
  s -= o;
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s;
  s -= *this;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar s;
  for (const auto& [p1, w1] : ex_)
    for (const auto& [p2, w2] : o.ex_) s.ex_[frac(p1 + p2)] += w1 * w2;
  s.fl_ = fl_ * o.value() + exact_value(ex_) * o.fl_;
  s.prune();
  return s;
}

Scalar Scalar::times(const Phase& p) const {
  Scalar s;
  if (p.exact()) {
    for (const auto& [ph, w] : ex_) s.ex_[frac(ph + p.rational())] += w;
    s.fl_ = fl_ * p.value();
  } else {
    s.fl_ = value() * p.value();
  }
  s.prune();
  return s;
}

Scalar Scalar::conj() const {
  Scalar s;
  for (const auto& [ph, w] : ex_) s.ex_[frac(-ph)] += w;
  s.fl_ = std::conj(fl_);
  s.prune();
  return s;
}

std::string Scalar::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [ph, w] : ex_) {
    if (!first) os << " + ";
    first = false;
    os << w << "*e(" << ph << ")";
  }
  if (fl_ != cd{0.0, 0.0}) os << (first ? "" : " + ") << fl_;
  if (first && fl_ == cd{0.0, 0.0}) os << "0";
  return os.str();
}

SpanElement SpanElement::term(const KGraph& g, const Path& mu, const Path& nu, Scalar s) {
  SpanElement x(&g);
  x.add(mu, nu, s);
  return x;
}

SpanElement SpanElement::t(const KGraph& g, const Path& mu) {
  return term(g, mu, g.vertex(mu.source));
}

SpanElement SpanElement::tstar(const KGraph& g, const Path& mu) {
  return term(g, g.vertex(mu.source), mu);
}

SpanElement SpanElement::q(const KGraph& g, const Path& mu) { return term(g, mu, mu); }

SpanElement SpanElement::unit(const KGraph& g, int v) {
  return term(g, g.vertex(v), g.vertex(v));
}

bool SpanElement::exact() const {
  for (const auto& [k, s] : terms_)
    if (!s.exact()) return false;
  return true;
}

void SpanElement::add(const Path& mu, const Path& nu, const Scalar& s) {
  if (mu.source != nu.source) throw Error(Errc::NotComposable, "t_mu t_nu^* needs s(mu)=s(nu)");
  auto& slot = terms_[{mu, nu}];
  slot += s;
  if (slot.is_zero()) terms_.erase({mu, nu});
}

SpanElement SpanElement::operator+(const SpanElement& o) const {
  if (g_ && o.g_ && g_ != o.g_) throw Error(Errc::GraphMismatch, "different graphs");
  SpanElement r = *this;
  if (!r.g_) r.g_ = o.g_;
  for (const auto& [k, s] : o.terms_) r.add(k.first, k.second, s);
  return r;
}

SpanElement SpanElement::operator-(const SpanElement& o) const {
  return *this + o.scaled(Scalar(Q(-1)));
}

SpanElement SpanElement::scaled(const Scalar& s) const {
  SpanElement r(g_);
  for (const auto& [k, v] : terms_) r.add(k.first, k.second, v * s);
  return r;
}

SpanElement SpanElement::adjoint() const {
  SpanElement r(g_);
  for (const auto& [k, v] : terms_) r.add(k.second, k.first, v.conj());
  return r;
}

std::string SpanElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << v.str() << ")";
    if (g_) os << " t[" << g_->str(k.first) << "] t*[" << g_->str(k.second) << "]";
  }
  return os.str();
}

SpanElement multiply(const KGraph& g, const CategoricalCocycle& c, const SpanElement& x,
                     const SpanElement& y) {
  if ((x.graph() && x.graph() != &g) || (y.graph() && y.graph() != &g))
    throw Error(Errc::GraphMismatch, "operand built on another graph");
  SpanElement out(&g);
  std::map<std::pair<Path, Path>, PathSet> cache;
  for (const auto& [kx, a] : x.terms()) {
    const auto& [mu, nu] = kx;
    for (const auto& [ky, b] : y.terms()) {
      const auto& [eta, zeta] = ky;
      if (nu.range != eta.range) continue;
      auto it = cache.find({nu, eta});
      if (it == cache.end()) it = cache.emplace(std::make_pair(nu, eta), mce(g, nu, eta)).first;
      if (it->second.empty()) continue;
      Scalar ab = a * b;
      for (const auto& lam : it->second) {
        Path alpha = factorize(g, lam, nu.degree).second;
        Path beta = factorize(g, lam, eta.degree).second;
        Phase ph = eval_categorical(g, c, mu, alpha) - eval_categorical(g, c, nu, alpha) +
                   eval_categorical(g, c, eta, beta) - eval_categorical(g, c, zeta, beta);
        out.add(compose(g, mu, alpha), compose(g, zeta, beta), ab.times(ph));
      }
    }
  }
  return out;
}

double span_max_diff(const SpanElement& x, const SpanElement& y) {
  SpanElement d = x - y;
  double m = 0.0;
  for (const auto& [k, s] : d.terms()) m = std::max(m, std::abs(s.value()));
  return m;
}

bool span_equal(const SpanElement& x, const SpanElement& y, double tol) {
  SpanElement d = x - y;
  if (d.is_zero()) return true;
  if (x.exact() && y.exact()) return false;
  return span_max_diff(x, y) <= tol;
}

SpanElement delta(const KGraph& g, const CategoricalCocycle& c, const PathSet& E, int v) {
  for (const auto& lam : E)
    if (lam.range != v) throw Error(Errc::RangeMismatch, g.str(lam) + " not in vLambda");
  SpanElement tv = SpanElement::unit(g, v);
  SpanElement out = tv;
  for (const auto& lam : E) out = multiply(g, c, out, tv - SpanElement::q(g, lam));
  return out;
}

SpanElement delta(const KGraph& g, const CategoricalCocycle& c, const PathSet& E) {
  return delta(g, c, E, common_range(E));
}

bool delta_commutation_check(const KGraph& g, const CategoricalCocycle& c, const PathSet& E,
                             const Path& mu) {
  int v = E.empty() ? mu.range : common_range(E);
  if (v != mu.range) throw Error(Errc::RangeMismatch, "r(mu) != r(E)");
  SpanElement tm = SpanElement::t(g, mu);
  SpanElement lhs = multiply(g, c, delta(g, c, E, v), tm);
  SpanElement rhs = multiply(g, c, tm, delta(g, c, ext(g, mu, E), mu.source));
  return span_equal(lhs, rhs);
}

SpanElement theta_expansion(const KGraph& g, const CategoricalCocycle& c,
                            const MatrixUnitBlock& blk, const Path& mu, const Path& nu) {
  SpanElement sum(&g);
  for (const auto& x : blk.E) {
    if (!is_prefix(g, mu, x)) continue;
    Path alpha = factorize(g, x, mu.degree).second;
    Path nx = compose(g, nu, alpha);
    auto it = blk.units.find({x, nx});
    if (it == blk.units.end()) continue;
    Phase ph = eval_categorical(g, c, mu, alpha) - eval_categorical(g, c, nu, alpha);
    sum = sum + it->second.scaled(Scalar::phase(ph));
  }
  return sum;
}

MatrixUnitBlock theta_block(const KGraph& g, const CategoricalCocycle& c, const PathSet& E) {
  if (pi_closure(g, E) != E) throw Error(Errc::NotPiClosed, "E != Pi E");
  MatrixUnitBlock blk;
  blk.E = E;
  for (const auto& mu : E) {
    PathSet T = t_set(g, E, mu);
    SpanElement d = delta(g, c, T, mu.source);
    SpanElement left = multiply(g, c, SpanElement::t(g, mu), d);
    for (const auto& nu : E) {
      if (nu.degree != mu.degree || nu.source != mu.source) continue;
      blk.units[{mu, nu}] = multiply(g, c, left, SpanElement::tstar(g, nu));
    }
  }
  blk.relations_ok = true;
  for (const auto& [k1, th1] : blk.units) {
    for (const auto& [k2, th2] : blk.units) {
      SpanElement prod = multiply(g, c, th1, th2);
      SpanElement want(&g);
      if (k1.second == k2.first) want = blk.units.at({k1.first, k2.second});
      if (!span_equal(prod, want)) {
        blk.relations_ok = false;
        if (blk.failure.empty())
          blk.failure = "Theta[" + g.str(k1.first) + "," + g.str(k1.second) + "] Theta[" +
                        g.str(k2.first) + "," + g.str(k2.second) + "]";
      }
    }
  }
  blk.expansion_ok = true;
  for (const auto& [k, th] : blk.units) {
    SpanElement lhs = SpanElement::term(g, k.first, k.second);
    if (!span_equal(lhs, theta_expansion(g, c, blk, k.first, k.second))) {
      blk.expansion_ok = false;
      if (blk.failure.empty())
        blk.failure = "expansion of t[" + g.str(k.first) + "] t*[" + g.str(k.second) + "]";
    }
  }
  return blk;
}

SpanElement expectation(const SpanElement& x, ExpectationMode mode) {
  SpanElement r(x.graph());
  for (const auto& [k, s] : x.terms()) {
    bool keep = mode == ExpectationMode::Gauge ? k.first.degree == k.second.degree
                                               : k.first == k.second;
    if (keep) r.add(k.first, k.second, s);
  }
  return r;
}

SpanElement tilde_expectation(const SpanElement& x, const SimPredicate& sim) {
  SpanElement r(x.graph());
  for (const auto& [k, s] : x.terms())
    if (sim(k.first, k.second)) r.add(k.first, k.second, s);
  return r;
}

}  // namespace kg
