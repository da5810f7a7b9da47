#include "kgraph/twist.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <numeric>

namespace kg {

TwoCocycleZk::TwoCocycleZk(int k) : k_(k), theta_(k, std::vector<Phase>(k)) {}

TwoCocycleZk::TwoCocycleZk(int k, std::vector<std::vector<Phase>> theta)
    : k_(k), theta_(std::move(theta)) {
  if ((int)theta_.size() != k) throw Error(Errc::DimensionMismatch, "theta rows != k");
  for (const auto& row : theta_)
    if ((int)row.size() != k) throw Error(Errc::DimensionMismatch, "theta cols != k");
}

TwoCocycleZk TwoCocycleZk::rotation(Phase t) {
  TwoCocycleZk c(2);
  c.theta_[1][0] = t;
  return c;
}

bool TwoCocycleZk::exact() const {
  for (const auto& row : theta_)
    for (const auto& p : row)
      if (!p.exact()) return false;
  return true;
}

bool TwoCocycleZk::is_skew() const {
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j)
      if (!(theta_[i][j] + theta_[j][i]).is_zero(1e-12)) return false;
  return true;
}

Phase TwoCocycleZk::eval(const ZVec& m, const ZVec& n) const {
  if ((int)m.size() != k_ || (int)n.size() != k_)
    throw Error(Errc::DimensionMismatch, "vector length != rank");
  Phase s;
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j)
      if (m[i] != 0 && n[j] != 0) s = s + theta_[i][j].scaled(m[i] * n[j]);
  return s;
}

Phase TwoCocycleZk::eval(const Degree& m, const Degree& n) const {
  return eval(ZVec(m.begin(), m.end()), ZVec(n.begin(), n.end()));
}

Phase eval(const TwoCocycleZk& c, const ZVec& m, const ZVec& n) { return c.eval(m, n); }

TwoCocycleZk cc_star(const TwoCocycleZk& c) {
  TwoCocycleZk out(c.rank());
  for (int i = 0; i < c.rank(); ++i)
    for (int j = 0; j < c.rank(); ++j) out.set_theta(i, j, c.theta(i, j) - c.theta(j, i));
  return out;
}

bool CategoricalCocycle::exact() const {
  if (!pullback.exact()) return false;
  for (const auto& [e, p] : weights)
    if (!p.exact()) return false;
  return true;
}

Phase CategoricalCocycle::b(const Path& p) const {
  Phase s;
  if (weights.empty()) return s;
  for (int e : p.word) {
    auto it = weights.find(e);
    if (it != weights.end()) s = s + it->second;
  }
  return s;
}

Phase eval_categorical(const KGraph& g, const CategoricalCocycle& c, const Path& mu,
                       const Path& nu) {
  if (mu.source != nu.range)
    throw Error(Errc::NotComposable, g.str(mu) + " then " + g.str(nu));
  Phase p = c.pullback.eval(mu.degree, nu.degree);
  if (c.weights.empty()) return p;
  return p + c.b(mu) + c.b(nu) - c.b(compose(g, mu, nu));
}

CocycleReport validate_cocycle_identity(const KGraph& g, const CocycleFn& c,
                                        const Degree& bound) {
  g.require_valid();
  CocycleReport rep;
  auto paths = paths_up_to(g, std::nullopt, bound);
  std::vector<std::vector<const Path*>> by_range(g.num_vertices());
  for (const auto& p : paths) by_range[p.range].push_back(&p);
  for (const auto& lam : paths) {
    Path rv = g.vertex(lam.range), sv = g.vertex(lam.source);
    if (!c(rv, lam).is_zero(1e-12) || !c(lam, sv).is_zero(1e-12)) {
      rep.ok = false;
      if (rep.witness.empty()) rep.witness = "not normalised at " + g.str(lam);
    }
    for (const Path* mu : by_range[lam.source]) {
      Path lm = compose(g, lam, *mu);
      for (const Path* nu : by_range[mu->source]) {
        ++rep.triples;
        Phase lhs = c(lam, *mu) + c(lm, *nu);
        Phase rhs = c(*mu, *nu) + c(lam, compose(g, *mu, *nu));
        if (!(lhs - rhs).is_zero(1e-12)) {
          rep.ok = false;
          if (rep.witness.empty())
            rep.witness = "(" + g.str(lam) + ", " + g.str(*mu) + ", " + g.str(*nu) + ")";
        }
      }
    }
  }
  return rep;
}

CocycleReport validate_cocycle_identity(const KGraph& g, const CategoricalCocycle& c,
                                        const Degree& bound) {
  return validate_cocycle_identity(
      g, [&](const Path& a, const Path& b) { return eval_categorical(g, c, a, b); }, bound);
}

namespace {

// Row reduction on the first `ncols` columns; remaining columns ride along.
// Returns the number of pivot rows; rows after that are zero on the first block.
int echelon(std::vector<ZVec>& a, size_t ncols) {
  int r = 0;
  int nrows = (int)a.size();
  for (size_t col = 0; col < ncols && r < nrows; ++col) {
    while (true) {
      int piv = -1;
      for (int i = r; i < nrows; ++i)
        if (a[i][col] != 0 && (piv < 0 || std::llabs(a[i][col]) < std::llabs(a[piv][col])))
          piv = i;
      if (piv < 0) break;
      std::swap(a[r], a[piv]);
      bool clean = true;
      for (int i = r + 1; i < nrows; ++i) {
        if (a[i][col] == 0) continue;
        long long q = a[i][col] / a[r][col];
        for (size_t j = 0; j < a[i].size(); ++j) a[i][j] -= q * a[r][j];
        if (a[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[r][col] == 0) continue;
    if (a[r][col] < 0)
      for (auto& x : a[r]) x = -x;
    for (int i = 0; i < r; ++i) {
      long long p = a[r][col];
      long long q = a[i][col] / p;
      if (a[i][col] - q * p < 0) --q;
      if (q != 0)
        for (size_t j = 0; j < a[i].size(); ++j) a[i][j] -= q * a[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

std::vector<ZVec> hermite_rows(std::vector<ZVec> rows) {
  if (rows.empty()) return rows;
  size_t k = rows.front().size();
  int r = echelon(rows, k);
  rows.resize(r);
  return rows;
}

ZkSubgroup::ZkSubgroup(int k, std::vector<ZVec> generators) : k_(k), gens_(std::move(generators)) {
  for (const auto& v : gens_)
    if ((int)v.size() != k) throw Error(Errc::DimensionMismatch, "generator length != k");
  basis_ = hermite_rows(gens_);
}

ZkSubgroup ZkSubgroup::full(int k) {
  std::vector<ZVec> gens;
  for (int i = 0; i < k; ++i) {
    ZVec e(k, 0);
    e[i] = 1;
    gens.push_back(e);
  }
  return ZkSubgroup(k, gens);
}

bool ZkSubgroup::contains(const ZVec& v) const {
  if ((int)v.size() != k_) throw Error(Errc::DimensionMismatch, "vector length != k");
  auto rows = basis_;
  rows.push_back(v);
  return hermite_rows(rows) == basis_;
}

const char* kind_name(Nondegeneracy::Kind k) {
  switch (k) {
    case Nondegeneracy::Nondegenerate: return "Nondegenerate";
    case Nondegeneracy::Degenerate: return "Degenerate";
    case Nondegeneracy::NumericallyInconclusive: return "NumericallyInconclusive";
  }
  return "?";
}

std::optional<Q> rationalize(double x, long long max_den, double tol) {
  // Continued-fraction convergents of x.
  double y = x;
  long long h0 = 1, h1 = (long long)std::floor(y), k0 = 0, k1 = 1;
  double rest = y - std::floor(y);
  for (int it = 0; it < 64; ++it) {
    if (std::abs(x - double(h1) / double(k1)) <= tol) return Q(h1, k1);
    if (rest < 1e-300) break;
    y = 1.0 / rest;
    long long a = (long long)std::floor(y);
    rest = y - std::floor(y);
    long long h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
  }
  return std::nullopt;
}

namespace {

ZVec combine(const std::vector<ZVec>& basis, const ZVec& x, int k) {
  ZVec m(k, 0);
  for (size_t i = 0; i < basis.size(); ++i)
    for (int j = 0; j < k; ++j) m[j] += x[i] * basis[i][j];
  return m;
}

Nondegeneracy exact_test(const TwoCocycleZk& c, const ZkSubgroup& P) {
  Nondegeneracy out;
  out.method = "integer-kernel-mod-q";
  const auto& g = P.basis();
  size_t l = g.size();
  if (l == 0) return out;
  // A_ji = q * angle of c(g_i, g_j); common denominator q.
  std::vector<std::vector<Q>> ang(l, std::vector<Q>(l));
  long long q = 1;
  for (size_t i = 0; i < l; ++i)
    for (size_t j = 0; j < l; ++j) {
      ang[j][i] = c.eval(g[i], g[j]).rational();
      q = std::lcm(q, ang[j][i].denominator());
    }
  // Integer kernel of [A | qI] via echelon form of its transpose with identity attached.
  size_t n = 2 * l;
  std::vector<ZVec> rows(n, ZVec(l + n, 0));
  for (size_t col = 0; col < n; ++col) {
    for (size_t row = 0; row < l; ++row) {
      long long v;
      if (col < l) {
        Q a = ang[row][col] * Q(q);
        v = a.numerator();
      } else {
        v = (col - l == row) ? q : 0;
      }
      rows[col][row] = v;
    }
    rows[col][l + col] = 1;
  }
  int r = echelon(rows, l);
  std::vector<ZVec> xs;
  for (size_t i = r; i < n; ++i) xs.push_back(ZVec(rows[i].begin() + l, rows[i].begin() + l + l));
  auto lat = hermite_rows(xs);
  if (lat.empty()) return out;
  out.kind = Nondegeneracy::Degenerate;
  out.witness = combine(g, lat.front(), P.ambient());
  return out;
}

}  // namespace

Nondegeneracy is_nondegenerate_on(const TwoCocycleZk& c, const ZkSubgroup& P) {
  if (!c.is_skew()) throw Error(Errc::NotSkewSymmetric, "pass cc_star(c)");
  if (P.ambient() != c.rank()) throw Error(Errc::DimensionMismatch, "subgroup rank != k");
  if (c.exact()) return exact_test(c, P);

  // Float angles that sit on a small rational are treated exactly.
  TwoCocycleZk snapped(c.rank());
  bool all_rational = true;
  for (int i = 0; i < c.rank() && all_rational; ++i)
    for (int j = 0; j < c.rank(); ++j) {
      auto r = rationalize(c.theta(i, j).turns(), 10000, 1e-12);
      if (!r) {
        all_rational = false;
        break;
      }
      snapped.set_theta(i, j, Phase(*r));
    }
  if (all_rational) {
    auto out = exact_test(snapped, P);
    out.exact = false;
    out.method = "snapped-rational+integer-kernel-mod-q";
    return out;
  }

  Nondegeneracy out;
  out.exact = false;
  out.method = "svd";
  const auto& g = P.basis();
  size_t l = g.size();
  if (l == 0) return out;
  Eigen::MatrixXd B(l, l);
  for (size_t i = 0; i < l; ++i)
    for (size_t j = 0; j < l; ++j) {
      double t = c.eval(g[i], g[j]).turns();
      if (t > 0.5) t -= 1.0;
      B(j, i) = t;
    }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(B);
  out.smallest_sv = svd.singularValues()(l - 1);
  if (out.smallest_sv > 1e-6) return out;
  if (out.smallest_sv >= 1e-9) {
    out.kind = Nondegeneracy::NumericallyInconclusive;
    return out;
  }
  // Near-singular: look for a short integer vector that pairs trivially.
  const int R = 8;
  ZVec x(l, -R);
  while (true) {
    bool nonzero = false;
    for (auto v : x) nonzero |= v != 0;
    if (nonzero) {
      ZVec m = combine(g, x, P.ambient());
      bool trivial = true;
      for (size_t j = 0; j < l && trivial; ++j) trivial = c.eval(m, g[j]).is_zero(1e-9);
      if (trivial) {
        out.kind = Nondegeneracy::Degenerate;
        out.witness = m;
        return out;
      }
    }
    size_t i = 0;
    for (; i < l; ++i) {
      if (x[i] < R) {
        ++x[i];
        break;
      }
      x[i] = -R;
    }
    if (i == l) break;
  }
  out.kind = Nondegeneracy::NumericallyInconclusive;
  return out;
}

}  // namespace kg
