#include "kgraph/align.hpp"

#include <map>

namespace kg {

bool is_prefix(const KGraph& g, const Path& mu, const Path& lambda) {
  if (mu.range != lambda.range || !deg::leq(mu.degree, lambda.degree)) return false;
  return factorize(g, lambda, mu.degree).first == mu;
}

PathSet mce(const KGraph& g, const Path& mu, const Path& nu) {
  PathSet out;
  if (mu.range != nu.range) return out;
  Degree top = deg::join(mu.degree, nu.degree);
  for (const Path& tail : enumerate_paths(g, mu.source, deg::sub(top, mu.degree))) {
    Path lam = compose(g, mu, tail);
    if (is_prefix(g, nu, lam)) out.insert(lam);
  }
  return out;
}

int common_range(const PathSet& E) {
  if (E.empty()) throw Error(Errc::RangeMismatch, "empty set has no range");
  int r = E.begin()->range;
  for (const auto& p : E)
    if (p.range != r) throw Error(Errc::RangeMismatch, "members have different ranges");
  return r;
}

Degree join_degree(const KGraph& g, const PathSet& E) {
  Degree d = deg::zero(g.rank());
  for (const auto& p : E) d = deg::join(d, p.degree);
  return d;
}

PathSet ext(const KGraph& g, const Path& lambda, const PathSet& E) {
  PathSet out;
  if (E.empty()) return out;
  if (common_range(E) != lambda.range)
    throw Error(Errc::RangeMismatch, "r(lambda) != r(E)");
  for (const auto& mu : E)
    for (const auto& x : mce(g, lambda, mu)) out.insert(factorize(g, x, lambda.degree).second);
  return out;
}

bool in_E_Lambda(const KGraph& g, const Path& lambda, const PathSet& E) {
  for (const auto& mu : E)
    if (is_prefix(g, mu, lambda)) return true;
  return false;
}

std::optional<Path> exhaustive_witness(const KGraph& g, const PathSet& E, int v) {
  if (E.empty()) return g.vertex(v);
  for (const auto& p : E)
    if (p.range != v) throw Error(Errc::RangeMismatch, "member " + g.str(p) + " not in vLambda");
  for (const auto& lam : paths_up_to(g, v, join_degree(g, E))) {
    bool met = false;
    for (const auto& mu : E)
      if (!mce(g, lam, mu).empty()) {
        met = true;
        break;
      }
    if (!met) return lam;
  }
  return std::nullopt;
}

bool is_exhaustive(const KGraph& g, const PathSet& E, int v) {
  return !exhaustive_witness(g, E, v).has_value();
}

PathSet pi_closure(const KGraph& g, const PathSet& E) {
  PathSet F = E;
  bool grew = true;
  while (grew) {
    grew = false;
    // Group by degree; nu and sigma range over all of F, their partners by degree.
    std::map<Degree, std::vector<Path>> by_deg;
    for (const auto& p : F) by_deg[p.degree].push_back(p);
    PathSet add;
    for (const auto& nu : F) {
      for (const auto& sigma : F) {
        auto common = mce(g, nu, sigma);
        if (common.empty()) continue;
        for (const auto& x : common) {
          Path alpha = factorize(g, x, nu.degree).second;
          Path beta = factorize(g, x, sigma.degree).second;
          for (const auto& mu : by_deg[nu.degree])
            if (mu.source == nu.source) add.insert(compose(g, mu, alpha));
          for (const auto& tau : by_deg[sigma.degree])
            if (tau.source == sigma.source) add.insert(compose(g, tau, beta));
        }
      }
    }
    for (const auto& p : add)
      if (F.insert(p).second) grew = true;
  }
  return F;
}

PathSet t_set(const KGraph& g, const PathSet& E, const Path& mu) {
  if (!E.count(mu)) throw Error(Errc::NotMember, g.str(mu) + " not in E");
  PathSet out;
  for (const auto& lam : E) {
    if (lam == mu || !is_prefix(g, mu, lam)) continue;
    out.insert(factorize(g, lam, mu.degree).second);
  }
  return out;
}

}  // namespace kg
