#include "kgraph/periodicity.hpp"

#include <algorithm>

namespace kg {

const char* sim_name(SimVerdict::Kind k) {
  switch (k) {
    case SimVerdict::Sim: return "Sim";
    case SimVerdict::NotSim: return "NotSim";
    case SimVerdict::ProbableSim: return "ProbableSim";
  }
  return "?";
}

const char* aperiodic_name(AperiodicityResult::Kind k) {
  switch (k) {
    case AperiodicityResult::Aperiodic: return "yes";
    case AperiodicityResult::Periodic: return "no";
    case AperiodicityResult::Unknown: return "unknown";
  }
  return "?";
}

std::vector<BoundedFilter> periodic_ultrafilters(const KGraph& g, int v, int D) {
  const int k = g.rank();
  std::vector<BoundedFilter> out;
  if (D < 1) return out;
  for (const auto& alpha : paths_up_to(g, v, deg::filled(k, D - 1))) {
    Degree room = deg::sub(deg::filled(k, D), alpha.degree);
    for (const auto& c : deg::box(room)) {
      if (!deg::leq(deg::ones(k), c)) continue;
      for (const auto& kappa : enumerate_paths(g, alpha.source, c))
        if (kappa.source == alpha.source) out.push_back(BoundedFilter::periodic(alpha, kappa));
    }
  }
  return out;
}

namespace {

std::vector<Path> by_total_degree(std::vector<Path> ps) {
  std::stable_sort(ps.begin(), ps.end(), [](const Path& a, const Path& b) {
    return deg::total(a.degree) < deg::total(b.degree);
  });
  return ps;
}

// First degree at which mu x and nu x differ, checked at base, base + d(kappa),
// base + 2 d(kappa). Past d(alpha) the path repeats with period d(kappa), so agreement
// on these levels means agreement everywhere.
std::optional<Degree> first_disagreement(const KGraph& g, const Path& mu, const Path& nu,
                                         const BoundedFilter& S) {
  BoundedFilter A = shift_filter(g, mu, S);
  BoundedFilter B = shift_filter(g, nu, S);
  Degree n = deg::join(A.head.degree, B.head.degree);
  for (int j = 0; j < 3; ++j) {
    if (filter_member(g, A, n) != filter_member(g, B, n)) return n;
    n = deg::add(n, S.cycle.degree);
  }
  return std::nullopt;
}

}  // namespace

SimVerdict sim_check(const KGraph& g, const Path& mu, const Path& nu, int D,
                     const std::vector<BoundedFilter>& ultras) {
  if (mu.source != nu.source) throw Error(Errc::SourceMismatch, "s(mu) != s(nu)");
  SimVerdict out;
  if (mu == nu) {
    out.kind = SimVerdict::Sim;
    return out;
  }
  if (mu.range != nu.range) {
    out.kind = SimVerdict::NotSim;
    out.tau = g.vertex(mu.source);
    return out;
  }
  for (const auto& tau : by_total_degree(paths_up_to(g, mu.source, deg::filled(g.rank(), D))))
    if (mce(g, compose(g, mu, tau), compose(g, nu, tau)).empty()) {
      out.kind = SimVerdict::NotSim;
      out.tau = tau;
      return out;
    }
  for (const auto& S : ultras) {
    ++out.ultrafilters;
    auto n = first_disagreement(g, mu, nu, S);
    if (!n) continue;
    // Extending along x past the disagreement separates mu tau from nu tau.
    Degree t = deg::sub(*n, deg::meet(mu.degree, nu.degree));
    auto tau = filter_member(g, S, t);
    if (tau && mce(g, compose(g, mu, *tau), compose(g, nu, *tau)).empty()) {
      out.kind = SimVerdict::NotSim;
      out.tau = *tau;
      return out;
    }
  }
  out.kind = out.ultrafilters > 0 ? SimVerdict::Sim : SimVerdict::ProbableSim;
  return out;
}

SimVerdict sim_check(const KGraph& g, const Path& mu, const Path& nu, int D) {
  return sim_check(g, mu, nu, D, periodic_ultrafilters(g, mu.source, D));
}

std::pair<Degree, Degree> pq(const ZVec& m, const std::optional<Degree>& n) {
  const size_t k = m.size();
  Degree p(k), q(k);
  bool below = n.has_value();
  if (n)
    for (size_t i = 0; i < k; ++i) below = below && m[i] <= (*n)[i];
  for (size_t i = 0; i < k; ++i) {
    p[i] = below ? (*n)[i] : (int)std::max<long long>(m[i], 0);
    q[i] = (int)(p[i] - m[i]);
  }
  return {p, q};
}

namespace {

struct PairRun {
  std::vector<std::pair<Path, Path>> pairs;
  std::vector<SimVerdict> verdicts;
};

// Every unordered pair of distinct paths with a common source and degree <= D.1.
PairRun run_pairs(const KGraph& g, int D) {
  PairRun run;
  auto paths = paths_up_to(g, std::nullopt, deg::filled(g.rank(), D));
  std::map<int, std::vector<Path>> by_source;
  for (const auto& p : paths) by_source[p.source].push_back(p);
  std::map<int, std::vector<BoundedFilter>> ultras;
  for (const auto& [w, ps] : by_source) {
    ultras[w] = periodic_ultrafilters(g, w, D);
    for (size_t i = 0; i < ps.size(); ++i)
      for (size_t j = i + 1; j < ps.size(); ++j) run.pairs.emplace_back(ps[i], ps[j]);
  }
  run.verdicts.resize(run.pairs.size());
  parallel_for(run.pairs.size(), [&](size_t i) {
    const auto& [mu, nu] = run.pairs[i];
    run.verdicts[i] = sim_check(g, mu, nu, D, ultras.at(mu.source));
  });
  return run;
}

bool sim_lookup(const KGraph& g, const PeriodicityData& pd, const Path& a, const Path& b) {
  if (a.source != b.source) return false;
  if (a == b) return true;
  Degree box = deg::filled(g.rank(), pd.D);
  if (deg::leq(a.degree, box) && deg::leq(b.degree, box)) {
    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    return std::binary_search(pd.sim_pairs.begin(), pd.sim_pairs.end(), key);
  }
  return sim_check(g, a, b, pd.D).kind == SimVerdict::Sim;
}

}  // namespace

PeriodicityData per_group(const KGraph& g, int D) {
  g.require_valid();
  if (!g.no_sources()) throw Error(Errc::UnsupportedGraphClass, "graph has sources");
  const int k = g.rank();
  PeriodicityData pd;
  pd.D = D;
  PairRun run = run_pairs(g, D);
  std::vector<ZVec> diffs;
  for (size_t i = 0; i < run.pairs.size(); ++i) {
    const auto& [mu, nu] = run.pairs[i];
    if (run.verdicts[i].kind == SimVerdict::ProbableSim) pd.probable = true;
    if (run.verdicts[i].kind != SimVerdict::Sim) continue;
    pd.sim_pairs.emplace_back(mu, nu);
    ZVec d(k);
    for (int c = 0; c < k; ++c) d[c] = mu.degree[c] - nu.degree[c];
    diffs.push_back(d);
  }
  std::sort(pd.sim_pairs.begin(), pd.sim_pairs.end());
  pd.per = ZkSubgroup(k, diffs);

  for (int v = 0; v < g.num_vertices(); ++v) {
    bool ok = true;
    for (const auto& gen : pd.per.basis()) {
      auto [p, q] = pq(gen);
      for (const auto& [m, n] : {std::make_pair(p, q), std::make_pair(q, p)}) {
        auto targets = enumerate_paths(g, v, n);
        for (const auto& lam : enumerate_paths(g, v, m)) {
          bool found = std::any_of(targets.begin(), targets.end(),
                                   [&](const Path& mu) { return sim_lookup(g, pd, lam, mu); });
          if (!found) ok = false;
        }
      }
    }
    if (ok) pd.h_per.insert(v);
  }
  for (const auto& gen : pd.per.basis()) {
    auto [p, q] = pq(gen);
    theta_table(g, pd, p, q);
    theta_table(g, pd, q, p);
  }
  return pd;
}

const ThetaTable& theta_table(const KGraph& g, PeriodicityData& pd, const Degree& m,
                              const Degree& n) {
  auto key = std::make_pair(m, n);
  auto it = pd.theta.find(key);
  if (it != pd.theta.end()) return it->second;
  ThetaTable t;
  for (int v : pd.h_per) {
    auto targets = enumerate_paths(g, v, n);
    for (const auto& mu : enumerate_paths(g, v, m)) {
      auto hit = std::find_if(targets.begin(), targets.end(),
                              [&](const Path& nu) { return sim_lookup(g, pd, mu, nu); });
      if (hit == targets.end())
        throw Error(Errc::NotMember, "no partner for " + g.str(mu) + " in degree " + deg::str(n));
      t[mu] = *hit;
    }
  }
  return pd.theta[key] = std::move(t);
}

AperiodicityResult is_aperiodic(const KGraph& g, int D) {
  g.require_valid();
  AperiodicityResult res;
  res.D = D;
  PairRun run = run_pairs(g, D);
  bool unresolved = false;
  for (size_t i = 0; i < run.pairs.size(); ++i) {
    const auto& v = run.verdicts[i];
    const auto& [mu, nu] = run.pairs[i];
    if (v.kind == SimVerdict::Sim) {
      res.kind = AperiodicityResult::Periodic;
      res.pair = run.pairs[i];
      res.witnesses.clear();
      return res;
    }
    if (v.kind == SimVerdict::ProbableSim) unresolved = true;
    if (v.kind == SimVerdict::NotSim) res.witnesses.emplace_back(mu, nu, *v.tau);
  }
  res.kind = unresolved ? AperiodicityResult::Unknown : AperiodicityResult::Aperiodic;
  return res;
}

VertexSet backward_reach(const KGraph& g, int v) {
  return hereditary_closure(g, {v});
}

CofinalityResult is_cofinal(const KGraph& g) {
  g.require_valid();
  const int k = g.rank();
  const auto corners = deg::box(deg::ones(k));
  std::vector<std::vector<Path>> cubes(g.num_vertices());
  for (int w = 0; w < g.num_vertices(); ++w) cubes[w] = enumerate_paths(g, w, deg::ones(k));

  CofinalityResult res;
  for (int v = 0; v < g.num_vertices(); ++v) {
    VertexSet R = backward_reach(g, v);
    VertexSet Z;
    for (int w = 0; w < g.num_vertices(); ++w)
      if (!R.count(w)) Z.insert(w);
    auto step = [&](int w) -> std::optional<Path> {
      for (const auto& lam : cubes[w]) {
        if (!Z.count(lam.source)) continue;
        bool clear = std::all_of(corners.begin(), corners.end(), [&](const Degree& p) {
          return !R.count(vertex_at(g, lam, p));
        });
        if (clear) return lam;
      }
      return std::nullopt;
    };
    for (bool changed = true; changed;) {
      changed = false;
      for (auto it = Z.begin(); it != Z.end();) {
        if (!step(*it)) {
          it = Z.erase(it);
          changed = true;
        } else {
          ++it;
        }
      }
    }
    if (Z.empty()) continue;

    // Walk cubes inside Z until a vertex repeats.
    std::vector<int> seen{*Z.begin()};
    std::vector<Path> walk;
    while (true) {
      Path lam = *step(seen.back());
      walk.push_back(lam);
      auto pos = std::find(seen.begin(), seen.end(), lam.source);
      if (pos != seen.end()) {
        size_t at = pos - seen.begin();
        Path head = g.vertex(seen.front());
        for (size_t i = 0; i < at; ++i) head = compose(g, head, walk[i]);
        Path cycle = g.vertex(seen[at]);
        for (size_t i = at; i < walk.size(); ++i) cycle = compose(g, cycle, walk[i]);
        res.cofinal = false;
        res.vertex = v;
        res.witness = BoundedFilter::periodic(head, cycle);
        return res;
      }
      seen.push_back(lam.source);
    }
  }
  return res;
}

std::optional<GeneralizedCycle> find_generalized_cycle_with_entrance(const KGraph& g, int D) {
  g.require_valid();
  const Degree box = deg::filled(g.rank(), D);
  auto paths = paths_up_to(g, std::nullopt, box);
  std::map<int, std::vector<Path>> ext;
  for (int v = 0; v < g.num_vertices(); ++v) ext[v] = by_total_degree(paths_up_to(g, v, box));
  for (const auto& mu : paths)
    for (const auto& nu : paths) {
      if (mu == nu || mu.range != nu.range || mu.source != nu.source) continue;
      bool cycle = std::all_of(ext[mu.source].begin(), ext[mu.source].end(), [&](const Path& t) {
        return !mce(g, compose(g, mu, t), nu).empty();
      });
      if (!cycle) continue;
      for (const auto& t : ext[nu.source])
        if (mce(g, mu, compose(g, nu, t)).empty()) return GeneralizedCycle{mu, nu, t, true};
    }
  return std::nullopt;
}

}  // namespace kg
