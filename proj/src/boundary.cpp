#include "kgraph/boundary.hpp"

#include <algorithm>

namespace kg {

BoundedFilter BoundedFilter::principal(const Path& lambda) {
  BoundedFilter S;
  S.kind = Principal;
  S.head = lambda;
  S.cycle = lambda;
  return S;
}

BoundedFilter BoundedFilter::periodic(const Path& mu, const Path& kappa) {
  if (kappa.range != mu.source || kappa.source != mu.source)
    throw Error(Errc::RangeMismatch, "cycle must start and end at s(mu)");
  BoundedFilter S;
  S.kind = Periodic;
  S.head = mu;
  S.cycle = kappa;
  return S;
}

bool BoundedFilter::is_ultrafilter() const {
  if (kind != Periodic) return false;
  return std::all_of(cycle.degree.begin(), cycle.degree.end(), [](int x) { return x >= 1; });
}

std::optional<Path> filter_member(const KGraph& g, const BoundedFilter& S, const Degree& n) {
  if (S.kind == BoundedFilter::Principal) {
    if (!deg::leq(n, S.head.degree)) return std::nullopt;
    return factorize(g, S.head, n).first;
  }
  int reps = 0;
  for (size_t i = 0; i < n.size(); ++i) {
    int over = n[i] - S.head.degree[i];
    if (over <= 0) continue;
    int step = S.cycle.degree[i];
    if (step == 0) return std::nullopt;
    reps = std::max(reps, (over + step - 1) / step);
  }
  Path x = S.head;
  for (int j = 0; j < reps; ++j) x = compose(g, x, S.cycle);
  return factorize(g, x, n).first;
}

bool filter_contains(const KGraph& g, const BoundedFilter& S, const Path& lambda) {
  if (lambda.range != S.range()) return false;
  auto m = filter_member(g, S, lambda.degree);
  return m && *m == lambda;
}

std::vector<Path> filter_members(const KGraph& g, const BoundedFilter& S, const Degree& bound) {
  std::vector<Path> out;
  for (const auto& n : deg::box(bound))
    if (auto m = filter_member(g, S, n)) out.push_back(*m);
  return out;
}

std::set<int> filter_sources(const KGraph& g, const BoundedFilter& S) {
  Degree reach = S.head.degree;
  if (S.kind == BoundedFilter::Periodic)
    for (size_t i = 0; i < reach.size(); ++i)
      reach[i] += (g.num_vertices() + 1) * S.cycle.degree[i];
  std::set<int> out;
  for (const auto& p : filter_members(g, S, reach)) out.insert(p.source);
  return out;
}

bool same_members(const KGraph& g, const BoundedFilter& a, const BoundedFilter& b,
                  const Degree& bound) {
  if (a.range() != b.range()) return false;
  for (const auto& n : deg::box(bound))
    if (filter_member(g, a, n) != filter_member(g, b, n)) return false;
  return true;
}

std::string filter_str(const KGraph& g, const BoundedFilter& S) {
  if (S.kind == BoundedFilter::Principal) return "principal(" + g.str(S.head) + ")";
  return "periodic(" + g.str(S.head) + "; " + g.str(S.cycle) + ")";
}

BoundedFilter shift_filter(const KGraph& g, const Path& mu, const BoundedFilter& S) {
  if (mu.source != S.range()) throw Error(Errc::RangeMismatch, "s(mu) != r(S)");
  BoundedFilter T = S;
  T.head = compose(g, mu, S.head);
  if (S.kind == BoundedFilter::Principal) T.cycle = T.head;
  return T;
}

std::vector<PathSet> Satiation::at(int v) const {
  std::vector<PathSet> out;
  for (const auto& F : sets)
    if (!F.empty() && F.begin()->range == v) out.push_back(F);
  return out;
}

namespace {

void check_generator(const KGraph& g, const PathSet& E, const Degree& D) {
  if (E.empty()) throw Error(Errc::NotExhaustive, "empty generator");
  int v = common_range(E);
  for (const auto& p : E)
    if (p.is_vertex()) throw Error(Errc::ContainsVertex, "generator contains " + g.str(p));
  if (!deg::leq(join_degree(g, E), D))
    throw Error(Errc::DegreeOutOfRange, "generator degree exceeds D=" + deg::str(D));
  if (auto w = exhaustive_witness(g, E, v))
    throw Error(Errc::NotExhaustive, "no common extension with " + g.str(*w));
}

bool fits(const PathSet& F, const Degree& D) {
  for (const auto& p : F)
    if (!deg::leq(p.degree, D)) return false;
  return true;
}

}  // namespace

Satiation satiate(const KGraph& g, const std::vector<PathSet>& Ee, const Degree& D) {
  g.require_valid();
  Satiation sat;
  sat.D = D;
  std::vector<PathSet> order;
  auto push = [&](PathSet F) {
    if (F.empty() || !fits(F, D)) return;
    if (sat.sets.insert(F).second) order.push_back(std::move(F));
  };
  for (const auto& E : Ee) {
    check_generator(g, E, D);
    push(E);
  }
  std::map<int, std::vector<Path>> local;
  for (int v = 0; v < g.num_vertices(); ++v) local[v] = paths_up_to(g, v, D);

  size_t done_unary = 0;
  size_t done_pairs = 0;
  while (true) {
    ++sat.rounds;
    size_t before = order.size();
    for (; done_unary < order.size(); ++done_unary) {
      PathSet F = order[done_unary];
      int v = F.begin()->range;
      for (const auto& lam : local[v]) {
        if (!lam.is_vertex() && !F.count(lam)) {  // (S1)
          PathSet G = F;
          G.insert(lam);
          push(G);
        }
        if (!in_E_Lambda(g, lam, F)) push(ext(g, lam, F));  // (S2)
      }
      for (const auto& a : F)  // (S3)
        for (const auto& b : F)
          if (a != b && is_prefix(g, a, b)) {
            PathSet G = F;
            G.erase(b);
            push(G);
          }
    }
    // (S4) over every ordered pair, including those involving newly added sets.
    size_t n = order.size();
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = (i < done_pairs ? done_pairs : 0); j < n; ++j) {
        const PathSet F = order[i];  // copies: push() may reallocate order
        const PathSet G = order[j];
        int w = G.begin()->range;
        for (const auto& lam : F) {
          if (lam.source != w) continue;
          PathSet H = F;
          H.erase(lam);
          bool ok = true;
          for (const auto& x : G) {
            Path lx = compose(g, lam, x);
            if (!deg::leq(lx.degree, D)) {
              ok = false;
              break;
            }
            H.insert(lx);
          }
          if (ok) push(H);
        }
      }
    }
    done_pairs = n;
    if (order.size() == before && done_unary == order.size()) break;
  }
  return sat;
}

const char* membership_name(Membership m) {
  switch (m) {
    case Membership::Yes: return "Yes";
    case Membership::No: return "No";
    case Membership::OutOfUniverse: return "OutOfUniverse";
  }
  return "?";
}

Membership is_in_satiation(const KGraph& g, const PathSet& F, const Satiation& sat) {
  for (const auto& p : F)
    if (p.is_vertex()) throw Error(Errc::ContainsVertex, g.str(p) + " is a vertex");
  if (!fits(F, sat.D)) return Membership::OutOfUniverse;
  return sat.contains(F) ? Membership::Yes : Membership::No;
}

Membership is_in_satiation(const KGraph& g, const PathSet& F, const std::vector<PathSet>& Ee,
                           const Degree& D) {
  for (const auto& p : F)
    if (p.is_vertex()) throw Error(Errc::ContainsVertex, g.str(p) + " is a vertex");
  if (!fits(F, D)) return Membership::OutOfUniverse;
  return is_in_satiation(g, F, satiate(g, Ee, D));
}

bool is_compatible(const KGraph& g, const BoundedFilter& S, const Satiation& sat) {
  for (const auto& lam : filter_members(g, S, sat.D)) {
    for (const auto& E : sat.at(lam.source)) {
      bool hit = false;
      for (const auto& mu : E) {
        auto m = filter_member(g, S, deg::add(lam.degree, mu.degree));
        if (m && *m == compose(g, lam, mu)) {
          hit = true;
          break;
        }
      }
      if (!hit) return false;
    }
  }
  return true;
}

bool is_compatible(const KGraph& g, const BoundedFilter& S, const std::vector<PathSet>& Ee,
                   const Degree& D) {
  return is_compatible(g, S, satiate(g, Ee, D));
}

const char* delta_kind_name(DeltaVerdict::Kind k) {
  switch (k) {
    case DeltaVerdict::Zero: return "Zero";
    case DeltaVerdict::Nonzero: return "Nonzero";
    case DeltaVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

DeltaVerdict delta_vanishes(const KGraph& g, const PathSet& F, int v, const Satiation& sat) {
  DeltaVerdict out;
  for (const auto& p : F)
    if (p.range != v) throw Error(Errc::RangeMismatch, g.str(p) + " not in vLambda");
  if (F.count(g.vertex(v))) {
    out.kind = DeltaVerdict::Zero;
    out.reason = "F contains r(F)";
    return out;
  }
  if (!F.empty() && is_in_satiation(g, F, sat) == Membership::Yes) {
    out.kind = DeltaVerdict::Zero;
    out.reason = "F lies in the bounded satiation";
    return out;
  }
  const int k = g.rank();
  Degree cyc_bound(k);
  for (int i = 0; i < k; ++i) cyc_bound[i] = std::max(sat.D[i], 3);
  std::map<int, std::map<int, std::vector<Path>>> cycles;  // vertex -> |d| -> cycles
  for (const auto& n : deg::box(cyc_bound)) {
    if (!deg::leq(deg::ones(k), n)) continue;
    for (int w = 0; w < g.num_vertices(); ++w)
      for (const auto& p : enumerate_paths(g, w, n))
        if (p.source == w) cycles[w][deg::total(n)].push_back(p);
  }
  auto prefixes = paths_up_to(g, v, sat.D);
  std::stable_sort(prefixes.begin(), prefixes.end(), [](const Path& a, const Path& b) {
    return deg::total(a.degree) < deg::total(b.degree);
  });
  for (int len = k; len <= deg::total(cyc_bound); ++len) {
    for (const auto& mu : prefixes) {
      auto it = cycles[mu.source].find(len);
      if (it == cycles[mu.source].end()) continue;
      for (const auto& kappa : it->second) {
        BoundedFilter S = BoundedFilter::periodic(mu, kappa);
        bool avoids = true;
        for (const auto& lam : F)
          if (filter_contains(g, S, lam)) {
            avoids = false;
            break;
          }
        if (!avoids || !is_compatible(g, S, sat)) continue;
        out.kind = DeltaVerdict::Nonzero;
        out.certificate = S;
        out.reason = "compatible filter avoiding F";
        return out;
      }
    }
  }
  out.reason = "no certificate within the search bounds";
  return out;
}

DeltaVerdict delta_vanishes(const KGraph& g, const PathSet& F, int v,
                            const std::vector<PathSet>& Ee, const Degree& D) {
  return delta_vanishes(g, F, v, satiate(g, Ee, D));
}

TruncatedRep restrict_to_filter_target(const TruncatedRep& rep, const BoundedFilter& S) {
  return restrict_to_sources(rep, filter_sources(rep.graph(), S));
}

std::vector<PathSet> ck_generators(const KGraph& g) {
  std::vector<PathSet> out;
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int i = 0; i < g.rank(); ++i) {
      auto ps = enumerate_paths(g, v, deg::unit(g.rank(), i));
      if (!ps.empty()) out.emplace_back(ps.begin(), ps.end());
    }
  return out;
}

}  // namespace kg
