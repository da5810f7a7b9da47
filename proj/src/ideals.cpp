#include "kgraph/ideals.hpp"

#include <algorithm>
#include <deque>

namespace kg {

VertexSet hereditary_closure(const KGraph& g, const VertexSet& X) {
  VertexSet H = X;
  std::vector<int> stack(X.begin(), X.end());
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int c = 0; c < g.rank(); ++c)
      for (int e : g.in_edges(v, c))
        if (H.insert(g.edge(e).source).second) stack.push_back(g.edge(e).source);
  }
  return H;
}

bool is_hereditary(const KGraph& g, const VertexSet& H) { return hereditary_closure(g, H) == H; }

namespace {
bool sources_in(const PathSet& E, const VertexSet& H) {
  for (const auto& p : E)
    if (!H.count(p.source)) return false;
  return true;
}
}  // namespace

VertexSet saturate(const KGraph& g, const VertexSet& H0, const std::vector<PathSet>& family) {
  VertexSet H = hereditary_closure(g, H0);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& E : family) {
      if (E.empty()) continue;
      int r = E.begin()->range;
      if (!H.count(r) && sources_in(E, H)) {
        H.insert(r);
        grew = true;
      }
    }
    if (grew) H = hereditary_closure(g, H);
  }
  return H;
}

bool is_saturated(const KGraph& g, const VertexSet& H, const std::vector<PathSet>& family) {
  for (const auto& E : family)
    if (!E.empty() && !H.count(E.begin()->range) && sources_in(E, H)) return false;
  (void)g;
  return true;
}

KGraph quotient_graph(const KGraph& g, const VertexSet& H) {
  if (!is_hereditary(g, H)) throw Error(Errc::NotHereditary, "H is not hereditary");
  KGraph q(g.rank());
  for (int v = 0; v < g.num_vertices(); ++v)
    if (!H.count(v)) q.add_vertex(g.vertex_name(v));
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (H.count(ed.source)) continue;
    q.add_edge(ed.id, ed.color + 1, g.vertex_name(ed.range), g.vertex_name(ed.source));
  }
  for (const auto& s : g.squares())
    if (!H.count(g.edge(s.f).source))
      q.add_square(g.edge(s.g).id, g.edge(s.f).id, g.edge(s.f2).id, g.edge(s.g2).id);
  q.finalize();
  return q;
}

Path to_quotient(const KGraph& g, const KGraph& q, const Path& p) {
  if (p.is_vertex()) return q.vertex(q.vertex_index(g.vertex_name(p.range)));
  return q.path_from_ids(g.ids(p));
}

PathSet to_quotient(const KGraph& g, const KGraph& q, const PathSet& E) {
  PathSet out;
  for (const auto& p : E) out.insert(to_quotient(g, q, p));
  return out;
}

std::vector<PathSet> ee_h(const KGraph& g, const KGraph& q, const std::vector<PathSet>& family,
                          const VertexSet& H) {
  if (!is_hereditary(g, H)) throw Error(Errc::NotHereditary, "H is not hereditary");
  if (!is_saturated(g, H, family)) throw Error(Errc::NotSaturated, "H is not saturated");
  std::set<PathSet> seen;
  std::vector<PathSet> out;
  for (const auto& E : family) {
    if (E.empty() || H.count(E.begin()->range)) continue;
    PathSet kept;
    for (const auto& p : E)
      if (!H.count(p.source)) kept.insert(to_quotient(g, q, p));
    int v = kept.begin()->range;
    if (auto w = exhaustive_witness(q, kept, v))
      throw Error(Errc::NotExhaustive, "E \\ EH misses " + q.str(*w) + " in the quotient");
    if (seen.insert(kept).second) out.push_back(kept);
  }
  return out;
}

bool is_ck_family(const KGraph& g, const std::vector<PathSet>& Ee) {
  auto ck = ck_generators(g);
  return std::set<PathSet>(ck.begin(), ck.end()) == std::set<PathSet>(Ee.begin(), Ee.end());
}

std::vector<VertexSet> saturated_hereditary_sets(const KGraph& g,
                                                 const std::vector<PathSet>& family,
                                                 bool* generated) {
  const int n = g.num_vertices();
  std::set<VertexSet> found;
  if (n <= 20) {
    if (generated) *generated = false;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      VertexSet H;
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1u) H.insert(v);
      if (is_hereditary(g, H) && is_saturated(g, H, family)) found.insert(H);
    }
  } else {
    if (generated) *generated = true;
    found.insert({});
    VertexSet all;
    for (int v = 0; v < n; ++v) all.insert(v);
    found.insert(all);
    for (int v = 0; v < n; ++v) found.insert(saturate(g, {v}, family));
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<VertexSet> cur(found.begin(), found.end());
      for (size_t i = 0; i < cur.size(); ++i)
        for (size_t j = i + 1; j < cur.size(); ++j) {
          VertexSet u = cur[i];
          u.insert(cur[j].begin(), cur[j].end());
          if (found.insert(saturate(g, u, family)).second) grew = true;
        }
    }
  }
  std::vector<VertexSet> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
  return out;
}

namespace {

// Every exhaustive subset of v.Lambda^{<=D} \ {v} in q, over all vertices.
std::vector<PathSet> fe_universe(const KGraph& q, const Degree& D, bool& truncated) {
  std::vector<PathSet> out;
  for (int v = 0; v < q.num_vertices(); ++v) {
    std::vector<Path> ps;
    for (const auto& p : paths_up_to(q, v, D))
      if (!p.is_vertex()) ps.push_back(p);
    if (ps.size() > 16) {
      truncated = true;
      continue;
    }
    for (std::uint32_t mask = 1; mask < (1u << ps.size()); ++mask) {
      PathSet F;
      for (size_t i = 0; i < ps.size(); ++i)
        if (mask >> i & 1u) F.insert(ps[i]);
      if (is_exhaustive(q, F, v)) out.push_back(F);
    }
  }
  return out;
}

}  // namespace

bool pair_leq(const KGraph& g, const IdealPair& p1, const IdealPair& p2) {
  if (!std::includes(p2.H.begin(), p2.H.end(), p1.H.begin(), p1.H.end())) return false;
  const KGraph& q1 = *p1.quotient;
  const KGraph& q2 = *p2.quotient;
  auto in_H2 = [&](int q1_vertex) {
    return p2.H.count(g.vertex_index(q1.vertex_name(q1_vertex))) > 0;
  };
  for (const auto& E : p1.B) {
    if (in_H2(E.begin()->range)) continue;
    PathSet kept;
    for (const auto& p : E)
      if (!in_H2(p.source)) kept.insert(to_quotient(q1, q2, p));
    if (kept.empty() || !p2.B.count(kept)) return false;
  }
  return true;
}

IdealLattice list_gauge_invariant_ideals(const KGraph& g, const std::vector<PathSet>& Ee,
                                         const Degree& D) {
  g.require_valid();
  IdealLattice lat;
  lat.D = D;
  Satiation sat = satiate(g, Ee, D);
  std::vector<PathSet> family(sat.sets.begin(), sat.sets.end());
  bool generated = false;
  auto Hs = saturated_hereditary_sets(g, family, &generated);
  bool exact = g.no_sources() && is_ck_family(g, Ee);
  lat.exactness = generated ? "generated" : exact ? "exact" : "bounded";

  for (const auto& H : Hs) {
    auto q = std::make_shared<KGraph>(quotient_graph(g, H));
    auto base = ee_h(g, *q, family, H);
    auto gens = ee_h(g, *q, Ee, H);
    if (exact || q->num_vertices() == 0) {
      IdealPair p{H, q, satiate(*q, base, D).sets, gens, lat.exactness};
      lat.pairs.push_back(std::move(p));
      continue;
    }
    // Closed families over the quotient containing the base, reached by adding one
    // exhaustive set at a time.
    bool trunc = false;
    auto universe = fe_universe(*q, D, trunc);
    lat.truncated |= trunc;
    std::map<Family, std::vector<PathSet>> seen;
    std::deque<std::pair<Family, std::vector<PathSet>>> todo;
    Family start = base.empty() ? Family{} : satiate(*q, base, D).sets;
    seen[start] = gens;
    todo.emplace_back(start, gens);
    const size_t cap = 256;
    while (!todo.empty()) {
      auto [fam, gen] = todo.front();
      todo.pop_front();
      for (const auto& F : universe) {
        if (fam.count(F)) continue;
        std::vector<PathSet> seeds(fam.begin(), fam.end());
        seeds.push_back(F);
        Family next = satiate(*q, seeds, D).sets;
        if (seen.count(next)) continue;
        if (seen.size() >= cap) {
          lat.truncated = true;
          break;
        }
        auto ngen = gen;
        ngen.push_back(F);
        seen[next] = ngen;
        todo.emplace_back(next, ngen);
      }
    }
    std::vector<std::pair<Family, std::vector<PathSet>>> fams(seen.begin(), seen.end());
    std::stable_sort(fams.begin(), fams.end(),
                     [](const auto& a, const auto& b) { return a.first.size() < b.first.size(); });
    for (auto& [fam, gen] : fams) lat.pairs.push_back(IdealPair{H, q, fam, gen, lat.exactness});
  }

  const int n = (int)lat.pairs.size();
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) leq[i][j] = pair_leq(g, lat.pairs[i], lat.pairs[j]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !leq[i][j]) continue;
      bool covers = true;
      for (int m = 0; m < n && covers; ++m)
        if (m != i && m != j && leq[i][m] && leq[m][j]) covers = false;
      if (covers) lat.hasse.emplace_back(i, j);
    }
  return lat;
}

}  // namespace kg
