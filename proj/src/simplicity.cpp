#include "kgraph/simplicity.hpp"

#include <algorithm>

namespace kg {

const char* verdict_name(SimplicityVerdict::Verdict v) {
  switch (v) {
    case SimplicityVerdict::Simple: return "Simple";
    case SimplicityVerdict::NotSimple: return "NotSimple";
    case SimplicityVerdict::Unknown: return "Unknown";
  }
  return "?";
}

const char* grounds_name(SimplicityVerdict::Grounds g) {
  switch (g) {
    case SimplicityVerdict::AperiodicCofinal: return "AperiodicCofinal";
    case SimplicityVerdict::NondegenerateCofinal: return "NondegenerateCofinal";
    case SimplicityVerdict::NotCofinal: return "NotCofinal";
    case SimplicityVerdict::NCTorusSpecialCase: return "NCTorusSpecialCase";
    case SimplicityVerdict::InsufficientCriteria: return "InsufficientCriteria";
  }
  return "?";
}

bool is_nc_torus(const KGraph& g) {
  if (g.num_vertices() != 1) return false;
  for (int c = 0; c < g.rank(); ++c)
    if (g.in_edges(0, c).size() != 1) return false;
  return true;
}

SimplicityVerdict decide(const KGraph& g, const TwoCocycleZk& c, int D) {
  g.require_valid();
  if (!g.no_sources()) throw Error(Errc::UnsupportedGraphClass, "graph has sources");
  if (c.rank() != g.rank()) throw Error(Errc::DimensionMismatch, "cocycle rank != graph rank");
  SimplicityVerdict v;
  v.D = D;
  v.cofinality = is_cofinal(g);
  if (!v.cofinality.cofinal) {
    v.verdict = SimplicityVerdict::NotSimple;
    v.grounds = SimplicityVerdict::NotCofinal;
    return v;
  }
  v.aperiodicity = is_aperiodic(g, D);
  if (v.aperiodicity->kind == AperiodicityResult::Aperiodic) {
    v.verdict = SimplicityVerdict::Simple;
    v.grounds = SimplicityVerdict::AperiodicCofinal;
    return v;
  }
  PeriodicityData pd = per_group(g, D);
  v.per = pd.per;
  if (pd.probable) v.notes.push_back("some pairs stayed ProbableSim at this depth");
  TwoCocycleZk skew = cc_star(c);
  v.nondegeneracy = is_nondegenerate_on(skew, pd.per);
  if (v.nondegeneracy->kind == Nondegeneracy::Nondegenerate) {
    v.verdict = SimplicityVerdict::Simple;
    v.grounds = SimplicityVerdict::NondegenerateCofinal;
    return v;
  }
  if (is_nc_torus(g)) {
    v.nondegeneracy = is_nondegenerate_on(skew, ZkSubgroup::full(g.rank()));
    v.grounds = SimplicityVerdict::NCTorusSpecialCase;
    switch (v.nondegeneracy->kind) {
      case Nondegeneracy::Nondegenerate: v.verdict = SimplicityVerdict::Simple; break;
      case Nondegeneracy::Degenerate: v.verdict = SimplicityVerdict::NotSimple; break;
      case Nondegeneracy::NumericallyInconclusive:
        v.verdict = SimplicityVerdict::Unknown;
        v.grounds = SimplicityVerdict::InsufficientCriteria;
        break;
    }
    return v;
  }
  v.verdict = SimplicityVerdict::Unknown;
  v.grounds = SimplicityVerdict::InsufficientCriteria;
  return v;
}

namespace {

bool pairs_trivially(const TwoCocycleZk& skew, const ZVec& w, const std::vector<ZVec>& against) {
  bool nonzero = std::any_of(w.begin(), w.end(), [](long long x) { return x != 0; });
  if (!nonzero) return false;
  return std::all_of(against.begin(), against.end(),
                     [&](const ZVec& u) { return skew.eval(w, u).is_zero(1e-9); });
}

}  // namespace

bool revalidate(const KGraph& g, const TwoCocycleZk& c, const SimplicityVerdict& v) {
  TwoCocycleZk skew = cc_star(c);
  switch (v.grounds) {
    case SimplicityVerdict::NotCofinal: {
      if (!v.cofinality.witness || !v.cofinality.witness->is_ultrafilter()) return false;
      VertexSet R = backward_reach(g, v.cofinality.vertex);
      for (int s : filter_sources(g, *v.cofinality.witness))
        if (R.count(s)) return false;
      return v.verdict == SimplicityVerdict::NotSimple;
    }
    case SimplicityVerdict::AperiodicCofinal: {
      if (!is_cofinal(g).cofinal || !v.aperiodicity) return false;
      for (const auto& [mu, nu, tau] : v.aperiodicity->witnesses)
        if (!mce(g, compose(g, mu, tau), compose(g, nu, tau)).empty()) return false;
      return v.verdict == SimplicityVerdict::Simple;
    }
    case SimplicityVerdict::NondegenerateCofinal: {
      if (!is_cofinal(g).cofinal || !v.per) return false;
      return is_nondegenerate_on(skew, *v.per).kind == Nondegeneracy::Nondegenerate &&
             v.verdict == SimplicityVerdict::Simple;
    }
    case SimplicityVerdict::NCTorusSpecialCase: {
      if (!is_nc_torus(g) || !v.nondegeneracy) return false;
      auto fresh = is_nondegenerate_on(skew, ZkSubgroup::full(g.rank()));
      if (v.verdict == SimplicityVerdict::Simple)
        return fresh.kind == Nondegeneracy::Nondegenerate;
      return fresh.kind == Nondegeneracy::Degenerate &&
             pairs_trivially(skew, v.nondegeneracy->witness, ZkSubgroup::full(g.rank()).basis());
    }
    case SimplicityVerdict::InsufficientCriteria:
      return v.verdict == SimplicityVerdict::Unknown;
  }
  return false;
}

SpMat ck_window(const TruncatedRep& rep, const Degree& lo, const Degree& margin) {
  std::vector<Eigen::Triplet<cd>> trip;
  for (int i = 0; i < rep.dim(); ++i) {
    const Degree& d = rep.basis()[i].degree;
    if (deg::leq(lo, d) && deg::leq(deg::add(d, margin), rep.cutoff()))
      trip.emplace_back(i, i, cd{1.0, 0.0});
  }
  SpMat P(rep.dim(), rep.dim());
  P.setFromTriplets(trip.begin(), trip.end());
  return P;
}

SpMat build_vm(const TruncatedRep& rep, PeriodicityData& pd, const Path& lambda, const ZVec& m) {
  const KGraph& g = rep.graph();
  if (!pd.h_per.count(lambda.range))
    throw Error(Errc::VertexNotInHPer, g.vertex_name(lambda.range) + " is not in H_Per");
  if (!pd.per.contains(m)) throw Error(Errc::NotMember, "m is not in Per");
  auto [p, q] = pq(m);
  Degree room = deg::sub(rep.cutoff(), lambda.degree);
  if (!deg::leq(p, room) || !deg::leq(q, room))
    throw Error(Errc::CutoffTooSmall, "p(m), q(m) must fit under N - d(lambda)");
  const ThetaTable& th = theta_table(g, pd, p, q);
  SpMat Tl = rep.T(lambda);
  SpMat ql = Tl * SpMat(Tl.adjoint());
  SpMat V(rep.dim(), rep.dim());
  for (const auto& mu : enumerate_paths(g, lambda.range, p)) {
    SpMat term = rep.T(mu) * rep.Tstar(th.at(mu));
    V += ql * term;
  }
  V.prune(cd{0.0, 0.0});
  return V;
}

CommutationReport check_vm_commutation(const TruncatedRep& rep, PeriodicityData& pd,
                                       const Path& lambda, const ZVec& m, const ZVec& m2,
                                       const Degree& margin) {
  if (!deg::leq(margin, rep.cutoff())) throw Error(Errc::MarginTooLarge, deg::str(margin));
  SpMat P = ck_window(rep, margin, margin);
  SpMat V1 = build_vm(rep, pd, lambda, m);
  SpMat V2 = build_vm(rep, pd, lambda, m2);
  SpMat A = V1 * V2 * P;
  SpMat B = V2 * V1 * P;

  CommutationReport r;
  r.expected = cc_star(rep.cocycle().pullback).eval(m, m2).value();
  r.deviation = compressed_deviation(A, SpMat(B * r.expected), P);
  double bb = B.squaredNorm();
  if (bb > 0) r.measured = SpMat(B.conjugate()).cwiseProduct(A).sum() / bb;
  r.phase_error = std::abs(r.measured - r.expected);

  SpMat Tl = rep.T(lambda);
  SpMat ql = Tl * SpMat(Tl.adjoint());
  for (const SpMat* V : {&V1, &V2}) {
    SpMat Vh = V->adjoint();
    r.unitarity = std::max(r.unitarity, compressed_deviation(SpMat(*V * Vh), ql, P));
    r.unitarity = std::max(r.unitarity, compressed_deviation(SpMat(Vh * *V), ql, P));
  }
  return r;
}

}  // namespace kg
