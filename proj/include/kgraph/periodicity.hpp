#pragma once

#include "kgraph/ideals.hpp"
#include "kgraph/twist.hpp"

namespace kg {

struct SimVerdict {
  enum Kind { Sim, NotSim, ProbableSim } kind = ProbableSim;
  std::optional<Path> tau;  // MCE(mu tau, nu tau) is empty, when NotSim
  int ultrafilters = 0;     // how many eventually periodic infinite paths were compared
};
const char* sim_name(SimVerdict::Kind k);

// Periodic ultrafilters at v with d(prefix) + d(cycle) <= D.1 and d(cycle) >= 1.
std::vector<BoundedFilter> periodic_ultrafilters(const KGraph& g, int v, int D);

// Whether mu x = nu x for every infinite path x, decided by an MCE witness search up to D.1
// and comparison on the periodic ultrafilters above.
SimVerdict sim_check(const KGraph& g, const Path& mu, const Path& nu, int D);
SimVerdict sim_check(const KGraph& g, const Path& mu, const Path& nu, int D,
                     const std::vector<BoundedFilter>& ultras);

// p(m) - q(m) = m with p, q >= 0; p(m) = n when a context degree n >= m is given.
std::pair<Degree, Degree> pq(const ZVec& m, const std::optional<Degree>& n = std::nullopt);

using ThetaTable = std::map<Path, Path>;

struct PeriodicityData {
  int D = 0;
  ZkSubgroup per;
  VertexSet h_per;
  std::vector<std::pair<Path, Path>> sim_pairs;  // mu < nu, Sim
  std::map<std::pair<Degree, Degree>, ThetaTable> theta;
  bool probable = false;  // some pair stayed ProbableSim
};

PeriodicityData per_group(const KGraph& g, int D);

// theta_{m,n} on H_Per Lambda^m; cached in pd.
const ThetaTable& theta_table(const KGraph& g, PeriodicityData& pd, const Degree& m,
                              const Degree& n);

struct AperiodicityResult {
  enum Kind { Aperiodic, Periodic, Unknown } kind = Unknown;
  std::optional<std::pair<Path, Path>> pair;  // a Sim pair when Periodic
  // (mu, nu, tau) with MCE(mu tau, nu tau) empty, one per distinct pair checked.
  std::vector<std::tuple<Path, Path, Path>> witnesses;
  int D = 0;
};
const char* aperiodic_name(AperiodicityResult::Kind k);
AperiodicityResult is_aperiodic(const KGraph& g, int D);

struct CofinalityResult {
  bool cofinal = true;
  int vertex = -1;                       // v never reached from the witness path
  std::optional<BoundedFilter> witness;  // eventually periodic infinite path
};
CofinalityResult is_cofinal(const KGraph& g);
// Vertices w with v Lambda w nonempty.
VertexSet backward_reach(const KGraph& g, int v);

struct GeneralizedCycle {
  Path mu, nu, tau;         // tau: the entrance, MCE(mu, nu tau) empty
  bool cycle_bounded = true;  // the forall-tau condition was only checked up to D
};
std::optional<GeneralizedCycle> find_generalized_cycle_with_entrance(const KGraph& g, int D);

}  // namespace kg
