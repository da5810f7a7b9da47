#pragma once

#include "kgraph/periodicity.hpp"

namespace kg {

struct SimplicityVerdict {
  enum Verdict { Simple, NotSimple, Unknown } verdict = Unknown;
  enum Grounds {
    AperiodicCofinal,
    NondegenerateCofinal,
    NotCofinal,
    NCTorusSpecialCase,
    InsufficientCriteria
  } grounds = InsufficientCriteria;

  int D = 0;
  CofinalityResult cofinality;
  std::optional<AperiodicityResult> aperiodicity;
  std::optional<ZkSubgroup> per;
  std::optional<Nondegeneracy> nondegeneracy;  // of cc* on Per, or on Z^k for the torus
  std::vector<std::string> notes;
};

const char* verdict_name(SimplicityVerdict::Verdict v);
const char* grounds_name(SimplicityVerdict::Grounds g);

SimplicityVerdict decide(const KGraph& g, const TwoCocycleZk& c, int D);

// Re-checks the certificates carried by a verdict from scratch.
bool revalidate(const KGraph& g, const TwoCocycleZk& c, const SimplicityVerdict& v);

// One vertex and one edge of each color.
bool is_nc_torus(const KGraph& g);

// Diagonal projection onto {h_nu : lo <= d(nu) <= N - margin}. Vectors with d(nu) >= lo
// satisfy the (CK) relations of degree <= lo in the path-space representation.
SpMat ck_window(const TruncatedRep& rep, const Degree& lo, const Degree& margin);

// V_m = sum over mu in r(lambda) Lambda^{p(m)} of q_lambda T_mu T*_{theta(mu)}.
SpMat build_vm(const TruncatedRep& rep, PeriodicityData& pd, const Path& lambda, const ZVec& m);

struct CommutationReport {
  double deviation = 0.0;  // max |V_m V_m' - cc*(m,m') V_m' V_m| on the window
  cd measured{0.0, 0.0};   // <V_m' V_m, V_m V_m'> / |V_m' V_m|^2
  cd expected{1.0, 0.0};
  double phase_error = 0.0;
  double unitarity = 0.0;  // max of |V V* - q_lambda|, |V* V - q_lambda| for both
};

CommutationReport check_vm_commutation(const TruncatedRep& rep, PeriodicityData& pd,
                                       const Path& lambda, const ZVec& m, const ZVec& m2,
                                       const Degree& margin);

}  // namespace kg
