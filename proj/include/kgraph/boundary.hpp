#pragma once

#include "kgraph/pathrep.hpp"

#include <set>

namespace kg {

// Initial segments of {lambda} (principal) or of {mu kappa^n : n >= 0} (periodic).
struct BoundedFilter {
  enum Kind { Principal, Periodic } kind = Principal;
  Path head;   // lambda, or the prefix mu
  Path cycle;  // kappa with r = s = s(mu); unused when principal

  static BoundedFilter principal(const Path& lambda);
  static BoundedFilter periodic(const Path& mu, const Path& kappa);

  int range() const { return head.range; }
  bool is_ultrafilter() const;
};

// The unique member of degree n, if any.
std::optional<Path> filter_member(const KGraph& g, const BoundedFilter& S, const Degree& n);
bool filter_contains(const KGraph& g, const BoundedFilter& S, const Path& lambda);
std::vector<Path> filter_members(const KGraph& g, const BoundedFilter& S, const Degree& bound);
// Sources of members, scanned far enough to pass through every vertex on the cycle.
std::set<int> filter_sources(const KGraph& g, const BoundedFilter& S);
bool same_members(const KGraph& g, const BoundedFilter& a, const BoundedFilter& b,
                  const Degree& bound);
std::string filter_str(const KGraph& g, const BoundedFilter& S);

BoundedFilter shift_filter(const KGraph& g, const Path& mu, const BoundedFilter& S);

using Family = std::set<PathSet>;

struct Satiation {
  Family sets;
  Degree D;
  bool bounded = true;
  int rounds = 0;

  bool contains(const PathSet& F) const { return sets.count(F) > 0; }
  std::vector<PathSet> at(int v) const;
};

// Least family containing Ee closed under (S1)-(S4), all degrees kept <= D.
Satiation satiate(const KGraph& g, const std::vector<PathSet>& Ee, const Degree& D);

enum class Membership { Yes, No, OutOfUniverse };
const char* membership_name(Membership m);
Membership is_in_satiation(const KGraph& g, const PathSet& F, const Satiation& sat);
Membership is_in_satiation(const KGraph& g, const PathSet& F, const std::vector<PathSet>& Ee,
                           const Degree& D);

bool is_compatible(const KGraph& g, const BoundedFilter& S, const Satiation& sat);
bool is_compatible(const KGraph& g, const BoundedFilter& S, const std::vector<PathSet>& Ee,
                   const Degree& D);

struct DeltaVerdict {
  enum Kind { Zero, Nonzero, Inconclusive } kind = Inconclusive;
  std::optional<BoundedFilter> certificate;
  std::string reason;
};
const char* delta_kind_name(DeltaVerdict::Kind k);

// Decides whether Delta^F vanishes in the relative algebra for Ee. v is r(F) (needed when F
// is empty).
DeltaVerdict delta_vanishes(const KGraph& g, const PathSet& F, int v,
                            const std::vector<PathSet>& Ee, const Degree& D);
DeltaVerdict delta_vanishes(const KGraph& g, const PathSet& F, int v, const Satiation& sat);

TruncatedRep restrict_to_filter_target(const TruncatedRep& rep, const BoundedFilter& S);

// The family {v Lambda^{e_i}} of Cuntz-Krieger generators.
std::vector<PathSet> ck_generators(const KGraph& g);

}  // namespace kg
