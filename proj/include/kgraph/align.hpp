#pragma once

#include "kgraph/skeleton.hpp"

#include <set>

namespace kg {

using PathSet = std::set<Path>;

// Minimal common extensions: paths of degree d(mu) v d(nu) extending both.
PathSet mce(const KGraph& g, const Path& mu, const Path& nu);

// Tails alpha with lambda.alpha in MCE(lambda, mu) for some mu in E.
PathSet ext(const KGraph& g, const Path& lambda, const PathSet& E);

// E is exhaustive at v when every lambda in v.Lambda meets some member of E.
// Only lambda with degree <= join of d(E) needs checking.
bool is_exhaustive(const KGraph& g, const PathSet& E, int v);
// Returns a lambda with no common extension with E, if there is one.
std::optional<Path> exhaustive_witness(const KGraph& g, const PathSet& E, int v);

PathSet pi_closure(const KGraph& g, const PathSet& E);

// T(E;mu) = { mu' != s(mu) : mu.mu' in E }.
PathSet t_set(const KGraph& g, const PathSet& E, const Path& mu);

// Common range of a nonempty set, or RangeMismatch.
int common_range(const PathSet& E);
Degree join_degree(const KGraph& g, const PathSet& E);

// True when lambda = mu.lambda' for some mu in E.
bool in_E_Lambda(const KGraph& g, const Path& lambda, const PathSet& E);
bool is_prefix(const KGraph& g, const Path& mu, const Path& lambda);

}  // namespace kg
