#pragma once

#include "kgraph/skeleton.hpp"

#include <functional>
#include <map>

namespace kg {

// c(m,n) = exp(2 pi i sum theta_ij m_i n_j), angles stored as fractions of a turn.
class TwoCocycleZk {
 public:
  TwoCocycleZk() = default;
  explicit TwoCocycleZk(int k);
  TwoCocycleZk(int k, std::vector<std::vector<Phase>> theta);

  static TwoCocycleZk trivial(int k) { return TwoCocycleZk(k); }
  // Only theta_21 = t nonzero; the standard rotation-algebra twist on Z^2.
  static TwoCocycleZk rotation(Phase t);

  int rank() const { return k_; }
  const Phase& theta(int i, int j) const { return theta_[i][j]; }
  void set_theta(int i, int j, Phase p) { theta_[i][j] = p; }
  bool exact() const;
  bool is_skew() const;

  Phase eval(const ZVec& m, const ZVec& n) const;
  Phase eval(const Degree& m, const Degree& n) const;

 private:
  int k_ = 0;
  std::vector<std::vector<Phase>> theta_;
};

Phase eval(const TwoCocycleZk& c, const ZVec& m, const ZVec& n);
TwoCocycleZk cc_star(const TwoCocycleZk& c);

// Pullback along d, optionally twisted by the coboundary of edge weights.
struct CategoricalCocycle {
  TwoCocycleZk pullback;
  std::map<int, Phase> weights;  // edge index -> phase

  CategoricalCocycle() = default;
  explicit CategoricalCocycle(TwoCocycleZk c) : pullback(std::move(c)) {}
  bool exact() const;
  Phase b(const Path& p) const;
};

Phase eval_categorical(const KGraph& g, const CategoricalCocycle& c, const Path& mu,
                       const Path& nu);

struct CocycleReport {
  bool ok = true;
  long long triples = 0;
  std::string witness;
};

using CocycleFn = std::function<Phase(const Path&, const Path&)>;
CocycleReport validate_cocycle_identity(const KGraph& g, const CocycleFn& c,
                                        const Degree& bound);
CocycleReport validate_cocycle_identity(const KGraph& g, const CategoricalCocycle& c,
                                        const Degree& bound);

// Integer row Hermite form; zero rows dropped.
std::vector<ZVec> hermite_rows(std::vector<ZVec> rows);

class ZkSubgroup {
 public:
  ZkSubgroup() = default;
  ZkSubgroup(int k, std::vector<ZVec> generators);
  static ZkSubgroup full(int k);

  int ambient() const { return k_; }
  int rank() const { return (int)basis_.size(); }
  const std::vector<ZVec>& basis() const { return basis_; }
  const std::vector<ZVec>& generators() const { return gens_; }
  bool contains(const ZVec& v) const;
  bool operator==(const ZkSubgroup& o) const { return k_ == o.k_ && basis_ == o.basis_; }

 private:
  int k_ = 0;
  std::vector<ZVec> gens_;
  std::vector<ZVec> basis_;
};

struct Nondegeneracy {
  enum Kind { Nondegenerate, Degenerate, NumericallyInconclusive } kind = Nondegenerate;
  ZVec witness;                  // nonzero m in P pairing trivially with P, when Degenerate
  double smallest_sv = -1.0;     // float path only
  bool exact = true;
  std::string method;
};

const char* kind_name(Nondegeneracy::Kind k);

// c must already be skew (compose with cc_star first).
Nondegeneracy is_nondegenerate_on(const TwoCocycleZk& c, const ZkSubgroup& P);

// Best rational approximation with denominator <= max_den, if within tol.
std::optional<Q> rationalize(double x, long long max_den, double tol);

}  // namespace kg
