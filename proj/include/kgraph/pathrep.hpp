#pragma once

#include "kgraph/spanalg.hpp"

#include <Eigen/SparseCore>

#include <iosfwd>
#include <set>

namespace kg {

using SpMat = Eigen::SparseMatrix<cd, Eigen::ColMajor>;

// Path-space representation on span{h_nu : d(nu) <= N}; T_mu h_nu = c(mu,nu) h_{mu nu},
// dropped when d(mu nu) exceeds N.
class TruncatedRep {
 public:
  using Keep = std::function<bool(const Path&)>;

  TruncatedRep(const KGraph& g, CategoricalCocycle c, Degree N, const Keep& keep = {});

  const KGraph& graph() const { return *g_; }
  const CategoricalCocycle& cocycle() const { return c_; }
  const Degree& cutoff() const { return N_; }
  const std::vector<Path>& basis() const { return basis_; }
  int dim() const { return (int)basis_.size(); }
  int index(const Path& p) const;

  SpMat T(const Path& mu) const;
  SpMat Tstar(const Path& mu) const { return SpMat(T(mu).adjoint()); }
  SpMat vertex_projection(int v) const { return T(g_->vertex(v)); }
  // Diagonal projection onto {h_nu : d(nu) <= N - margin}.
  SpMat compatible(const Degree& margin) const;

 private:
  const KGraph* g_;
  CategoricalCocycle c_;
  Degree N_;
  std::vector<Path> basis_;
  std::map<Path, int> index_;
};

TruncatedRep build(const KGraph& g, const CategoricalCocycle& c, const Degree& N);

struct TckReport {
  bool tck1_exact = true;
  double tck2 = 0.0, tck3 = 0.0, tck4 = 0.0;
  long long checks = 0;
  Degree margin;
  double max_deviation() const { return std::max({tck2, tck3, tck4}); }
};

TckReport check_tck(const TruncatedRep& rep, const Degree& margin);

SpMat represent(const SpanElement& x, const TruncatedRep& rep);

// Largest |entry| of (A - B) restricted to the columns kept by P.
double compressed_deviation(const SpMat& A, const SpMat& B, const SpMat& P);

// Subrepresentation on basis paths whose source lies in `sources`.
TruncatedRep restrict_to_sources(const TruncatedRep& rep, const std::set<int>& sources);

struct NormResult {
  double value = 0.0;
  bool converged = false;
  int iterations = 0;
};

// Spectral norm of P A P by power iteration on its Gram matrix.
NormResult spectral_norm(const SpMat& A, std::uint64_t seed = 0, int max_iter = 10000,
                         double tol = 1e-9);
NormResult compressed_norm(const SpanElement& x, const TruncatedRep& rep, const Degree& margin,
                           std::uint64_t seed = 0);

void write_matrix_market(std::ostream& os, const SpMat& A);

}  // namespace kg
