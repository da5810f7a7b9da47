#include "kgraph/pathrep.hpp"

#include <ostream>
#include <random>

namespace kg {

TruncatedRep::TruncatedRep(const KGraph& g, CategoricalCocycle c, Degree N, const Keep& keep)
    : g_(&g), c_(std::move(c)), N_(std::move(N)) {
  g.require_valid();
  if ((int)N_.size() != g.rank()) throw Error(Errc::DimensionMismatch, "cutoff length != k");
  for (auto& p : paths_up_to(g, std::nullopt, N_))
    if (!keep || keep(p)) basis_.push_back(p);
  for (int i = 0; i < dim(); ++i) index_[basis_[i]] = i;
}

TruncatedRep build(const KGraph& g, const CategoricalCocycle& c, const Degree& N) {
  return TruncatedRep(g, c, N);
}

int TruncatedRep::index(const Path& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

SpMat TruncatedRep::T(const Path& mu) const {
  std::vector<Eigen::Triplet<cd>> trip;
  Degree room = N_;
  for (size_t i = 0; i < room.size(); ++i) room[i] -= mu.degree[i];
  bool fits = std::all_of(room.begin(), room.end(), [](int x) { return x >= 0; });
  if (fits) {
    for (int col = 0; col < dim(); ++col) {
      const Path& nu = basis_[col];
      if (nu.range != mu.source || !deg::leq(nu.degree, room)) continue;
      int row = index(compose(*g_, mu, nu));
      if (row < 0) continue;
      trip.emplace_back(row, col, eval_categorical(*g_, c_, mu, nu).value());
    }
  }
  SpMat M(dim(), dim());
  M.setFromTriplets(trip.begin(), trip.end());
  return M;
}

SpMat TruncatedRep::compatible(const Degree& margin) const {
  std::vector<Eigen::Triplet<cd>> trip;
  for (int i = 0; i < dim(); ++i)
    if (deg::leq(deg::add(basis_[i].degree, margin), N_)) trip.emplace_back(i, i, cd{1.0, 0.0});
  SpMat P(dim(), dim());
  P.setFromTriplets(trip.begin(), trip.end());
  return P;
}

double compressed_deviation(const SpMat& A, const SpMat& B, const SpMat& P) {
  SpMat D = (A - B) * P;
  double m = 0.0;
  for (int k = 0; k < D.outerSize(); ++k)
    for (SpMat::InnerIterator it(D, k); it; ++it) m = std::max(m, std::abs(it.value()));
  return m;
}

namespace {
bool exactly_equal(const SpMat& A, const SpMat& B) {
  SpMat D = A - B;
  for (int k = 0; k < D.outerSize(); ++k)
    for (SpMat::InnerIterator it(D, k); it; ++it)
      if (it.value() != cd{0.0, 0.0}) return false;
  return true;
}
}  // namespace

TckReport check_tck(const TruncatedRep& rep, const Degree& margin) {
  const KGraph& g = rep.graph();
  if (!deg::leq(margin, rep.cutoff())) throw Error(Errc::MarginTooLarge, deg::str(margin));
  TckReport r;
  r.margin = margin;
  SpMat P = rep.compatible(margin);

  std::vector<SpMat> tv;
  for (int v = 0; v < g.num_vertices(); ++v) tv.push_back(rep.vertex_projection(v));
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!exactly_equal(tv[v], SpMat(tv[v].adjoint()))) r.tck1_exact = false;
    for (int w = 0; w < g.num_vertices(); ++w) {
      ++r.checks;
      SpMat prod = tv[v] * tv[w];
      SpMat want = v == w ? tv[v] : SpMat(rep.dim(), rep.dim());
      if (!exactly_equal(prod, want)) r.tck1_exact = false;
    }
  }

  auto paths = paths_up_to(g, std::nullopt, margin);
  std::map<Path, SpMat> T;
  for (const auto& p : paths) T[p] = rep.T(p);

  for (const auto& mu : paths) {
    for (const auto& nu : paths) {
      if (mu.source != nu.range || !deg::leq(deg::add(mu.degree, nu.degree), margin)) continue;
      ++r.checks;
      Path mn = compose(g, mu, nu);
      SpMat rhs = rep.T(mn) * eval_categorical(g, rep.cocycle(), mu, nu).value();
      r.tck2 = std::max(r.tck2, compressed_deviation(SpMat(T[mu] * T[nu]), rhs, P));
    }
    ++r.checks;
    SpMat lhs = SpMat(T[mu].adjoint()) * T[mu];
    r.tck3 = std::max(r.tck3, compressed_deviation(lhs, tv[mu.source], P));
  }

  std::map<Path, SpMat> q;
  for (const auto& p : paths) q[p] = T[p] * SpMat(T[p].adjoint());
  for (const auto& mu : paths) {
    for (const auto& nu : paths) {
      if (mu.range != nu.range) continue;
      ++r.checks;
      SpMat rhs(rep.dim(), rep.dim());
      for (const auto& lam : mce(g, mu, nu)) {
        SpMat tl = rep.T(lam);
        rhs += tl * SpMat(tl.adjoint());
      }
      r.tck4 = std::max(r.tck4, compressed_deviation(SpMat(q[mu] * q[nu]), rhs, P));
    }
  }
  return r;
}

SpMat represent(const SpanElement& x, const TruncatedRep& rep) {
  if (x.graph() && x.graph() != &rep.graph()) throw Error(Errc::GraphMismatch, "represent");
  SpMat M(rep.dim(), rep.dim());
  std::map<Path, SpMat> cache;
  auto T = [&](const Path& p) -> const SpMat& {
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, rep.T(p)).first;
    return it->second;
  };
  for (const auto& [k, s] : x.terms()) {
    SpMat term = T(k.first) * SpMat(T(k.second).adjoint());
    M += term * s.value();
  }
  M.prune(cd{0.0, 0.0});
  return M;
}

TruncatedRep restrict_to_sources(const TruncatedRep& rep, const std::set<int>& sources) {
  return TruncatedRep(rep.graph(), rep.cocycle(), rep.cutoff(),
                      [&](const Path& p) { return sources.count(p.source) > 0; });
}

NormResult spectral_norm(const SpMat& A, std::uint64_t seed, int max_iter, double tol) {
  NormResult res;
  const int n = (int)A.cols();
  if (n == 0 || A.nonZeros() == 0) {
    res.converged = true;
    return res;
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v(i) = cd{nd(rng), nd(rng)};
  v.normalize();
  SpMat Ah = A.adjoint();
  double lam = 0.0;
  for (int it = 1; it <= max_iter; ++it) {
    Eigen::VectorXcd w = Ah * (A * v);
    double nl = w.norm();
    res.iterations = it;
    if (nl == 0.0) {
      lam = 0.0;
      res.converged = true;
      break;
    }
    v = w / nl;
    if (std::abs(nl - lam) <= tol * std::max(1.0, nl)) {
      lam = nl;
      res.converged = true;
      break;
    }
    lam = nl;
  }
  res.value = std::sqrt(lam);
  return res;
}

NormResult compressed_norm(const SpanElement& x, const TruncatedRep& rep, const Degree& margin,
                           std::uint64_t seed) {
  SpMat P = rep.compatible(margin);
  SpMat A = P * represent(x, rep) * P;
  return spectral_norm(A, seed);
}

void write_matrix_market(std::ostream& os, const SpMat& A) {
  std::vector<std::tuple<int, int, cd>> entries;
  for (int k = 0; k < A.outerSize(); ++k)
    for (SpMat::InnerIterator it(A, k); it; ++it)
      if (it.value() != cd{0.0, 0.0}) entries.emplace_back((int)it.row(), (int)it.col(), it.value());
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  os << "%%MatrixMarket matrix coordinate complex general\n";
  os << A.rows() << ' ' << A.cols() << ' ' << entries.size() << '\n';
  auto old = os.precision(17);
  for (const auto& [r, c, z] : entries)
    os << r + 1 << ' ' << c + 1 << ' ' << z.real() << ' ' << z.imag() << '\n';
  os.precision(old);
}

}  // namespace kg
