#include "kgraph/io.hpp"
#include "kgraph/simplicity.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace kg;

namespace {

struct Opts {
  std::string graph, cocycle, ee, format = "json";
  int depth = 4;
  std::string cutoff, margin;
  std::uint64_t seed = 0;
  std::vector<std::string> positional;
  std::string m, m2, lambda, vertex;
};

Degree parse_degree(const std::string& s, int k, const char* what) {
  std::vector<int> xs;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, ',');) {
    try {
      xs.push_back(std::stoi(part));
    } catch (...) {
      throw Error(Errc::Parse, std::string("--") + what + ": bad integer '" + part + "'");
    }
  }
  if (xs.size() == 1 && k > 1) xs.assign(k, xs[0]);
  if ((int)xs.size() != k)
    throw Error(Errc::Parse, std::string("--") + what + ": expected " + std::to_string(k) + " entries");
  for (int x : xs)
    if (x < 0) throw Error(Errc::Parse, std::string("--") + what + ": entries must be >= 0");
  return xs;
}

ZVec parse_zvec(const std::string& s, int k, const char* what) {
  ZVec out;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, ',');) {
    try {
      out.push_back(std::stoll(part));
    } catch (...) {
      throw Error(Errc::Parse, std::string("--") + what + ": bad integer '" + part + "'");
    }
  }
  if ((int)out.size() != k)
    throw Error(Errc::Parse, std::string("--") + what + ": expected " + std::to_string(k) + " entries");
  return out;
}

json zvec_json(const ZVec& v) { return json(v); }

KGraph load_graph(const Opts& o) {
  if (o.graph.empty()) throw Error(Errc::Parse, "--graph is required");
  return graph_from_json(read_json_file(o.graph));
}

CategoricalCocycle load_cocycle(const Opts& o, const KGraph& g) {
  if (o.cocycle.empty()) return CategoricalCocycle(TwoCocycleZk::trivial(g.rank()));
  return cocycle_from_json(read_json_file(o.cocycle), g);
}

std::vector<PathSet> load_ee(const Opts& o, const KGraph& g, bool ck_default) {
  if (o.ee.empty()) return ck_default ? ck_generators(g) : std::vector<PathSet>{};
  return ee_from_json(read_json_file(o.ee), g);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_validate(const Opts& o) {
  KGraph g = load_graph(o);
  const auto& r = g.report();
  json j;
  j["ok"] = r.ok();
  j["squares_ok"] = r.squares_ok;
  j["cube_ok"] = r.cube_ok;
  j["no_sources"] = r.no_sources;
  j["square_witnesses"] = r.square_witnesses;
  j["cube_witnesses"] = r.cube_witnesses;
  j["source_witnesses"] = r.source_witnesses;
  j["vertices"] = r.num_vertices;
  j["edges"] = r.num_edges;
  j["squares"] = r.num_squares;
  j["weak_components"] = r.weak_components;
  j["strongly_connected"] = r.strongly_connected;
  emit(j);
  std::cerr << (r.ok() ? "valid" : "invalid");
  if (!r.square_witnesses.empty()) std::cerr << ": " << r.square_witnesses.front();
  else if (!r.cube_witnesses.empty()) std::cerr << ": " << r.cube_witnesses.front();
  std::cerr << "\n";
  return r.ok() ? 0 : 2;
}

int cmd_mce(const Opts& o) {
  KGraph g = load_graph(o);
  g.require_valid();
  if (o.positional.size() != 2) throw Error(Errc::Parse, "mce takes two paths");
  Path mu = parse_path(g, o.positional[0]);
  Path nu = parse_path(g, o.positional[1]);
  auto out = mce(g, mu, nu);
  emit({{"mu", g.str(mu)}, {"nu", g.str(nu)}, {"mce", pathset_json(g, out)}});
  std::cerr << "|MCE| = " << out.size() << "\n";
  return 0;
}

int cmd_satiate(const Opts& o) {
  KGraph g = load_graph(o);
  auto Ee = load_ee(o, g, false);
  Degree D = deg::filled(g.rank(), o.depth);
  Satiation sat = satiate(g, Ee, D);
  json sets = json::array();
  for (const auto& F : sat.sets) sets.push_back(pathset_json(g, F));
  emit({{"sets", sets}, {"bounds", {{"D", D}}}, {"rounds", sat.rounds}, {"bounded", true}});
  std::cerr << sat.sets.size() << " sets in the bounded satiation at D=" << deg::str(D) << "\n";
  return 0;
}

int cmd_ideals(const Opts& o) {
  KGraph g = load_graph(o);
  auto Ee = load_ee(o, g, true);
  Degree D = deg::filled(g.rank(), o.depth);
  IdealLattice lat = list_gauge_invariant_ideals(g, Ee, D);
  json pairs = json::array();
  for (const auto& p : lat.pairs) {
    json H = json::array();
    for (int v : p.H) H.push_back(g.vertex_name(v));
    json B = json::array();
    for (const auto& E : p.B_generators) B.push_back(pathset_json(*p.quotient, E));
    pairs.push_back({{"H", H}, {"B_generators", B}, {"exactness", p.exactness}});
  }
  emit({{"ideals", pairs},
        {"hasse", lat.hasse},
        {"exactness", lat.exactness},
        {"truncated", lat.truncated},
        {"bounds", {{"D", D}}}});
  std::cerr << lat.pairs.size() << " gauge-invariant ideals (" << lat.exactness << ")\n";
  return 0;
}

int cmd_per(const Opts& o) {
  KGraph g = load_graph(o);
  PeriodicityData pd = per_group(g, o.depth);
  AperiodicityResult ap = is_aperiodic(g, o.depth);
  CofinalityResult cf = is_cofinal(g);
  json basis = json::array();
  for (const auto& b : pd.per.basis()) basis.push_back(zvec_json(b));
  json h = json::array();
  for (int v : pd.h_per) h.push_back(g.vertex_name(v));
  json j{{"per_basis", basis},
         {"aperiodic", aperiodic_name(ap.kind)},
         {"cofinal", cf.cofinal},
         {"h_per", h},
         {"depth", o.depth},
         {"probable_sim", pd.probable}};
  if (ap.pair) j["periodic_pair"] = {g.str(ap.pair->first), g.str(ap.pair->second)};
  if (!cf.cofinal) {
    j["not_cofinal_vertex"] = g.vertex_name(cf.vertex);
    j["cofinality_witness"] = filter_json(g, *cf.witness);
  }
  emit(j);
  std::cerr << "Per rank " << pd.per.rank() << ", aperiodic=" << aperiodic_name(ap.kind)
            << ", cofinal=" << (cf.cofinal ? "yes" : "no") << "\n";
  return 0;
}

int cmd_simple(const Opts& o) {
  KGraph g = load_graph(o);
  CategoricalCocycle c = load_cocycle(o, g);
  SimplicityVerdict v = decide(g, c.pullback, o.depth);
  bool ok = revalidate(g, c.pullback, v);
  json cert;
  cert["cofinal"] = v.cofinality.cofinal;
  if (!v.cofinality.cofinal) {
    cert["vertex"] = g.vertex_name(v.cofinality.vertex);
    cert["witness"] = filter_json(g, *v.cofinality.witness);
  }
  if (v.aperiodicity) {
    cert["aperiodic"] = aperiodic_name(v.aperiodicity->kind);
    cert["not_sim_witnesses"] = v.aperiodicity->witnesses.size();
  }
  if (v.per) {
    json basis = json::array();
    for (const auto& b : v.per->basis()) basis.push_back(zvec_json(b));
    cert["per_basis"] = basis;
  }
  if (v.nondegeneracy) {
    cert["nondegeneracy"] = kind_name(v.nondegeneracy->kind);
    cert["method"] = v.nondegeneracy->method;
    if (!v.nondegeneracy->witness.empty()) cert["degeneracy_witness"] = v.nondegeneracy->witness;
    if (v.nondegeneracy->smallest_sv >= 0) cert["smallest_sv"] = v.nondegeneracy->smallest_sv;
  }
  emit({{"verdict", verdict_name(v.verdict)},
        {"grounds", grounds_name(v.grounds)},
        {"certificates", cert},
        {"revalidated", ok},
        {"notes", v.notes},
        {"bounds", {{"D", o.depth}}}});
  std::cerr << verdict_name(v.verdict) << " (" << grounds_name(v.grounds) << ")\n";
  return v.verdict == SimplicityVerdict::Unknown ? 3 : 0;
}

int cmd_rep_check(const Opts& o) {
  KGraph g = load_graph(o);
  CategoricalCocycle c = load_cocycle(o, g);
  Degree N = parse_degree(o.cutoff.empty() ? "3" : o.cutoff, g.rank(), "cutoff");
  Degree M = parse_degree(o.margin.empty() ? "1" : o.margin, g.rank(), "margin");
  TruncatedRep rep(g, c, N);
  TckReport r = check_tck(rep, M);
  NormResult nv = compressed_norm(SpanElement::t(g, g.vertex(0)), rep, M, o.seed);
  bool ok = r.tck1_exact && r.max_deviation() <= 1e-12;
  emit({{"tck1_exact", r.tck1_exact},
        {"tck2", r.tck2},
        {"tck3", r.tck3},
        {"tck4", r.tck4},
        {"checks", r.checks},
        {"dim", rep.dim()},
        {"vertex_norm", nv.value},
        {"ok", ok},
        {"bounds", {{"N", N}, {"margin", M}}},
        {"seed", o.seed}});
  std::cerr << "max TCK deviation " << r.max_deviation() << " over " << r.checks << " checks\n";
  return ok ? 0 : 2;
}

int cmd_vm_check(const Opts& o) {
  KGraph g = load_graph(o);
  CategoricalCocycle c = load_cocycle(o, g);
  const int k = g.rank();
  Degree N = parse_degree(o.cutoff.empty() ? "6" : o.cutoff, k, "cutoff");
  Degree M = parse_degree(o.margin.empty() ? "2" : o.margin, k, "margin");
  if (o.m.empty() || o.m2.empty()) throw Error(Errc::Parse, "--m and --m2 are required");
  ZVec m = parse_zvec(o.m, k, "m");
  ZVec m2 = parse_zvec(o.m2, k, "m2");
  PeriodicityData pd = per_group(g, o.depth);
  if (pd.h_per.empty()) throw Error(Errc::VertexNotInHPer, "H_Per is empty");
  Path lambda = o.lambda.empty() ? g.vertex(*pd.h_per.begin()) : parse_path(g, o.lambda);
  TruncatedRep rep(g, c, N);
  CommutationReport r = check_vm_commutation(rep, pd, lambda, m, m2, M);
  bool ok = r.deviation <= 1e-9 && r.phase_error <= 1e-10;
  emit({{"lambda", g.str(lambda)},
        {"m", m},
        {"m2", m2},
        {"deviation", r.deviation},
        {"measured_phase", {r.measured.real(), r.measured.imag()}},
        {"expected_phase", {r.expected.real(), r.expected.imag()}},
        {"phase_error", r.phase_error},
        {"unitarity", r.unitarity},
        {"ok", ok},
        {"bounds", {{"D", o.depth}, {"N", N}, {"margin", M}}}});
  std::cerr << "V_m commutation deviation " << r.deviation << "\n";
  return ok ? 0 : 2;
}

int cmd_delta(const Opts& o) {
  KGraph g = load_graph(o);
  auto Ee = load_ee(o, g, false);
  Degree D = deg::filled(g.rank(), o.depth);
  PathSet F;
  std::string list = o.positional.empty() ? "" : o.positional[0];
  std::stringstream ss(list);
  for (std::string part; std::getline(ss, part, ',');)
    if (!part.empty()) F.insert(parse_path(g, part));
  int v;
  if (!o.vertex.empty()) v = g.vertex_index(o.vertex);
  else if (!F.empty()) v = F.begin()->range;
  else throw Error(Errc::Parse, "an empty F needs --vertex");
  DeltaVerdict d = delta_vanishes(g, F, v, Ee, D);
  json j{{"F", pathset_json(g, F)},
         {"vertex", g.vertex_name(v)},
         {"verdict", delta_kind_name(d.kind)},
         {"reason", d.reason},
         {"bounds", {{"D", D}}}};
  if (d.certificate) j["certificate"] = filter_json(g, *d.certificate);
  emit(j);
  std::cerr << "Delta^F: " << delta_kind_name(d.kind) << "\n";
  return d.kind == DeltaVerdict::Inconclusive ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-graph algebra toolkit"};
  app.require_subcommand(1);
  Opts o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--graph", o.graph, "graph file (JSON)");
    sub->add_option("--cocycle", o.cocycle, "cocycle file (JSON)");
    sub->add_option("--ee", o.ee, "family of exhaustive sets (JSON)");
    sub->add_option("--depth", o.depth, "depth bound D")->check(CLI::NonNegativeNumber);
    sub->add_option("--cutoff", o.cutoff, "truncation N, e.g. 6 or 6,6");
    sub->add_option("--margin", o.margin, "compatible-subspace margin");
    sub->add_option("--seed", o.seed, "seed for randomized checks");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json"}));
  };
  std::map<std::string, std::function<int(const Opts&)>> run{
      {"validate", cmd_validate}, {"mce", cmd_mce},         {"satiate", cmd_satiate},
      {"ideals", cmd_ideals},     {"per", cmd_per},         {"simple", cmd_simple},
      {"rep-check", cmd_rep_check}, {"vm-check", cmd_vm_check}, {"delta", cmd_delta}};
  const std::map<std::string, std::string> help{
      {"validate", "check the square and cube conditions"},
      {"mce", "minimal common extensions of two paths"},
      {"satiate", "bounded satiation of --ee"},
      {"ideals", "gauge-invariant ideals for --ee (CK family by default)"},
      {"per", "periodicity group, H_Per and aperiodicity"},
      {"simple", "simplicity verdict with certificates"},
      {"rep-check", "relations in the truncated path-space representation"},
      {"vm-check", "twisted commutation of V_m and V_m'"},
      {"delta", "whether Delta^F vanishes in the relative algebra"}};
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, fn] : run) {
    auto* sub = app.add_subcommand(name, help.at(name));
    common(sub);
    subs[name] = sub;
  }
  subs["mce"]->add_option("paths", o.positional, "mu nu")->expected(2);
  subs["delta"]->add_option("F", o.positional, "comma-separated paths")->expected(0, 1);
  subs["delta"]->add_option("--vertex", o.vertex, "r(F), needed when F is empty");
  subs["vm-check"]->add_option("--m", o.m, "m in Per, e.g. 1,-1");
  subs["vm-check"]->add_option("--m2", o.m2, "m' in Per");
  subs["vm-check"]->add_option("--lambda", o.lambda, "path with r(lambda) in H_Per");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  try {
    for (const auto& [name, sub] : subs)
      if (sub->parsed()) return run[name](o);
  } catch (const Error& e) {
    std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
    return e.code() == Errc::InvalidGraph ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
