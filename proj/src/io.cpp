#include "kgraph/io.hpp"

#include <fstream>
#include <sstream>

namespace kg {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw Error(Errc::Parse, where + ": " + what);
}

// The message without its leading error-code tag.
std::string bare(const Error& e) {
  std::string m = e.what(), tag = std::string(errc_name(e.code())) + ": ";
  return m.rfind(tag, 0) == 0 ? m.substr(tag.size()) : m;
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where + "." + key, "missing");
  return *it;
}

std::string str_field(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_string()) bad(where + "." + key, "expected a string");
  return v.get<std::string>();
}

Phase phase_of(const json& v, const std::string& where) {
  try {
    if (v.is_string()) return Phase::parse(v.get<std::string>());
    if (v.is_number_integer()) return Phase(Q(v.get<long long>()));
    if (v.is_number()) return Phase::real(v.get<double>());
  } catch (const Error& e) {
    bad(where, e.what());
  }
  bad(where, "expected a rational string or a number");
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Parse, path + ": cannot open");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(Errc::Parse, path + ": " + e.what());
  }
}

KGraph graph_from_json(const json& j) {
  const json& rk = field(j, "rank", "graph");
  if (!rk.is_number_integer() || rk.get<int>() < 1) bad("graph.rank", "expected a positive integer");
  KGraph g(rk.get<int>());
  const json& vs = field(j, "vertices", "graph");
  if (!vs.is_array()) bad("graph.vertices", "expected an array");
  for (size_t i = 0; i < vs.size(); ++i) {
    if (!vs[i].is_string()) bad("graph.vertices[" + std::to_string(i) + "]", "expected a string");
    g.add_vertex(vs[i].get<std::string>());
  }
  const json& es = field(j, "edges", "graph");
  if (!es.is_array()) bad("graph.edges", "expected an array");
  for (size_t i = 0; i < es.size(); ++i) {
    std::string where = "graph.edges[" + std::to_string(i) + "]";
    const json& col = field(es[i], "color", where);
    if (!col.is_number_integer()) bad(where + ".color", "expected an integer");
    try {
      g.add_edge(str_field(es[i], "id", where), col.get<int>(), str_field(es[i], "range", where),
                 str_field(es[i], "source", where));
    } catch (const Error& e) {
      bad(where, bare(e));
    }
  }
  if (j.contains("squares")) {
    const json& ss = j["squares"];
    if (!ss.is_array()) bad("graph.squares", "expected an array");
    for (size_t i = 0; i < ss.size(); ++i) {
      std::string where = "graph.squares[" + std::to_string(i) + "]";
      try {
        g.add_square(str_field(ss[i], "gi", where), str_field(ss[i], "fj", where),
                     str_field(ss[i], "fj2", where), str_field(ss[i], "gi2", where));
      } catch (const Error& e) {
        bad(where, bare(e));
      }
    }
  }
  g.finalize();
  return g;
}

CategoricalCocycle cocycle_from_json(const json& j, const KGraph& g) {
  if (j.contains("type") && j["type"] != "bicharacter")
    bad("cocycle.type", "only \"bicharacter\" is supported");
  const int k = g.rank();
  const json& th = field(j, "theta", "cocycle");
  if (!th.is_array() || (int)th.size() != k) bad("cocycle.theta", "expected a k x k array");
  std::vector<std::vector<Phase>> theta(k, std::vector<Phase>(k));
  for (int r = 0; r < k; ++r) {
    if (!th[r].is_array() || (int)th[r].size() != k)
      bad("cocycle.theta[" + std::to_string(r) + "]", "expected " + std::to_string(k) + " entries");
    for (int c = 0; c < k; ++c)
      theta[r][c] = phase_of(th[r][c], "cocycle.theta[" + std::to_string(r) + "][" +
                                           std::to_string(c) + "]");
  }
  CategoricalCocycle out(TwoCocycleZk(k, theta));
  if (j.contains("edge_weights")) {
    const json& w = j["edge_weights"];
    if (!w.is_object()) bad("cocycle.edge_weights", "expected an object");
    for (auto it = w.begin(); it != w.end(); ++it) {
      std::string where = "cocycle.edge_weights." + it.key();
      int e;
      try {
        e = g.edge_index(it.key());
      } catch (const Error& err) {
        bad(where, err.what());
      }
      out.weights[e] = phase_of(it.value(), where);
    }
  }
  return out;
}

std::vector<PathSet> ee_from_json(const json& j, const KGraph& g) {
  if (!j.is_array()) bad("ee", "expected an array");
  std::vector<PathSet> out;
  for (size_t i = 0; i < j.size(); ++i) {
    std::string where = "ee[" + std::to_string(i) + "]";
    std::string vname = str_field(j[i], "vertex", where);
    int v;
    try {
      v = g.vertex_index(vname);
    } catch (const Error& e) {
      bad(where + ".vertex", e.what());
    }
    const json& ps = field(j[i], "paths", where);
    if (!ps.is_array()) bad(where + ".paths", "expected an array of edge-id words");
    PathSet E;
    for (size_t t = 0; t < ps.size(); ++t) {
      std::string pw = where + ".paths[" + std::to_string(t) + "]";
      if (!ps[t].is_array()) bad(pw, "expected an array of edge ids");
      std::vector<std::string> ids;
      for (const auto& x : ps[t]) {
        if (!x.is_string()) bad(pw, "edge ids must be strings");
        ids.push_back(x.get<std::string>());
      }
      Path p;
      try {
        p = ids.empty() ? g.vertex(v) : g.path_from_ids(ids);
      } catch (const Error& e) {
        bad(pw, e.what());
      }
      if (p.range != v) bad(pw, "range is not " + vname);
      E.insert(p);
    }
    out.push_back(std::move(E));
  }
  return out;
}

Path parse_path(const KGraph& g, const std::string& s) {
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.vertex_name(v) == s) return g.vertex(v);
  std::vector<std::string> ids;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, '.');) ids.push_back(part);
  return g.path_from_ids(ids);
}

json path_json(const KGraph& g, const Path& p) { return g.str(p); }

json pathset_json(const KGraph& g, const PathSet& E) {
  json a = json::array();
  for (const auto& p : E) a.push_back(g.str(p));
  return a;
}

json filter_json(const KGraph& g, const BoundedFilter& S) {
  json j;
  j["kind"] = S.kind == BoundedFilter::Principal ? "principal" : "periodic";
  j["head"] = g.str(S.head);
  if (S.kind == BoundedFilter::Periodic) j["cycle"] = g.str(S.cycle);
  return j;
}

}  // namespace kg
