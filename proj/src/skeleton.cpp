#include "kgraph/skeleton.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace kg {

KGraph::KGraph(int rank) : k_(rank) {
  if (rank < 1) throw Error(Errc::Parse, "rank must be at least 1");
}

int KGraph::add_vertex(const std::string& id) {
  if (vindex_.count(id)) throw Error(Errc::Parse, "duplicate vertex '" + id + "'");
  vindex_[id] = (int)vertices_.size();
  vertices_.push_back(id);
  return (int)vertices_.size() - 1;
}

int KGraph::add_edge(const std::string& id, int color, const std::string& range,
                     const std::string& source) {
  if (eindex_.count(id)) throw Error(Errc::Parse, "duplicate edge '" + id + "'");
  if (color < 1 || color > k_)
    throw Error(Errc::Parse, "edge '" + id + "' has color " + std::to_string(color) +
                                 " outside 1.." + std::to_string(k_));
  Edge e{id, color - 1, vertex_index(range), vertex_index(source)};
  eindex_[id] = (int)edges_.size();
  edges_.push_back(e);
  return (int)edges_.size() - 1;
}

void KGraph::add_square(const std::string& g, const std::string& f, const std::string& f2,
                        const std::string& g2) {
  squares_.push_back({edge_index(g), edge_index(f), edge_index(f2), edge_index(g2)});
}

int KGraph::vertex_index(const std::string& id) const {
  auto it = vindex_.find(id);
  if (it == vindex_.end()) throw Error(Errc::Parse, "unknown vertex '" + id + "'");
  return it->second;
}

int KGraph::edge_index(const std::string& id) const {
  auto it = eindex_.find(id);
  if (it == eindex_.end()) throw Error(Errc::Parse, "unknown edge '" + id + "'");
  return it->second;
}

void KGraph::finalize() {
  in_.assign(vertices_.size(), std::vector<std::vector<int>>(k_));
  for (int e = 0; e < num_edges(); ++e) in_[edges_[e].range][edges_[e].color].push_back(e);
  swap_.clear();
  for (const auto& s : squares_) {
    swap_.emplace(key(s.g, s.f), std::make_pair(s.f2, s.g2));
    swap_.emplace(key(s.f2, s.g2), std::make_pair(s.g, s.f));
  }
  finalized_ = true;
  build_report();
}

bool KGraph::swap_pair(int x, int y, int& ox, int& oy) const {
  auto it = swap_.find(key(x, y));
  if (it == swap_.end()) return false;
  ox = it->second.first;
  oy = it->second.second;
  return true;
}

void KGraph::require_valid() const {
  if (!finalized_) throw Error(Errc::InvalidGraph, "graph not finalized");
  if (!valid()) {
    std::string w = !report_.square_witnesses.empty() ? report_.square_witnesses.front()
                    : !report_.cube_witnesses.empty() ? report_.cube_witnesses.front()
                                                      : "";
    throw Error(Errc::InvalidGraph, w);
  }
}

Path KGraph::vertex(int v) const { return Path{deg::zero(k_), {}, v, v}; }

Path KGraph::edge_path(int e) const {
  Degree d = deg::unit(k_, edges_[e].color);
  return Path{d, {e}, edges_[e].range, edges_[e].source};
}

Path KGraph::path_from_word(const std::vector<int>& word) const {
  if (word.empty()) throw Error(Errc::NotComposable, "empty word has no range");
  for (size_t i = 0; i + 1 < word.size(); ++i)
    if (edges_[word[i]].source != edges_[word[i + 1]].range)
      throw Error(Errc::NotComposable,
                  edges_[word[i]].id + " then " + edges_[word[i + 1]].id);
  Path p;
  p.degree = deg::zero(k_);
  for (int e : word) ++p.degree[edges_[e].color];
  p.word = normalize_word(*this, word);
  p.range = edges_[word.front()].range;
  p.source = edges_[word.back()].source;
  return p;
}

Path KGraph::path_from_ids(const std::vector<std::string>& ids) const {
  std::vector<int> w;
  for (const auto& s : ids) w.push_back(edge_index(s));
  return path_from_word(w);
}

std::string KGraph::str(const Path& p) const {
  if (p.is_vertex()) return vertices_[p.range];
  std::string s;
  for (int e : p.word) {
    if (!s.empty()) s += '.';
    s += edges_[e].id;
  }
  return s;
}

std::vector<std::string> KGraph::ids(const Path& p) const {
  std::vector<std::string> out;
  for (int e : p.word) out.push_back(edges_[e].id);
  return out;
}

void KGraph::build_report() {
  ValidationReport r;
  r.num_vertices = num_vertices();
  r.num_edges = num_edges();
  r.num_squares = (int)squares_.size();

  auto col = [&](int e) { return edges_[e].color; };
  auto name = [&](int e) { return edges_[e].id; };

  for (const auto& s : squares_) {
    std::string tag = "square (" + name(s.g) + "," + name(s.f) + ")<->(" + name(s.f2) +
                      "," + name(s.g2) + ")";
    if (col(s.g) != col(s.g2) || col(s.f) != col(s.f2) || col(s.g) >= col(s.f)) {
      r.squares_ok = false;
      r.square_witnesses.push_back(tag + ": colors must read i,j / j,i with i<j");
      continue;
    }
    bool comp = edges_[s.g].source == edges_[s.f].range &&
                edges_[s.f2].source == edges_[s.g2].range &&
                edges_[s.g].range == edges_[s.f2].range &&
                edges_[s.f].source == edges_[s.g2].source;
    if (!comp) {
      r.squares_ok = false;
      r.square_witnesses.push_back(tag + ": endpoints do not match");
    }
  }

  std::map<std::pair<int, int>, int> first_count, second_count;
  for (const auto& s : squares_) {
    ++first_count[{s.g, s.f}];
    ++second_count[{s.f2, s.g2}];
  }
  for (int x = 0; x < num_edges(); ++x) {
    for (int y = 0; y < num_edges(); ++y) {
      if (edges_[x].source != edges_[y].range || col(x) == col(y)) continue;
      auto& counts = col(x) < col(y) ? first_count : second_count;
      auto it = counts.find({x, y});
      int n = it == counts.end() ? 0 : it->second;
      if (n != 1) {
        r.squares_ok = false;
        r.square_witnesses.push_back("composable pair (" + name(x) + "," + name(y) + ") " +
                                     (n == 0 ? "uncovered" : "covered " + std::to_string(n) +
                                                                 " times"));
      }
    }
  }

  if (r.squares_ok && k_ >= 3) {
    auto step = [&](std::vector<int>& w, int i) {
      int a, b;
      if (!swap_pair(w[i], w[i + 1], a, b)) return false;
      w[i] = a;
      w[i + 1] = b;
      return true;
    };
    for (int x = 0; x < num_edges(); ++x) {
      for (int y = 0; y < num_edges(); ++y) {
        if (edges_[x].source != edges_[y].range || col(y) >= col(x)) continue;
        for (int z = 0; z < num_edges(); ++z) {
          if (edges_[y].source != edges_[z].range || col(z) >= col(y)) continue;
          std::vector<int> a{x, y, z}, b{x, y, z};
          bool ok = step(a, 0) && step(a, 1) && step(a, 0);
          ok = ok && step(b, 1) && step(b, 0) && step(b, 1);
          if (!ok || a != b) {
            r.cube_ok = false;
            r.cube_witnesses.push_back("triple (" + name(x) + "," + name(y) + "," + name(z) +
                                       ") normalizes differently");
          }
        }
      }
    }
  }

  for (int v = 0; v < num_vertices(); ++v)
    for (int c = 0; c < k_; ++c)
      if (in_[v][c].empty()) {
        r.no_sources = false;
        r.source_witnesses.push_back(vertices_[v] + " receives no edge of color " +
                                     std::to_string(c + 1));
      }

  // Union-find for weak components; forward/backward reachability for strong.
  std::vector<int> parent(num_vertices());
  for (int v = 0; v < num_vertices(); ++v) parent[v] = v;
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  for (const auto& e : edges_) parent[find(e.range)] = find(e.source);
  for (int v = 0; v < num_vertices(); ++v) r.weak_components += find(v) == v;
  if (num_vertices() > 0) {
    auto reach = [&](bool forward) {
      std::vector<char> seen(num_vertices(), 0);
      std::vector<int> stack{0};
      seen[0] = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& e : edges_) {
          int from = forward ? e.range : e.source, to = forward ? e.source : e.range;
          if (from == v && !seen[to]) {
            seen[to] = 1;
            stack.push_back(to);
          }
        }
      }
      return std::all_of(seen.begin(), seen.end(), [](char c) { return c; });
    };
    r.strongly_connected = reach(true) && reach(false);
  }
  report_ = r;
}

ValidationReport validate(const KGraph& g) { return g.report(); }

std::vector<int> normalize_word(const KGraph& g, std::vector<int> word) {
  const size_t n = word.size();
  for (size_t pass = 0; pass < n; ++pass) {
    bool moved = false;
    for (size_t i = 0; i + 1 < n; ++i) {
      if (g.edge(word[i]).color <= g.edge(word[i + 1]).color) continue;
      int a, b;
      if (!g.swap_pair(word[i], word[i + 1], a, b))
        throw Error(Errc::InvalidGraph, "no square for (" + g.edge(word[i]).id + "," +
                                            g.edge(word[i + 1]).id + ")");
      word[i] = a;
      word[i + 1] = b;
      moved = true;
    }
    if (!moved) break;
  }
  return word;
}

std::vector<int> normalize_word_random(const KGraph& g, std::vector<int> word,
                                       std::mt19937_64& rng) {
  std::vector<size_t> descents;
  while (true) {
    descents.clear();
    for (size_t i = 0; i + 1 < word.size(); ++i)
      if (g.edge(word[i]).color > g.edge(word[i + 1]).color) descents.push_back(i);
    if (descents.empty()) return word;
    size_t i = descents[std::uniform_int_distribution<size_t>(0, descents.size() - 1)(rng)];
    int a, b;
    if (!g.swap_pair(word[i], word[i + 1], a, b))
      throw Error(Errc::InvalidGraph, "no square for (" + g.edge(word[i]).id + "," +
                                          g.edge(word[i + 1]).id + ")");
    word[i] = a;
    word[i + 1] = b;
  }
}

std::vector<int> reorder_word(const KGraph& g, std::vector<int> word,
                              const std::vector<int>& colors) {
  for (size_t p = 0; p < colors.size(); ++p) {
    size_t q = p;
    while (q < word.size() && g.edge(word[q]).color != colors[p]) ++q;
    if (q == word.size()) throw Error(Errc::DegreeOutOfRange, "color pattern mismatch");
    // Everything strictly between p and q has a different color, so each move is a square.
    for (; q > p; --q) {
      int a, b;
      if (!g.swap_pair(word[q - 1], word[q], a, b))
        throw Error(Errc::InvalidGraph, "no square for (" + g.edge(word[q - 1]).id + "," +
                                            g.edge(word[q]).id + ")");
      word[q - 1] = a;
      word[q] = b;
    }
  }
  return word;
}

Path compose(const KGraph& g, const Path& p, const Path& q) {
  if (p.source != q.range)
    throw Error(Errc::NotComposable, "source(" + g.str(p) + ") != range(" + g.str(q) + ")");
  if (q.is_vertex()) return p;
  if (p.is_vertex()) return q;
  std::vector<int> w = p.word;
  w.insert(w.end(), q.word.begin(), q.word.end());
  Path r{deg::add(p.degree, q.degree), normalize_word(g, std::move(w)), p.range, q.source};
  return r;
}

std::pair<Path, Path> factorize(const KGraph& g, const Path& p, const Degree& m) {
  if (m.size() != p.degree.size() || !deg::leq(m, p.degree))
    throw Error(Errc::DegreeOutOfRange, deg::str(m) + " not <= " + deg::str(p.degree));
  if (deg::is_zero(m)) return {g.vertex(p.range), p};
  if (m == p.degree) return {p, g.vertex(p.source)};
  Degree rest = deg::sub(p.degree, m);
  std::vector<int> colors;
  for (int c = 0; c < g.rank(); ++c) colors.insert(colors.end(), m[c], c);
  for (int c = 0; c < g.rank(); ++c) colors.insert(colors.end(), rest[c], c);
  std::vector<int> w = reorder_word(g, p.word, colors);
  size_t cut = deg::total(m);
  // Both halves come out color-sorted already, so no renormalization is needed.
  Path head{m, std::vector<int>(w.begin(), w.begin() + cut), p.range, g.edge(w[cut - 1]).source};
  Path tail{rest, std::vector<int>(w.begin() + cut, w.end()), head.source, p.source};
  return {head, tail};
}

int vertex_at(const KGraph& g, const Path& p, const Degree& n) {
  return factorize(g, p, n).first.source;
}

std::vector<Path> enumerate_paths(const KGraph& g, std::optional<int> v, const Degree& n) {
  std::vector<int> colors;
  for (int c = 0; c < g.rank(); ++c) colors.insert(colors.end(), n[c], c);
  std::vector<Path> out;
  std::vector<int> word;
  std::function<void(int, int)> walk = [&](int at, int start) {
    size_t i = word.size();
    if (i == colors.size()) {
      out.push_back(Path{n, word, start, at});
      return;
    }
    for (int e : g.in_edges(at, colors[i])) {
      word.push_back(e);
      walk(g.edge(e).source, start);
      word.pop_back();
    }
  };
  if (v) {
    walk(*v, *v);
  } else {
    for (int u = 0; u < g.num_vertices(); ++u) walk(u, u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Path> paths_up_to(const KGraph& g, std::optional<int> v, const Degree& bound) {
  std::vector<Path> out;
  for (const auto& n : deg::box(bound)) {
    auto ps = enumerate_paths(g, v, n);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kg
