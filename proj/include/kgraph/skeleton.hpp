#pragma once

#include "kgraph/common.hpp"

#include <compare>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

namespace kg {

struct Edge {
  std::string id;
  int color = 0;  // 0-based internally, 1-based in files
  int range = -1;
  int source = -1;
};

// g f = f2 g2 with color(g) = color(g2) < color(f) = color(f2).
struct Square {
  int g = -1, f = -1, f2 = -1, g2 = -1;
};

// A morphism in canonical form: edges sorted by nondecreasing color, listed
// from the range end. Vertices are the paths with an empty word.
struct Path {
  Degree degree;
  std::vector<int> word;
  int range = -1;
  int source = -1;

  bool is_vertex() const { return word.empty(); }
  auto operator<=>(const Path&) const = default;
};

struct ValidationReport {
  bool squares_ok = true;
  bool cube_ok = true;
  bool no_sources = true;
  std::vector<std::string> square_witnesses;
  std::vector<std::string> cube_witnesses;
  std::vector<std::string> source_witnesses;
  int num_vertices = 0;
  int num_edges = 0;
  int num_squares = 0;
  int weak_components = 0;
  bool strongly_connected = false;

  bool ok() const { return squares_ok && cube_ok; }
};

class KGraph {
 public:
  explicit KGraph(int rank);

  int add_vertex(const std::string& id);
  // color is 1-based here, matching the file format.
  int add_edge(const std::string& id, int color, const std::string& range,
               const std::string& source);
  void add_square(const std::string& g, const std::string& f, const std::string& f2,
                  const std::string& g2);
  // Builds lookup tables and the validation report; call once after adding.
  void finalize();

  int rank() const { return k_; }
  int num_vertices() const { return (int)vertices_.size(); }
  int num_edges() const { return (int)edges_.size(); }
  const std::string& vertex_name(int v) const { return vertices_[v]; }
  int vertex_index(const std::string& id) const;
  const Edge& edge(int e) const { return edges_[e]; }
  int edge_index(const std::string& id) const;
  const std::vector<Square>& squares() const { return squares_; }

  // Edges of the given 0-based color whose range is v.
  const std::vector<int>& in_edges(int v, int color) const { return in_[v][color]; }

  // Rewrites the adjacent pair [x,y] (distinct colors) into the other factorization.
  bool swap_pair(int x, int y, int& ox, int& oy) const;

  const ValidationReport& report() const { return report_; }
  bool valid() const { return report_.ok(); }
  void require_valid() const;
  bool no_sources() const { return report_.no_sources; }

  Path vertex(int v) const;
  Path edge_path(int e) const;
  Path path_from_word(const std::vector<int>& word) const;
  Path path_from_ids(const std::vector<std::string>& ids) const;
  std::string str(const Path& p) const;
  std::vector<std::string> ids(const Path& p) const;

 private:
  int k_;
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<Square> squares_;
  std::unordered_map<std::string, int> vindex_, eindex_;
  std::vector<std::vector<std::vector<int>>> in_;
  std::unordered_map<long long, std::pair<int, int>> swap_;
  ValidationReport report_;
  bool finalized_ = false;

  long long key(int x, int y) const { return (long long)x * (long long)edges_.size() + y; }
  void build_report();
};

ValidationReport validate(const KGraph& g);

// Sorts a composable edge word into canonical order by adjacent square moves.
std::vector<int> normalize_word(const KGraph& g, std::vector<int> word);
// Same, but the next descent to fix is drawn at random.
std::vector<int> normalize_word_random(const KGraph& g, std::vector<int> word,
                                       std::mt19937_64& rng);
// Rewrites a canonical word so that its colors read in the given order.
std::vector<int> reorder_word(const KGraph& g, std::vector<int> word,
                              const std::vector<int>& colors);

Path compose(const KGraph& g, const Path& p, const Path& q);
std::pair<Path, Path> factorize(const KGraph& g, const Path& p, const Degree& m);
int vertex_at(const KGraph& g, const Path& p, const Degree& n);

std::vector<Path> enumerate_paths(const KGraph& g, std::optional<int> v, const Degree& n);
// Every path with degree <= bound, sorted by (degree, word, range).
std::vector<Path> paths_up_to(const KGraph& g, std::optional<int> v, const Degree& bound);

}  // namespace kg
