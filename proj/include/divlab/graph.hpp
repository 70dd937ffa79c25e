#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace divlab {

// Finite simple undirected graph in CSR form.  Adjacency lists are sorted,
// which makes neighbor iteration order (and with it every seeded simulation)
// reproducible.
class Graph {
 public:
  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph edgeless(int n);
  // Lattice points of [0,L]x[0,H] joined at Euclidean distance 1,
  // (L+1)(H+1) vertices.  Vertex (i,j) has id i + j*(L+1).
  static Graph grid(int l, int h);
  // Periodic L x H lattice: L*H vertices, degree 4 everywhere.  Requires
  // L,H >= 3 so wraparound neighbors stay distinct.
  static Graph torus2d(int l, int h);
  static Graph complete_bipartite(int n1, int n2);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return static_cast<int>(offset_.size()) - 1; }
  std::int64_t edge_count() const { return static_cast<std::int64_t>(adj_.size()) / 2; }
  int degree(int v) const { return static_cast<int>(offset_[v + 1] - offset_[v]); }
  std::span<const std::int32_t> neighbors(int v) const {
    return {adj_.data() + offset_[v], adj_.data() + offset_[v + 1]};
  }
  bool is_connected() const;

 private:
  Graph() = default;
  void build(int n, std::vector<std::pair<int, int>> edges);
  std::vector<std::int64_t> offset_;
  std::vector<std::int32_t> adj_;
};

// Two-coloring of a bipartite graph.  side[v] is 1 or 2; within each
// connected component the lowest-numbered vertex lands on side 1, so the
// partition is unique and deterministic.
struct Bipartition {
  std::vector<std::uint8_t> side;
  std::int64_t n1 = 0;  // vertices on side 1
  std::int64_t n2 = 0;
};

// std::nullopt iff the graph contains an odd cycle.
std::optional<Bipartition> find_bipartition(const Graph& g);

// Textual graph families accepted on the command line:
//   complete:N  cycle:N  edgeless:N  grid:LxH  torus2d:LxH
//   complete-bipartite:N1,N2
// Throws std::invalid_argument naming the offending token.
Graph parse_graph_spec(std::string_view spec);

}  // namespace divlab
