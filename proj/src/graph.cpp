#include "divlab/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <stdexcept>
#include <utility>

namespace divlab {

void Graph::build(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  std::vector<std::vector<std::int32_t>> adj(n);
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw std::invalid_argument("graph: edge endpoint out of range");
    if (a == b) throw std::invalid_argument("graph: self loop");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  offset_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) {
    auto& row = adj[v];
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end())
      throw std::invalid_argument("graph: duplicate edge");
    offset_[v + 1] = offset_[v] + static_cast<std::int64_t>(row.size());
  }
  adj_.reserve(offset_[n]);
  for (auto& row : adj) adj_.insert(adj_.end(), row.begin(), row.end());
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g;
  g.build(n, edges);
  return g;
}

Graph Graph::complete(int n) {
  if (n < 1) throw std::invalid_argument("complete: need N >= 1");
  std::vector<std::pair<int, int>> e;
  e.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) e.emplace_back(a, b);
  return from_edges(n, e);
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: need N >= 3");
  std::vector<std::pair<int, int>> e;
  e.reserve(n);
  for (int a = 0; a < n; ++a) e.emplace_back(a, (a + 1) % n);
  return from_edges(n, e);
}

Graph Graph::edgeless(int n) {
  if (n < 1) throw std::invalid_argument("edgeless: need N >= 1");
  return from_edges(n, {});
}

Graph Graph::grid(int l, int h) {
  if (l < 1 || h < 1) throw std::invalid_argument("grid: need L,H >= 1");
  const int w = l + 1;
  std::vector<std::pair<int, int>> e;
  for (int j = 0; j <= h; ++j)
    for (int i = 0; i <= l; ++i) {
      const int v = i + j * w;
      if (i < l) e.emplace_back(v, v + 1);
      if (j < h) e.emplace_back(v, v + w);
    }
  return from_edges(w * (h + 1), e);
}

Graph Graph::torus2d(int l, int h) {
  if (l < 3 || h < 3) throw std::invalid_argument("torus2d: need L,H >= 3");
  std::vector<std::pair<int, int>> e;
  for (int j = 0; j < h; ++j)
    for (int i = 0; i < l; ++i) {
      const int v = i + j * l;
      e.emplace_back(v, (i + 1) % l + j * l);
      e.emplace_back(v, i + ((j + 1) % h) * l);
    }
  return from_edges(l * h, e);
}

Graph Graph::complete_bipartite(int n1, int n2) {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("complete-bipartite: need N1,N2 >= 1");
  std::vector<std::pair<int, int>> e;
  e.reserve(static_cast<std::size_t>(n1) * n2);
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n2; ++b) e.emplace_back(a, n1 + b);
  return from_edges(n1 + n2, e);
}

bool Graph::is_connected() const {
  const int n = vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int u : neighbors(v))
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        q.push(u);
      }
  }
  return reached == n;
}

std::optional<Bipartition> find_bipartition(const Graph& g) {
  const int n = g.vertex_count();
  Bipartition bp;
  bp.side.assign(n, 0);
  for (int start = 0; start < n; ++start) {
    if (bp.side[start] != 0) continue;
    bp.side[start] = 1;  // lowest id in its component -> side 1
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      const std::uint8_t other = bp.side[v] == 1 ? 2 : 1;
      for (int u : g.neighbors(v)) {
        if (bp.side[u] == 0) {
          bp.side[u] = other;
          q.push(u);
        } else if (bp.side[u] == bp.side[v]) {
          return std::nullopt;  // odd cycle
        }
      }
    }
  }
  for (auto s : bp.side) (s == 1 ? bp.n1 : bp.n2)++;
  return bp;
}

namespace {

int parse_int(std::string_view tok, std::string_view what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw std::invalid_argument("graph spec: bad " + std::string(what) + " '" + std::string(tok) + "'");
  return value;
}

std::pair<std::string_view, std::string_view> split_once(std::string_view s, char sep) {
  const auto pos = s.find(sep);
  if (pos == std::string_view::npos)
    throw std::invalid_argument("graph spec: expected '" + std::string(1, sep) + "' in '" + std::string(s) + "'");
  return {s.substr(0, pos), s.substr(pos + 1)};
}

}  // namespace

Graph parse_graph_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("graph spec: missing ':' in '" + std::string(spec) + "'");
  const std::string_view family = spec.substr(0, colon);
  const std::string_view args = spec.substr(colon + 1);
  if (family == "complete") return Graph::complete(parse_int(args, "size"));
  if (family == "cycle") return Graph::cycle(parse_int(args, "size"));
  if (family == "edgeless") return Graph::edgeless(parse_int(args, "size"));
  if (family == "grid") {
    const auto [l, h] = split_once(args, 'x');
    return Graph::grid(parse_int(l, "width"), parse_int(h, "height"));
  }
  if (family == "torus2d") {
    const auto [l, h] = split_once(args, 'x');
    return Graph::torus2d(parse_int(l, "width"), parse_int(h, "height"));
  }
  if (family == "complete-bipartite") {
    const auto [a, b] = split_once(args, ',');
    return Graph::complete_bipartite(parse_int(a, "side size"), parse_int(b, "side size"));
  }
  throw std::invalid_argument("graph spec: unknown family '" + std::string(family) + "'");
}

}  // namespace divlab
