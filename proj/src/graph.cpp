#include "indgap/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>

namespace indgap {

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::from_bits(const Bitset& bits) {
  VertexSet s;
  s.ids_.reserve(bits.count());
  bits.for_each([&](std::size_t i) { s.ids_.push_back(static_cast<Vertex>(i)); });
  return s;
}

Bitset VertexSet::to_bits(std::size_t width) const {
  Bitset b(width);
  for (Vertex v : ids_) b.set(v);
  return b;
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

void VertexSet::insert(Vertex v) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) ids_.insert(it, v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n > std::numeric_limits<Vertex>::max()) throw GraphError("vertex count too large");
  Graph g;
  g.adj_.resize(n);
  g.rows_.assign(n, Bitset(n));
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                       std::to_string(n));
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    if (g.rows_[u].test(v)) continue;
    g.rows_[u].set(v);
    g.rows_[v].set(u);
    ++g.edge_count_;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& list = g.adj_[v];
    list.reserve(g.rows_[v].count());
    g.rows_[v].for_each([&](std::size_t w) { list.push_back(static_cast<Vertex>(w)); });
  }
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

VertexSet Graph::vertices() const {
  std::vector<Vertex> ids(order());
  for (Vertex v = 0; v < order(); ++v) ids[v] = v;
  return VertexSet(std::move(ids));
}

VertexSet set_neighborhood(const Graph& g, const VertexSet& s, Neighborhood kind) {
  Bitset acc(g.order());
  for (Vertex v : s) {
    if (!g.valid(v)) throw GraphError("vertex " + std::to_string(v) + " not in graph");
    acc |= g.row(v);
    if (kind == Neighborhood::Closed) acc.set(v);
  }
  return VertexSet::from_bits(acc);
}

VertexSet InducedSubgraph::lift(const VertexSet& local) const {
  std::vector<Vertex> ids;
  ids.reserve(local.size());
  for (Vertex v : local) ids.push_back(to_parent[v]);
  return VertexSet(std::move(ids));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  constexpr Vertex absent = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> local(g.order(), absent);
  InducedSubgraph out;
  out.to_parent.reserve(s.size());
  for (Vertex v : s) {
    if (!g.valid(v)) throw GraphError("vertex " + std::to_string(v) + " not in graph");
    local[v] = static_cast<Vertex>(out.to_parent.size());
    out.to_parent.push_back(v);
  }
  std::vector<Edge> edges;
  for (Vertex v : s)
    for (Vertex w : g.neighbors(v))
      if (v < w && local[w] != absent) edges.emplace_back(local[v], local[w]);
  out.graph = Graph::from_edges(s.size(), edges);
  return out;
}

InducedSubgraph remove_vertices(const Graph& g, const VertexSet& s) {
  return induced_subgraph(g, set_difference(g.vertices(), s));
}

ComponentPartition components(const Graph& g) {
  ComponentPartition out;
  std::vector<bool> seen(g.order(), false);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> block;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      block.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    out.blocks.emplace_back(std::move(block));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).blocks.size() <= 1; }

bool is_complete(const Graph& g) {
  std::size_t n = g.order();
  return g.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

GirthReport girth(const Graph& g) {
  const std::size_t n = g.order();
  constexpr std::size_t unseen = std::numeric_limits<std::size_t>::max();
  GirthReport best;
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  std::queue<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), unseen);
    dist[s] = 0;
    parent[s] = s;
    queue.push(s);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      // No cycle found from here can beat the incumbent.
      if (best.length && 2 * dist[v] >= *best.length) continue;
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] == unseen) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push(w);
        } else if (parent[v] != w) {
          std::size_t len = dist[v] + dist[w] + 1;
          if (!best.length || len < *best.length) {
            std::vector<Vertex> left, right;
            for (Vertex x = v; x != s; x = parent[x]) left.push_back(x);
            for (Vertex x = w; x != s; x = parent[x]) right.push_back(x);
            std::vector<Vertex> cycle{s};
            cycle.insert(cycle.end(), left.rbegin(), left.rend());
            cycle.insert(cycle.end(), right.begin(), right.end());
            best.length = len;
            best.cycle = std::move(cycle);
          }
        }
      }
    }
  }
  return best;
}

namespace {

// Extends simple paths whose smallest vertex is the start; the cycle closes
// back to the start after exactly `length` vertices.
bool extend_path(const Graph& g, std::size_t length, std::vector<Vertex>& path, std::vector<bool>& on_path) {
  Vertex start = path.front();
  Vertex last = path.back();
  if (path.size() == length) return g.adjacent(last, start) && path[1] < last;
  for (Vertex w : g.neighbors(last)) {
    if (w <= start || on_path[w]) continue;
    path.push_back(w);
    on_path[w] = true;
    if (extend_path(g, length, path, on_path)) return true;
    on_path[w] = false;
    path.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<Vertex>> find_cycle_of_length(const Graph& g, std::size_t length) {
  if (length < 3) return std::nullopt;
  std::vector<bool> on_path(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    std::vector<Vertex> path{s};
    on_path[s] = true;
    if (extend_path(g, length, path, on_path)) return path;
    on_path[s] = false;
  }
  return std::nullopt;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    if (!g.valid(v)) return false;
    for (Vertex w : g.neighbors(v))
      if (s.contains(w)) return false;
  }
  return true;
}

bool is_maximal_independent(const Graph& g, const VertexSet& s) {
  if (!is_independent(g, s)) return false;
  return set_neighborhood(g, s, Neighborhood::Closed).size() == g.order();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  const auto shift = static_cast<Vertex>(a.order());
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph::from_edges(a.order() + b.order(), edges);
}

bool is_path_graph(const Graph& g) {
  if (g.is_null() || g.size() + 1 != g.order() || !is_connected(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

bool is_cycle_graph(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

std::string to_string(const VertexSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < s.size(); ++k) os << (k ? "," : "") << s[k];
  os << '}';
  return os.str();
}

}  // namespace indgap
