#include "indgap/classification.hpp"

#include <algorithm>
#include <string>

namespace indgap {

int Classification::type_of(Vertex v) const {
  auto t = try_type_of(v);
  if (!t) throw PreconditionError("vertex " + std::to_string(v) + " is not internal and has no type");
  return *t;
}

std::optional<int> Classification::try_type_of(Vertex v) const {
  if (v >= types.size() || types[v] < 0) return std::nullopt;
  return types[v];
}

VertexSet Classification::of_type(int k) const {
  std::vector<Vertex> ids;
  for (Vertex v : internal)
    if (types[v] == k) ids.push_back(v);
  return VertexSet(std::move(ids));
}

Classification classify(const Graph& g) {
  const std::size_t n = g.order();
  Classification c;
  c.types.assign(n, -1);

  std::vector<bool> in_u(n, false);
  std::vector<Vertex> u;
  for (const auto& block : components(g).blocks) {
    std::size_t edges = 0;
    for (Vertex v : block) edges += g.degree(v);
    edges /= 2;
    if (edges == block.size() * (block.size() - 1) / 2) {
      for (Vertex v : block) {
        in_u[v] = true;
        u.push_back(v);
      }
    }
  }
  c.u = VertexSet(std::move(u));

  // U is a union of whole components, so degrees in G - U equal degrees in G.
  std::vector<Vertex> leaves, internal;
  for (Vertex v = 0; v < n; ++v) {
    if (in_u[v]) continue;
    (g.degree(v) == 1 ? leaves : internal).push_back(v);
  }
  c.leaves = VertexSet(std::move(leaves));
  c.internal = VertexSet(std::move(internal));

  std::vector<Vertex> g0, g1, g2;
  for (Vertex v : c.internal) {
    int t = 0;
    for (Vertex w : g.neighbors(v))
      if (g.degree(w) == 1) ++t;
    c.types[v] = t;
    c.max_type = std::max(c.max_type, t);
    if (t == 0) g0.push_back(v);
    if (t == 1) g1.push_back(v);
    if (t == 2) g2.push_back(v);
  }
  c.g0 = VertexSet(std::move(g0));
  c.g1 = VertexSet(std::move(g1));
  c.g2 = VertexSet(std::move(g2));

  for (const auto& block : g0_components(g, c)) c.n0 = std::max(c.n0, block.size());
  return c;
}

std::vector<VertexSet> g0_components(const Graph& g, const Classification& c) {
  auto h = induced_subgraph(g, c.g0);
  std::vector<VertexSet> out;
  for (const auto& block : components(h.graph).blocks) out.push_back(h.lift(block));
  return out;
}

PendantMatching pendant_perfect_matching(const Graph& g) {
  PendantMatching out;
  std::vector<int> cover(g.order(), 0);
  for (auto [a, b] : g.edges()) {
    if (g.degree(a) == 1 || g.degree(b) == 1) {
      out.edges.emplace_back(a, b);
      ++cover[a];
      ++cover[b];
    }
  }
  out.perfect = std::all_of(cover.begin(), cover.end(), [](int k) { return k == 1; });
  return out;
}

bool is_well_covered_girth6(const Graph& g) {
  if (!girth(g).at_least(6)) throw PreconditionError("well-covered test requires girth at least 6");
  for (const auto& block : components(g).blocks) {
    auto h = induced_subgraph(g, block).graph;
    if (h.order() == 1) continue;
    if (h.order() == 7 && is_cycle_graph(h)) continue;
    if (!pendant_perfect_matching(h).perfect) return false;
  }
  return true;
}

}  // namespace indgap
