#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "indgap/bitset.hpp"

namespace indgap {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  using const_iterator = std::vector<Vertex>::const_iterator;

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}
  explicit VertexSet(std::vector<Vertex> ids);

  static VertexSet from_bits(const Bitset& bits);
  Bitset to_bits(std::size_t width) const;

  bool contains(Vertex v) const;
  void insert(Vertex v);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const_iterator begin() const { return ids_.begin(); }
  const_iterator end() const { return ids_.end(); }
  Vertex operator[](std::size_t k) const { return ids_[k]; }
  const std::vector<Vertex>& ids() const { return ids_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.ids_ <=> b.ids_; }

 private:
  std::vector<Vertex> ids_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);

/// Immutable simple undirected graph on vertices 0..order()-1.
///
/// Adjacency is kept twice: sorted neighbor lists for traversal and bit rows
/// for the set algebra used by the independence searches.
class Graph {
 public:
  /// The null graph.
  Graph() = default;

  /// Duplicate edges collapse; self-loops and out-of-range ids throw GraphError.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const { return adj_.size(); }
  std::size_t size() const { return edge_count_; }
  bool is_null() const { return adj_.empty(); }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  const Bitset& row(Vertex v) const { return rows_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  bool valid(Vertex v) const { return v < adj_.size(); }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  VertexSet vertices() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Bitset> rows_;
  std::size_t edge_count_ = 0;
};

enum class Neighborhood { Open, Closed };

/// N(S) or N[S] = S ∪ N(S).
VertexSet set_neighborhood(const Graph& g, const VertexSet& s, Neighborhood kind);

struct InducedSubgraph {
  Graph graph;
  /// Local id -> id in the parent graph.
  std::vector<Vertex> to_parent;

  VertexSet lift(const VertexSet& local) const;
};

/// Subgraph induced by s, relabeled 0..|s|-1 in increasing id order.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// G - S.
InducedSubgraph remove_vertices(const Graph& g, const VertexSet& s);

struct ComponentPartition {
  /// Connected components ordered by smallest member.
  std::vector<VertexSet> blocks;
};

ComponentPartition components(const Graph& g);
bool is_connected(const Graph& g);
bool is_complete(const Graph& g);

/// Shortest-cycle length with a witness cycle; forests (and the null graph)
/// report acyclic rather than any integer length.
struct GirthReport {
  std::optional<std::size_t> length;
  std::vector<Vertex> cycle;

  bool acyclic() const { return !length.has_value(); }
  bool at_least(std::size_t bound) const { return acyclic() || *length >= bound; }
};

GirthReport girth(const Graph& g);

/// A cycle of exactly `length` vertices as a vertex sequence, if one exists.
std::optional<std::vector<Vertex>> find_cycle_of_length(const Graph& g, std::size_t length);

inline std::optional<std::vector<Vertex>> seven_cycle(const Graph& g) { return find_cycle_of_length(g, 7); }
inline bool has_seven_cycle(const Graph& g) { return seven_cycle(g).has_value(); }

bool is_independent(const Graph& g, const VertexSet& s);
bool is_maximal_independent(const Graph& g, const VertexSet& s);

Graph disjoint_union(const Graph& a, const Graph& b);

/// Vertices sharing the invariants of P_n / C_n; used to name components.
bool is_path_graph(const Graph& g);
bool is_cycle_graph(const Graph& g);

std::string to_string(const VertexSet& s);

}  // namespace indgap
