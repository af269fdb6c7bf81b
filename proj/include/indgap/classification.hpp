#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "indgap/graph.hpp"

namespace indgap {

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Vertex type system. U holds the vertices of complete components; the
/// rest split into leaves (degree 1) and internal vertices, and an internal
/// vertex adjacent to exactly k leaves has type k.
struct Classification {
  VertexSet u;
  VertexSet leaves;
  VertexSet internal;
  VertexSet g0;  // internal vertices of type 0; disjoint from u
  VertexSet g1;
  VertexSet g2;
  int max_type = -1;   // -1 when there are no internal vertices
  std::size_t n0 = 0;  // largest component of the graph induced on g0

  /// Leaf count of an internal vertex. Leaves and U-vertices carry no type;
  /// asking for one throws PreconditionError.
  int type_of(Vertex v) const;
  std::optional<int> try_type_of(Vertex v) const;

  /// Internal vertices of exactly type k (k >= 0).
  VertexSet of_type(int k) const;

  std::vector<int> types;  // per vertex; -1 where no type is assigned
};

Classification classify(const Graph& g);

/// Components of the graph induced on g0, as vertex sets of g.
std::vector<VertexSet> g0_components(const Graph& g, const Classification& c);

struct PendantMatching {
  bool perfect = false;
  std::vector<Edge> edges;  // pendant edges, (u, v) with u < v
};

/// Whether the edges incident with degree-1 vertices cover every vertex
/// exactly once.
PendantMatching pendant_perfect_matching(const Graph& g);

/// Well-covered test for graphs of girth at least 6, component by component:
/// K1 and C7 are well-covered, anything else iff its pendant edges form a
/// perfect matching. Throws PreconditionError on girth <= 5.
bool is_well_covered_girth6(const Graph& g);

}  // namespace indgap
