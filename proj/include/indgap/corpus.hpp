#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "indgap/graph.hpp"

namespace indgap {

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vertex ids of the twelve-vertex fixture with G0 = K2 on {u, v}.
namespace fig3 {
inline constexpr Vertex x = 0, x1 = 1, x2 = 2, y = 3, y1 = 4, y2 = 5, a = 6, a1 = 7, b = 8, b1 = 9, u = 10, v = 11;
}

/// Named fixtures and parametric families: "path" (P_n), "cycle" (C_n),
/// "double-star" (two adjacent centres with n leaves each), "dstar"
/// (double-star 2), "fig3", "t1", "n1".
Graph family(std::string_view name, std::size_t n = 0);

/// Whether g obeys the girth floor and has no cycle of a
/// forbidden length.
bool admissible(const Graph& g, std::size_t girth_floor, const std::vector<std::size_t>& forbid);

/// Canonical label: graph6 word of a canonical relabeling. Two graphs are
/// isomorphic iff their canonical forms are equal.
std::string canonical_form(const Graph& g);

struct ExhaustiveSpec {
  std::size_t n_max = 0;
  std::size_t girth_floor = 3;
  std::vector<std::size_t> forbid;
  bool connected = false;
  std::size_t n_min = 1;
};

inline constexpr std::size_t kExhaustiveMaxOrder = 10;

/// Every graph on n_min..n_max vertices meeting the filters, one per
/// isomorphism class, ordered by order then canonical form. Throws CorpusError
/// when n_max exceeds kExhaustiveMaxOrder or the range is empty.
std::vector<Graph> exhaustive(const ExhaustiveSpec& spec);

/// Uniform random spanning tree, then random non-edges that keep the girth
/// floor and avoid forbidden cycle lengths, until `edge_budget` edges or
/// saturation. Deterministic in `seed`.
Graph random_girth_graph(std::size_t n, std::size_t girth_floor, const std::vector<std::size_t>& forbid,
                         std::size_t edge_budget, std::uint64_t seed);

struct CorpusItem {
  Graph graph;
  std::size_t id = 0;    // input line number for files, stream index otherwise
  std::string g6;        // original word for files, encoding otherwise
};

/// One graph6 word per line (LF or CRLF). Blank lines are skipped.
class Graph6Reader {
 public:
  explicit Graph6Reader(std::istream& in) : in_(in) {}

  /// Next graph; throws CorpusError naming the line on a malformed word.
  std::optional<CorpusItem> next();
  std::size_t line() const { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

std::vector<CorpusItem> load_graph6_stream(std::istream& in);
std::vector<CorpusItem> load_graph6_file(const std::string& path);

enum class CorpusKind { Fixture, Family, Exhaustive, Random, File };

struct CorpusSpec {
  CorpusKind kind = CorpusKind::Exhaustive;
  std::string name;  // fixture or family name
  std::size_t n = 0;  // family size or random order
  std::size_t n_min = 1;
  std::size_t n_max = 0;
  std::size_t girth_floor = 3;
  std::vector<std::size_t> forbid;
  bool connected = false;
  std::size_t edges = 0;
  std::size_t samples = 0;
  std::optional<std::uint64_t> seed;
  std::string path;
};

/// Validates the spec (girth floor >= 3, non-empty range, seed for random)
/// and materializes the stream.
std::vector<CorpusItem> materialize(const CorpusSpec& spec);

}  // namespace indgap
