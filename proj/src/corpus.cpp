#include "indgap/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <random>

#include "indgap/graph6.hpp"

namespace indgap {

namespace {

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  return Graph::from_edges(n, e);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw CorpusError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph::from_edges(n, e);
}

Graph double_star(std::size_t leaves) {
  std::vector<Edge> e{{0, 1}};
  auto next = static_cast<Vertex>(2);
  for (Vertex centre : {0U, 1U})
    for (std::size_t k = 0; k < leaves; ++k) e.emplace_back(centre, next++);
  return Graph::from_edges(next, e);
}

}  // namespace

Graph family(std::string_view name, std::size_t n) {
  using namespace fig3;
  if (name == "path") {
    if (n == 0) throw CorpusError("path needs at least 1 vertex");
    return path_graph(n);
  }
  if (name == "cycle") return cycle_graph(n);
  if (name == "double-star") return double_star(n);
  if (name == "dstar") {
    // x=0 with leaves 1,2; y=3 with leaves 4,5.
    return Graph::from_edges(6, {{0, 1}, {0, 2}, {3, 4}, {3, 5}, {0, 3}});
  }
  if (name == "fig3") {
    return Graph::from_edges(12, {{x, x1}, {x, x2}, {y, y1}, {y, y2}, {x, y}, {x, a}, {a, a1}, {a, u}, {u, v}, {v, b},
                                  {b, b1}, {b, y}});
  }
  if (name == "t1") {
    // x=0 with leaves 1,2; a=3 with leaf 4.
    return Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
  }
  if (name == "n1") {
    // x=0 with leaves 1,2; path x-u-v-w with u=3, v=4, w=5 and leaf w'=6.
    return Graph::from_edges(7, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {5, 6}});
  }
  throw CorpusError("unknown family '" + std::string(name) + "'");
}

bool admissible(const Graph& g, std::size_t girth_floor, const std::vector<std::size_t>& forbid) {
  if (!girth(g).at_least(girth_floor)) return false;
  for (std::size_t len : forbid)
    if (len >= girth_floor && find_cycle_of_length(g, len)) return false;
  return true;
}

namespace {

// Individualization-refinement canonical labeling. Branching skips vertices
// that are twins of an already tried vertex of the same cell: swapping two
// twins is an automorphism fixing the current partition.
class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g) {}

  std::string run() {
    std::vector<std::vector<Vertex>> cells;
    if (g_.order() > 0) {
      cells.emplace_back(g_.order());
      std::iota(cells[0].begin(), cells[0].end(), Vertex{0});
    }
    search(std::move(cells));
    return best_;
  }

 private:
  using Cells = std::vector<std::vector<Vertex>>;

  void refine(Cells& cells) const {
    std::vector<std::size_t> cell_of(g_.order());
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t k = 0; k < cells.size(); ++k)
        for (Vertex v : cells[k]) cell_of[v] = k;
      Cells next;
      next.reserve(g_.order());
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<std::size_t>, Vertex>> keyed;
        for (Vertex v : cell) {
          std::vector<std::size_t> sig(cells.size(), 0);
          for (Vertex w : g_.neighbors(v)) ++sig[cell_of[w]];
          keyed.emplace_back(std::move(sig), v);
        }
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& l, const auto& r) { return l.first < r.first; });
        for (std::size_t k = 0; k < keyed.size(); ++k) {
          if (k == 0 || keyed[k].first != keyed[k - 1].first) next.emplace_back();
          next.back().push_back(keyed[k].second);
        }
      }
      changed = next.size() != cells.size();
      cells = std::move(next);
    }
  }

  bool twins(Vertex u, Vertex v) const {
    Bitset a = g_.row(u), b = g_.row(v);
    a.reset(v);
    b.reset(u);
    return a == b;
  }

  void search(Cells cells) {
    refine(cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      std::vector<Vertex> label(g_.order());
      for (std::size_t k = 0; k < cells.size(); ++k) label[cells[k][0]] = static_cast<Vertex>(k);
      std::vector<Edge> edges;
      for (auto [p, q] : g_.edges()) edges.emplace_back(label[p], label[q]);
      std::string word = encode_graph6(Graph::from_edges(g_.order(), edges));
      if (best_.empty() || word < best_) best_ = std::move(word);
      return;
    }
    const auto t = static_cast<std::size_t>(target - cells.begin());
    const std::vector<Vertex> cell = cells[t];
    std::vector<Vertex> tried;
    for (Vertex v : cell) {
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twins(u, v); })) continue;
      tried.push_back(v);
      Cells split;
      split.reserve(cells.size() + 1);
      split.insert(split.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(t));
      split.push_back({v});
      split.emplace_back();
      for (Vertex w : cell)
        if (w != v) split.back().push_back(w);
      split.insert(split.end(), cells.begin() + static_cast<std::ptrdiff_t>(t) + 1, cells.end());
      search(std::move(split));
    }
  }

  const Graph& g_;
  std::string best_;
};

}  // namespace

std::string canonical_form(const Graph& g) {
  if (g.is_null()) return encode_graph6(g);
  return Canonizer(g).run();
}

std::vector<Graph> exhaustive(const ExhaustiveSpec& spec) {
  if (spec.n_max > kExhaustiveMaxOrder) {
    throw CorpusError("exhaustive enumeration is limited to n <= " + std::to_string(kExhaustiveMaxOrder));
  }
  if (spec.girth_floor < 3) throw CorpusError("girth floor must be at least 3");
  std::vector<Graph> out;
  if (spec.n_max == 0) return out;
  if (spec.n_min == 0 || spec.n_min > spec.n_max) throw CorpusError("empty order range");

  // Both filters are closed under vertex deletion, so every admissible graph
  // on n vertices extends an admissible graph on n - 1 vertices.
  std::map<std::string, Graph> level;
  level.emplace(canonical_form(Graph::from_edges(1, {})), Graph::from_edges(1, {}));
  for (std::size_t n = 1;; ++n) {
    if (n >= spec.n_min)
      for (const auto& [word, g] : level)
        if (!spec.connected || is_connected(g)) out.push_back(g);
    if (n == spec.n_max) break;
    std::map<std::string, Graph> next;
    for (const auto& [word, g] : level) {
      const auto base = g.edges();
      for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        auto edges = base;
        for (Vertex v = 0; v < n; ++v)
          if (mask & (1U << v)) edges.emplace_back(v, static_cast<Vertex>(n));
        Graph h = Graph::from_edges(n + 1, edges);
        if (!admissible(h, spec.girth_floor, spec.forbid)) continue;
        std::string key = canonical_form(h);
        if (!next.count(key)) next.emplace(key, parse_graph6(key));
      }
    }
    level = std::move(next);
  }
  return out;
}

namespace {

class GrowingGraph {
 public:
  explicit GrowingGraph(std::size_t n) : adj_(n) {}

  void add(Vertex u, Vertex v) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    edges_.emplace_back(u, v);
  }
  bool adjacent(Vertex u, Vertex v) const { return std::find(adj_[u].begin(), adj_[u].end(), v) != adj_[u].end(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::size_t distance(Vertex s, Vertex t) const {
    std::vector<std::size_t> dist(adj_.size(), std::numeric_limits<std::size_t>::max());
    std::queue<Vertex> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      if (v == t) return dist[v];
      for (Vertex w : adj_[v]) {
        if (dist[w] == std::numeric_limits<std::size_t>::max()) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
      }
    }
    return std::numeric_limits<std::size_t>::max();
  }

  /// Whether a simple path with exactly `length` edges joins s and t.
  bool has_path_of_length(Vertex s, Vertex t, std::size_t length) const {
    std::vector<bool> on(adj_.size(), false);
    on[s] = true;
    return extend(s, t, length, on);
  }

  Graph build() const { return Graph::from_edges(adj_.size(), edges_); }

 private:
  bool extend(Vertex at, Vertex t, std::size_t left, std::vector<bool>& on) const {
    if (left == 0) return at == t;
    for (Vertex w : adj_[at]) {
      if (on[w] || (w == t && left != 1)) continue;
      on[w] = true;
      bool hit = extend(w, t, left - 1, on);
      on[w] = false;
      if (hit) return true;
    }
    return false;
  }

  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
};

}  // namespace

Graph random_girth_graph(std::size_t n, std::size_t girth_floor, const std::vector<std::size_t>& forbid,
                         std::size_t edge_budget, std::uint64_t seed) {
  if (n == 0) throw CorpusError("random graph needs at least one vertex");
  std::mt19937_64 rng(seed);
  GrowingGraph g(n);

  if (n == 2) {
    g.add(0, 1);
  } else if (n > 2) {
    // Prüfer decoding gives a uniform labeled spanning tree.
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
    std::vector<Vertex> code(n - 2);
    for (auto& c : code) c = pick(rng);
    std::vector<std::size_t> degree(n, 1);
    for (Vertex c : code) ++degree[c];
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (Vertex v = 0; v < n; ++v)
      if (degree[v] == 1) leaves.push(v);
    for (Vertex c : code) {
      Vertex leaf = leaves.top();
      leaves.pop();
      g.add(leaf, c);
      if (--degree[c] == 1) leaves.push(c);
    }
    Vertex p = leaves.top();
    leaves.pop();
    g.add(p, leaves.top());
  }

  std::vector<Edge> candidates;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) candidates.emplace_back(u, v);
  std::shuffle(candidates.begin(), candidates.end(), rng);

  // Adding edges never makes a rejected candidate acceptable again, so one
  // pass over a shuffled list runs to saturation.
  for (auto [u, v] : candidates) {
    if (g.edge_count() >= edge_budget) break;
    std::size_t d = g.distance(u, v);
    if (d + 1 < girth_floor) continue;
    bool bad = false;
    for (std::size_t len : forbid)
      if (len >= 3 && g.has_path_of_length(u, v, len - 1)) bad = true;
    if (!bad) g.add(u, v);
  }
  return g.build();
}

std::optional<CorpusItem> Graph6Reader::next() {
  std::string text;
  while (std::getline(in_, text)) {
    ++line_;
    while (!text.empty() && (text.back() == '\r' || text.back() == ' ' || text.back() == '\t')) text.pop_back();
    if (text.empty()) continue;
    try {
      CorpusItem item;
      item.graph = parse_graph6(text);
      item.id = line_;
      item.g6 = text;
      return item;
    } catch (const Graph6Error& e) {
      throw CorpusError("line " + std::to_string(line_) + ": " + e.what());
    }
  }
  return std::nullopt;
}

std::vector<CorpusItem> load_graph6_stream(std::istream& in) {
  Graph6Reader reader(in);
  std::vector<CorpusItem> out;
  while (auto item = reader.next()) out.push_back(std::move(*item));
  return out;
}

std::vector<CorpusItem> load_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open '" + path + "'");
  return load_graph6_stream(in);
}

std::vector<CorpusItem> materialize(const CorpusSpec& spec) {
  if (spec.girth_floor < 3) throw CorpusError("girth floor must be at least 3");
  std::vector<CorpusItem> out;
  auto push = [&](Graph g) {
    CorpusItem item;
    item.id = out.size();
    item.g6 = encode_graph6(g);
    item.graph = std::move(g);
    out.push_back(std::move(item));
  };
  switch (spec.kind) {
    case CorpusKind::Fixture:
    case CorpusKind::Family:
      push(family(spec.name, spec.n));
      break;
    case CorpusKind::Exhaustive:
      if (spec.n_max == 0) throw CorpusError("exhaustive corpus needs n_max >= 1");
      for (auto& g : exhaustive({spec.n_max, spec.girth_floor, spec.forbid, spec.connected, spec.n_min})) push(std::move(g));
      break;
    case CorpusKind::Random:
      if (!spec.seed) throw CorpusError("random corpus needs a seed");
      if (spec.n == 0) throw CorpusError("random corpus needs n >= 1");
      for (std::size_t k = 0; k < spec.samples; ++k)
        push(random_girth_graph(spec.n, spec.girth_floor, spec.forbid, spec.edges, *spec.seed + k));
      break;
    case CorpusKind::File:
      return load_graph6_file(spec.path);
  }
  return out;
}

}  // namespace indgap
