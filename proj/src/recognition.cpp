#include "indgap/recognition.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <tuple>
#include <utility>

namespace indgap {

std::string_view to_string(Answer a) {
  switch (a) {
    case Answer::Yes:
      return "yes";
    case Answer::No:
      return "no";
    case Answer::OracleInfeasible:
      return "oracle-infeasible";
  }
  return "unknown";
}

std::string_view to_string(Reason r) {
  switch (r) {
    case Reason::StructuralMatch:
      return "structural-match";
    case Reason::WellCovered:
      return "well-covered";
    case Reason::ComponentCount:
      return "component-count";
    case Reason::Type3Vertex:
      return "type3-vertex";
    case Reason::G2NotClique:
      return "g2-not-clique";
    case Reason::Type2NotAdjacent:
      return "type2-not-adjacent";
    case Reason::G2G0Edge:
      return "g2-g0-edge";
    case Reason::G0BadComponent:
      return "g0-bad-component";
    case Reason::G0Gap:
      return "g0-gap";
    case Reason::NoInducedSixCycle:
      return "no-induced-6-cycle";
    case Reason::DeficitWitness:
      return "deficit-witness";
    case Reason::Oracle:
      return "oracle";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

Decision make(Answer answer, Reason reason, std::vector<VertexSet> witness = {}, std::string detail = {}) {
  Decision d;
  d.answer = answer;
  d.reason = reason;
  d.witness = std::move(witness);
  d.detail = std::move(detail);
  return d;
}

// Components of G0 with alpha precomputed and memoized i(H_j - A) per
// attacked set A, so repeated deficit evaluations stay cheap.
class G0Profile {
 public:
  G0Profile(const Graph& g, const Classification& c, const OracleOptions& options)
      : g_(g), options_(options), component_(g.order(), kNone), local_(g.order(), 0) {
    for (const auto& block : g0_components(g, c)) {
      Part part;
      part.sub = induced_subgraph(g, block);
      part.alpha = independence_number(part.sub.graph, options_);
      for (Vertex k = 0; k < part.sub.to_parent.size(); ++k) {
        component_[part.sub.to_parent[k]] = parts_.size();
        local_[part.sub.to_parent[k]] = k;
      }
      parts_.push_back(std::move(part));
    }
  }

  std::size_t size() const { return parts_.size(); }
  std::size_t component_of(Vertex v) const { return component_[v]; }
  std::size_t local_id(Vertex v) const { return local_[v]; }
  std::size_t component_order(std::size_t j) const { return parts_[j].sub.graph.order(); }
  std::size_t alpha(std::size_t j) const { return parts_[j].alpha; }

  std::size_t imin(std::size_t j) {
    auto& p = parts_[j];
    return p.alpha - component_deficit(j, Bitset(p.sub.graph.order()));
  }

  /// alpha(H_j) - i(H_j - A) for an attacked set A in local ids.
  std::size_t component_deficit(std::size_t j, const Bitset& attacked) {
    auto& p = parts_[j];
    auto [it, fresh] = p.memo.try_emplace(attacked.words(), 0);
    if (fresh) {
      auto rest = remove_vertices(p.sub.graph, VertexSet::from_bits(attacked));
      it->second = p.alpha - independent_domination_number(rest.graph, options_);
    }
    return it->second;
  }

  /// Attacked sets per component for the given vertex set of g.
  std::vector<Bitset> traces(const VertexSet& i_set) const {
    std::vector<Bitset> out;
    out.reserve(parts_.size());
    for (const auto& p : parts_) out.emplace_back(p.sub.graph.order());
    for (Vertex v : i_set)
      for (Vertex w : g_.neighbors(v))
        if (component_[w] != kNone) out[component_[w]].set(local_[w]);
    return out;
  }

  std::size_t deficit(const VertexSet& i_set) {
    auto t = traces(i_set);
    std::size_t total = 0;
    for (std::size_t j = 0; j < parts_.size(); ++j) total += component_deficit(j, t[j]);
    return total;
  }

 private:
  struct Part {
    InducedSubgraph sub;
    std::size_t alpha = 0;
    std::map<std::vector<std::uint64_t>, std::size_t> memo;
  };

  const Graph& g_;
  OracleOptions options_;
  std::vector<std::size_t> component_;
  std::vector<std::size_t> local_;
  std::vector<Part> parts_;
};

void require_independent_in_g1(const Graph& g, const Classification& c, const VertexSet& s, const char* what) {
  for (Vertex v : s) {
    if (!c.g1.contains(v)) {
      throw PreconditionError(std::string(what) + ": vertex " + std::to_string(v) + " is not of type 1");
    }
  }
  if (!is_independent(g, s)) throw PreconditionError(std::string(what) + ": set is not independent");
}

// Depth-first search over independent subsets of `candidates` (ascending),
// bounded by max_size. `accept` sees every visited set; `admit` filters
// extensions.
template <class Admit, class Accept>
bool independent_subsets(const Graph& g, const std::vector<Vertex>& candidates, std::size_t max_size,
                         std::vector<Vertex>& chosen, std::size_t from, Admit&& admit, Accept&& accept) {
  if (accept(chosen)) return true;
  if (chosen.size() == max_size) return false;
  for (std::size_t k = from; k < candidates.size(); ++k) {
    Vertex v = candidates[k];
    bool free = std::none_of(chosen.begin(), chosen.end(), [&](Vertex w) { return g.adjacent(v, w); });
    if (!free || !admit(chosen, v)) continue;
    chosen.push_back(v);
    if (independent_subsets(g, candidates, max_size, chosen, k + 1, admit, accept)) return true;
    chosen.pop_back();
  }
  return false;
}

std::optional<VertexSet> exhaustive_witness(const Graph& g, G0Profile& profile, const DeficitQuery& q) {
  std::vector<Vertex> chosen;
  std::optional<VertexSet> found;
  independent_subsets(
      g, q.domain.ids(), q.max_size, chosen, 0, [](const std::vector<Vertex>&, Vertex) { return true; },
      [&](const std::vector<Vertex>& s) {
        VertexSet set(s);
        if (profile.deficit(set) < q.min_deficit) return false;
        found = std::move(set);
        return true;
      });
  return found;
}

// The deficit of I sums alpha(H) - i(H - A) over the components H of G0,
// every term non-negative, and untouched components contribute their own
// gap. If I reaches d, some at most d attacked components T together with
// the untouched gaps already reach it, and a subfamily of I covering the
// attacked sets on T with private vertices does too: it leaves every
// untouched component untouched. Listing such members in increasing order,
// each one grows the attacked set on T.
std::optional<VertexSet> restricted_witness(const Graph& g, G0Profile& profile, const DeficitQuery& q) {
  const std::size_t m = profile.size();
  const std::size_t width = std::min(q.min_deficit, m);

  std::vector<std::vector<Vertex>> attackers(m);
  for (Vertex v : q.domain) {
    std::set<std::size_t> hit;
    for (Vertex w : g.neighbors(v))
      if (profile.component_of(w) != kNone) hit.insert(profile.component_of(w));
    for (std::size_t j : hit) attackers[j].push_back(v);
  }

  if (profile.deficit({}) >= q.min_deficit) return VertexSet{};

  std::vector<std::size_t> gapped;  // components with a gap of their own
  for (std::size_t j = 0; j < m; ++j)
    if (profile.component_deficit(j, Bitset(profile.component_order(j))) > 0) gapped.push_back(j);

  std::vector<std::size_t> target;
  std::optional<VertexSet> found;

  auto search_target = [&]() -> bool {
    std::vector<Vertex> pool;
    for (std::size_t j : target) pool.insert(pool.end(), attackers[j].begin(), attackers[j].end());
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    if (pool.empty()) return false;

    auto trace_of = [&](Vertex v) {
      std::vector<Bitset> t;
      for (std::size_t j : target) t.emplace_back(profile.component_order(j));
      for (Vertex w : g.neighbors(v)) {
        auto j = profile.component_of(w);
        auto pos = std::find(target.begin(), target.end(), j);
        if (pos != target.end()) t[static_cast<std::size_t>(pos - target.begin())].set(profile.local_id(w));
      }
      return t;
    };

    // Interchangeable candidates: same attacked set on the target, same
    // gapped components hit outside it, same neighbors inside the pool.
    std::vector<Vertex> reps;
    std::set<std::tuple<std::vector<std::vector<std::uint64_t>>, std::vector<std::size_t>, std::vector<Vertex>>> seen;
    for (Vertex v : pool) {
      std::vector<std::vector<std::uint64_t>> key;
      for (const auto& b : trace_of(v)) key.push_back(b.words());
      std::vector<std::size_t> hit;
      for (std::size_t j : gapped) {
        if (std::find(target.begin(), target.end(), j) != target.end()) continue;
        bool touches = std::any_of(g.neighbors(v).begin(), g.neighbors(v).end(),
                                   [&](Vertex w) { return profile.component_of(w) == j; });
        if (touches) hit.push_back(j);
      }
      std::vector<Vertex> nbrs;
      for (Vertex w : pool)
        if (g.adjacent(v, w)) nbrs.push_back(w);
      if (seen.emplace(std::move(key), std::move(hit), std::move(nbrs)).second) reps.push_back(v);
    }

    std::vector<std::vector<Bitset>> stack;
    {
      std::vector<Bitset> empty;
      for (std::size_t j : target) empty.emplace_back(profile.component_order(j));
      stack.push_back(std::move(empty));
    }
    std::vector<Vertex> chosen;
    return independent_subsets(
        g, reps, q.max_size, chosen, 0,
        [&](const std::vector<Vertex>& current, Vertex v) {
          // Keep the trace stack aligned with `current` before testing v.
          stack.resize(current.size() + 1);
          auto add = trace_of(v);
          bool grows = false;
          for (std::size_t t = 0; t < add.size(); ++t)
            if (!add[t].is_subset_of(stack.back()[t])) grows = true;
          if (!grows) return false;
          auto next = stack.back();
          for (std::size_t t = 0; t < add.size(); ++t) next[t] |= add[t];
          stack.push_back(std::move(next));
          return true;
        },
        [&](const std::vector<Vertex>& current) {
          stack.resize(current.size() + 1);
          if (current.empty()) return false;
          VertexSet set(current);
          if (profile.deficit(set) < q.min_deficit) return false;
          found = std::move(set);
          return true;
        });
  };

  // Subsets of components of size 1..width in lexicographic order.
  auto choose = [&](auto&& self, std::size_t from) -> bool {
    if (!target.empty() && search_target()) return true;
    if (target.size() == width) return false;
    for (std::size_t j = from; j < m; ++j) {
      if (attackers[j].empty()) continue;
      target.push_back(j);
      if (self(self, j + 1)) return true;
      target.pop_back();
    }
    return false;
  };
  choose(choose, 0);
  return found;
}

}  // namespace

std::size_t deficit(const Graph& g, const Classification& c, const VertexSet& i_set, const OracleOptions& options) {
  require_independent_in_g1(g, c, i_set, "deficit");
  G0Profile profile(g, c, options);
  return profile.deficit(i_set);
}

std::optional<VertexSet> find_deficit_witness(const Graph& g, const Classification& c, const DeficitQuery& q,
                                              WitnessSearch mode, const OracleOptions& options) {
  for (Vertex v : q.domain)
    if (!c.g1.contains(v)) throw PreconditionError("deficit query domain must lie inside g1");
  if (q.min_deficit == 0) return VertexSet{};
  if (c.g0.empty()) return std::nullopt;
  G0Profile profile(g, c, options);
  return mode == WitnessSearch::Exhaustive ? exhaustive_witness(g, profile, q) : restricted_witness(g, profile, q);
}

Decision gap_at_most_k_type01(const Graph& g, const Classification& c, std::size_t k, const OracleOptions& options) {
  if (c.max_type > 1) throw PreconditionError("type-0/1 test requires every internal vertex to have type 0 or 1");
  if (c.g0.empty()) return make(Answer::Yes, Reason::StructuralMatch, {}, "G0 is null");

  G0Profile profile(g, c, options);
  std::size_t gap0 = 0;
  for (std::size_t j = 0; j < profile.size(); ++j) gap0 += profile.alpha(j) - profile.imin(j);
  if (gap0 > k) {
    auto h = induced_subgraph(g, c.g0);
    auto r = independence_report(h.graph, options);
    return make(Answer::No, Reason::G0Gap, {h.lift(r.alpha_witness), h.lift(r.imin_witness)},
                "gap of G0 is " + std::to_string(gap0));
  }

  DeficitQuery q{k + 1, (k + 1) * c.n0, c.g1, k};
  if (auto w = find_deficit_witness(g, c, q, WitnessSearch::Restricted, options)) {
    Decision d = make(Answer::No, Reason::DeficitWitness, {*w});
    d.min_deficit = q.min_deficit;
    return d;
  }
  return make(Answer::Yes, Reason::StructuralMatch);
}

Decision recognize_two_type2(const Graph& g, const Classification& c) {
  if (!is_connected(g)) throw PreconditionError("two-type-2 test requires a connected graph");
  if (!girth(g).at_least(6)) throw PreconditionError("two-type-2 test requires girth at least 6");
  if (c.max_type > 2) throw PreconditionError("two-type-2 test forbids vertices of type 3 or more");
  if (c.g2.size() != 2) throw PreconditionError("two-type-2 test requires exactly two type-2 vertices");

  const Vertex x = c.g2[0], y = c.g2[1];
  if (!g.adjacent(x, y)) return make(Answer::No, Reason::Type2NotAdjacent, {VertexSet{x, y}});
  if (c.g0.empty()) return make(Answer::Yes, Reason::StructuralMatch, {}, "G0 is null");
  if (c.g0.size() != 2 || !g.adjacent(c.g0[0], c.g0[1]))
    return make(Answer::No, Reason::G0BadComponent, {c.g0}, "G0 is not K2");

  const Vertex u = c.g0[0], v = c.g0[1];
  for (Vertex t : {x, y})
    for (Vertex z : {u, v})
      if (g.adjacent(t, z)) return make(Answer::No, Reason::G2G0Edge, {VertexSet{t, z}});
  for (Vertex z : {u, v})
    if (g.degree(z) != 2)
      return make(Answer::No, Reason::G0BadComponent, {VertexSet{z}}, "G0 vertex of degree other than 2");

  // The 6-cycle must read x, a, p, q, b, y with {p, q} = {u, v}.
  auto other = [&](Vertex z, Vertex partner) { return g.neighbors(z)[0] == partner ? g.neighbors(z)[1] : g.neighbors(z)[0]; };
  for (auto [p, q] : {std::pair{u, v}, std::pair{v, u}}) {
    Vertex a = other(p, q), b = other(q, p);
    if (!g.adjacent(a, x) || !g.adjacent(b, y)) continue;
    VertexSet ring{x, a, p, q, b, y};
    if (ring.size() != 6) continue;
    auto h = induced_subgraph(g, ring).graph;
    if (h.size() == 6 && is_cycle_graph(h)) return make(Answer::Yes, Reason::StructuralMatch, {ring});
  }
  return make(Answer::No, Reason::NoInducedSixCycle, {VertexSet{x, y, u, v}});
}

Decision recognize_one_type2(const Graph& g, const Classification& c, const OracleOptions& options) {
  if (!girth(g).at_least(6)) throw PreconditionError("one-type-2 test requires girth at least 6");
  if (c.max_type > 2) throw PreconditionError("one-type-2 test forbids vertices of type 3 or more");
  if (c.g2.size() != 1) throw PreconditionError("one-type-2 test requires exactly one type-2 vertex");

  const Vertex x = c.g2[0];
  if (c.g0.empty()) return make(Answer::Yes, Reason::StructuralMatch, {}, "G0 is null");
  for (Vertex w : g.neighbors(x))
    if (c.g0.contains(w)) return make(Answer::No, Reason::G2G0Edge, {VertexSet{x, w}});

  for (const auto& block : g0_components(g, c)) {
    auto h = induced_subgraph(g, block).graph;
    const std::size_t n = h.order();
    bool allowed = n == 1 || n == 2 || (n == 4 && is_path_graph(h)) || (n == 7 && is_cycle_graph(h));
    if (!allowed) return make(Answer::No, Reason::G0BadComponent, {block}, "G0 component not K1, K2, P4 or C7");
  }

  // Size bounds 2*n0 and n0 (at most 14 and 7 since n0 <= 7 here).
  const VertexSet away = set_difference(c.g1, set_neighborhood(g, VertexSet{x}, Neighborhood::Open));
  const DeficitQuery queries[] = {
      {2, std::min<std::size_t>(14, 2 * c.n0), c.g1, 1},
      {1, std::min<std::size_t>(7, c.n0), away, 1},
  };
  for (const auto& q : queries) {
    if (auto w = find_deficit_witness(g, c, q, WitnessSearch::Restricted, options)) {
      Decision d = make(Answer::No, Reason::DeficitWitness, {*w});
      d.min_deficit = q.min_deficit;
      return d;
    }
  }
  return make(Answer::Yes, Reason::StructuralMatch);
}

bool in_recognition_contract(const Graph& g) { return girth(g).at_least(6) && !has_seven_cycle(g); }

namespace {

bool allowed_type01_g0_component(const Graph& h) {
  const std::size_t n = h.order();
  if (is_path_graph(h)) return n <= 8 || n == 10;
  if (is_cycle_graph(h)) return n == 6 || n == 8 || n == 9 || n == 10 || n == 11 || n == 13;
  return false;
}

Decision recognize_connected(const Graph& g, const OracleOptions& options) {
  if (is_well_covered_girth6(g)) return make(Answer::No, Reason::WellCovered);
  const Classification c = classify(g);

  if (c.max_type >= 3) {
    for (Vertex v : c.internal) {
      if (c.types[v] < 3) continue;
      VertexSet w{v};
      for (Vertex z : g.neighbors(v))
        if (g.degree(z) == 1) w.insert(z);
      return make(Answer::No, Reason::Type3Vertex, {w});
    }
  }

  // Triangle-free, so G2 is a clique only when it has at most two adjacent vertices.
  for (std::size_t i = 0; i < c.g2.size(); ++i)
    for (std::size_t j = i + 1; j < c.g2.size(); ++j)
      if (!g.adjacent(c.g2[i], c.g2[j])) return make(Answer::No, Reason::G2NotClique, {VertexSet{c.g2[i], c.g2[j]}});
  if (c.g2.size() > 2) return make(Answer::No, Reason::G2NotClique, {c.g2});

  if (c.g2.size() == 2) return recognize_two_type2(g, c);
  if (c.g2.size() == 1) return recognize_one_type2(g, c, options);

  for (const auto& block : g0_components(g, c)) {
    if (!allowed_type01_g0_component(induced_subgraph(g, block).graph))
      return make(Answer::No, Reason::G0BadComponent, {block}, "G0 component is not an admissible path or cycle");
  }
  return gap_at_most_k_type01(g, c, 1, options);
}

Decision recognize_in_contract(const Graph& g, const OracleOptions& options) {
  auto blocks = components(g).blocks;
  if (blocks.size() <= 1) return recognize_connected(g, options);

  std::vector<InducedSubgraph> rest;
  for (const auto& block : blocks) {
    auto h = induced_subgraph(g, block);
    if (!is_well_covered_girth6(h.graph)) rest.push_back(std::move(h));
  }
  if (rest.empty()) return make(Answer::No, Reason::WellCovered);
  if (rest.size() >= 2) {
    return make(Answer::No, Reason::ComponentCount, {rest[0].lift(rest[0].graph.vertices()), rest[1].lift(rest[1].graph.vertices())},
                "more than one component is not well-covered");
  }
  Decision d = recognize_connected(rest[0].graph, options);
  for (auto& w : d.witness) w = rest[0].lift(w);
  return d;
}

}  // namespace

Decision recognize(const Graph& g, const RecognizeOptions& options) {
  auto gr = girth(g);
  if (!gr.at_least(6)) throw OutOfContract("girth " + std::to_string(*gr.length) + " is below 6");
  if (has_seven_cycle(g)) throw OutOfContract("graph contains a 7-cycle");

  Decision d;
  try {
    d = recognize_in_contract(g, options.oracle);
  } catch (const OracleBudgetExceeded& e) {
    return make(Answer::OracleInfeasible, Reason::Oracle, {}, e.what());
  }

  if (options.crosscheck_n > 0 && g.order() <= options.crosscheck_n) {
    auto r = independence_report(g, options.oracle);
    if (d.yes() != (r.gap == 1)) {
      throw CrossCheckMismatch("recognizer answered " + std::string(to_string(d.answer)) + " (" +
                               std::string(to_string(d.reason)) + ") but oracle gap is " + std::to_string(r.gap));
    }
  }
  return d;
}

Decision oracle_decision(const Graph& g, const OracleOptions& options) {
  IndependenceReport r;
  try {
    r = independence_report(g, options);
  } catch (const OracleBudgetExceeded& e) {
    return make(Answer::OracleInfeasible, Reason::Oracle, {}, e.what());
  }
  return make(r.gap == 1 ? Answer::Yes : Answer::No, Reason::Oracle, {r.alpha_witness, r.imin_witness},
              "gap " + std::to_string(r.gap));
}

}  // namespace indgap
