#include "indgap/oracle.hpp"

#include <algorithm>
#include <optional>

namespace indgap {

namespace {

class NodeBudget {
 public:
  explicit NodeBudget(std::uint64_t limit) : limit_(limit) {}
  void tick() {
    if (++used_ > limit_) throw OracleBudgetExceeded(limit_);
  }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

// Branch and bound for alpha on one connected graph. Degree <= 1 vertices
// are taken greedily; otherwise branch on a maximum-degree vertex. Pruning
// uses a greedy clique cover of the candidate set.
class MaxIndependentSearch {
 public:
  MaxIndependentSearch(const Graph& g, NodeBudget& budget) : g_(g), budget_(budget) {}

  std::vector<Vertex> run() {
    best_.clear();
    current_.clear();
    search(Bitset::full(g_.order()));
    return best_;
  }

 private:
  std::size_t clique_cover(const Bitset& candidates) const {
    std::vector<Bitset> common;
    candidates.for_each([&](std::size_t v) {
      for (auto& c : common) {
        if (c.test(v)) {
          c &= g_.row(static_cast<Vertex>(v));
          return;
        }
      }
      common.push_back(g_.row(static_cast<Vertex>(v)) & candidates);
    });
    return common.size();
  }

  void search(Bitset candidates) {
    budget_.tick();
    const std::size_t mark = current_.size();
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t v = candidates.first(); v < candidates.width(); v = candidates.next(v + 1)) {
        const Bitset& row = g_.row(static_cast<Vertex>(v));
        if (row.intersection_count(candidates) <= 1) {
          current_.push_back(static_cast<Vertex>(v));
          candidates.reset(v);
          candidates -= row;
          changed = true;
        }
      }
    }
    if (candidates.none()) {
      if (current_.size() > best_.size() || best_.empty()) best_ = current_;
    } else if (current_.size() + clique_cover(candidates) > best_.size()) {
      std::size_t pick = candidates.width(), pick_degree = 0;
      candidates.for_each([&](std::size_t v) {
        std::size_t d = g_.row(static_cast<Vertex>(v)).intersection_count(candidates);
        if (pick == candidates.width() || d > pick_degree) {
          pick = v;
          pick_degree = d;
        }
      });
      current_.push_back(static_cast<Vertex>(pick));
      Bitset with = candidates - g_.row(static_cast<Vertex>(pick));
      with.reset(pick);
      search(std::move(with));
      current_.pop_back();
      candidates.reset(pick);
      search(std::move(candidates));
    }
    current_.resize(mark);
  }

  const Graph& g_;
  NodeBudget& budget_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
};

// Minimum maximal independent set (independent domination number). The
// lowest undominated vertex v must be dominated by some free vertex of N[v],
// so branching over those is complete.
class MinMaximalSearch {
 public:
  MinMaximalSearch(const Graph& g, NodeBudget& budget) : g_(g), budget_(budget) {
    const std::size_t n = g.order();
    closed_.reserve(n);
    for (Vertex v = 0; v < n; ++v) {
      Bitset row = g.row(v);
      row.set(v);
      closed_.push_back(std::move(row));
      max_closed_ = std::max(max_closed_, g.degree(v) + 1);
    }
  }

  std::vector<Vertex> run() {
    best_.reset();
    current_.clear();
    search(Bitset(g_.order()));
    return best_.value_or(std::vector<Vertex>{});
  }

 private:
  void search(const Bitset& dominated) {
    budget_.tick();
    const std::size_t v = dominated.first_unset();
    if (v == dominated.width()) {
      if (!best_ || current_.size() < best_->size()) best_ = current_;
      return;
    }
    const std::size_t undominated = dominated.width() - dominated.count();
    const std::size_t needed = (undominated + max_closed_ - 1) / max_closed_;
    if (best_ && current_.size() + needed >= best_->size()) return;
    const Bitset& options = closed_[v];
    for (std::size_t w = options.first(); w < options.width(); w = options.next(w + 1)) {
      if (dominated.test(w)) continue;
      current_.push_back(static_cast<Vertex>(w));
      search(dominated | closed_[w]);
      current_.pop_back();
      if (best_ && current_.size() + needed >= best_->size()) return;
    }
  }

  const Graph& g_;
  NodeBudget& budget_;
  std::vector<Bitset> closed_;
  std::size_t max_closed_ = 1;
  std::vector<Vertex> current_;
  std::optional<std::vector<Vertex>> best_;
};

template <class Search>
VertexSet solve_by_components(const Graph& g, NodeBudget& budget) {
  std::vector<Vertex> out;
  for (const auto& block : components(g).blocks) {
    auto part = induced_subgraph(g, block);
    Search search(part.graph, budget);
    for (Vertex v : search.run()) out.push_back(part.to_parent[v]);
  }
  return VertexSet(std::move(out));
}

}  // namespace

IndependenceReport independence_report(const Graph& g, const OracleOptions& options) {
  NodeBudget budget(options.node_budget);
  IndependenceReport r;
  r.alpha_witness = solve_by_components<MaxIndependentSearch>(g, budget);
  r.imin_witness = solve_by_components<MinMaximalSearch>(g, budget);
  r.alpha = r.alpha_witness.size();
  r.imin = r.imin_witness.size();
  r.gap = r.alpha - r.imin;
  return r;
}

std::size_t independence_number(const Graph& g, const OracleOptions& options) {
  NodeBudget budget(options.node_budget);
  return solve_by_components<MaxIndependentSearch>(g, budget).size();
}

std::size_t independent_domination_number(const Graph& g, const OracleOptions& options) {
  NodeBudget budget(options.node_budget);
  return solve_by_components<MinMaximalSearch>(g, budget).size();
}

namespace {

class MaximalSetEnumerator {
 public:
  MaximalSetEnumerator(const Graph& g, std::size_t limit) : g_(g), limit_(limit) {}

  MaximalSetEnumeration run() {
    const std::size_t n = g_.order();
    chosen_ = Bitset(n);
    recurse(Bitset::full(n));
    return std::move(out_);
  }

 private:
  // Returns false once the cap has been hit.
  bool recurse(Bitset free) {
    const std::size_t v = free.first();
    if (v == free.width()) {
      Bitset covered = chosen_;
      chosen_.for_each([&](std::size_t u) { covered |= g_.row(static_cast<Vertex>(u)); });
      if (covered.count() != covered.width()) return true;
      if (out_.sets.size() == limit_) {
        out_.truncated = true;
        return false;
      }
      out_.sets.push_back(VertexSet::from_bits(chosen_));
      return true;
    }
    const Bitset& row = g_.row(static_cast<Vertex>(v));
    chosen_.set(v);
    Bitset with = free - row;
    with.reset(v);
    bool keep_going = recurse(std::move(with));
    chosen_.reset(v);
    if (!keep_going) return false;
    // Leaving v out only makes sense if a later choice can still dominate it.
    free.reset(v);
    if (!row.intersects(free) && !row.intersects(chosen_)) return true;
    return recurse(std::move(free));
  }

  const Graph& g_;
  std::size_t limit_;
  Bitset chosen_;
  MaximalSetEnumeration out_;
};

}  // namespace

MaximalSetEnumeration enumerate_maximal_independent_sets(const Graph& g, std::size_t limit) {
  return MaximalSetEnumerator(g, limit).run();
}

std::string_view to_string(GapClass c) {
  switch (c) {
    case GapClass::WellCovered:
      return "well-covered";
    case GapClass::AlmostWellCovered:
      return "almost-well-covered";
    case GapClass::GapAtLeastTwo:
      return "gap>=2";
  }
  return "unknown";
}

GapClassification gap_class(const Graph& g, const OracleOptions& options) {
  GapClassification out;
  out.report = independence_report(g, options);
  switch (out.report.gap) {
    case 0:
      out.gap_class = GapClass::WellCovered;
      break;
    case 1:
      out.gap_class = GapClass::AlmostWellCovered;
      break;
    default:
      out.gap_class = GapClass::GapAtLeastTwo;
  }
  return out;
}

}  // namespace indgap
