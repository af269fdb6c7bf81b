#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "indgap/graph.hpp"

namespace indgap {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct OracleOptions {
  /// Branch nodes allowed per call, shared by the alpha and i searches.
  std::uint64_t node_budget = kDefaultNodeBudget;
};

/// Thrown when a search exhausts its node budget. The instance is then
/// oracle-infeasible; no partial answer is ever returned.
class OracleBudgetExceeded : public std::runtime_error {
 public:
  explicit OracleBudgetExceeded(std::uint64_t budget)
      : std::runtime_error("oracle node budget of " + std::to_string(budget) + " exceeded"), budget_(budget) {}
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
};

/// Exact alpha(G), i(G) and their difference, with witnesses.
struct IndependenceReport {
  std::size_t alpha = 0;
  std::size_t imin = 0;
  std::size_t gap = 0;
  VertexSet alpha_witness;  // maximum independent set
  VertexSet imin_witness;   // minimum maximal independent set
};

/// Computed per component and summed. Null graph: all zero.
IndependenceReport independence_report(const Graph& g, const OracleOptions& options = {});

std::size_t independence_number(const Graph& g, const OracleOptions& options = {});
std::size_t independent_domination_number(const Graph& g, const OracleOptions& options = {});

struct MaximalSetEnumeration {
  std::vector<VertexSet> sets;
  bool truncated = false;
};

/// All maximal independent sets, in lexicographic order of their sorted ids.
/// Stops after `limit` sets and flags the result as truncated when more exist.
MaximalSetEnumeration enumerate_maximal_independent_sets(const Graph& g,
                                                         std::size_t limit = std::numeric_limits<std::size_t>::max());

enum class GapClass { WellCovered, AlmostWellCovered, GapAtLeastTwo };

std::string_view to_string(GapClass c);

struct GapClassification {
  GapClass gap_class = GapClass::WellCovered;
  IndependenceReport report;
};

GapClassification gap_class(const Graph& g, const OracleOptions& options = {});

}  // namespace indgap
