#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "indgap/classification.hpp"
#include "indgap/graph.hpp"
#include "indgap/oracle.hpp"

namespace indgap {

/// Input outside the {C3,C4,C5,C7}-free class handled by recognize().
class OutOfContract : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A structural answer disagreed with the oracle during a cross-check.
class CrossCheckMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Answer { Yes, No, OracleInfeasible };

enum class Reason {
  StructuralMatch,
  WellCovered,
  ComponentCount,
  Type3Vertex,
  G2NotClique,
  Type2NotAdjacent,
  G2G0Edge,
  G0BadComponent,
  G0Gap,
  NoInducedSixCycle,
  DeficitWitness,
  Oracle,
};

std::string_view to_string(Answer a);
std::string_view to_string(Reason r);

/// Recognizer verdict with the sets that substantiate it. For
/// Reason::DeficitWitness the single witness set I satisfies
/// deficit(g, classify(g), I) >= min_deficit; for Reason::Oracle the witness
/// holds a maximum and a minimum maximal independent set.
struct Decision {
  Answer answer = Answer::No;
  Reason reason = Reason::StructuralMatch;
  std::vector<VertexSet> witness;
  std::size_t min_deficit = 0;
  std::string detail;

  bool yes() const { return answer == Answer::Yes; }
};

/// Search for an independent I inside `domain` (a subset of g1) with
/// |I| <= max_size and deficit(I) >= min_deficit.
struct DeficitQuery {
  std::size_t min_deficit = 1;
  std::size_t max_size = 0;
  VertexSet domain;
  std::size_t k_bound = 0;
};

/// alpha(G0) - i(G0 - N(I)) for an independent I inside g1.
std::size_t deficit(const Graph& g, const Classification& c, const VertexSet& i_set,
                    const OracleOptions& options = {});

enum class WitnessSearch {
  /// Only attachment vertices of at most min_deficit G0 components at a
  /// time, each addition growing the attacked set.
  Restricted,
  /// Every independent subset of the domain up to the size bound.
  Exhaustive,
};

std::optional<VertexSet> find_deficit_witness(const Graph& g, const Classification& c, const DeficitQuery& q,
                                              WitnessSearch mode = WitnessSearch::Restricted,
                                              const OracleOptions& options = {});

/// Gap <= k test for graphs whose internal vertices all have type 0 or 1.
Decision gap_at_most_k_type01(const Graph& g, const Classification& c, std::size_t k,
                              const OracleOptions& options = {});

/// Almost-well-covered test for connected girth >= 6 graphs with exactly two
/// type-2 vertices and none of higher type.
Decision recognize_two_type2(const Graph& g, const Classification& c);

/// Almost-well-covered test for girth >= 6 graphs with exactly one type-2
/// vertex and none of higher type.
Decision recognize_one_type2(const Graph& g, const Classification& c, const OracleOptions& options = {});

struct RecognizeOptions {
  /// Cross-check against the oracle when order() <= crosscheck_n (0: never).
  std::size_t crosscheck_n = 0;
  OracleOptions oracle;
};

/// True when g has girth >= 6 and no 7-cycle.
bool in_recognition_contract(const Graph& g);

/// Almost-well-covered recognition for {C3,C4,C5,C7}-free graphs. Throws
/// OutOfContract otherwise and CrossCheckMismatch when a requested oracle
/// cross-check disagrees.
Decision recognize(const Graph& g, const RecognizeOptions& options = {});

/// Oracle verdict on gap == 1, carrying a maximum and a minimum maximal
/// independent set as witnesses.
Decision oracle_decision(const Graph& g, const OracleOptions& options = {});

}  // namespace indgap
