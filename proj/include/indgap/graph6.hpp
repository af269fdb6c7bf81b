#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "indgap/graph.hpp"

namespace indgap {

class Graph6Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Decodes one graph6 word. A trailing CR/LF is tolerated; anything else
/// that is not a well-formed word throws Graph6Error.
Graph parse_graph6(std::string_view text);

/// Bit-exact graph6 encoding; uses the "~" length forms for n >= 63.
std::string encode_graph6(const Graph& g);

/// Edge-list text: one "u v" pair per line, '#' comments, optional leading
/// "n <count>" line declaring the vertex count.
Graph parse_edge_list(std::istream& in);

}  // namespace indgap
