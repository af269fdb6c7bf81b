#include "indgap/graph6.hpp"

#include <cstdint>
#include <sstream>
#include <vector>

namespace indgap {

namespace {

constexpr int kBias = 63;
constexpr std::uint64_t kShortMax = 62;
constexpr std::uint64_t kMediumMax = 258047;
constexpr std::uint64_t kLongMax = 68719476735ULL;

int sextet(char c, std::size_t pos) {
  auto u = static_cast<unsigned char>(c);
  if (u < 63 || u > 126) {
    throw Graph6Error("graph6: byte " + std::to_string(static_cast<int>(u)) + " at position " +
                      std::to_string(pos) + " outside 63..126");
  }
  return u - kBias;
}

void append_length(std::string& out, std::uint64_t n) {
  if (n <= kShortMax) {
    out.push_back(static_cast<char>(n + kBias));
    return;
  }
  int groups = 3;
  if (n <= kMediumMax) {
    out.push_back('~');
  } else {
    out += "~~";
    groups = 6;
  }
  for (int k = groups - 1; k >= 0; --k) out.push_back(static_cast<char>(((n >> (6 * k)) & 63) + kBias));
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("graph6: empty word");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  auto read_groups = [&](int groups) {
    if (pos + static_cast<std::size_t>(groups) > text.size()) throw Graph6Error("graph6: truncated length field");
    for (int k = 0; k < groups; ++k, ++pos) n = (n << 6) | static_cast<std::uint64_t>(sextet(text[pos], pos));
  };
  if (text[0] != '~') {
    n = static_cast<std::uint64_t>(sextet(text[0], 0));
    pos = 1;
  } else if (text.size() > 1 && text[1] == '~') {
    pos = 2;
    read_groups(6);
    if (n <= kMediumMax) throw Graph6Error("graph6: non-canonical 8-byte length field");
  } else {
    pos = 1;
    read_groups(3);
    if (n <= kShortMax) throw Graph6Error("graph6: non-canonical 4-byte length field");
  }
  if (n > kLongMax) throw Graph6Error("graph6: vertex count too large");

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t body = (bits + 5) / 6;
  if (text.size() - pos != body) {
    throw Graph6Error("graph6: expected " + std::to_string(body) + " data bytes for n=" + std::to_string(n) +
                      ", found " + std::to_string(text.size() - pos));
  }

  std::vector<Edge> edges;
  // Column-major upper triangle: x(0,1), x(0,2), x(1,2), x(0,3), ...
  std::uint64_t bit = 0, i = 0, j = 1;
  for (std::size_t k = pos; k < text.size(); ++k) {
    int value = sextet(text[k], k);
    for (int b = 5; b >= 0; --b, ++bit) {
      bool set = (value >> b) & 1;
      if (bit >= bits) {
        if (set) throw Graph6Error("graph6: nonzero padding bits");
        continue;
      }
      if (set) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  append_length(out, n);
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::vector<Edge> edges;
  std::size_t declared = 0;
  bool seen_content = false;
  std::size_t line_no = 0;
  std::size_t max_id_plus_one = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line.substr(first));
    if (!seen_content && line[first] == 'n') {
      std::string tag;
      if (!(fields >> tag >> declared) || tag != "n") {
        throw GraphError("edge list line " + std::to_string(line_no) + ": malformed vertex-count line");
      }
      seen_content = true;
      continue;
    }
    seen_content = true;
    long long u = -1, v = -1;
    std::string rest;
    if (!(fields >> u >> v) || (fields >> rest) || u < 0 || v < 0) {
      throw GraphError("edge list line " + std::to_string(line_no) + ": expected two non-negative ids");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    max_id_plus_one = std::max<std::size_t>(max_id_plus_one, static_cast<std::size_t>(std::max(u, v)) + 1);
  }
  if (declared != 0 && max_id_plus_one > declared) {
    throw GraphError("edge list: vertex id " + std::to_string(max_id_plus_one - 1) + " exceeds declared count " +
                     std::to_string(declared));
  }
  return Graph::from_edges(std::max(declared, max_id_plus_one), edges);
}

}  // namespace indgap
