#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "indgap/corpus.hpp"
#include "indgap/graph6.hpp"

using namespace indgap;

namespace {

struct ReferenceRow {
  std::string word;
  std::size_t n = 0;
  std::vector<Edge> edges;
};

std::vector<ReferenceRow> reference_rows() {
  std::ifstream in(std::string(INDGAP_TEST_DATA) + "/graph6_reference.tsv");
  REQUIRE(in);
  std::vector<ReferenceRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    ReferenceRow row;
    std::string n_text, edge_text;
    std::getline(fields, row.word, '\t');
    std::getline(fields, n_text, '\t');
    std::getline(fields, edge_text);
    row.n = std::stoul(n_text);
    std::istringstream es(edge_text);
    std::string e;
    while (es >> e) {
      auto dash = e.find('-');
      row.edges.emplace_back(std::stoul(e.substr(0, dash)), std::stoul(e.substr(dash + 1)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

TEST_SUITE("graph6") {
  TEST_CASE("decoding small words") {
    Graph k1 = parse_graph6("@");
    CHECK(k1.order() == 1);
    CHECK(k1.size() == 0);

    Graph p3 = parse_graph6("Bg");
    CHECK(p3.order() == 3);
    CHECK(p3.edges() == std::vector<Edge>{{0, 1}, {1, 2}});

    Graph empty3 = parse_graph6("B?");
    CHECK(empty3.order() == 3);
    CHECK(empty3.size() == 0);

    CHECK(parse_graph6("?").is_null());
    CHECK(parse_graph6("Bg\n") == p3);
    CHECK(parse_graph6("Bg\r\n") == p3);
  }

  TEST_CASE("encoding small graphs") {
    CHECK(encode_graph6(Graph::from_edges(1, {})) == "@");
    CHECK(encode_graph6(Graph::from_edges(3, {{0, 1}, {1, 2}})) == "Bg");
    CHECK(encode_graph6(Graph()) == "?");
    CHECK(encode_graph6(Graph::from_edges(3, {})) == "B?");
  }

  TEST_CASE("length field forms") {
    std::string w62 = encode_graph6(family("path", 62));
    CHECK(w62[0] == static_cast<char>(62 + 63));
    std::string w63 = encode_graph6(family("path", 63));
    CHECK(w63.substr(0, 4) == "~??~");
    CHECK(parse_graph6(w63) == family("path", 63));
  }

  TEST_CASE("malformed words are rejected") {
    CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("A"), Graph6Error);     // missing data byte
    CHECK_THROWS_AS(parse_graph6("Bgg"), Graph6Error);   // trailing data
    CHECK_THROWS_AS(parse_graph6("Bh"), Graph6Error);    // padding bit set
    CHECK_THROWS_AS(parse_graph6("B "), Graph6Error);    // byte below 63
    CHECK_THROWS_AS(parse_graph6("~??C"), Graph6Error);  // long form for n < 63
    CHECK_THROWS_AS(parse_graph6("~"), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("Bg x"), Graph6Error);
  }

  TEST_CASE("reference corpus decodes and re-encodes bit-exactly") {
    auto rows = reference_rows();
    REQUIRE(rows.size() >= 50);
    for (const auto& row : rows) {
      CAPTURE(row.word);
      Graph g = parse_graph6(row.word);
      CHECK(g.order() == row.n);
      CHECK(g == Graph::from_edges(row.n, row.edges));
      CHECK(encode_graph6(g) == row.word);
    }
  }

  TEST_CASE("parse of encode is the identity on random graphs") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 500; ++trial) {
      std::size_t n = rng() % 140;
      std::bernoulli_distribution coin(0.05 + 0.9 * static_cast<double>(rng() % 100) / 100.0);
      std::vector<Edge> edges;
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
          if (coin(rng)) edges.emplace_back(u, v);
      Graph g = Graph::from_edges(n, edges);
      std::string w = encode_graph6(g);
      CHECK(parse_graph6(w) == g);
      CHECK(encode_graph6(parse_graph6(w)) == w);
    }
  }

  TEST_CASE("edge-list format") {
    std::istringstream in("# a path\nn 5\n0 1\n1 2\n\n# tail\n");
    Graph g = parse_edge_list(in);
    CHECK(g.order() == 5);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});

    std::istringstream implicit("0 3\n3 1\n");
    CHECK(parse_edge_list(implicit).order() == 4);

    std::istringstream bad("0 x\n");
    CHECK_THROWS_AS(parse_edge_list(bad), GraphError);
    std::istringstream overflow("n 2\n0 2\n");
    CHECK_THROWS_AS(parse_edge_list(overflow), GraphError);
    std::istringstream loop("1 1\n");
    CHECK_THROWS_AS(parse_edge_list(loop), GraphError);
  }
}
