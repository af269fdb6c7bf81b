#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "brute_force.hpp"
#include "indgap/corpus.hpp"
#include "indgap/graph6.hpp"

using namespace indgap;

namespace {

std::vector<std::size_t> counts_by_order(std::size_t girth_floor, std::vector<std::size_t> forbid, bool connected) {
  std::vector<std::size_t> counts;
  for (std::size_t n = 1; n <= 7; ++n) {
    ExhaustiveSpec spec{n, girth_floor, forbid, connected, n};
    counts.push_back(exhaustive(spec).size());
  }
  return counts;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(g.order(), edges);
}

}  // namespace

TEST_SUITE("corpus") {
  TEST_CASE("families") {
    Graph c6 = family("cycle", 6);
    CHECK(c6.order() == 6);
    CHECK(c6.size() == 6);
    CHECK(is_cycle_graph(c6));
    CHECK(family("path", 1).order() == 1);
    CHECK(family("path", 1).size() == 0);

    Graph fig = family("fig3");
    CHECK(fig.order() == 12);
    CHECK(fig.size() == 12);
    REQUIRE(girth(fig).length);
    CHECK(*girth(fig).length == 6);

    Graph ds = family("double-star", 2);
    CHECK(ds.order() == 6);
    CHECK(canonical_form(ds) == canonical_form(family("dstar")));
    CHECK(family("t1").order() == 5);
    CHECK(family("n1").order() == 7);
    CHECK_THROWS_AS(family("wheel", 5), CorpusError);
    CHECK_THROWS_AS(family("path", 0), CorpusError);
  }

  TEST_CASE("exhaustive small examples") {
    auto three = exhaustive({3, 3, {}, true, 3});
    REQUIRE(three.size() == 2);
    std::set<std::string> words;
    for (const auto& g : three) words.insert(canonical_form(g));
    CHECK(words == std::set<std::string>{canonical_form(family("path", 3)), canonical_form(family("cycle", 3))});

    auto four = exhaustive({4, 6, {}, true, 4});
    REQUIRE(four.size() == 2);
    words.clear();
    for (const auto& g : four) words.insert(canonical_form(g));
    Graph claw = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(words == std::set<std::string>{canonical_form(family("path", 4)), canonical_form(claw)});

    auto one = exhaustive({1, 3, {}, true});
    REQUIRE(one.size() == 1);
    CHECK(one[0].order() == 1);

    CHECK(exhaustive({3, 3, {}, true}).size() == 4);  // K1, K2, P3, K3
    CHECK_THROWS_AS(exhaustive({11, 3, {}, false}), CorpusError);
    CHECK_THROWS_AS(exhaustive({5, 2, {}, false}), CorpusError);
    CHECK_THROWS_AS(exhaustive({5, 3, {}, false, 6}), CorpusError);
  }

  TEST_CASE("exhaustive counts match the graph atlas") {
    using V = std::vector<std::size_t>;
    CHECK(counts_by_order(3, {}, false) == V{1, 2, 4, 11, 34, 156, 1044});
    CHECK(counts_by_order(3, {}, true) == V{1, 1, 2, 6, 21, 112, 853});
    CHECK(counts_by_order(4, {}, false) == V{1, 2, 3, 7, 14, 38, 107});
    CHECK(counts_by_order(4, {}, true) == V{1, 1, 1, 3, 6, 19, 59});
    CHECK(counts_by_order(5, {}, false) == V{1, 2, 3, 6, 11, 23, 48});
    CHECK(counts_by_order(5, {}, true) == V{1, 1, 1, 2, 4, 8, 18});
    CHECK(counts_by_order(6, {}, false) == V{1, 2, 3, 6, 10, 21, 40});
    CHECK(counts_by_order(6, {}, true) == V{1, 1, 1, 2, 3, 7, 13});
    CHECK(counts_by_order(6, {7}, false) == V{1, 2, 3, 6, 10, 21, 39});
    CHECK(counts_by_order(6, {7}, true) == V{1, 1, 1, 2, 3, 7, 12});
  }

  TEST_CASE("exhaustive counts of girth-six graphs up to 10 vertices") {
    using V = std::vector<std::size_t>;
    auto by_order = [](std::vector<std::size_t> forbid, bool connected) {
      V counts(10, 0);
      for (const auto& g : exhaustive({10, 6, forbid, connected})) ++counts[g.order() - 1];
      return counts;
    };
    CHECK(by_order({}, false) == V{1, 2, 3, 6, 10, 21, 40, 88, 192, 473});
    CHECK(by_order({}, true) == V{1, 1, 1, 2, 3, 7, 13, 31, 71, 198});
    CHECK(by_order({7}, false) == V{1, 2, 3, 6, 10, 21, 39, 86, 183, 442});
    CHECK(by_order({7}, true) == V{1, 1, 1, 2, 3, 7, 12, 30, 65, 178});
  }

  TEST_CASE("exhaustive emits no isomorphic pair up to 7 vertices") {
    auto all = exhaustive({7, 3, {}, false});
    std::set<std::pair<std::size_t, std::string>> seen;
    for (const auto& g : all) CHECK(seen.emplace(g.order(), brute::canonical(g)).second);
    CHECK(seen.size() == 1 + 2 + 4 + 11 + 34 + 156 + 1044);
  }

  TEST_CASE("exhaustive output obeys the filters") {
    for (const auto& g : exhaustive({9, 6, {7}, true})) {
      CHECK(girth(g).at_least(6));
      CHECK_FALSE(has_seven_cycle(g));
      CHECK(is_connected(g));
    }
  }

  TEST_CASE("canonical form is a relabeling invariant") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 300; ++trial) {
      std::size_t n = 1 + rng() % 10;
      Graph g = random_girth_graph(n, 3, {}, rng() % (n * 2 + 1), rng());
      std::vector<Vertex> perm(n);
      std::iota(perm.begin(), perm.end(), Vertex{0});
      std::shuffle(perm.begin(), perm.end(), rng);
      Graph h = relabel(g, perm);
      CHECK(canonical_form(g) == canonical_form(h));
      CHECK(parse_graph6(canonical_form(g)).size() == g.size());
    }
    CHECK(canonical_form(family("path", 4)) != canonical_form(Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}})));
    CHECK(canonical_form(Graph()) == "?");
  }

  TEST_CASE("random girth-constrained graphs") {
    Graph k1 = random_girth_graph(1, 6, {7}, 10, 3);
    CHECK(k1.order() == 1);
    CHECK(k1.size() == 0);

    Graph g = random_girth_graph(12, 6, {7}, 14, 1);
    CHECK(g.order() == 12);
    CHECK(girth(g).at_least(6));
    CHECK_FALSE(has_seven_cycle(g));
    CHECK(is_connected(g));
    CHECK(g.size() <= 14);

    Graph t = random_girth_graph(5, 6, {}, 10, 7);
    CHECK(t.size() == 4);
    CHECK(is_connected(t));
    CHECK(girth(t).acyclic());

    CHECK(random_girth_graph(16, 6, {7}, 20, 42) == random_girth_graph(16, 6, {7}, 20, 42));
  }

  TEST_CASE("random graphs always satisfy their filters") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 400; ++trial) {
      std::size_t n = 1 + rng() % 20;
      std::size_t floor = 3 + rng() % 5;
      std::vector<std::size_t> forbid;
      if (rng() % 2) forbid.push_back(floor + 1 + rng() % 3);
      Graph g = random_girth_graph(n, floor, forbid, n + rng() % n, rng());
      CHECK(g.order() == n);
      CHECK(is_connected(g));
      CHECK(admissible(g, floor, forbid));
      CHECK(g.size() >= n - 1);
    }
  }

  TEST_CASE("graph6 stream loading") {
    std::istringstream two("@\nBg\n");
    auto items = load_graph6_stream(two);
    REQUIRE(items.size() == 2);
    CHECK(items[0].graph.order() == 1);
    CHECK(items[1].graph == family("path", 3));
    CHECK(items[0].id == 1);
    CHECK(items[1].id == 2);
    CHECK(items[1].g6 == "Bg");

    std::istringstream empty("");
    CHECK(load_graph6_stream(empty).empty());

    std::istringstream crlf("Bg\r\n\r\n@\r\n");
    auto c = load_graph6_stream(crlf);
    REQUIRE(c.size() == 2);
    CHECK(c[1].id == 3);

    std::istringstream bad("B!\nBg\n");
    try {
      load_graph6_stream(bad);
      FAIL("expected a corpus error");
    } catch (const CorpusError& e) {
      CHECK(std::string(e.what()).find("line 1") != std::string::npos);
    }

    std::istringstream later("Bg\n@\nzz\n");
    Graph6Reader reader(later);
    CHECK(reader.next());
    CHECK(reader.next());
    CHECK_THROWS_AS(reader.next(), CorpusError);
    CHECK(reader.line() == 3);
  }

  TEST_CASE("graph6 file loading") {
    std::string path = std::filesystem::temp_directory_path() / "indgap_corpus_test.g6";
    {
      std::ofstream out(path);
      out << "@\r\nBg\r\n" << encode_graph6(family("fig3")) << "\n";
    }
    auto items = load_graph6_file(path);
    REQUIRE(items.size() == 3);
    CHECK(items[2].graph == family("fig3"));
    std::filesystem::remove(path);
  }

  TEST_CASE("corpus specs") {
    CorpusSpec random;
    random.kind = CorpusKind::Random;
    random.n = 10;
    random.girth_floor = 6;
    random.forbid = {7};
    random.edges = 12;
    random.samples = 5;
    CHECK_THROWS_AS(materialize(random), CorpusError);
    random.seed = 4;
    auto a = materialize(random);
    auto b = materialize(random);
    REQUIRE(a.size() == 5);
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k].graph == b[k].graph);

    CorpusSpec ex;
    ex.kind = CorpusKind::Exhaustive;
    ex.n_max = 0;
    CHECK_THROWS_AS(materialize(ex), CorpusError);
    ex.n_max = 5;
    ex.girth_floor = 6;
    ex.connected = true;
    CHECK(materialize(ex).size() == 1 + 1 + 1 + 2 + 3);

    CorpusSpec fam;
    fam.kind = CorpusKind::Family;
    fam.name = "cycle";
    fam.n = 6;
    auto f = materialize(fam);
    REQUIRE(f.size() == 1);
    CHECK(f[0].g6 == encode_graph6(family("cycle", 6)));

    CorpusSpec missing;
    missing.kind = CorpusKind::File;
    missing.path = "/nonexistent/graphs.g6";
    CHECK_THROWS_AS(materialize(missing), CorpusError);
  }
}
