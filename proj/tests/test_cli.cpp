#include <doctest.h>

#include <sstream>

#include "indgap/cli.hpp"
#include "indgap/corpus.hpp"
#include "indgap/graph6.hpp"
#include "json.hpp"

using namespace indgap;
using Json = nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;

  std::vector<Json> records() const {
    std::vector<Json> rs;
    std::istringstream lines(out);
    std::string line;
    while (std::getline(lines, line))
      if (!line.empty()) rs.push_back(Json::parse(line));
    return rs;
  }
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "indgap");
  std::istringstream in(input);
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("gap on a path") {
    auto r = run({"gap"}, "Bg\n");
    CHECK(r.code == kExitOk);
    auto rs = r.records();
    REQUIRE(rs.size() == 1);
    CHECK(rs[0]["g6"] == "Bg");
    CHECK(rs[0]["n"] == 3);
    CHECK(rs[0]["m"] == 2);
    CHECK(rs[0]["alpha"] == 2);
    CHECK(rs[0]["i"] == 1);
    CHECK(rs[0]["gap"] == 1);
    CHECK(rs[0]["class"] == "almost-well-covered");
  }

  TEST_CASE("recognize on a six-cycle") {
    auto r = run({"recognize"}, encode_graph6(family("cycle", 6)) + "\n");
    CHECK(r.code == kExitOk);
    auto rs = r.records();
    REQUIRE(rs.size() == 1);
    CHECK(rs[0]["awc"] == true);
    CHECK(rs[0]["reason"] == "structural-match");
  }

  TEST_CASE("recognize outside the contract") {
    auto r = run({"recognize"}, encode_graph6(family("cycle", 5)) + "\n");
    CHECK(r.code == kExitOk);
    auto rs = r.records();
    REQUIRE(rs.size() == 1);
    CHECK(rs[0]["awc"].is_null());
    CHECK(rs[0]["reason"] == "out-of-contract");
    CHECK(rs[0]["oracle_gap"] == 0);

    auto quiet = run({"recognize", "--crosscheck-n", "3"}, encode_graph6(family("cycle", 5)) + "\n");
    CHECK_FALSE(quiet.records()[0].contains("oracle_gap"));
  }

  TEST_CASE("verify over the exhaustive corpus") {
    auto r = run({"verify", "--exhaustive", "--n-max", "8", "--girth", "6", "--forbid", "7"});
    CHECK(r.code == kExitOk);
    auto rs = r.records();
    REQUIRE(rs.size() >= 2);
    const Json& summary = rs.back();
    CHECK(summary["summary"] == true);
    CHECK(summary["mismatches"] == 0);
    CHECK(summary["graphs"] == rs.size() - 1);
    for (std::size_t k = 0; k + 1 < rs.size(); ++k) CHECK(rs[k]["match"] == true);
  }

  TEST_CASE("verify counts out-of-contract graphs") {
    auto r = run({"verify"}, "@\n" + encode_graph6(family("cycle", 5)) + "\n");
    CHECK(r.code == kExitOk);
    auto rs = r.records();
    REQUIRE(rs.size() == 3);
    CHECK(rs[1]["match"].is_null());
    CHECK(rs[2]["out_of_contract"] == 1);
  }

  TEST_CASE("classify and wellcovered records") {
    auto c = run({"classify", "--family", "fig3"});
    CHECK(c.code == kExitOk);
    auto rec = c.records().at(0);
    CHECK(rec["g2"] == Json::array({fig3::x, fig3::y}));
    CHECK(rec["n0"] == 2);
    CHECK(rec["types"][fig3::x1].is_null());
    CHECK(rec["types"][fig3::a] == 1);
    CHECK(rec["g0_components"] == Json::parse("[[10,11]]"));

    auto w = run({"wellcovered"}, encode_graph6(family("path", 4)) + "\n" + encode_graph6(family("cycle", 4)) + "\n");
    auto ws = w.records();
    REQUIRE(ws.size() == 2);
    CHECK(ws[0]["well_covered"] == true);
    CHECK(ws[1]["well_covered"].is_null());
    CHECK(ws[1]["error"] == "girth-violation");
  }

  TEST_CASE("malformed lines are reported and skipped") {
    auto r = run({"gap"}, "Bg\nB!\n@\n");
    CHECK(r.code == kExitInputError);
    CHECK(r.records().size() == 2);
    CHECK(r.err.find("line 2") != std::string::npos);

    auto ff = run({"gap", "--fail-fast"}, "Bg\nB!\n@\n");
    CHECK(ff.code == kExitInputError);
    CHECK(ff.records().size() == 1);
  }

  TEST_CASE("argument errors") {
    CHECK(run({}).code == kExitInputError);
    CHECK(run({"frobnicate"}).code == kExitInputError);
    CHECK(run({"gap", "--bogus"}).code == kExitInputError);
    CHECK(run({"gap", "--exhaustive", "--n-max", "3", "--family", "fig3"}).code == kExitInputError);
    CHECK(run({"gap", "--random", "--n", "5"}).code == kExitInputError);  // no seed
    CHECK(run({"gap", "--input", "/nonexistent/file.g6"}).code == kExitInputError);
    CHECK(run({"gap", "--girth", "2", "--exhaustive", "--n-max", "3"}).code == kExitInputError);
    CHECK(run({"gap", "--exhaustive", "--n-max", "11"}).code == kExitInputError);
  }

  TEST_CASE("tsv output") {
    auto r = run({"gap", "--format", "tsv"}, "Bg\n");
    CHECK(r.code == kExitOk);
    std::istringstream lines(r.out);
    std::string header, row;
    std::getline(lines, header);
    std::getline(lines, row);
    CHECK(header.rfind("id\tg6\tn\tm\talpha\ti\tgap", 0) == 0);
    CHECK(row.rfind("1\tBg\t3\t2\t2\t1\t1", 0) == 0);
  }

  TEST_CASE("gen and random corpora") {
    auto g = run({"gen", "--exhaustive", "--n-max", "4", "--girth", "6", "--connected"});
    CHECK(g.code == kExitOk);
    std::istringstream gl(g.out);
    std::vector<std::size_t> orders;
    for (std::string w; std::getline(gl, w);) orders.push_back(parse_graph6(w).order());
    CHECK(orders == std::vector<std::size_t>{1, 2, 3, 4, 4});

    auto a = run({"gen", "--random", "--n", "12", "--girth", "6", "--forbid", "7", "--edges", "14", "--samples", "3",
                  "--seed", "1"});
    auto b = run({"gen", "--random", "--n", "12", "--girth", "6", "--forbid", "7", "--edges", "14", "--samples", "3",
                  "--seed", "1"});
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    std::istringstream words(a.out);
    std::string w;
    int count = 0;
    while (std::getline(words, w)) {
      Graph h = parse_graph6(w);
      CHECK(girth(h).at_least(6));
      CHECK_FALSE(has_seven_cycle(h));
      ++count;
    }
    CHECK(count == 3);
  }

  TEST_CASE("edge-list input and budget environment") {
    auto r = run({"gap", "--input-format", "edges"}, "n 4\n0 1\n1 2\n");
    CHECK(r.code == kExitOk);
    auto rec = r.records().at(0);
    CHECK(rec["n"] == 4);
    CHECK(rec["alpha"] == 3);

    auto tight = run({"gap", "--oracle-budget", "1", "--family", "cycle", "--size", "40"});
    CHECK(tight.code == kExitOk);
    CHECK(tight.records().at(0)["error"] == "oracle-infeasible");
    CHECK(run({"gap", "--oracle-budget", "0"}, "Bg\n").code == kExitInputError);
  }
}
