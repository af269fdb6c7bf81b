#include "indgap/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "indgap/classification.hpp"
#include "indgap/corpus.hpp"
#include "indgap/graph6.hpp"
#include "indgap/oracle.hpp"
#include "indgap/recognition.hpp"

namespace indgap {

namespace {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Json, Tsv };

struct RunConfig {
  std::string subcommand;
  std::string input;
  std::string input_format = "g6";
  OutputFormat format = OutputFormat::Json;
  std::uint64_t oracle_budget = kDefaultNodeBudget;
  std::size_t crosscheck_n = 20;
  bool fail_fast = false;

  bool exhaustive = false;
  bool random = false;
  std::string family;
  std::size_t size = 0;
  std::size_t n_min = 1;
  std::size_t n_max = 0;
  std::size_t girth_floor = 3;
  std::vector<std::size_t> forbid;
  bool connected = false;
  std::size_t n = 0;
  std::size_t edges = 0;
  std::size_t samples = 1;
  std::optional<std::uint64_t> seed;
};

Json ids(const VertexSet& s) { return Json(s.ids()); }

Json sets(const std::vector<VertexSet>& list) {
  Json out = Json::array();
  for (const auto& s : list) out.push_back(ids(s));
  return out;
}

Json base_record(const CorpusItem& item) {
  Json r;
  r["id"] = item.id;
  r["g6"] = item.g6;
  r["n"] = item.graph.order();
  r["m"] = item.graph.size();
  return r;
}

class RecordWriter {
 public:
  RecordWriter(std::ostream& out, OutputFormat format, std::vector<std::string> columns)
      : out_(out), format_(format), columns_(std::move(columns)) {}

  void write(const Json& record) {
    if (format_ == OutputFormat::Json) {
      out_ << record.dump() << '\n';
      return;
    }
    if (!header_done_) {
      for (std::size_t k = 0; k < columns_.size(); ++k) out_ << (k ? "\t" : "") << columns_[k];
      out_ << '\n';
      header_done_ = true;
    }
    for (std::size_t k = 0; k < columns_.size(); ++k) {
      if (k) out_ << '\t';
      auto it = record.find(columns_[k]);
      if (it == record.end()) continue;
      out_ << (it->is_string() ? it->get<std::string>() : it->dump());
    }
    out_ << '\n';
  }

  void summary(const Json& record) {
    if (format_ == OutputFormat::Json) {
      out_ << record.dump() << '\n';
    } else {
      out_ << "# summary " << record.dump() << '\n';
    }
  }

 private:
  std::ostream& out_;
  OutputFormat format_;
  std::vector<std::string> columns_;
  bool header_done_ = false;
};

std::vector<std::string> columns_for(const std::string& sub) {
  std::vector<std::string> c{"id", "g6", "n", "m"};
  std::vector<std::string> extra;
  if (sub == "gap") extra = {"alpha", "i", "gap", "class", "alpha_witness", "i_witness"};
  if (sub == "classify") extra = {"u", "leaves", "types", "g0", "g1", "g2", "g0_components", "n0", "max_type"};
  if (sub == "wellcovered") extra = {"well_covered", "error"};
  if (sub == "recognize") extra = {"awc", "reason", "witness", "detail", "oracle_gap"};
  if (sub == "verify") extra = {"awc", "reason", "oracle_gap", "match"};
  c.insert(c.end(), extra.begin(), extra.end());
  return c;
}

Json decision_fields(const Decision& d) {
  Json r;
  if (d.answer == Answer::OracleInfeasible) {
    r["awc"] = nullptr;
    r["reason"] = "oracle-infeasible";
  } else {
    r["awc"] = d.yes();
    r["reason"] = std::string(to_string(d.reason));
  }
  r["witness"] = sets(d.witness);
  if (d.reason == Reason::DeficitWitness) r["min_deficit"] = d.min_deficit;
  if (!d.detail.empty()) r["detail"] = d.detail;
  return r;
}

class Runner {
 public:
  Runner(const RunConfig& cfg, std::ostream& out, std::ostream& err)
      : cfg_(cfg), err_(err), writer_(out, cfg.format, columns_for(cfg.subcommand)) {
    oracle_.node_budget = cfg.oracle_budget;
  }

  // Returns false to stop the stream.
  bool handle(const CorpusItem& item) {
    ++graphs_;
    Json r = base_record(item);
    const std::string& sub = cfg_.subcommand;
    if (sub == "gap") {
      gap(item.graph, r);
    } else if (sub == "classify") {
      classify_record(item.graph, r);
    } else if (sub == "wellcovered") {
      if (girth(item.graph).at_least(6)) {
        r["well_covered"] = is_well_covered_girth6(item.graph);
      } else {
        r["well_covered"] = nullptr;
        r["error"] = "girth-violation";
      }
    } else if (sub == "recognize") {
      recognize_record(item.graph, r);
    } else if (sub == "verify") {
      if (!verify_record(item.graph, r)) {
        writer_.write(r);
        return !cfg_.fail_fast;
      }
    }
    writer_.write(r);
    return true;
  }

  void finish() {
    if (cfg_.subcommand != "verify") return;
    Json s;
    s["summary"] = true;
    s["graphs"] = graphs_;
    s["mismatches"] = mismatches_;
    s["out_of_contract"] = out_of_contract_;
    s["oracle_infeasible"] = infeasible_;
    writer_.summary(s);
  }

  std::size_t mismatches() const { return mismatches_; }

 private:
  void gap(const Graph& g, Json& r) {
    try {
      auto c = gap_class(g, oracle_);
      r["alpha"] = c.report.alpha;
      r["i"] = c.report.imin;
      r["gap"] = c.report.gap;
      r["class"] = std::string(to_string(c.gap_class));
      r["alpha_witness"] = ids(c.report.alpha_witness);
      r["i_witness"] = ids(c.report.imin_witness);
    } catch (const OracleBudgetExceeded& e) {
      r["gap"] = nullptr;
      r["error"] = "oracle-infeasible";
    }
  }

  void classify_record(const Graph& g, Json& r) {
    auto c = classify(g);
    r["u"] = ids(c.u);
    r["leaves"] = ids(c.leaves);
    Json types = Json::array();
    for (int t : c.types) types.push_back(t < 0 ? Json(nullptr) : Json(t));
    r["types"] = types;
    r["g0"] = ids(c.g0);
    r["g1"] = ids(c.g1);
    r["g2"] = ids(c.g2);
    r["g0_components"] = sets(g0_components(g, c));
    r["n0"] = c.n0;
    r["max_type"] = c.max_type < 0 ? Json(nullptr) : Json(c.max_type);
  }

  void recognize_record(const Graph& g, Json& r) {
    if (!in_recognition_contract(g)) {
      r["awc"] = nullptr;
      r["reason"] = "out-of-contract";
      if (g.order() <= cfg_.crosscheck_n) {
        try {
          r["oracle_gap"] = independence_report(g, oracle_).gap;
        } catch (const OracleBudgetExceeded&) {
          r["oracle_gap"] = nullptr;
        }
      }
      return;
    }
    RecognizeOptions opts;
    opts.crosscheck_n = cfg_.crosscheck_n;
    opts.oracle = oracle_;
    r.update(decision_fields(recognize(g, opts)));
  }

  bool verify_record(const Graph& g, Json& r) {
    std::optional<std::size_t> oracle_gap;
    try {
      oracle_gap = independence_report(g, oracle_).gap;
    } catch (const OracleBudgetExceeded&) {
    }
    r["oracle_gap"] = oracle_gap ? Json(*oracle_gap) : Json(nullptr);
    if (!in_recognition_contract(g)) {
      ++out_of_contract_;
      r["awc"] = nullptr;
      r["reason"] = "out-of-contract";
      r["match"] = nullptr;
      return true;
    }
    RecognizeOptions opts;
    opts.oracle = oracle_;
    Decision d = recognize(g, opts);
    r.update(decision_fields(d));
    if (d.answer == Answer::OracleInfeasible || !oracle_gap) {
      ++infeasible_;
      r["match"] = nullptr;
      return true;
    }
    bool match = d.yes() == (*oracle_gap == 1);
    r["match"] = match;
    if (!match) {
      ++mismatches_;
      err_ << "mismatch: " << r["g6"].get<std::string>() << " recognizer=" << to_string(d.answer)
           << " oracle_gap=" << *oracle_gap << '\n';
    }
    return match;
  }

  const RunConfig& cfg_;
  std::ostream& err_;
  RecordWriter writer_;
  OracleOptions oracle_;
  std::size_t graphs_ = 0;
  std::size_t mismatches_ = 0;
  std::size_t out_of_contract_ = 0;
  std::size_t infeasible_ = 0;
};

void add_common_options(CLI::App& sub, RunConfig& cfg) {
  sub.add_option("--input", cfg.input, "graph6 file, one word per line ('-' for stdin)");
  sub.add_option("--input-format", cfg.input_format, "g6 or edges (single edge-list graph)")
      ->check(CLI::IsMember({"g6", "edges"}));
  sub.add_option("--format", cfg.format, "output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, OutputFormat>{{"json", OutputFormat::Json},
                                                                              {"tsv", OutputFormat::Tsv}}));
  sub.add_option("--oracle-budget", cfg.oracle_budget, "oracle branch-node budget")->check(CLI::PositiveNumber);
  sub.add_option("--crosscheck-n", cfg.crosscheck_n, "cross-check recognizer against the oracle up to this order");
  sub.add_flag("--fail-fast", cfg.fail_fast, "stop at the first input error or mismatch");
  sub.add_flag("--exhaustive", cfg.exhaustive, "enumerate all graphs up to --n-max");
  sub.add_option("--n-min", cfg.n_min, "smallest order for --exhaustive")->check(CLI::PositiveNumber);
  sub.add_option("--n-max", cfg.n_max, "largest order for --exhaustive");
  sub.add_option("--girth", cfg.girth_floor, "girth floor")->check(CLI::Range(3, 1000));
  sub.add_option("--forbid", cfg.forbid, "forbidden cycle lengths")->delimiter(',');
  sub.add_flag("--connected", cfg.connected, "connected graphs only");
  sub.add_flag("--random", cfg.random, "random girth-constrained graphs");
  sub.add_option("--n", cfg.n, "order of random graphs");
  sub.add_option("--edges", cfg.edges, "edge budget of random graphs");
  sub.add_option("--samples", cfg.samples, "number of random graphs");
  sub.add_option_function<std::uint64_t>("--seed", [&cfg](const std::uint64_t& s) { cfg.seed = s; }, "random seed");
  sub.add_option("--family", cfg.family, "named fixture or family (path, cycle, double-star, dstar, fig3, t1, n1)");
  sub.add_option("--size", cfg.size, "family size parameter");
}

std::optional<CorpusSpec> corpus_spec(const RunConfig& cfg) {
  CorpusSpec spec;
  spec.girth_floor = cfg.girth_floor;
  spec.forbid = cfg.forbid;
  spec.connected = cfg.connected;
  if (cfg.exhaustive) {
    spec.kind = CorpusKind::Exhaustive;
    spec.n_min = cfg.n_min;
    spec.n_max = cfg.n_max;
  } else if (cfg.random) {
    spec.kind = CorpusKind::Random;
    spec.n = cfg.n;
    spec.edges = cfg.edges;
    spec.samples = cfg.samples;
    spec.seed = cfg.seed;
  } else if (!cfg.family.empty()) {
    spec.kind = CorpusKind::Family;
    spec.name = cfg.family;
    spec.n = cfg.size;
  } else {
    return std::nullopt;
  }
  return spec;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  if (const char* env = std::getenv("INDGAP_ORACLE_BUDGET")) {
    try {
      cfg.oracle_budget = std::stoull(env);
    } catch (const std::exception&) {
      err << "invalid INDGAP_ORACLE_BUDGET '" << env << "'\n";
      return kExitInputError;
    }
  }

  CLI::App app{"Independence gap analysis and almost-well-covered recognition", "indgap"};
  app.require_subcommand(1);
  const std::pair<const char*, const char*> subs[] = {
      {"gap", "exact alpha, i and gap per graph"},
      {"classify", "vertex types, G0/G1/G2 and G0 components"},
      {"wellcovered", "girth >= 6 well-covered test"},
      {"recognize", "almost-well-covered recognition for {C3,C4,C5,C7}-free graphs"},
      {"verify", "compare the recognizer with the oracle on every graph"},
      {"gen", "emit the corpus as graph6"},
  };
  for (auto [name, help] : subs) {
    auto* sub = app.add_subcommand(name, help);
    add_common_options(*sub, cfg);
    sub->callback([&cfg, name = std::string(name)] { cfg.subcommand = name; });
  }

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitInputError;
  }

  int sources = (cfg.exhaustive ? 1 : 0) + (cfg.random ? 1 : 0) + (!cfg.family.empty() ? 1 : 0) +
                (!cfg.input.empty() ? 1 : 0);
  if (sources > 1) {
    err << "specify exactly one input source\n";
    return kExitInputError;
  }

  std::vector<CorpusItem> items;
  std::unique_ptr<std::ifstream> file;
  std::istream* stream = nullptr;
  try {
    if (auto spec = corpus_spec(cfg)) {
      items = materialize(*spec);
    } else {
      if (cfg.input.empty() || cfg.input == "-") {
        stream = &in;
      } else {
        file = std::make_unique<std::ifstream>(cfg.input);
        if (!*file) {
          err << "cannot open '" << cfg.input << "'\n";
          return kExitInputError;
        }
        stream = file.get();
      }
      if (cfg.input_format == "edges") {
        CorpusItem item;
        item.graph = parse_edge_list(*stream);
        item.id = 0;
        item.g6 = encode_graph6(item.graph);
        items.push_back(std::move(item));
        stream = nullptr;
      }
    }
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kExitInputError;
  }

  if (cfg.subcommand == "gen") {
    for (const auto& item : items) out << item.g6 << '\n';
    if (stream) {
      Graph6Reader reader(*stream);
      try {
        while (auto item = reader.next()) out << encode_graph6(item->graph) << '\n';
      } catch (const CorpusError& e) {
        err << e.what() << '\n';
        return kExitInputError;
      }
    }
    return kExitOk;
  }

  Runner runner(cfg, out, err);
  bool input_error = false;
  try {
    bool go = true;
    for (const auto& item : items) {
      if (!(go = runner.handle(item))) break;
    }
    if (stream && go) {
      Graph6Reader reader(*stream);
      while (go) {
        std::optional<CorpusItem> item;
        try {
          item = reader.next();
        } catch (const CorpusError& e) {
          err << e.what() << '\n';
          input_error = true;
          if (cfg.fail_fast) break;
          continue;
        }
        if (!item) break;
        go = runner.handle(*item);
      }
    }
  } catch (const CrossCheckMismatch& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
  runner.finish();
  out.flush();
  if (runner.mismatches() > 0) return kExitMismatch;
  return input_error ? kExitInputError : kExitOk;
}

}  // namespace indgap
