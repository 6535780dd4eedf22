// Copyright 2026 The eznet Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eznet/correlation.h"
#include "eznet/data_matrix.h"
#include "eznet/edge_list.h"
#include "eznet/error.h"
#include "eznet/gaussian.h"
#include "eznet/generators.h"
#include "eznet/graph.h"
#include "eznet/network_tests.h"
#include "eznet/simulation.h"
#include "eznet/subgraph_stats.h"
#include "json.hpp"

namespace eznet::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr double kNa = std::numeric_limits<double>::quiet_NaN();

Json JsonNumber(double x) {
  return std::isfinite(x) ? Json(x) : Json(nullptr);
}

struct Record {
  std::string graph_id;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> edges;
  double e_hat = kNa;
  double v_hat = kNa;
  double t_hat = kNa;
  double ez_char = kNa;
  std::optional<TestResult> result;
  std::vector<std::string> notes;
  // Set when the input could not be processed at all.
  std::optional<std::string> error;
};

struct SkipCounts {
  std::int64_t below_min = 0;
  std::int64_t above_max = 0;
  std::int64_t undefined = 0;

  std::int64_t total() const { return below_min + above_max + undefined; }
};

struct Batch {
  std::string command;
  std::optional<std::string> test;
  std::optional<double> alpha;
  std::vector<Record> records;
  std::optional<SkipCounts> skipped;

  bool failed() const {
    return std::any_of(records.begin(), records.end(),
                       [](const Record& r) { return r.error.has_value(); });
  }
};

std::string JoinNotes(const std::vector<std::string>& notes) {
  std::string s;
  for (const std::string& n : notes) {
    if (!s.empty()) s += "; ";
    s += n;
  }
  return s;
}

std::string FormatCount(const std::optional<std::int64_t>& v) {
  return v ? std::to_string(*v) : "NA";
}

void WriteBatchCsv(const Batch& b, std::ostream& out) {
  out << "graph_id,n,edges,e_hat,v_hat,t_hat,ez_char";
  if (b.test) {
    out << ",test,statistic,p_value";
    if (b.alpha) out << ",reject";
    out << ",note";
  }
  out << '\n';
  for (const Record& r : b.records) {
    if (r.error) {
      out << "# error," << CsvField(r.graph_id) << ',' << CsvField(*r.error)
          << '\n';
      continue;
    }
    out << CsvField(r.graph_id) << ',' << FormatCount(r.n) << ','
        << FormatCount(r.edges) << ',' << FormatNumber(r.e_hat) << ','
        << FormatNumber(r.v_hat) << ',' << FormatNumber(r.t_hat) << ','
        << FormatNumber(r.ez_char);
    if (b.test) {
      const double stat = r.result ? r.result->statistic : kNa;
      const double pv = r.result ? r.result->p_value : kNa;
      out << ',' << *b.test << ',' << FormatNumber(stat) << ','
          << FormatNumber(pv);
      if (b.alpha) {
        out << ',' << (r.result ? (pv < *b.alpha ? "1" : "0") : "NA");
      }
      std::vector<std::string> notes = r.notes;
      if (r.result) {
        notes.insert(notes.end(), r.result->notes.begin(),
                     r.result->notes.end());
      }
      out << ',' << CsvField(JoinNotes(notes));
    }
    out << '\n';
  }
  if (b.skipped) {
    out << "# skipped," << b.skipped->total()
        << ",below_min=" << b.skipped->below_min
        << ",above_max=" << b.skipped->above_max
        << ",undefined=" << b.skipped->undefined << '\n';
  }
}

Json TestResultJson(const TestResult& r) {
  Json j;
  j["test_id"] = std::string(TestIdName(r.test_id));
  j["statistic"] = JsonNumber(r.statistic);
  j["p_value"] = JsonNumber(r.p_value);
  j["null_distribution"] = std::string(NullDistributionName(r.null_distribution));
  if (r.densities) {
    const SubgraphDensities& d = *r.densities;
    j["densities"] = {{"n", d.n},
                      {"edges", d.edges},
                      {"vees", d.vees},
                      {"triangles", d.triangles},
                      {"e_hat", JsonNumber(d.e_hat)},
                      {"v_hat", JsonNumber(d.v_hat)},
                      {"t_hat", JsonNumber(d.t_hat)}};
  } else {
    j["densities"] = nullptr;
  }
  Json diag = Json::object();
  for (const auto& [k, v] : r.diagnostics) diag[k] = JsonNumber(v);
  j["diagnostics"] = diag;
  j["notes"] = r.notes;
  return j;
}

void WriteBatchJson(const Batch& b, std::ostream& out) {
  Json root;
  root["command"] = b.command;
  if (b.test) root["test"] = *b.test;
  if (b.alpha) root["alpha"] = *b.alpha;
  Json records = Json::array();
  for (const Record& r : b.records) {
    Json j;
    j["graph_id"] = r.graph_id;
    if (r.error) {
      j["error"] = *r.error;
      records.push_back(j);
      continue;
    }
    j["n"] = r.n ? Json(*r.n) : Json(nullptr);
    j["edges"] = r.edges ? Json(*r.edges) : Json(nullptr);
    j["e_hat"] = JsonNumber(r.e_hat);
    j["v_hat"] = JsonNumber(r.v_hat);
    j["t_hat"] = JsonNumber(r.t_hat);
    j["ez_characteristic"] = JsonNumber(r.ez_char);
    if (b.test) {
      j["result"] = r.result ? TestResultJson(*r.result) : Json(nullptr);
      if (b.alpha) {
        j["reject"] =
            r.result ? Json(r.result->p_value < *b.alpha) : Json(nullptr);
      }
      j["notes"] = r.notes;
    }
    records.push_back(j);
  }
  root["records"] = records;
  if (b.skipped) {
    root["skipped"] = {{"total", b.skipped->total()},
                       {"below_min", b.skipped->below_min},
                       {"above_max", b.skipped->above_max},
                       {"undefined", b.skipped->undefined}};
  }
  out << root.dump(2) << '\n';
}

void WriteBatch(const Batch& b, const std::string& format, std::ostream& out) {
  if (format == "json") {
    WriteBatchJson(b, out);
  } else {
    WriteBatchCsv(b, out);
  }
}

void FillDensities(const SubgraphDensities& d, Record& r) {
  r.n = d.n;
  r.edges = d.edges;
  r.e_hat = d.e_hat;
  r.v_hat = d.v_hat;
  r.t_hat = d.t_hat;
  r.ez_char = d.e_hat > 0.0 ? EzCharacteristic(d) : kNa;
}

struct InputOptions {
  int index_base = 0;
  std::optional<double> threshold;
  CorrelationMethod method = CorrelationMethod::kPearson;
};

Graph LoadGraph(const std::string& path, const InputOptions& o) {
  if (o.threshold) return CorrelationGraph(ReadCsvFile(path), *o.threshold, o.method);
  EdgeListOptions el;
  el.index_base = o.index_base;
  return ReadEdgeListFile(path, el).graph;
}

struct TestOptions {
  TestId test = TestId::kEzDcbm;
  EzTestOptions ez;
  GaussianTestOptions gaussian;
};

TestResult RunGraphTest(const Graph& g, const TestOptions& o) {
  switch (o.test) {
    case TestId::kEzDcbm:
    case TestId::kEzNeighborhood:
      return EzTestDcbm(g, o.ez);
    case TestId::kEzSbm:
      return EzTestSbm(g, o.ez.alternative);
    case TestId::kErChi2:
      return ErChi2Test(g);
    case TestId::kEzGaussian:
      break;
  }
  throw DomainError("ez-gaussian needs a data matrix, not a graph");
}

Record GaussianRecord(const std::string& path, const TestOptions& o) {
  Record r;
  r.graph_id = path;
  DataMatrix d;
  try {
    d = ReadCsvFile(path);
  } catch (const std::exception& e) {
    r.error = e.what();
    return r;
  }
  r.n = d.rows();
  try {
    TestResult t = EzTestGaussian(d, o.gaussian);
    r.e_hat = t.diagnostics.at("e_hat");
    r.v_hat = t.diagnostics.at("v_hat");
    r.t_hat = t.diagnostics.at("t_hat");
    r.ez_char = t.diagnostics.at("ez_characteristic");
    r.result = std::move(t);
  } catch (const DomainError& e) {
    r.notes.emplace_back(e.what());
  }
  return r;
}

struct EgoSelection {
  bool all = false;
  std::vector<std::int64_t> ids;  // as written, before re-basing
  std::int64_t min_size = 0;
  std::optional<std::int64_t> max_size;
};

// One record per qualifying ego of `g`; ids are reported in the input's
// index base.
void RunNeighborhoods(const Graph& g, const std::string& prefix,
                      const EgoSelection& sel, const TestOptions& o,
                      int index_base, Batch& batch, SkipCounts& skips) {
  std::vector<std::int64_t> egos;
  if (sel.all) {
    for (std::int64_t v = 0; v < g.num_nodes(); ++v) egos.push_back(v);
  } else {
    for (const std::int64_t id : sel.ids) egos.push_back(id - index_base);
  }
  const std::int64_t lower = std::max<std::int64_t>(3, sel.min_size);
  for (const std::int64_t ego : egos) {
    const std::string id = prefix + std::to_string(ego + index_base);
    if (ego < 0 || ego >= g.num_nodes()) {
      Record r;
      r.graph_id = id;
      r.error = "ego " + std::to_string(ego + index_base) + " is not a node";
      batch.records.push_back(std::move(r));
      continue;
    }
    const auto v = static_cast<NodeId>(ego);
    const std::int64_t m = g.degree(v);
    if (m < lower) {
      ++skips.below_min;
      continue;
    }
    if (sel.max_size && m > *sel.max_size) {
      ++skips.above_max;
      continue;
    }
    const Graph h = NeighborhoodSubgraph(g, v);
    Record r;
    r.graph_id = id;
    try {
      r.result = o.test == TestId::kEzDcbm ? EzTestNeighborhood(g, v, o.ez)
                                           : RunGraphTest(h, o);
    } catch (const DomainError&) {
      ++skips.undefined;
      continue;
    }
    FillDensities(Densities(h), r);
    batch.records.push_back(std::move(r));
  }
}

std::vector<std::int64_t> ParseEgoList(const std::string& text) {
  std::vector<std::int64_t> ids;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != item.size()) {
      throw DomainError("malformed ego id '" + item + "'");
    }
    ids.push_back(v);
  }
  if (ids.empty()) throw DomainError("empty ego list");
  return ids;
}

EzNormalization ParseNormalization(const std::string& s) {
  if (s == "vst") return EzNormalization::kVarianceStabilized;
  if (s == "triangle") return EzNormalization::kTriangle;
  if (s == "vee") return EzNormalization::kVee;
  throw DomainError("unknown normalization '" + s + "'");
}

Alternative ParseAlternative(const std::string& s) {
  if (s == "two-sided") return Alternative::kTwoSided;
  if (s == "greater") return Alternative::kGreater;
  if (s == "less") return Alternative::kLess;
  throw DomainError("unknown alternative '" + s + "'");
}

struct ModelFlags {
  std::string model;
  std::int64_t n = 0;
  std::int64_t vars = 0;
  int k = 1;
  int r = 1;
  double a = 0.0;
  std::optional<double> b;
  double p = 0.0;
  std::int64_t samples = 0;
  std::string weights = "const";

  void Register(CLI::App* sc) {
    sc->add_option("--model", model,
                   "er | sbm | dcbm | config | neighborhood | gaussian")
        ->required();
    sc->add_option("--n", n, "Nodes (variables for gaussian)");
    sc->add_option("--vars", vars, "Variables for gaussian (same as --n)");
    sc->add_option("--k", k, "Communities");
    sc->add_option("--r", r, "Communities the ego attaches to");
    sc->add_option("--a", a, "Within-community edge scale");
    sc->add_option("--b", b, "Across-community edge scale (default: a)");
    sc->add_option("--p", p, "ER edge probability or ego attachment probability");
    sc->add_option("--samples", samples, "Observations for gaussian");
    sc->add_option("--weights", weights,
                   "const | two-point:LO,HI,Q | two-point:LO,,Q | lognormal:S");
  }

  ModelSpec ToSpec() const {
    ModelSpec m;
    m.kind = ParseModelKind(model);
    m.n = (m.kind == ModelKind::kGaussian && vars > 0) ? vars : n;
    m.k = k;
    m.r = r;
    m.a = a;
    m.b = b.value_or(a);
    m.p = p;
    m.samples = samples;
    m.weights = ParseWeightDistribution(weights);
    if (m.kind == ModelKind::kSbm) m.weights = WeightDistribution::ConstantOne();
    if (m.kind == ModelKind::kConfig) {
      m.k = 1;
      m.b = m.a;
    }
    m.Validate();
    return m;
  }
};

void WriteSimulationCsv(const std::vector<SimulationReport>& reports,
                        std::uint64_t seed, std::ostream& out) {
  out << "model,test,seed,replicates,alpha,rejection_rate,statistic_mean,"
         "statistic_var,theoretical_delta,ks_statistic,failed_replicates\n";
  for (const SimulationReport& r : reports) {
    out << CsvField(r.model) << ',' << TestCliName(r.test) << ',' << seed << ','
        << r.replicates << ',' << FormatNumber(r.alpha) << ','
        << FormatNumber(r.rejection_rate) << ','
        << FormatNumber(r.statistic_mean) << ','
        << FormatNumber(r.statistic_var) << ','
        << FormatNumber(r.theoretical_delta.value_or(kNa)) << ','
        << FormatNumber(r.ks_statistic) << ',' << r.failed_replicates << '\n';
  }
}

void WriteSimulationJson(const std::vector<SimulationReport>& reports,
                         std::uint64_t seed, bool keep, std::ostream& out) {
  Json root;
  root["command"] = "simulate";
  root["seed"] = seed;
  Json arr = Json::array();
  for (const SimulationReport& r : reports) {
    Json j;
    j["model"] = r.model;
    j["test"] = std::string(TestCliName(r.test));
    j["replicates"] = r.replicates;
    j["alpha"] = r.alpha;
    j["rejection_rate"] = JsonNumber(r.rejection_rate);
    j["statistic_mean"] = JsonNumber(r.statistic_mean);
    j["statistic_var"] = JsonNumber(r.statistic_var);
    j["theoretical_delta"] = JsonNumber(r.theoretical_delta.value_or(kNa));
    j["ks_statistic"] = JsonNumber(r.ks_statistic);
    j["failed_replicates"] = r.failed_replicates;
    if (keep) {
      Json s = Json::array();
      Json p = Json::array();
      for (const double x : r.statistics) s.push_back(JsonNumber(x));
      for (const double x : r.p_values) p.push_back(JsonNumber(x));
      j["statistics"] = s;
      j["p_values"] = p;
    }
    arr.push_back(j);
  }
  root["reports"] = arr;
  out << root.dump(2) << '\n';
}

// Writes the sample of `m` drawn with `seed`: an edge list, or CSV rows for
// the gaussian model.
void Generate(const ModelSpec& m, Seed seed, int index_base, std::ostream& out,
              std::ostream& err) {
  std::vector<std::string> warnings;
  Graph g;
  switch (m.kind) {
    case ModelKind::kEr:
      g = SampleEr(m.n, m.p, seed);
      break;
    case ModelKind::kSbm: {
      DcbmSample s = SampleSbm(m.n, m.k, m.a, m.b, seed);
      g = std::move(s.graph);
      warnings = std::move(s.warnings);
      break;
    }
    case ModelKind::kDcbm: {
      DcbmSample s = SampleDcbm({m.n, m.k, m.a, m.b, m.weights}, seed);
      g = std::move(s.graph);
      warnings = std::move(s.warnings);
      break;
    }
    case ModelKind::kConfig: {
      DcbmSample s = SampleConfig(m.n, m.a, m.weights, seed);
      g = std::move(s.graph);
      warnings = std::move(s.warnings);
      break;
    }
    case ModelKind::kNeighborhood: {
      NeighborhoodSample s = SampleNeighborhoodModel(
          {m.n, m.k, m.r, m.a, m.b, m.p, m.weights}, seed);
      g = std::move(s.graph);
      warnings = std::move(s.warnings);
      break;
    }
    case ModelKind::kGaussian:
      WriteCsv(SampleGaussianDcbm(m.samples, {m.n, m.k, m.a, m.b, m.weights},
                                  seed)
                   .data,
               out);
      return;
  }
  for (const std::string& w : warnings) err << "warning: " << w << '\n';
  WriteEdgeList(g, out, index_base);
}

}  // namespace

std::string FormatNumber(double x) {
  if (!std::isfinite(x)) return "NA";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (const char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  q += '"';
  return q;
}

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Subgraph-count tests of network and correlation structure",
               "eznet"};
  app.require_subcommand(1);

  std::string format = "csv";
  std::string out_path;
  InputOptions input;
  std::string method = "pearson";
  std::string test_name;
  std::optional<double> alpha;
  std::string normalization = "vst";
  std::string alternative = "two-sided";
  bool no_standardize = false;
  std::vector<std::string> inputs;
  std::string ego_text;
  bool ego_all = false;
  std::int64_t min_size = 0;
  std::optional<std::int64_t> max_size;
  ModelFlags model;
  std::vector<std::string> sim_tests;
  std::int64_t replicates = 100;
  double sim_alpha = 0.05;
  std::uint64_t seed = 0;
  bool keep_statistics = false;

  auto add_output = [&](CLI::App* sc) {
    sc->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sc->add_option("--out", out_path, "Output file (default: stdout)");
  };
  auto add_graph_input = [&](CLI::App* sc) {
    sc->add_option("--index-base", input.index_base, "First node id (0 or 1)")
        ->check(CLI::IsMember({0, 1}));
    sc->add_option("--threshold", input.threshold,
                   "Read data CSVs and connect variables with correlation "
                   "above this value");
    sc->add_option("--method", method, "pearson or spearman (with --threshold)")
        ->check(CLI::IsMember({"pearson", "spearman"}));
  };
  auto add_test_options = [&](CLI::App* sc) {
    sc->add_option("--normalization", normalization, "vst, triangle or vee")
        ->check(CLI::IsMember({"vst", "triangle", "vee"}));
    sc->add_option("--alternative", alternative, "two-sided, greater or less")
        ->check(CLI::IsMember({"two-sided", "greater", "less"}));
    sc->add_flag("--no-standardize", no_standardize,
                 "Use gaussian data columns as given");
  };
  auto add_ego = [&](CLI::App* sc) {
    sc->add_option("--ego", ego_text, "'all' or a comma-separated id list");
    sc->add_flag("--ego-all", ego_all, "Test the neighborhood of every node");
    sc->add_option("--min-size", min_size, "Smallest neighborhood tested")
        ->check(CLI::NonNegativeNumber);
    sc->add_option("--max-size", max_size, "Largest neighborhood tested")
        ->check(CLI::NonNegativeNumber);
  };

  CLI::App* stats = app.add_subcommand("stats", "Subgraph densities per graph");
  stats->add_option("inputs", inputs, "Edge-list files")->required();
  add_output(stats);
  add_graph_input(stats);

  CLI::App* test = app.add_subcommand("test", "Run a test on each input");
  test->add_option("inputs", inputs, "Edge-list or data CSV files")->required();
  test->add_option("--test", test_name, "ez-dcbm, ez-sbm, er-chi2, ez-gaussian")
      ->required()
      ->check(CLI::IsMember({"ez-dcbm", "ez-sbm", "er-chi2", "ez-gaussian"}));
  test->add_option("--alpha", alpha, "Adds a reject column at this level");
  add_output(test);
  add_graph_input(test);
  add_test_options(test);
  add_ego(test);

  CLI::App* hoods = app.add_subcommand(
      "neighborhoods", "Test the induced neighborhood of selected egos");
  hoods->add_option("input", inputs, "Edge-list file")->required()->expected(1);
  hoods->add_option("--test", test_name, "ez-dcbm, ez-sbm or er-chi2")
      ->check(CLI::IsMember({"ez-dcbm", "ez-sbm", "er-chi2"}));
  hoods->add_option("--alpha", alpha, "Adds a reject column at this level");
  add_output(hoods);
  add_graph_input(hoods);
  add_test_options(hoods);
  add_ego(hoods);

  CLI::App* sim = app.add_subcommand("simulate", "Monte Carlo test behavior");
  model.Register(sim);
  sim->add_option("--test", sim_tests, "Tests to apply (repeat or comma list)")
      ->delimiter(',')
      ->check(CLI::IsMember({"ez-dcbm", "ez-sbm", "er-chi2", "ez-gaussian"}));
  sim->add_option("--replicates", replicates, "Number of draws")
      ->check(CLI::PositiveNumber);
  sim->add_option("--alpha", sim_alpha, "Test level");
  sim->add_option("--seed", seed, "Base seed");
  sim->add_flag("--keep-statistics", keep_statistics,
                "Include per-replicate values in JSON output");
  add_output(sim);
  add_test_options(sim);

  CLI::App* gen = app.add_subcommand("gen", "Draw one sample from a model");
  model.Register(gen);
  gen->add_option("--seed", seed, "Seed");
  gen->add_option("--index-base", input.index_base, "First node id (0 or 1)")
      ->check(CLI::IsMember({0, 1}));
  gen->add_option("--out", out_path, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot open '" << out_path << "' for writing\n";
      return kExitUsage;
    }
    sink = &file;
  }

  TestOptions topts;
  EgoSelection egos;
  try {
    input.method = ParseCorrelationMethod(method);
    topts.ez.normalization = ParseNormalization(normalization);
    topts.ez.alternative = ParseAlternative(alternative);
    topts.gaussian.alternative = topts.ez.alternative;
    topts.gaussian.standardize = !no_standardize;
    egos.all = ego_all || ego_text == "all";
    if (!egos.all && !ego_text.empty()) egos.ids = ParseEgoList(ego_text);
    egos.min_size = min_size;
    egos.max_size = max_size;
    if (max_size && *max_size < min_size) {
      throw DomainError("--max-size is below --min-size");
    }
    if (alpha && !(*alpha > 0.0 && *alpha < 1.0)) {
      throw DomainError("--alpha must lie in (0, 1)");
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (stats->parsed()) {
    Batch b;
    b.command = "stats";
    for (const std::string& path : inputs) {
      Record r;
      r.graph_id = path;
      Graph g;
      try {
        g = LoadGraph(path, input);
      } catch (const std::exception& e) {
        r.error = e.what();
        b.records.push_back(std::move(r));
        continue;
      }
      r.n = g.num_nodes();
      r.edges = g.num_edges();
      if (g.num_nodes() >= 3) FillDensities(Densities(g), r);
      b.records.push_back(std::move(r));
    }
    WriteBatch(b, format, *sink);
    return b.failed() ? kExitInputFailed : kExitOk;
  }

  if (test->parsed() || hoods->parsed()) {
    const bool neighborhood_mode =
        hoods->parsed() || egos.all || !egos.ids.empty();
    if (hoods->parsed() && egos.ids.empty()) egos.all = true;
    if (test_name.empty()) test_name = "ez-dcbm";
    topts.test = ParseTestName(test_name);
    const bool gaussian = topts.test == TestId::kEzGaussian;
    if (gaussian && (neighborhood_mode || input.threshold)) {
      err << "error: ez-gaussian reads data CSVs; --ego and --threshold do "
             "not apply\n";
      return kExitUsage;
    }
    Batch b;
    b.command = hoods->parsed() ? "neighborhoods" : "test";
    b.test = test_name;
    b.alpha = alpha;
    if (neighborhood_mode) b.skipped = SkipCounts{};
    for (const std::string& path : inputs) {
      if (gaussian) {
        b.records.push_back(GaussianRecord(path, topts));
        continue;
      }
      Graph g;
      try {
        g = LoadGraph(path, input);
      } catch (const std::exception& e) {
        Record r;
        r.graph_id = path;
        r.error = e.what();
        b.records.push_back(std::move(r));
        continue;
      }
      if (neighborhood_mode) {
        const std::string prefix = hoods->parsed() ? "" : path + ":";
        RunNeighborhoods(g, prefix, egos, topts, input.index_base, b,
                         *b.skipped);
        continue;
      }
      Record r;
      r.graph_id = path;
      const SubgraphDensities d = Densities(g);
      FillDensities(d, r);
      try {
        r.result = RunGraphTest(g, topts);
      } catch (const DomainError& e) {
        r.notes.emplace_back(e.what());
      }
      b.records.push_back(std::move(r));
    }
    WriteBatch(b, format, *sink);
    return b.failed() ? kExitInputFailed : kExitOk;
  }

  if (sim->parsed()) {
    SimulationConfig config;
    try {
      config.model = model.ToSpec();
      config.tests.clear();
      if (sim_tests.empty()) {
        sim_tests.emplace_back(config.model.kind == ModelKind::kGaussian
                                   ? "ez-gaussian"
                                   : "ez-dcbm");
      }
      for (const std::string& t : sim_tests) {
        config.tests.push_back(ParseTestName(t));
      }
      config.replicates = replicates;
      config.alpha = sim_alpha;
      config.seed = Seed{seed};
      config.ez_options = topts.ez;
      config.gaussian_options = topts.gaussian;
      config.keep_statistics = keep_statistics;
      const std::vector<SimulationReport> reports = RunSimulation(config);
      if (format == "json") {
        WriteSimulationJson(reports, seed, keep_statistics, *sink);
      } else {
        WriteSimulationCsv(reports, seed, *sink);
      }
    } catch (const DomainError& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    return kExitOk;
  }

  if (gen->parsed()) {
    try {
      Generate(model.ToSpec(), Seed{seed}, input.index_base, *sink, err);
    } catch (const DomainError& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    return kExitOk;
  }
  return kExitUsage;
}

}  // namespace eznet::cli
