// Copyright 2026 The polyring Authors.
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

#include "polyring/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "polyring/notation.hpp"
#include "polyring/oracle.hpp"
#include "polyring/polygraph.hpp"
#include "polyring/transfer.hpp"
#include "polyring/verify.hpp"

namespace polyring::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Result of one command, also the --json payload:
//   {"mode","input","method","result","elapsed_s","agreement"}
struct RunReport {
  std::string mode;
  std::string input;
  std::string method;
  nlohmann::json result;
  double elapsed_s = 0.0;
  std::optional<bool> agreement;

  nlohmann::json to_json() const {
    nlohmann::json doc = {{"mode", mode},     {"input", input},
                          {"method", method}, {"result", result},
                          {"elapsed_s", elapsed_s}};
    doc["agreement"] = agreement ? nlohmann::json(*agreement) : nlohmann::json();
    return doc;
  }
};

nlohmann::json vector_json(const MMVector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const Count& c : v) out.push_back(to_decimal(c));
  return out;
}

std::string vector_text(const MMVector& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ' ';
    out += to_decimal(v[k]);
  }
  return out;
}

unsigned worker_count() {
  return std::max(1u, std::thread::hardware_concurrency());
}

struct CountArgs {
  std::string kind;
  std::string type;
  std::string file;
  std::string method;
  std::string dump_graph;
  bool json = false;
  unsigned threads = 1;
};

int cmd_count(const CountArgs& args, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  std::string method = args.method;
  if (method.empty()) method = args.kind == "graph" ? "oracle" : "transfer";
  if (args.kind == "graph" && method != "oracle") {
    err << "count graph supports only --method oracle\n";
    return kBadInput;
  }
  if (args.kind == "graph" ? args.file.empty() : args.type.empty()) {
    err << (args.kind == "graph" ? "count graph needs --file\n"
                                 : "count needs --type\n");
    return kBadInput;
  }

  std::optional<Count> transfer, oracle;
  std::optional<MarkedGraph> built;
  Graph plain;
  if (args.kind == "chain") {
    const ChainSpec spec = parse_chain(args.type);
    if (method != "oracle") transfer = count_chain(spec);
    if (method != "transfer" || !args.dump_graph.empty()) built = build_chain(spec);
  } else if (args.kind == "ring") {
    const RingSpec spec = parse_ring(args.type);
    if (method != "oracle") transfer = count_ring(spec);
    if (method != "transfer" || !args.dump_graph.empty()) built = build_ring(spec);
  } else {
    std::ifstream in(args.file);
    if (!in) {
      err << "cannot read " << args.file << "\n";
      return kBadInput;
    }
    plain = read_edge_list(in);
  }
  const Graph& graph = built ? built->graph : plain;
  if (method != "transfer") oracle = count_maximal(graph, {}, args.threads);

  if (!args.dump_graph.empty()) {
    std::ofstream dump(args.dump_graph);
    if (!dump) {
      err << "cannot write " << args.dump_graph << "\n";
      return kCheckFailed;
    }
    if (built) {
      write_edge_list(dump, *built);
    } else {
      write_edge_list(dump, plain);
    }
  }

  RunReport report{args.kind, args.kind == "graph" ? args.file : args.type,
                   method};
  const Count& shown = transfer ? *transfer : *oracle;
  report.result = to_decimal(shown);
  if (transfer && oracle) report.agreement = *transfer == *oracle;
  report.elapsed_s = seconds_since(start);

  if (args.json) {
    nlohmann::json doc = report.to_json();
    if (transfer && oracle) doc["oracle_result"] = to_decimal(*oracle);
    out << doc.dump() << "\n";
  } else if (transfer && oracle) {
    out << "transfer " << to_decimal(*transfer) << "\n";
    out << "oracle " << to_decimal(*oracle) << "\n";
  } else {
    out << to_decimal(shown) << "\n";
  }
  if (report.agreement == false) {
    err << "transfer and oracle disagree\n";
    return kDisagreement;
  }
  return kOk;
}

int cmd_vector(const std::string& type, const std::string& method, bool json,
               std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  const ChainSpec spec = parse_chain(type);
  std::optional<MMVector> transfer, oracle;
  if (method != "oracle") transfer = chain_vector(spec);
  if (method != "transfer") {
    const MarkedGraph g = build_chain(spec);
    oracle = mm_vector(g.graph, g.terminal_ab->from, g.terminal_ab->to,
                       worker_count());
  }
  RunReport report{"vector", type, method};
  report.result = vector_json(transfer ? *transfer : *oracle);
  if (transfer && oracle) report.agreement = *transfer == *oracle;
  report.elapsed_s = seconds_since(start);
  if (json) {
    nlohmann::json doc = report.to_json();
    if (transfer && oracle) doc["oracle_result"] = vector_json(*oracle);
    out << doc.dump() << "\n";
  } else if (transfer && oracle) {
    out << "transfer " << vector_text(*transfer) << "\n";
    out << "oracle " << vector_text(*oracle) << "\n";
  } else {
    out << vector_text(transfer ? *transfer : *oracle) << "\n";
  }
  if (report.agreement == false) {
    err << "transfer and oracle disagree\n";
    return kDisagreement;
  }
  return kOk;
}

int cmd_matrix(int size, int offset, const std::string& format,
               std::ostream& out) {
  const TransferMatrix m = shared_matrix_cache().get(size, offset);
  if (format == "json") {
    out << format_matrix_json(m, size, offset) << "\n";
  } else {
    out << format_matrix_plain(m);
  }
  return kOk;
}

bool parse_size_range(const std::string& text, int& lo, int& hi) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, dots));
      hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    return false;
  }
  return lo >= kMinFaceSize && lo <= hi;
}

int cmd_verify(VerifyOptions options, const std::string& sizes,
               std::ostream& out, std::ostream& err) {
  if (!parse_size_range(sizes, options.min_size, options.max_size)) {
    err << "--sizes expects a..b with 4 <= a <= b, got " << sizes << "\n";
    return kBadInput;
  }
  bool all = true;
  for (const SuiteResult& r : run_verify(options)) {
    all = all && r.passed;
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checks
        << " checks, " << r.seconds << " s)";
    if (!r.passed) out << ": " << r.failure;
    out << "\n";
  }
  return all ? kOk : kCheckFailed;
}

int cmd_bench(int faces, int repeat, std::uint64_t seed, int oracle_limit,
              std::ostream& out, std::ostream& err) {
  if (faces < static_cast<int>(kMinRingFaces) || repeat < 1) {
    err << "bench needs --faces >= 3 and --repeat >= 1\n";
    return kBadInput;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> offset(1, 3);
  bool agree = true;
  out << "faces,method,seconds,digits\n";
  for (int r = 0; r < repeat; ++r) {
    RingSpec spec;
    for (int j = 0; j < faces; ++j) spec.faces.push_back(FaceSpec{6, offset(rng)});

    auto start = Clock::now();
    const Count transfer = count_ring(spec);
    out << faces << ",transfer," << seconds_since(start) << ","
        << decimal_digits(transfer) << "\n";

    if (faces > oracle_limit) {
      out << faces << ",oracle,skipped,\n";
      continue;
    }
    start = Clock::now();
    const Count oracle = count_maximal(build_ring(spec).graph, {}, worker_count());
    out << faces << ",oracle," << seconds_since(start) << ","
        << decimal_digits(oracle) << "\n";
    if (oracle != transfer) {
      agree = false;
      err << "disagreement on " << format_spec(spec) << ": transfer "
          << to_decimal(transfer) << ", oracle " << to_decimal(oracle) << "\n";
    }
  }
  return agree ? kOk : kDisagreement;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact maximal matching counts for polygon chains and rings"};
  app.require_subcommand(1);

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "Count maximal matchings");
  count_cmd->add_option("kind", count.kind, "chain, ring or graph")
      ->required()
      ->check(CLI::IsMember({"chain", "ring", "graph"}));
  count_cmd->add_option("--type", count.type, "Connection type, e.g. t(6,*)t(6,2)t(6,*)");
  count_cmd->add_option("--file", count.file, "Edge-list file (count graph)");
  count_cmd->add_option("--method", count.method, "transfer, oracle or both")
      ->check(CLI::IsMember({"transfer", "oracle", "both"}));
  count_cmd->add_flag("--json", count.json, "Emit a JSON report");
  count_cmd->add_option("--dump-graph", count.dump_graph, "Write the built graph as an edge list");
  count_cmd->add_option("--threads", count.threads, "Oracle worker threads")
      ->check(CLI::Range(1u, 1024u));

  std::string vector_type, vector_method = "transfer";
  bool vector_json_flag = false;
  auto* vector_cmd = app.add_subcommand("vector", "Maximal matching vector of a chain at ab");
  vector_cmd->add_option("--type", vector_type, "Chain connection type")->required();
  vector_cmd->add_option("--method", vector_method, "transfer, oracle or both")
      ->check(CLI::IsMember({"transfer", "oracle", "both"}));
  vector_cmd->add_flag("--json", vector_json_flag, "Emit a JSON report");

  int size = 0, offset = 0;
  std::string format = "plain";
  auto* matrix_cmd = app.add_subcommand("gen-matrix", "Generate the transition matrix T(m,i)");
  matrix_cmd->add_option("--size", size, "Face size m")->required();
  matrix_cmd->add_option("--offset", offset, "Offset i")->required();
  matrix_cmd->add_option("--format", format, "plain or json")
      ->check(CLI::IsMember({"plain", "json"}));

  VerifyOptions verify;
  std::string sizes = "4..7";
  auto* verify_cmd = app.add_subcommand("verify", "Run the cross-validation suites");
  verify_cmd->add_option("--max-faces", verify.max_faces, "Largest face count swept");
  verify_cmd->add_option("--sizes", sizes, "Face size range a..b");
  verify_cmd->add_option("--seed", verify.seed, "Sampling seed");
  verify_cmd->add_option("--samples", verify.samples, "Random specs per sampled sweep");
  verify_cmd->add_flag("--inject-fault", verify.corrupt_reference_s)->group("");

  int faces = 100, repeat = 1, oracle_limit = 12;
  std::uint64_t bench_seed = 0;
  auto* bench_cmd = app.add_subcommand("bench", "Time transfer and oracle counting");
  bench_cmd->add_option("--faces", faces, "Faces per random hexagonal ring");
  bench_cmd->add_option("--repeat", repeat, "Number of rings");
  bench_cmd->add_option("--seed", bench_seed, "Ring sampling seed");
  bench_cmd->add_option("--oracle-limit", oracle_limit, "Largest ring timed with the oracle");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*count_cmd) return cmd_count(count, out, err);
    if (*vector_cmd) return cmd_vector(vector_type, vector_method, vector_json_flag, out, err);
    if (*matrix_cmd) return cmd_matrix(size, offset, format, out);
    if (*verify_cmd) return cmd_verify(verify, sizes, out, err);
    if (*bench_cmd) return cmd_bench(faces, repeat, bench_seed, oracle_limit, out, err);
  } catch (const NotationError& e) {
    err << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kBadInput;
  } catch (const GluingError& e) {
    err << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace polyring::cli
