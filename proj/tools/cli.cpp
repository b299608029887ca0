// Copyright 2026 The KeyMesh Authors.
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

#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "keymesh/baselines.hpp"
#include "keymesh/error.hpp"
#include "keymesh/graphmetrics.hpp"
#include "keymesh/keygraph.hpp"
#include "keymesh/random.hpp"
#include "keymesh/router.hpp"
#include "keymesh/securemsg.hpp"
#include "keymesh/version.hpp"

namespace keymesh::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A finished command: the payload and where it goes.
struct Output {
  std::string payload;
  int status = 0;
};

struct Options {
  std::uint32_t n = 0;
  std::optional<std::uint64_t> seed;
  std::string format;
  std::string out;
  bool one_based = false;
  unsigned threads = 0;

  std::int64_t src = 0;
  std::int64_t dst = 0;
  std::string message;
  std::vector<std::int64_t> nodes;
  std::vector<std::uint32_t> node_list;
  std::string model;
  std::uint64_t pool = 0;
  std::uint64_t ring_size = 0;
  std::uint64_t trials = 1;
  std::optional<std::uint64_t> edges;
  std::optional<std::uint64_t> sample_pairs;
  std::uint32_t er_seeds = 30;
  std::size_t max_mismatches = 50;
  bool include_key_ids = false;
  bool aggregate = false;

  std::uint64_t resolved_seed = 0;

  Execution exec() const { return Execution{threads}; }
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  const char* env = std::getenv("KEYMESH_SEED");
  if (env == nullptr || *env == '\0') return 0;
  std::uint64_t value = 0;
  const std::string_view text(env);
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw UsageError("KEYMESH_SEED is not an unsigned 64-bit integer: " +
                     std::string(text));
  }
  return value;
}

NodeId parse_node(std::int64_t raw, const Options& opt, const char* what) {
  const std::int64_t index = opt.one_based ? raw - 1 : raw;
  if (index < 0 || index >= static_cast<std::int64_t>(opt.n)) {
    throw Error(Errc::kNodeOutOfRange,
                std::string(what) + " " + std::to_string(raw) +
                    " is not a node of a " + std::to_string(opt.n) +
                    "-node network");
  }
  return NodeId{static_cast<std::uint32_t>(index)};
}

std::uint32_t show(NodeId id, const Options& opt) {
  return id.index + (opt.one_based ? 1u : 0u);
}

Json show_all(std::span<const NodeId> ids, const Options& opt) {
  Json arr = Json::array();
  for (NodeId id : ids) arr.push_back(show(id, opt));
  return arr;
}

Json optional_json(const auto& value) {
  return value ? Json(*value) : Json(nullptr);
}

Json meta(std::string_view command, const Options& opt, Json params) {
  Json m;
  m["tool"] = "keymesh";
  m["version"] = kVersion;
  m["command"] = command;
  m["seed"] = opt.resolved_seed;
  m["one_based"] = opt.one_based;
  m["params"] = std::move(params);
  return m;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// "# key=value ..." header line for CSV outputs.
std::string csv_header(std::string_view command, const Options& opt,
                       const std::vector<std::pair<std::string, std::string>>& params) {
  std::string line = "# keymesh " + std::string(kVersion) + " " +
                     std::string(command) +
                     " seed=" + std::to_string(opt.resolved_seed);
  for (const auto& [key, value] : params) line += " " + key + "=" + value;
  return line + "\n";
}

std::string cell(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}
std::string cell(const std::optional<std::uint32_t>& v) {
  return v ? std::to_string(*v) : std::string();
}

std::string join(const std::vector<std::uint32_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  return out;
}

void require_format(const Options& opt, std::initializer_list<std::string_view> allowed) {
  if (opt.format.empty()) return;
  for (std::string_view f : allowed) {
    if (opt.format == f) return;
  }
  throw UsageError("format '" + opt.format + "' is not supported by this command");
}

KeyGraph build(const Options& opt) {
  return KeyGraph::build(GraphConfig{opt.n, expand_seed(opt.resolved_seed)});
}

// --- subcommands ---------------------------------------------------------

Output cmd_topology(const Options& opt) {
  require_format(opt, {"json"});
  const KeyGraph graph = build(opt);
  const Graph& topo = graph.topology();

  std::map<std::uint32_t, std::uint32_t> histogram;
  for (std::uint32_t u = 0; u < opt.n; ++u) ++histogram[topo.degree(NodeId{u})];

  Json j;
  j["meta"] = meta("topology", opt,
                   {{"n", opt.n}, {"include_key_ids", opt.include_key_ids}});
  j["n"] = opt.n;
  j["offsets"] = graph.offsets();
  j["edge_count"] = topo.edge_count();
  Json hist = Json::object();
  for (const auto& [degree, count] : histogram) hist[std::to_string(degree)] = count;
  j["degree_histogram"] = std::move(hist);
  Json edges = Json::array();
  Json key_ids = Json::array();
  for (const Edge& e : topo.edges()) {
    edges.push_back({show(e.a, opt), show(e.b, opt)});
    if (opt.include_key_ids) key_ids.push_back(graph.find_key(e.a, e.b)->id.value);
  }
  j["edges"] = std::move(edges);
  if (opt.include_key_ids) j["key_ids"] = std::move(key_ids);
  return {dump(j)};
}

Output cmd_route(const Options& opt) {
  require_format(opt, {"json"});
  const KeyGraph graph = build(opt);
  const NodeId src = parse_node(opt.src, opt, "--src");
  const NodeId dst = parse_node(opt.dst, opt, "--dst");
  const PathTrace trace = route(src, dst, graph);

  Json j;
  j["meta"] = meta("route", opt,
                   {{"n", opt.n}, {"src", opt.src}, {"dst", opt.dst}});
  j["src"] = show(src, opt);
  j["dst"] = show(dst, opt);
  j["hops"] = show_all(trace.nodes, opt);
  j["hop_count"] = trace.hop_count();
  j["bound"] = optional_json(try_diameter_bound(opt.n));
  Json steps = Json::array();
  for (const HopStep& s : trace.steps) {
    steps.push_back({{"offset", s.offset}, {"remaining", s.remaining}});
  }
  j["steps"] = std::move(steps);
  return {dump(j)};
}

Output cmd_send(const Options& opt) {
  require_format(opt, {"json"});
  const KeyGraph graph = build(opt);
  const NodeId src = parse_node(opt.src, opt, "--src");
  const NodeId dst = parse_node(opt.dst, opt, "--dst");
  SimNetwork net(graph);
  const DeliveryReport report = send_secure(net, src, dst, to_bytes(opt.message));

  Json j;
  j["meta"] = meta("send", opt,
                   {{"n", opt.n},
                    {"src", opt.src},
                    {"dst", opt.dst},
                    {"message", opt.message}});
  j["cipher"] = net.cipher().name();
  j["src"] = show(src, opt);
  j["dst"] = show(dst, opt);
  j["hops"] = show_all(report.trace.nodes, opt);
  j["hop_count"] = report.hop_count();
  Json key_ids = Json::array();
  for (KeyId id : report.key_ids) key_ids.push_back(id.value);
  j["key_ids"] = std::move(key_ids);
  j["delivered"] = std::string(report.delivered_plaintext.begin(),
                               report.delivered_plaintext.end());
  j["success"] = report.success;
  j["messages_transmitted"] = report.messages_transmitted;
  if (report.failure) {
    j["failure"] = {{"hop_index", report.failure->hop_index},
                    {"at", show(report.failure->at, opt)},
                    {"reason", report.failure->reason}};
  } else {
    j["failure"] = nullptr;
  }
  return {dump(j), report.success ? 0 : 1};
}

Json metrics_json(const MetricsReport& r) {
  Json j;
  j["n"] = r.n;
  j["connected"] = r.connected;
  j["diameter"] = optional_json(r.diameter);
  j["bound"] = optional_json(try_diameter_bound(r.n));
  j["avg_shortest_path"] = optional_json(r.avg_shortest_path);
  j["clustering_coefficient"] = r.clustering_coefficient;
  j["degree"] = {{"min", r.degree.min}, {"max", r.degree.max}, {"mean", r.degree.mean}};
  j["edge_count"] = r.edge_count;
  j["pairs_measured"] = r.pairs_measured;
  j["sampling_seed"] = optional_json(r.sampling_seed);
  return j;
}

Output cmd_metrics(const Options& opt) {
  require_format(opt, {"json"});
  const KeyGraph graph = build(opt);
  PathMode mode = ExactPaths{};
  if (opt.sample_pairs) {
    mode = SampledPaths{*opt.sample_pairs, stream_seed(opt.resolved_seed, opt.n)};
  }
  const MetricsReport r = measure(graph.topology(), mode, opt.exec());
  Json j;
  j["meta"] = meta("metrics", opt,
                   {{"n", opt.n}, {"sample_pairs", optional_json(opt.sample_pairs)}});
  const Json body = metrics_json(r);
  for (const auto& [key, value] : body.items()) j[key] = value;
  return {dump(j)};
}

Output cmd_sweep(const Options& opt) {
  require_format(opt, {"csv", "json"});
  SweepOptions so;
  so.node_counts = opt.node_list;
  so.seed = opt.resolved_seed;
  so.sample_pairs = opt.sample_pairs;
  so.er_seeds = opt.er_seeds;
  so.exec = opt.exec();
  const std::vector<SweepRow> rows = sweep(so);

  if (opt.format == "json") {
    Json j;
    j["meta"] = meta("sweep", opt,
                     {{"n", opt.node_list},
                      {"sample_pairs", optional_json(opt.sample_pairs)},
                      {"er_seeds", opt.er_seeds}});
    Json arr = Json::array();
    for (const SweepRow& r : rows) {
      arr.push_back({{"n", r.n},
                     {"diameter", optional_json(r.diameter)},
                     {"bound", optional_json(r.bound)},
                     {"avg_path", optional_json(r.avg_path)},
                     {"clustering_structured", optional_json(r.clustering_structured)},
                     {"clustering_er_mean", optional_json(r.clustering_er_mean)},
                     {"error", r.error.empty() ? Json(nullptr) : Json(r.error)}});
    }
    j["rows"] = std::move(arr);
    return {dump(j)};
  }

  std::string csv = csv_header(
      "sweep", opt,
      {{"n", join(opt.node_list)},
       {"sample_pairs", opt.sample_pairs ? std::to_string(*opt.sample_pairs) : "exact"},
       {"er_seeds", std::to_string(opt.er_seeds)}});
  csv += "n,diameter,bound,avg_path,clustering_structured,clustering_er_mean,error\n";
  for (const SweepRow& r : rows) {
    csv += std::to_string(r.n) + "," + cell(r.diameter) + "," + cell(r.bound) +
           "," + cell(r.avg_path) + "," + cell(r.clustering_structured) + "," +
           cell(r.clustering_er_mean) + "," + r.error + "\n";
  }
  return {csv};
}

Output cmd_capture(const Options& opt) {
  require_format(opt, {"json"});
  const KeyGraph graph = build(opt);
  std::vector<NodeId> captured;
  for (std::int64_t raw : opt.nodes) captured.push_back(parse_node(raw, opt, "--nodes"));
  const CaptureReport r = capture_report(graph, captured);

  Json j;
  j["meta"] = meta("capture", opt, {{"n", opt.n}, {"nodes", opt.nodes}});
  j["captured"] = show_all(r.captured, opt);
  Json ids = Json::array();
  for (KeyId id : r.revealed_key_ids) ids.push_back(id.value);
  j["revealed_key_ids"] = std::move(ids);
  j["revealed_count"] = r.revealed_count;
  j["total_links"] = r.total_links;
  j["fraction_compromised"] = r.fraction_compromised;
  return {dump(j)};
}

struct BaselineRow {
  std::string trial;
  double edges = 0;
  double density = 0;
  double connected = 0;
  std::optional<std::uint32_t> diameter;
  std::optional<double> avg_path;
  double clustering = 0;
};

BaselineRow baseline_row(const Graph& g, std::string trial, const Options& opt,
                         std::uint64_t trial_index) {
  PathMode mode = ExactPaths{};
  if (opt.sample_pairs) {
    mode = SampledPaths{*opt.sample_pairs, stream_seed(opt.resolved_seed, trial_index)};
  }
  const MetricsReport m = measure(g, mode, opt.exec());
  const double slots = static_cast<double>(g.node_count()) * (g.node_count() - 1) / 2.0;
  BaselineRow row;
  row.trial = std::move(trial);
  row.edges = static_cast<double>(g.edge_count());
  row.density = slots > 0 ? row.edges / slots : 0.0;
  row.connected = m.connected ? 1.0 : 0.0;
  row.diameter = m.diameter;
  row.avg_path = m.avg_shortest_path;
  row.clustering = m.clustering_coefficient;
  return row;
}

Output cmd_baseline(const Options& opt) {
  require_format(opt, {"csv"});
  if (opt.trials == 0) throw UsageError("--trials must be >= 1");

  std::vector<std::pair<std::string, std::string>> params = {
      {"model", opt.model}, {"n", std::to_string(opt.n)}};
  std::optional<double> share;
  std::vector<BaselineRow> rows;

  if (opt.model == "ring") {
    rows.push_back(baseline_row(ring_graph(opt.n), "0", opt, 0));
  } else if (opt.model == "eg") {
    EGConfig cfg{opt.n, opt.pool, opt.ring_size, opt.trials, opt.resolved_seed};
    cfg.validate();
    share = eg_share_probability(opt.pool, opt.ring_size);
    params.push_back({"pool", std::to_string(opt.pool)});
    params.push_back({"ring_size", std::to_string(opt.ring_size)});
    params.push_back({"trials", std::to_string(opt.trials)});
    for (std::uint64_t t = 0; t < opt.trials; ++t) {
      rows.push_back(baseline_row(eg_random_key_graph(cfg, t), std::to_string(t), opt, t));
    }
  } else {
    std::uint64_t edges = 0;
    if (opt.edges) {
      edges = *opt.edges;
    } else {
      edges = KeyGraph::build(GraphConfig{opt.n, {}}).edge_count();
    }
    params.push_back({"edges", std::to_string(edges)});
    params.push_back({"trials", std::to_string(opt.trials)});
    for (std::uint64_t t = 0; t < opt.trials; ++t) {
      rows.push_back(baseline_row(
          er_random_graph(opt.n, edges, stream_seed(opt.resolved_seed, t)),
          std::to_string(t), opt, t));
    }
  }
  if (opt.sample_pairs) params.push_back({"sample_pairs", std::to_string(*opt.sample_pairs)});

  if (opt.aggregate && rows.size() > 1) {
    BaselineRow agg;
    agg.trial = "all";
    double path_sum = 0;
    std::size_t path_count = 0;
    for (const BaselineRow& r : rows) {
      agg.edges += r.edges;
      agg.density += r.density;
      agg.connected += r.connected;
      agg.clustering += r.clustering;
      if (r.avg_path) {
        path_sum += *r.avg_path;
        ++path_count;
      }
      if (r.diameter) agg.diameter = std::max(agg.diameter.value_or(0), *r.diameter);
    }
    const auto count = static_cast<double>(rows.size());
    agg.edges /= count;
    agg.density /= count;
    agg.connected /= count;
    agg.clustering /= count;
    if (path_count) agg.avg_path = path_sum / static_cast<double>(path_count);
    rows = {agg};
    params.push_back({"aggregate", "1"});
  }

  std::string csv = csv_header("baseline", opt, params);
  csv += "model,trial,n,edges,edge_density,connected,diameter,avg_path,clustering,share_probability\n";
  for (const BaselineRow& r : rows) {
    csv += opt.model + "," + r.trial + "," + std::to_string(opt.n) + "," +
           format_double(r.edges) + "," + format_double(r.density) + "," +
           format_double(r.connected) + "," + cell(r.diameter) + "," +
           cell(r.avg_path) + "," + format_double(r.clustering) + "," +
           cell(share) + "\n";
  }
  return {csv};
}

Output cmd_verify(const Options& opt) {
  require_format(opt, {"json"});
  const KeyGraph graph = build(opt);
  const GreedyOptimalityReport g = verify_greedy_optimality(graph, opt.exec());
  const auto bound = try_diameter_bound(opt.n);
  const DegreeStats degree = degree_stats(graph.topology());

  Json j;
  j["meta"] = meta("verify", opt, {{"n", opt.n}});
  j["n"] = opt.n;
  j["bound"] = optional_json(bound);
  j["bfs_diameter"] = g.bfs_diameter;
  j["greedy_max_hops"] = g.greedy_max_hops;
  if (bound) {
    j["bound_holds"] = g.greedy_max_hops <= *bound && g.bfs_diameter <= *bound;
    j["bound_tight"] = g.bfs_diameter == *bound;
  } else {
    j["bound_holds"] = nullptr;
    j["bound_tight"] = nullptr;
  }
  // Outside powers of two, compare against the bounds of the neighbouring
  // powers of two.
  if (!bound && opt.n > 8) {
    const std::uint32_t lo_n = std::bit_floor(opt.n);
    const std::uint32_t lo = diameter_bound(lo_n);
    const std::uint32_t hi = diameter_bound(lo_n * 2);
    j["bracket"] = {lo, hi};
    j["within_bracket"] = lo <= g.bfs_diameter && g.bfs_diameter <= hi;
  } else {
    j["bracket"] = nullptr;
    j["within_bracket"] = nullptr;
  }
  j["keys_per_node"] = {{"min", degree.min}, {"max", degree.max}};
  if (bound) {
    j["expected_keys_per_node"] = 2 * std::countr_zero(opt.n) - 1;
  } else {
    j["expected_keys_per_node"] = nullptr;
  }
  j["pairs_checked"] = g.pairs_checked;
  j["mismatch_count"] = g.mismatches.size();
  Json mm = Json::array();
  for (std::size_t i = 0; i < g.mismatches.size() && i < opt.max_mismatches; ++i) {
    const GreedyMismatch& m = g.mismatches[i];
    mm.push_back({{"src", show(m.src, opt)},
                  {"dst", show(m.dst, opt)},
                  {"greedy_hops", m.greedy_hops},
                  {"bfs_hops", m.bfs_hops}});
  }
  j["mismatches"] = std::move(mm);
  return {dump(j)};
}

void emit(const std::string& payload, const Options& opt, std::ostream& out) {
  if (opt.out.empty() || opt.out == "-") {
    out << payload;
    return;
  }
  std::ofstream file(opt.out, std::ios::binary);
  if (!file) throw UsageError("cannot open output file: " + opt.out);
  file << payload;
}

void error_object(std::ostream& err, std::string_view kind, std::string_view message) {
  Json j;
  j["error"] = {{"kind", kind}, {"message", message}};
  err << j.dump() << "\n";
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Structured-graph key predistribution simulator", "keymesh"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub, bool needs_n) {
    auto* n = sub->add_option("--n", opt.n, "Number of nodes");
    if (needs_n) n->required();
    sub->add_option("--seed", opt.seed, "Experiment seed (default: $KEYMESH_SEED or 0)");
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", opt.out, "Write output to this file instead of stdout");
    sub->add_option("--threads", opt.threads, "Worker threads (0 = all cores)");
    sub->add_flag("--one-based", opt.one_based, "Read and print node IDs as 1..N");
  };

  auto* topology = app.add_subcommand("topology", "Build the key graph and export it");
  common(topology, true);
  topology->add_flag("--include-key-ids", opt.include_key_ids,
                     "Emit the key id of every edge (never key material)");

  auto* route_cmd = app.add_subcommand("route", "Greedy route between two nodes");
  common(route_cmd, true);
  route_cmd->add_option("--src", opt.src)->required();
  route_cmd->add_option("--dst", opt.dst)->required();

  auto* send = app.add_subcommand("send", "Deliver a message hop by hop");
  common(send, true);
  send->add_option("--src", opt.src)->required();
  send->add_option("--dst", opt.dst)->required();
  send->add_option("--message", opt.message)->required();

  auto* metrics = app.add_subcommand("metrics", "Diameter, path length and clustering");
  common(metrics, true);
  metrics->add_option("--sample-pairs", opt.sample_pairs,
                      "Estimate the average path from this many random pairs");

  auto* sweep_cmd = app.add_subcommand("sweep", "Metrics over a list of network sizes");
  sweep_cmd->add_option("--n", opt.node_list, "Comma-separated node counts")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--seed", opt.seed);
  sweep_cmd->add_option("--format", opt.format)->check(CLI::IsMember({"json", "csv"}));
  sweep_cmd->add_option("--out", opt.out);
  sweep_cmd->add_option("--threads", opt.threads);
  sweep_cmd->add_option("--sample-pairs", opt.sample_pairs);
  sweep_cmd->add_option("--er-seeds", opt.er_seeds,
                        "Random graphs averaged for the clustering baseline");

  auto* capture = app.add_subcommand("capture", "Keys revealed by capturing nodes");
  common(capture, true);
  capture->add_option("--nodes", opt.nodes, "Comma-separated captured node IDs")
      ->delimiter(',');

  auto* baseline = app.add_subcommand("baseline", "Ring, Eschenauer-Gligor and G(n,M) runs");
  common(baseline, true);
  baseline->add_option("--model", opt.model)
      ->required()
      ->check(CLI::IsMember({"ring", "eg", "er"}));
  baseline->add_option("--pool", opt.pool, "EG key pool size");
  baseline->add_option("--ring-size", opt.ring_size, "EG keys per node");
  baseline->add_option("--trials", opt.trials);
  baseline->add_option("--edges", opt.edges,
                       "G(n,M) edge count (default: structured graph's)");
  baseline->add_option("--sample-pairs", opt.sample_pairs);
  baseline->add_flag("--aggregate", opt.aggregate, "Emit one summary row");

  auto* verify = app.add_subcommand("verify", "Check the diameter bound and greedy optimality");
  common(verify, true);
  verify->add_option("--max-mismatches", opt.max_mismatches,
                     "Mismatching pairs listed in the report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    error_object(err, "usage", e.what());
    return 2;
  }

  try {
    opt.resolved_seed = resolve_seed(opt.seed);
    Output result;
    if (*topology) result = cmd_topology(opt);
    else if (*route_cmd) result = cmd_route(opt);
    else if (*send) result = cmd_send(opt);
    else if (*metrics) result = cmd_metrics(opt);
    else if (*sweep_cmd) result = cmd_sweep(opt);
    else if (*capture) result = cmd_capture(opt);
    else if (*baseline) result = cmd_baseline(opt);
    else result = cmd_verify(opt);
    emit(result.payload, opt, out);
    return result.status;
  } catch (const UsageError& e) {
    error_object(err, "usage", e.what());
    return 2;
  } catch (const Error& e) {
    error_object(err, to_string(e.code()), e.what());
    return 2;
  } catch (const std::exception& e) {
    error_object(err, "internal", e.what());
    return 1;
  }
}

}  // namespace keymesh::cli
