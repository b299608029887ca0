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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Tolerances are fixed here and never tuned at run time.

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "keymesh/baselines.hpp"
#include "keymesh/graphmetrics.hpp"
#include "keymesh/keygraph.hpp"
#include "keymesh/random.hpp"
#include "keymesh/router.hpp"
#include "keymesh/securemsg.hpp"

namespace {

using namespace keymesh;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

KeyGraph structured(std::uint32_t n) { return KeyGraph::build({n, expand_seed(0)}); }

// 1. Greedy routing and BFS diameter never exceed floor(log2(n/8)/2) + 2.
Outcome diameter_bound_criterion() {
  Outcome out;
  const auto start = Clock::now();
  if (diameter_bound(1024) != 5) out.fail("bound(1024) != 5");
  if (diameter_bound(2048) != 6) out.fail("bound(2048) != 6");
  std::string tight = "tight at";
  for (std::uint32_t n = 8; n <= 4096; n *= 2) {
    const KeyGraph g = structured(n);
    const std::uint32_t bound = diameter_bound(n);
    std::uint32_t worst = 0;
    for (std::uint32_t s = 0; s < n; ++s)
      for (std::uint32_t d = 0; d < n; ++d)
        worst = std::max(worst, route_hop_count(NodeId{s}, NodeId{d}, g));
    const auto bfs = diameter(g.topology());
    if (worst > bound) out.fail("greedy " + std::to_string(worst) + " > bound at n=" + std::to_string(n));
    if (!bfs || *bfs > bound) out.fail("BFS diameter exceeds bound at n=" + std::to_string(n));
    if (bfs && *bfs == bound) tight += " " + std::to_string(n);
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 120.0) out.fail("runtime " + std::to_string(elapsed) + "s >= 120s");
  out.note(tight);
  out.note("runtime " + std::to_string(static_cast<int>(elapsed)) + "s");
  return out;
}

// 2. Greedy hop count equals BFS distance for every ordered pair.
Outcome greedy_optimality_criterion() {
  Outcome out;
  const auto start = Clock::now();
  std::uint64_t pairs = 0;
  for (std::uint32_t n = 8; n <= 1024; n *= 2) {
    const auto report = verify_greedy_optimality(structured(n));
    pairs += report.pairs_checked;
    if (!report.mismatches.empty()) {
      const auto& m = report.mismatches.front();
      out.fail("FINDING n=" + std::to_string(n) + ": " + std::to_string(report.mismatches.size()) +
               " mismatches, first " + std::to_string(m.src.index) + "->" +
               std::to_string(m.dst.index) + " greedy " + std::to_string(m.greedy_hops) +
               " vs BFS " + std::to_string(m.bfs_hops));
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 60.0) out.fail("runtime " + std::to_string(elapsed) + "s >= 60s");
  out.note(std::to_string(pairs) + " pairs");
  return out;
}

// 3. Every node stores 2 log2(n) - 1 keys.
Outcome key_count_criterion() {
  Outcome out;
  for (std::uint32_t n = 8; n <= 4096; n *= 2) {
    const KeyGraph g = structured(n);
    const std::size_t expected = 2 * static_cast<std::size_t>(std::countr_zero(n)) - 1;
    for (std::uint32_t u = 0; u < n; ++u) {
      if (g.ring(NodeId{u}).size() != expected) {
        out.fail("n=" + std::to_string(n) + " node " + std::to_string(u));
        break;
      }
    }
  }
  out.note("n = 8..4096");
  return out;
}

// 4. Ring: diameter floor(n/2), average path within 2% of n/4.
Outcome ring_criterion() {
  Outcome out;
  for (std::uint32_t n : {64u, 256u, 1024u}) {
    const auto m = measure(ring_graph(n));
    if (m.diameter != n / 2) out.fail("diameter at n=" + std::to_string(n));
    const double quarter = n / 4.0;
    const double rel = std::abs(*m.avg_shortest_path - quarter) / quarter;
    if (!(rel <= 0.02)) out.fail("avg path off by " + std::to_string(rel) + " at n=" + std::to_string(n));
    std::ostringstream s;
    s << "n=" << n << " rel " << rel;
    out.note(s.str());
  }
  return out;
}

// 5. Average path grows less than 1.5x from n=100 to n=1000.
Outcome scalability_criterion() {
  Outcome out;
  const double a = *average_shortest_path(structured(100).topology());
  const double b = *average_shortest_path(structured(1000).topology());
  const double ratio = b / a;
  if (!(ratio < 1.5)) out.fail("ratio " + std::to_string(ratio));
  std::ostringstream s;
  s.precision(6);
  s << "avg(100)=" << a << " avg(1000)=" << b << " ratio=" << ratio;
  out.note(s.str());
  return out;
}

// 6. Structured clustering exceeds edge-matched G(n,M) over 30 seeds; n=16
// gives exactly 3/7.
Outcome clustering_criterion() {
  Outcome out;
  constexpr int kSeeds = 30;
  for (std::uint32_t n : {64u, 128u, 256u, 512u, 1024u}) {
    const KeyGraph g = structured(n);
    const double cc = clustering_coefficient(g.topology());
    double er = 0.0;
    for (int s = 0; s < kSeeds; ++s) {
      er += clustering_coefficient(er_random_graph(n, g.edge_count(), stream_seed(0, s)));
    }
    er /= kSeeds;
    if (!(cc > er)) out.fail("n=" + std::to_string(n));
    std::ostringstream s;
    s.precision(4);
    s << "n=" << n << " " << cc << ">" << er;
    out.note(s.str());
  }
  const double cc16 = clustering_coefficient(structured(16).topology());
  if (cc16 != 3.0 / 7.0) out.fail("cc(16) = " + std::to_string(cc16));
  else out.note("cc(16)=3/7");
  return out;
}

// 7. Single capture reveals 2 log2(n) - 1 keys; 7/56 at n=16.
Outcome capture_criterion() {
  Outcome out;
  for (std::uint32_t n = 8; n <= 4096; n *= 2) {
    const KeyGraph g = structured(n);
    const std::size_t expected = 2 * static_cast<std::size_t>(std::countr_zero(n)) - 1;
    for (std::uint32_t u : {0u, n / 2 + 1, n - 1}) {
      const std::vector<NodeId> one = {NodeId{u}};
      if (capture_report(g, one).revealed_count != expected) {
        out.fail("n=" + std::to_string(n) + " node " + std::to_string(u));
      }
    }
  }
  const std::vector<NodeId> zero = {NodeId{0}};
  const auto r = capture_report(structured(16), zero);
  if (r.revealed_count != 7 || r.total_links != 56 || r.fraction_compromised != 0.125) {
    out.fail("n=16 capture");
  }
  out.note("n=16: 7/56");
  return out;
}

// 8. 1000 random deliveries per size: exact plaintext, routed hop count, one
// transmission per hop.
Outcome delivery_criterion() {
  Outcome out;
  for (std::uint32_t n : {16u, 256u, 1024u}) {
    const KeyGraph g = structured(n);
    SimNetwork net(g);
    Rng rng(2024, n);
    int bad = 0;
    for (int i = 0; i < 1000; ++i) {
      const NodeId src{static_cast<std::uint32_t>(rng.below(n))};
      NodeId dst{static_cast<std::uint32_t>(rng.below(n - 1))};
      if (dst >= src) ++dst.index;
      Bytes payload(1 + rng.below(256));
      for (auto& b : payload) b = static_cast<std::uint8_t>(rng.next());
      const std::uint64_t before = net.frames_transmitted();
      const auto report = send_secure(net, src, dst, payload);
      const std::uint64_t sent = net.frames_transmitted() - before;
      if (!report.success || report.delivered_plaintext != payload ||
          report.hop_count() != route_hop_count(src, dst, g) || sent != report.hop_count()) {
        ++bad;
      }
    }
    if (bad) out.fail(std::to_string(bad) + " bad deliveries at n=" + std::to_string(n));
  }
  out.note("3000 deliveries");
  return out;
}

// 9. EG edge density within 3 sigma of the closed form; connectivity
// non-decreasing in ring size.
Outcome eg_criterion() {
  Outcome out;
  const EGConfig cfg{100, 1000, 10, 30, 9};
  const double p = eg_share_probability(cfg.pool_size, cfg.ring_size);
  const double pairs = 100.0 * 99.0 / 2.0;
  double edges = 0;
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    edges += static_cast<double>(eg_random_key_graph(cfg, t).edge_count());
  }
  const double realized = edges / (pairs * static_cast<double>(cfg.trials));
  const double sigma = std::sqrt(p * (1 - p) / (pairs * static_cast<double>(cfg.trials)));
  const double z = (realized - p) / sigma;
  if (!(std::abs(z) < 3.0)) out.fail("density z=" + std::to_string(z));
  std::ostringstream s;
  s.precision(5);
  s << "density " << realized << " vs " << p << " (z=" << z << ")";
  out.note(s.str());

  double previous = -1;
  std::string series = "connectivity";
  for (std::uint64_t k : {2u, 4u, 6u, 8u}) {
    const EGConfig c{50, 200, k, 500, 123};
    const double prob = connectivity_probability(
        [c](std::uint64_t t) { return eg_random_key_graph(c, t); }, c.trials);
    if (prob < previous) out.fail("connectivity fell at k=" + std::to_string(k));
    previous = prob;
    std::ostringstream v;
    v << " k" << k << "=" << prob;
    series += v.str();
  }
  out.note(series);
  return out;
}

// 10. Identical seeds and parameters give byte-identical outputs.
Outcome determinism_criterion() {
  Outcome out;
  const std::vector<std::vector<std::string>> commands = {
      {"topology", "--n", "128", "--include-key-ids", "--seed", "21"},
      {"route", "--n", "1024", "--src", "5", "--dst", "700", "--seed", "21"},
      {"send", "--n", "1024", "--src", "5", "--dst", "700", "--message", "payload", "--seed", "21"},
      {"metrics", "--n", "512", "--seed", "21"},
      {"metrics", "--n", "2048", "--sample-pairs", "5000", "--seed", "21"},
      {"sweep", "--n", "16,100,256", "--er-seeds", "5", "--seed", "21"},
      {"capture", "--n", "64", "--nodes", "1,2,40", "--seed", "21"},
      {"baseline", "--model", "eg", "--n", "60", "--pool", "300", "--ring-size", "6",
       "--trials", "5", "--seed", "21"},
      {"baseline", "--model", "er", "--n", "64", "--trials", "5", "--seed", "21"},
      {"verify", "--n", "256", "--seed", "21"},
  };
  for (const auto& cmd : commands) {
    std::ostringstream a, b, err;
    const int sa = cli::run(cmd, a, err);
    const int sb = cli::run(cmd, b, err);
    if (sa != 0 || sb != 0) out.fail(cmd[0] + " exited non-zero: " + err.str());
    else if (a.str() != b.str()) out.fail(cmd[0] + " output differs");
  }
  out.note(std::to_string(commands.size()) + " commands");
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"C1 diameter bound", diameter_bound_criterion},
      {"C2 greedy optimality", greedy_optimality_criterion},
      {"C3 keys per node", key_count_criterion},
      {"C4 ring baseline", ring_criterion},
      {"C5 path-length scalability", scalability_criterion},
      {"C6 clustering vs G(n,M)", clustering_criterion},
      {"C7 capture resilience", capture_criterion},
      {"C8 secure delivery", delivery_criterion},
      {"C9 EG model soundness", eg_criterion},
      {"C10 determinism", determinism_criterion},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
