// Acceptance gate: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "support/merge_fuzz.hpp"
#include "supergrid/cli.hpp"
#include "supergrid/verify.hpp"

using namespace supergrid;

namespace {

// Pinned limits.
constexpr double kLocalConnectivitySeconds = 30.0;
constexpr double kExtensionSeconds = 120.0;
constexpr std::size_t kRandomGraphs = 1000;
constexpr std::size_t kMergesPerOp = 2500;
constexpr std::size_t kOracleMaxVertices = 12;

const std::string kFixtures = SUPERGRID_FIXTURE_DIR;
const std::string kGolden = SUPERGRID_GOLDEN_DIR;

int failed = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << " [" << id << "] " << name << ": " << detail << std::endl;
  failed += pass ? 0 : 1;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << " s";
  return os.str();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

EnumSpec box4() {
  EnumSpec spec;
  spec.width = 4;
  spec.height = 4;
  return spec;
}

void local_connectivity() {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t universe = 0, checked = 0, violations = 0;
  for_each_graph(box4(), [&](const SupergridGraph& g, std::uint32_t) {
    ++universe;
    if (!is_two_connected(g) || !is_linear_convex(g)) return;
    ++checked;
    violations += is_locally_connected(g) ? 0 : 1;
  });
  const double s = seconds_since(t0);
  report(1, "2-connected + linear-convex => locally connected (4x4)",
         universe == 65536 && violations == 0 && s < kLocalConnectivitySeconds,
         std::to_string(universe) + " subsets, " + std::to_string(checked) + " qualifying, " +
             std::to_string(violations) + " violations, " + fmt_seconds(s) + " (limit " +
             fmt_seconds(kLocalConnectivitySeconds) + ")");
}

void immediate_vertices() {
  std::size_t graphs = 0, vertices = 0, violations = 0;
  for_each_graph(box4(), [&](const SupergridGraph& g, std::uint32_t) {
    if (!is_linear_convex(g)) return;
    ++graphs;
    for (const Point& v : g.vertices()) {
      ++vertices;
      violations += immediate_vertices_present(g, v) ? 0 : 1;
    }
  });
  report(2, "forced immediate vertices in linear-convex graphs (4x4)", violations == 0,
         std::to_string(graphs) + " graphs, " + std::to_string(vertices) + " vertices, " +
             std::to_string(violations) + " violations");
}

// Counts a run as good only if it covers the graph and every step grows the
// cycle by exactly one vertex.
bool full_run(const SupergridGraph& g, std::array<std::size_t, 4>& counts, std::size_t& failed_outcomes) {
  const HamResult r = find_hamiltonian_cycle(g);
  if (r.outcome == HamOutcome::ExtensionFailed) ++failed_outcomes;
  if (r.outcome != HamOutcome::Cycle || !r.cycle || r.cycle->size() != g.size() || !validate_cycle(g, *r.cycle))
    return false;
  if (r.trace.steps.size() + 3 != g.size()) return false;
  for (std::size_t i = 0; i < r.trace.steps.size(); ++i)
    if (r.trace.steps[i].cycle_length_before != 3 + i) return false;
  const auto c = r.trace.rule_counts();
  for (std::size_t i = 0; i < 4; ++i) counts[i] += c[i];
  return true;
}

std::array<std::size_t, 4> hamiltonian() {
  const auto t0 = std::chrono::steady_clock::now();
  std::array<std::size_t, 4> counts{};
  std::array<std::size_t, 4> random_counts{};
  std::size_t box_graphs = 0, box_bad = 0, stuck = 0;
  EnumSpec spec = box4();
  spec.require = {Predicate::TwoConnected, Predicate::LinearConvex};
  for_each_graph(spec, [&](const SupergridGraph& g, std::uint32_t) {
    ++box_graphs;
    box_bad += full_run(g, counts, stuck) ? 0 : 1;
  });
  std::size_t random_bad = 0;
  for (std::size_t seed = 0; seed < kRandomGraphs; ++seed) {
    EnumSpec rs;
    rs.width = rs.height = 8;
    rs.require = {Predicate::TwoConnected, Predicate::LinearConvex};
    rs.seed = seed;
    random_bad += full_run(random_graph(rs), random_counts, stuck) ? 0 : 1;
  }
  const double s = seconds_since(t0);
  report(3, "cycle extension covers every 2-connected linear-convex graph",
         box_graphs > 0 && box_bad == 0 && random_bad == 0 && stuck == 0 && s < kExtensionSeconds,
         "4x4: " + std::to_string(box_graphs - box_bad) + "/" + std::to_string(box_graphs) + ", random 8x8: " +
             std::to_string(kRandomGraphs - random_bad) + "/" + std::to_string(kRandomGraphs) + ", " +
             std::to_string(stuck) + " ExtensionFailed, " + fmt_seconds(s) + " (limit " +
             fmt_seconds(kExtensionSeconds) + ")");
  return counts;
}

void oracle() {
  std::size_t positive = 0, positive_bad = 0, negative = 0, negative_bad = 0;
  for_each_graph(box4(), [&](const SupergridGraph& g, std::uint32_t) {
    if (g.size() > kOracleMaxVertices) return;
    const bool two = is_two_connected(g);
    if (!two) {
      ++negative;
      negative_bad += brute_force_hamiltonian(g) ? 1 : 0;
    } else if (find_hamiltonian_cycle(g).outcome == HamOutcome::Cycle) {
      ++positive;
      const auto c = brute_force_hamiltonian(g);
      positive_bad += c && validate_cycle(g, *c) && c->size() == g.size() ? 0 : 1;
    }
  });
  report(4, "brute-force oracle agrees (graphs with <= 12 vertices)", positive_bad == 0 && negative_bad == 0,
         std::to_string(positive) + " strict successes confirmed (" + std::to_string(positive_bad) +
             " mismatches), " + std::to_string(negative) + " non-2-connected graphs without cycle (" +
             std::to_string(negative_bad) + " mismatches)");
}

void rule_frequency(const std::array<std::size_t, 4>& counts, bool update) {
  const std::string table = rule_frequency_csv(counts);
  const std::string golden_path = kGolden + "/rule_frequency_4x4.csv";
  if (update) std::ofstream(golden_path, std::ios::binary) << table;
  std::cout << table;
  const std::size_t fallback = counts[static_cast<std::size_t>(ExtensionRule::FallbackSearch)];
  const bool matches = slurp(golden_path) == table;
  report(5, "FALLBACK_SEARCH never fires on the 4x4 suite", fallback == 0 && matches,
         std::to_string(fallback) + " fallback steps, rule table " +
             (matches ? "matches" : "differs from") + " tests/golden/rule_frequency_4x4.csv");
}

void merges() {
  using supergrid::testing::MergeFuzzer;
  using supergrid::testing::MergeOp;
  std::size_t merged = 0, failures = 0, refused = 0;
  std::string first;
  for (MergeOp op : {MergeOp::Insert, MergeOp::CyclePath, MergeOp::Edges, MergeOp::SharedVertex}) {
    MergeFuzzer fuzz(77 + static_cast<std::uint64_t>(op));
    supergrid::testing::MergeStats st;
    while (st.merged < kMergesPerOp && st.trials < 20 * kMergesPerOp) fuzz.run(op, st);
    merged += st.merged;
    refused += st.justified_errors;
    failures += st.failures;
    if (first.empty()) first = st.first_failure;
    if (st.merged < kMergesPerOp) ++failures;
  }
  report(6, "randomized merge operations keep exact vertex sets",
         failures == 0 && merged >= 4 * kMergesPerOp,
         std::to_string(merged) + " merges validated, " + std::to_string(refused) +
             " refusals confirmed by brute force, " + std::to_string(failures) + " failures" +
             (first.empty() ? "" : " (" + first + ")"));
}

void cli() {
  std::ostringstream out, err;
  const int verify_code = run_cli({"verify", "--box", "4x4"}, out, err);
  const bool verify_ok = verify_code == 0 && out.str().find("\nviolations: 0\n") != std::string::npos;

  const std::string input = kFixtures + "/block3x3.txt";
  std::ostringstream hout, herr;
  const int ham_code = run_cli({"hamcycle", input}, hout, herr);
  bool ham_ok = false;
  if (ham_code == 0) {
    const auto g = parse_lattice(slurp(input));
    const Cycle c = parse_cycle(hout.str());
    ham_ok = validate_cycle(g, c) && c.size() == g.size();
  }

  const std::string svg = (std::filesystem::temp_directory_path() / "supergrid_acceptance.svg").string();
  std::ostringstream sout, serr;
  const int svg_code = run_cli({"trace", kFixtures + "/square2x2.txt", "--cycle", kFixtures + "/square2x2.cycle",
                                "--svg", svg, "--cell", "10"},
                               sout, serr);
  const bool svg_ok = svg_code == 0 && slurp(svg) == slurp(kGolden + "/square2x2.svg");
  std::filesystem::remove(svg);

  report(7, "end-to-end CLI", verify_ok && ham_ok && svg_ok,
         std::string("verify --box 4x4 ") + (verify_ok ? "exit 0, violations: 0" : "failed") + "; hamcycle 3x3 " +
             (ham_ok ? "re-validates" : "failed") + "; 2x2 SVG " + (svg_ok ? "matches golden" : "differs"));
}

}  // namespace

int main(int argc, char** argv) {
  const bool update = argc > 1 && std::strcmp(argv[1], "--update-golden") == 0;
  local_connectivity();
  immediate_vertices();
  const auto counts = hamiltonian();
  oracle();
  rule_frequency(counts, update);
  merges();
  cli();
  std::cout << (failed == 0 ? "ALL CRITERIA PASS" : std::to_string(failed) + " CRITERIA FAILED") << std::endl;
  return failed;
}
