#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "supergrid/classify.hpp"
#include "supergrid/enumerate.hpp"
#include "supergrid/hamiltonian.hpp"
#include "supergrid/io.hpp"
#include "supergrid/verify.hpp"

namespace supergrid {

/// Process exit codes.
enum ExitCode : int {
  kExitCycle = 0,
  kExitUsage = 1,
  kExitNoCycle = 2,
  kExitExtensionFailed = 3,
};

namespace cli_detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << data;
  if (!out) throw UsageError("failed writing " + path);
}

inline SupergridGraph load_lattice(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_lattice(text);
  } catch (const InvalidCharacterError& e) {
    throw UsageError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) +
                     ": invalid character");
  }
}

inline std::pair<int, int> parse_box(const std::string& s) {
  const auto x = s.find_first_of("xX");
  try {
    if (x == std::string::npos) throw std::invalid_argument(s);
    std::size_t used_w = 0, used_h = 0;
    const int w = std::stoi(s.substr(0, x), &used_w);
    const int h = std::stoi(s.substr(x + 1), &used_h);
    if (used_w != x || used_h != s.size() - x - 1 || w < 1 || h < 1) throw std::invalid_argument(s);
    return {w, h};
  } catch (const std::exception&) {
    throw UsageError("box must look like WxH, got '" + s + "'");
  }
}

inline std::vector<Predicate> parse_predicates(const std::vector<std::string>& names) {
  std::vector<Predicate> out;
  for (const auto& joined : names) {
    std::stringstream ss(joined);
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (name.empty()) continue;
      const auto p = parse_predicate(name);
      if (!p) throw UsageError("unknown predicate '" + name + "'");
      out.push_back(*p);
    }
  }
  return out;
}

inline int report_outcome(const HamResult& r, std::ostream& out, std::ostream& err) {
  switch (r.outcome) {
    case HamOutcome::Cycle:
      return kExitCycle;
    case HamOutcome::NoCycleExists:
      err << "no cycle: precondition " << r.failed_predicate << " failed\n";
      return kExitNoCycle;
    case HamOutcome::ExtensionFailed:
      out << to_json(*r.witness).dump() << "\n";
      err << "extension failed: potential counterexample emitted\n";
      return kExitExtensionFailed;
  }
  return kExitUsage;
}

}  // namespace cli_detail

/// Runs one CLI invocation. `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace cli_detail;
  CLI::App app{"Supergrid graph classifier and Hamiltonian cycle builder", "supergrid"};
  app.require_subcommand(1);

  std::string file, trace_path, svg_path, csv_path, cycle_path, box;
  bool permissive = false, dedup = false;
  int cell = 10;
  std::size_t bound = 24, min_vertices = 0;
  std::vector<std::string> require;

  auto* classify_cmd = app.add_subcommand("classify", "Print the classification report as JSON");
  classify_cmd->add_option("file", file, "Lattice file")->required();

  auto* ham_cmd = app.add_subcommand("hamcycle", "Build a Hamiltonian cycle by cycle extension");
  ham_cmd->add_option("file", file, "Lattice file")->required();
  auto* strict_flag = ham_cmd->add_flag("--strict", "Require 2-connected and linear-convex input (default)");
  ham_cmd->add_flag("--permissive", permissive, "Attempt any 2-connected input")->excludes(strict_flag);
  ham_cmd->add_option("--trace", trace_path, "Write the extension trace as JSON lines");

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive Hamiltonian cycle search");
  oracle_cmd->add_option("file", file, "Lattice file")->required();
  oracle_cmd->add_option("--bound", bound, "Maximum vertex count");

  auto* enum_cmd = app.add_subcommand("enumerate", "Enumerate subsets of a box and summarize them");
  enum_cmd->add_option("--box", box, "Box size WxH")->required();
  enum_cmd->add_option("--require", require, "Comma-separated predicates");
  enum_cmd->add_option("--min", min_vertices, "Minimum vertex count");
  enum_cmd->add_flag("--dedup", dedup, "Keep one representative per lattice symmetry class");
  enum_cmd->add_option("--csv", csv_path, "Also write the summary CSV to this file");

  auto* trace_cmd = app.add_subcommand("trace", "Export the cycle as an SVG stitching trace");
  trace_cmd->add_option("file", file, "Lattice file")->required();
  trace_cmd->add_option("--svg", svg_path, "Output SVG path")->required();
  trace_cmd->add_option("--cell", cell, "Cell size in SVG units")->check(CLI::PositiveNumber);
  trace_cmd->add_flag("--permissive", permissive, "Attempt any 2-connected input");
  trace_cmd->add_option("--cycle", cycle_path, "Export this cycle listing instead of solving");

  auto* verify_cmd = app.add_subcommand("verify", "Run the exhaustive property suites over a box");
  verify_cmd->add_option("--box", box, "Box size WxH")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (classify_cmd->parsed()) {
      out << to_json(classify(load_lattice(file))).dump(2) << "\n";
      return 0;
    }
    if (trace_cmd->parsed() && !cycle_path.empty()) {
      const SupergridGraph g = load_lattice(file);
      const Cycle c = parse_cycle(read_file(cycle_path));
      if (!validate_cycle(g, c)) throw UsageError(cycle_path + " is not a cycle of " + file);
      write_file(svg_path, export_svg(c, cell));
      return 0;
    }
    if (ham_cmd->parsed() || trace_cmd->parsed()) {
      const SupergridGraph g = load_lattice(file);
      SolveOptions opts;
      opts.strict = !permissive;
      const HamResult r = find_hamiltonian_cycle(g, opts);
      if (!trace_path.empty()) write_file(trace_path, trace_to_jsonl(r.trace));
      if (r.outcome == HamOutcome::Cycle) {
        if (ham_cmd->parsed())
          out << write_cycle(*r.cycle);
        else
          write_file(svg_path, export_svg(*r.cycle, cell));
      }
      return report_outcome(r, out, err);
    }
    if (oracle_cmd->parsed()) {
      const auto c = brute_force_hamiltonian(load_lattice(file), bound);
      if (!c) {
        out << "none\n";
        return kExitNoCycle;
      }
      out << write_cycle(*c);
      return 0;
    }
    if (enum_cmd->parsed()) {
      EnumSpec spec;
      std::tie(spec.width, spec.height) = parse_box(box);
      spec.require = parse_predicates(require);
      spec.min_vertices = min_vertices;
      spec.dedup_symmetry = dedup;
      const std::string csv = summary_csv(summarize(spec));
      if (!csv_path.empty()) write_file(csv_path, csv);
      out << csv;
      return 0;
    }
    if (verify_cmd->parsed()) {
      const auto [w, h] = parse_box(box);
      const VerifyReport rep = verify_box(w, h);
      print_report(out, rep);
      return rep.total_violations() == 0 ? 0 : kExitExtensionFailed;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace supergrid
