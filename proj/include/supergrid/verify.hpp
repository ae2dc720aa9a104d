#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "supergrid/classify.hpp"
#include "supergrid/enumerate.hpp"
#include "supergrid/hamiltonian.hpp"

namespace supergrid {

/// The four forced-midpoint implications of a linear-convex graph at v:
/// {UL,UR} -> U, {UL,DL} -> L, {UR,DR} -> R, {DL,DR} -> D.
inline bool immediate_vertices_present(const SupergridGraph& g, Point v) {
  auto has = [&](Point p) { return g.contains(p); };
  if (has(UL(v)) && has(UR(v)) && !has(U(v))) return false;
  if (has(UL(v)) && has(DL(v)) && !has(L(v))) return false;
  if (has(UR(v)) && has(DR(v)) && !has(R(v))) return false;
  if (has(DL(v)) && has(DR(v)) && !has(D(v))) return false;
  return true;
}

struct SuiteResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::uint32_t first_violation_mask = 0;

  void record(bool ok, std::uint32_t mask) {
    ++checked;
    if (!ok && violations++ == 0) first_violation_mask = mask;
  }
};

struct VerifyReport {
  int width = 0;
  int height = 0;
  std::size_t universe = 0;
  SuiteResult local_connectivity{"local_connectivity"};
  SuiteResult forced_vertices{"immediate_vertex_include"};
  SuiteResult hamiltonian{"hamiltonian_cycle"};
  SuiteResult oracle_positive{"oracle_agrees_on_success"};
  SuiteResult oracle_negative{"oracle_rejects_non_two_connected"};
  std::array<std::size_t, 4> rule_counts{};

  std::vector<const SuiteResult*> suites() const {
    return {&local_connectivity, &forced_vertices, &hamiltonian, &oracle_positive, &oracle_negative};
  }
  std::size_t total_violations() const {
    std::size_t v = 0;
    for (const auto* s : suites()) v += s->violations;
    return v;
  }
};

struct VerifyOptions {
  std::size_t oracle_max_vertices = 12;
  ExtendOptions extend;
};

/// Runs every property suite over all subsets of a width x height box.
inline VerifyReport verify_box(int width, int height, const VerifyOptions& opts = {}) {
  VerifyReport rep;
  rep.width = width;
  rep.height = height;
  EnumSpec spec;
  spec.width = width;
  spec.height = height;
  for_each_graph(spec, [&](const SupergridGraph& g, std::uint32_t mask) {
    ++rep.universe;
    const bool two = is_two_connected(g);
    const bool convex = is_linear_convex(g);
    if (two && convex) rep.local_connectivity.record(is_locally_connected(g), mask);
    if (convex) {
      bool ok = true;
      for (const Point& v : g.vertices()) ok = ok && immediate_vertices_present(g, v);
      rep.forced_vertices.record(ok, mask);
    }
    bool solved = false;
    if (two && convex) {
      SolveOptions so;
      so.extend = opts.extend;
      bool ok = false;
      try {
        const HamResult r = find_hamiltonian_cycle(g, so);
        ok = r.outcome == HamOutcome::Cycle && r.cycle && r.cycle->size() == g.size() &&
             validate_cycle(g, *r.cycle) && r.trace.steps.size() + 3 == g.size();
        for (std::size_t i = 0; ok && i < r.trace.steps.size(); ++i)
          ok = r.trace.steps[i].cycle_length_before == 3 + i;
        const auto counts = r.trace.rule_counts();
        for (std::size_t i = 0; i < counts.size(); ++i) rep.rule_counts[i] += counts[i];
      } catch (const std::logic_error&) {
        ok = false;
      }
      solved = ok;
      rep.hamiltonian.record(ok, mask);
    }
    if (g.size() <= opts.oracle_max_vertices) {
      if (solved) rep.oracle_positive.record(brute_force_hamiltonian(g).has_value(), mask);
      if (!two) rep.oracle_negative.record(!brute_force_hamiltonian(g).has_value(), mask);
    }
  });
  return rep;
}

inline void print_report(std::ostream& os, const VerifyReport& rep) {
  os << "box: " << rep.width << "x" << rep.height << "\n";
  os << "universe: " << rep.universe << "\n";
  for (const auto* s : rep.suites()) {
    os << "suite " << s->name << ": checked " << s->checked << ", violations " << s->violations;
    if (s->violations) os << " (first mask " << s->first_violation_mask << ")";
    os << "\n";
  }
  os << "rules:";
  for (ExtensionRule r : kExtensionRules)
    os << " " << to_string(r) << "=" << rep.rule_counts[static_cast<std::size_t>(r)];
  os << "\n";
  if (rep.rule_counts[static_cast<std::size_t>(ExtensionRule::FallbackSearch)] > 0)
    os << "audit: fallback search fired; rule transcription incomplete\n";
  os << "violations: " << rep.total_violations() << "\n";
}

/// Per-rule step counts as a two-column CSV.
inline std::string rule_frequency_csv(const std::array<std::size_t, 4>& counts) {
  std::string out = "rule,count\n";
  for (ExtensionRule r : kExtensionRules)
    out += std::string(to_string(r)) + "," + std::to_string(counts[static_cast<std::size_t>(r)]) + "\n";
  return out;
}

// ----------------------------------------------------------------------------
// Enumeration summary (CSV)
// ----------------------------------------------------------------------------

struct EnumSummary {
  std::string box;
  std::size_t total = 0;
  std::size_t connected = 0;
  std::size_t two_connected = 0;
  std::size_t linear_convex = 0;
  std::size_t locally_connected = 0;
  std::size_t hamiltonian_found = 0;
  std::array<std::size_t, 4> rule_counts{};
};

/// Counts predicates over the graphs the spec yields and solves every
/// 2-connected linear-convex one in strict mode.
inline EnumSummary summarize(const EnumSpec& spec, std::vector<std::uint32_t>* masks = nullptr) {
  EnumSummary s;
  s.box = std::to_string(spec.width) + "x" + std::to_string(spec.height);
  for_each_graph(spec, [&](const SupergridGraph& g, std::uint32_t mask) {
    if (masks) masks->push_back(mask);
    ++s.total;
    const bool conn = is_connected(g);
    const bool two = conn && is_two_connected(g);
    const bool convex = is_linear_convex(g);
    s.connected += conn;
    s.two_connected += two;
    s.linear_convex += convex;
    s.locally_connected += is_locally_connected(g);
    if (two && convex) {
      const HamResult r = find_hamiltonian_cycle(g);
      if (r.outcome == HamOutcome::Cycle) ++s.hamiltonian_found;
      const auto counts = r.trace.rule_counts();
      for (std::size_t i = 0; i < counts.size(); ++i) s.rule_counts[i] += counts[i];
    }
  });
  return s;
}

inline std::string summary_csv(const EnumSummary& s) {
  std::ostringstream os;
  os << "box,total,connected,two_connected,linear_convex,locally_connected,hamiltonian_found";
  for (ExtensionRule r : kExtensionRules) os << ",rule_" << to_string(r);
  os << "\n";
  os << s.box << "," << s.total << "," << s.connected << "," << s.two_connected << "," << s.linear_convex
     << "," << s.locally_connected << "," << s.hamiltonian_found;
  for (std::size_t c : s.rule_counts) os << "," << c;
  os << "\n";
  return os.str();
}

}  // namespace supergrid
