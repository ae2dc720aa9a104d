#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "supergrid/grid.hpp"

namespace supergrid {

enum class LineDirection { Horizontal, Vertical, Diagonal, Antidiagonal };

inline constexpr std::array<LineDirection, 4> kLineDirections = {
    LineDirection::Horizontal, LineDirection::Vertical, LineDirection::Diagonal,
    LineDirection::Antidiagonal};

constexpr const char* to_string(LineDirection d) {
  switch (d) {
    case LineDirection::Horizontal: return "horizontal";
    case LineDirection::Vertical: return "vertical";
    case LineDirection::Diagonal: return "diagonal";
    case LineDirection::Antidiagonal: return "antidiagonal";
  }
  return "?";
}

/// Identifies one line of the supergrid that carries edges.
/// Diagonal lines run UL to DR (index y - x); antidiagonal lines run UR to DL
/// (index y + x).
struct LineKey {
  LineDirection direction = LineDirection::Horizontal;
  int index = 0;

  friend bool operator==(const LineKey&, const LineKey&) = default;
};

constexpr LineKey line_key(LineDirection d, Point p) {
  switch (d) {
    case LineDirection::Horizontal: return {d, p.y};
    case LineDirection::Vertical: return {d, p.x};
    case LineDirection::Diagonal: return {d, p.y - p.x};
    case LineDirection::Antidiagonal: return {d, p.y + p.x};
  }
  return {d, 0};
}

/// Position of `p` along its line: y on vertical lines, x everywhere else.
constexpr int line_parameter(LineDirection d, Point p) {
  return d == LineDirection::Vertical ? p.y : p.x;
}

/// Inverse of (line_key, line_parameter).
constexpr Point point_on_line(LineKey key, int param) {
  switch (key.direction) {
    case LineDirection::Horizontal: return {param, key.index};
    case LineDirection::Vertical: return {key.index, param};
    case LineDirection::Diagonal: return {param, key.index + param};
    case LineDirection::Antidiagonal: return {param, key.index - param};
  }
  return {};
}

/// Two vertices on the same line with the lattice point `missing` strictly
/// between them absent from the graph.
struct LineGap {
  LineKey line;
  Point first;
  Point second;
  Point missing;
};

template <class Witness>
struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;

  explicit operator bool() const { return holds; }
};

inline Verdict<LineGap> check_linear_convexity(const SupergridGraph& g) {
  std::vector<std::pair<int, int>> keyed;  // (line index, parameter)
  keyed.reserve(g.size());
  for (LineDirection dir : kLineDirections) {
    keyed.clear();
    for (const Point& p : g.vertices()) keyed.emplace_back(line_key(dir, p).index, line_parameter(dir, p));
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 1; i < keyed.size(); ++i) {
      const auto [line, param] = keyed[i];
      const auto [prev_line, prev_param] = keyed[i - 1];
      if (line == prev_line && param > prev_param + 1) {
        const LineKey key{dir, line};
        return {false, LineGap{key, point_on_line(key, prev_param), point_on_line(key, param),
                               point_on_line(key, prev_param + 1)}};
      }
    }
  }
  return {};
}

inline bool is_linear_convex(const SupergridGraph& g) { return check_linear_convexity(g).holds; }

inline bool is_connected(const SupergridGraph& g) {
  const std::size_t n = g.size();
  if (n <= 1) return true;
  const auto verts = g.vertices();
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Point p = verts[static_cast<std::size_t>(stack.back())];
    stack.pop_back();
    for (Direction d : kDirections) {
      const int j = g.index_of(step(p, d));
      if (j >= 0 && !seen[static_cast<std::size_t>(j)]) {
        seen[static_cast<std::size_t>(j)] = 1;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  return reached == n;
}

/// First articulation vertex (smallest in point order) of a connected graph,
/// found with an iterative low-link DFS.
inline std::optional<Point> find_articulation_vertex(const SupergridGraph& g) {
  const std::size_t n = g.size();
  if (n < 3) return std::nullopt;
  const auto verts = g.vertices();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<char> is_cut(n, 0);
  struct Frame {
    int v;
    int next_dir;
    int children;
  };
  int timer = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<Frame> stack{{static_cast<int>(root), 0, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto v = static_cast<std::size_t>(f.v);
      if (f.next_dir < 8) {
        const int w = g.index_of(step(verts[v], kDirections[static_cast<std::size_t>(f.next_dir++)]));
        if (w < 0) continue;
        const auto wu = static_cast<std::size_t>(w);
        if (disc[wu] < 0) {
          parent[wu] = f.v;
          disc[wu] = low[wu] = timer++;
          ++f.children;
          stack.push_back({w, 0, 0});
        } else if (w != parent[v]) {
          low[v] = std::min(low[v], disc[wu]);
        }
        continue;
      }
      const int children = f.children;
      stack.pop_back();
      if (parent[v] < 0) {
        if (children > 1) is_cut[v] = 1;
      } else {
        const auto p = static_cast<std::size_t>(parent[v]);
        low[p] = std::min(low[p], low[v]);
        if (parent[p] >= 0 && low[v] >= disc[p]) is_cut[p] = 1;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (is_cut[i]) return verts[i];
  return std::nullopt;
}

/// |V| >= 3, connected, and free of articulation vertices.
inline bool is_two_connected(const SupergridGraph& g) {
  if (g.size() < 3) return false;
  if (!is_connected(g)) return false;
  return !find_articulation_vertex(g).has_value();
}

/// A vertex whose neighborhood splits into more than one component.
struct DisconnectedNeighborhood {
  Point vertex;
  std::vector<Point> neighborhood;
};

inline bool neighborhood_connected(const std::vector<Point>& nbrs) {
  if (nbrs.size() <= 1) return true;
  std::array<char, 8> seen{};
  std::array<std::size_t, 8> stack{};
  std::size_t top = 0, reached = 1;
  seen[0] = 1;
  stack[top++] = 0;
  while (top > 0) {
    const std::size_t a = stack[--top];
    for (std::size_t b = 0; b < nbrs.size(); ++b) {
      if (!seen[b] && adjacent(nbrs[a], nbrs[b])) {
        seen[b] = 1;
        ++reached;
        stack[top++] = b;
      }
    }
  }
  return reached == nbrs.size();
}

inline Verdict<DisconnectedNeighborhood> check_local_connectivity(const SupergridGraph& g) {
  for (const Point& v : g.vertices()) {
    auto nbrs = neighbors(g, v);
    if (!neighborhood_connected(nbrs)) return {false, DisconnectedNeighborhood{v, std::move(nbrs)}};
  }
  return {};
}

inline bool is_locally_connected(const SupergridGraph& g) { return check_local_connectivity(g).holds; }

struct ViolationWitness {
  std::string predicate;
  std::vector<Point> points;
  std::optional<LineKey> line;
  std::optional<Point> missing;
};

struct ClassificationReport {
  std::size_t vertex_count = 0;
  bool connected = true;
  bool two_connected = false;
  bool linear_convex = true;
  bool locally_connected = true;
  /// One entry per failing witness-bearing predicate, linear convexity first.
  std::vector<ViolationWitness> violation_witness;
};

inline ClassificationReport classify(const SupergridGraph& g) {
  ClassificationReport r;
  r.vertex_count = g.size();
  r.connected = is_connected(g);
  r.two_connected = r.connected && is_two_connected(g);
  const auto convex = check_linear_convexity(g);
  r.linear_convex = convex.holds;
  if (convex.witness) {
    const LineGap& gap = *convex.witness;
    r.violation_witness.push_back({"linear_convex", {gap.first, gap.second}, gap.line, gap.missing});
  }
  const auto local = check_local_connectivity(g);
  r.locally_connected = local.holds;
  if (local.witness) {
    r.violation_witness.push_back({"locally_connected", {local.witness->vertex}, std::nullopt, std::nullopt});
  }
  return r;
}

enum class Predicate { Connected, TwoConnected, LinearConvex, LocallyConnected };

inline constexpr std::array<Predicate, 4> kPredicates = {
    Predicate::Connected, Predicate::TwoConnected, Predicate::LinearConvex,
    Predicate::LocallyConnected};

constexpr const char* to_string(Predicate p) {
  switch (p) {
    case Predicate::Connected: return "connected";
    case Predicate::TwoConnected: return "two_connected";
    case Predicate::LinearConvex: return "linear_convex";
    case Predicate::LocallyConnected: return "locally_connected";
  }
  return "?";
}

inline std::optional<Predicate> parse_predicate(const std::string& name) {
  for (Predicate p : kPredicates)
    if (name == to_string(p)) return p;
  return std::nullopt;
}

inline bool evaluate(Predicate p, const SupergridGraph& g) {
  switch (p) {
    case Predicate::Connected: return is_connected(g);
    case Predicate::TwoConnected: return is_two_connected(g);
    case Predicate::LinearConvex: return is_linear_convex(g);
    case Predicate::LocallyConnected: return is_locally_connected(g);
  }
  return false;
}

}  // namespace supergrid
