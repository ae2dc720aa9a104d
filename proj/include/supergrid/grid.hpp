#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "supergrid/error.hpp"

namespace supergrid {

/// Integer lattice point. y grows downward, so U(v) = (x, y - 1).
/// Ordering is lexicographic on (y, x).
struct Point {
  int x = 0;
  int y = 0;

  friend constexpr bool operator==(const Point&, const Point&) = default;
  friend constexpr std::strong_ordering operator<=>(const Point& a, const Point& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
  friend std::ostream& operator<<(std::ostream& os, const Point& p) {
    return os << '(' << p.x << ',' << p.y << ')';
  }
};

inline std::string to_string(const Point& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

enum class Direction : std::uint8_t { UL, U, UR, L, R, DL, D, DR };

struct Offset {
  int dx;
  int dy;
};

inline constexpr std::array<Direction, 8> kDirections = {
    Direction::UL, Direction::U,  Direction::UR, Direction::L,
    Direction::R,  Direction::DL, Direction::D,  Direction::DR};

constexpr Offset offset(Direction d) {
  constexpr std::array<Offset, 8> table = {{{-1, -1}, {0, -1}, {1, -1}, {-1, 0},
                                            {1, 0},   {-1, 1}, {0, 1},  {1, 1}}};
  return table[static_cast<std::size_t>(d)];
}

constexpr Direction opposite(Direction d) {
  // The table is laid out so that index i and 7 - i are negations.
  return static_cast<Direction>(7 - static_cast<int>(d));
}

constexpr const char* to_string(Direction d) {
  constexpr std::array<const char*, 8> names = {"UL", "U", "UR", "L", "R", "DL", "D", "DR"};
  return names[static_cast<std::size_t>(d)];
}

constexpr Point step(Point p, Direction d) {
  const Offset o = offset(d);
  return {p.x + o.dx, p.y + o.dy};
}

// Named neighbor positions, in compass notation.
constexpr Point UL(Point p) { return step(p, Direction::UL); }
constexpr Point U(Point p) { return step(p, Direction::U); }
constexpr Point UR(Point p) { return step(p, Direction::UR); }
constexpr Point L(Point p) { return step(p, Direction::L); }
constexpr Point R(Point p) { return step(p, Direction::R); }
constexpr Point DL(Point p) { return step(p, Direction::DL); }
constexpr Point D(Point p) { return step(p, Direction::D); }
constexpr Point DR(Point p) { return step(p, Direction::DR); }

/// King-move adjacency of the infinite supergrid. No self loops.
constexpr bool adjacent(Point u, Point v) {
  const int dx = u.x > v.x ? u.x - v.x : v.x - u.x;
  const int dy = u.y > v.y ? u.y - v.y : v.y - u.y;
  return std::max(dx, dy) == 1;
}

struct BoundingBox {
  int min_x = 0;
  int min_y = 0;
  int max_x = -1;
  int max_y = -1;

  bool empty() const { return max_x < min_x; }
  int width() const { return empty() ? 0 : max_x - min_x + 1; }
  int height() const { return empty() ? 0 : max_y - min_y + 1; }
  bool contains(Point p) const {
    return p.x >= min_x && p.x <= max_x && p.y >= min_y && p.y <= max_y;
  }
};

/// A finite vertex-induced subgraph of the infinite supergrid.
///
/// Only the vertex set is stored. Edges are implied by `adjacent`, and the
/// membership test is a dense index over the bounding box, so a graph is an
/// immutable value that is cheap to query and safe to share across threads.
/// Coordinates are expected to stay within |c| <= 2^30.
class SupergridGraph {
 public:
  SupergridGraph() = default;

  explicit SupergridGraph(std::vector<Point> points) : vertices_(std::move(points)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    build_index();
  }

  SupergridGraph(std::initializer_list<Point> points)
      : SupergridGraph(std::vector<Point>(points)) {}

  /// Vertices in ascending (y, x) order.
  std::span<const Point> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  const BoundingBox& bounds() const { return box_; }

  bool contains(Point p) const { return index_of(p) >= 0; }

  /// Position of `p` in `vertices()`, or -1 when absent.
  int index_of(Point p) const {
    if (!box_.contains(p)) return -1;
    const auto w = static_cast<std::size_t>(box_.width());
    return cell_index_[static_cast<std::size_t>(p.y - box_.min_y) * w +
                       static_cast<std::size_t>(p.x - box_.min_x)];
  }

  std::size_t degree(Point v) const {
    std::size_t d = 0;
    for (Direction dir : kDirections) d += contains(step(v, dir)) ? 1 : 0;
    return d;
  }

  friend bool operator==(const SupergridGraph& a, const SupergridGraph& b) {
    return a.vertices_ == b.vertices_;
  }

 private:
  void build_index() {
    box_ = BoundingBox{};
    cell_index_.clear();
    if (vertices_.empty()) return;
    box_ = {vertices_.front().x, vertices_.front().y, vertices_.front().x, vertices_.front().y};
    for (const Point& p : vertices_) {
      box_.min_x = std::min(box_.min_x, p.x);
      box_.max_x = std::max(box_.max_x, p.x);
      box_.min_y = std::min(box_.min_y, p.y);
      box_.max_y = std::max(box_.max_y, p.y);
    }
    cell_index_.assign(static_cast<std::size_t>(box_.width()) *
                           static_cast<std::size_t>(box_.height()),
                       -1);
    const auto w = static_cast<std::size_t>(box_.width());
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      const Point& p = vertices_[i];
      cell_index_[static_cast<std::size_t>(p.y - box_.min_y) * w +
                  static_cast<std::size_t>(p.x - box_.min_x)] = static_cast<int>(i);
    }
  }

  std::vector<Point> vertices_;
  BoundingBox box_;
  std::vector<int> cell_index_;
};

/// Builds a graph from an arbitrary point list; duplicates collapse.
inline SupergridGraph from_points(std::vector<Point> points) {
  return SupergridGraph(std::move(points));
}

inline void require_vertex(const SupergridGraph& g, Point v) {
  if (!g.contains(v)) throw Error(ErrorCode::VertexNotInGraph, to_string(v));
}

/// Neighbors of `v` present in `g`, in direction order UL,U,UR,L,R,DL,D,DR.
inline std::vector<Point> neighbors(const SupergridGraph& g, Point v) {
  require_vertex(g, v);
  std::vector<Point> out;
  out.reserve(8);
  for (Direction d : kDirections) {
    const Point q = step(v, d);
    if (g.contains(q)) out.push_back(q);
  }
  return out;
}

/// The subgraph induced by N(v).
inline SupergridGraph induced_neighborhood(const SupergridGraph& g, Point v) {
  return SupergridGraph(neighbors(g, v));
}

inline SupergridGraph translate(const SupergridGraph& g, int dx, int dy) {
  std::vector<Point> moved;
  moved.reserve(g.size());
  for (const Point& p : g.vertices()) moved.push_back({p.x + dx, p.y + dy});
  return SupergridGraph(std::move(moved));
}

}  // namespace supergrid

template <>
struct std::hash<supergrid::Point> {
  std::size_t operator()(const supergrid::Point& p) const noexcept {
    const auto ux = static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.x));
    const auto uy = static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.y));
    return std::hash<std::uint64_t>{}((uy << 32) | ux);
  }
};
