#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "supergrid/grid.hpp"

namespace supergrid {

/// A simple path: distinct vertices, consecutive ones adjacent.
struct PathSeq {
  std::vector<Point> verts;

  Point start() const { return verts.front(); }
  Point end() const { return verts.back(); }
  std::size_t size() const { return verts.size(); }

  friend bool operator==(const PathSeq&, const PathSeq&) = default;
};

/// A simple cycle stored as its traversal order; the closing edge
/// verts.back() -> verts.front() is implicit.
struct Cycle {
  std::vector<Point> verts;

  std::size_t size() const { return verts.size(); }
  const Point& operator[](std::size_t i) const { return verts[i]; }
  /// Vertex at cyclic position i (any integer).
  const Point& at_cyclic(std::ptrdiff_t i) const {
    const auto k = static_cast<std::ptrdiff_t>(verts.size());
    return verts[static_cast<std::size_t>(((i % k) + k) % k)];
  }

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

inline bool all_distinct(const std::vector<Point>& pts) {
  std::unordered_set<Point> seen;
  seen.reserve(pts.size() * 2);
  for (const Point& p : pts)
    if (!seen.insert(p).second) return false;
  return true;
}

inline bool validate_path(const SupergridGraph& g, const PathSeq& p) {
  if (p.verts.empty()) return false;
  for (std::size_t i = 0; i < p.verts.size(); ++i) {
    if (!g.contains(p.verts[i])) return false;
    if (i > 0 && !adjacent(p.verts[i - 1], p.verts[i])) return false;
  }
  return all_distinct(p.verts);
}

inline bool validate_cycle(const SupergridGraph& g, const Cycle& c) {
  const std::size_t k = c.size();
  if (k < 3) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (!g.contains(c[i])) return false;
    if (!adjacent(c[i], c[(i + 1) % k])) return false;
  }
  return all_distinct(c.verts);
}

/// Same cycle up to rotation and reversal: smallest vertex first, then the
/// smaller of its two cycle neighbors.
inline Cycle canonical(const Cycle& c) {
  if (c.verts.empty()) return c;
  const auto k = static_cast<std::ptrdiff_t>(c.size());
  const auto first = std::min_element(c.verts.begin(), c.verts.end()) - c.verts.begin();
  const bool forward = c.at_cyclic(first + 1) < c.at_cyclic(first - 1);
  Cycle out;
  out.verts.reserve(c.size());
  for (std::ptrdiff_t i = 0; i < k; ++i) out.verts.push_back(c.at_cyclic(forward ? first + i : first - i));
  return out;
}

inline bool equivalent(const Cycle& a, const Cycle& b) { return canonical(a) == canonical(b); }

inline PathSeq reverse_path(const PathSeq& p) {
  return PathSeq{{p.verts.rbegin(), p.verts.rend()}};
}

inline Cycle reversed(const Cycle& c) { return Cycle{{c.verts.rbegin(), c.verts.rend()}}; }

/// Rotation that puts position `i` first, keeping direction.
inline Cycle rotated(const Cycle& c, std::size_t i) {
  Cycle out;
  out.verts.reserve(c.size());
  for (std::size_t s = 0; s < c.size(); ++s) out.verts.push_back(c[(i + s) % c.size()]);
  return out;
}

inline std::optional<std::size_t> position_of(const Cycle& c, Point p) {
  const auto it = std::find(c.verts.begin(), c.verts.end(), p);
  if (it == c.verts.end()) return std::nullopt;
  return static_cast<std::size_t>(it - c.verts.begin());
}

namespace detail {

inline void require_cycle(const SupergridGraph& g, const Cycle& c, const char* what) {
  if (!validate_cycle(g, c))
    throw Error(ErrorCode::PreconditionViolated, std::string(what) + " is not a valid cycle of the graph");
}

inline bool disjoint(const std::vector<Point>& a, const std::vector<Point>& b) {
  std::unordered_set<Point> s(a.begin(), a.end());
  return std::none_of(b.begin(), b.end(), [&](const Point& p) { return s.count(p) > 0; });
}

}  // namespace detail

/// Splices x between the first cycle edge (u, v), in traversal order from
/// verts[0], whose ends are both adjacent to x.
inline Cycle insert_vertex(const SupergridGraph& g, const Cycle& c, Point x) {
  detail::require_cycle(g, c, "cycle");
  require_vertex(g, x);
  if (position_of(c, x))
    throw Error(ErrorCode::PreconditionViolated, to_string(x) + " already lies on the cycle");
  const std::size_t k = c.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (adjacent(c[i], x) && adjacent(c[(i + 1) % k], x)) {
      Cycle out;
      out.verts.reserve(k + 1);
      out.verts.insert(out.verts.end(), c.verts.begin(), c.verts.begin() + static_cast<std::ptrdiff_t>(i + 1));
      out.verts.push_back(x);
      out.verts.insert(out.verts.end(), c.verts.begin() + static_cast<std::ptrdiff_t>(i + 1), c.verts.end());
      return out;
    }
  }
  throw Error(ErrorCode::NoInsertionEdge, "no cycle edge has both ends adjacent to " + to_string(x));
}

/// Replaces a cycle edge (u, v) by u -> P -> v (or u -> rev(P) -> v). A
/// single-vertex path degenerates to insert_vertex.
inline Cycle concat_cycle_path(const SupergridGraph& g, const Cycle& c, const PathSeq& p) {
  detail::require_cycle(g, c, "cycle");
  if (!validate_path(g, p))
    throw Error(ErrorCode::PreconditionViolated, "path is not a valid path of the graph");
  if (!detail::disjoint(c.verts, p.verts))
    throw Error(ErrorCode::PreconditionViolated, "cycle and path share a vertex");
  const std::size_t k = c.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Point u = c[i];
    const Point v = c[(i + 1) % k];
    const bool forward = adjacent(u, p.start()) && adjacent(v, p.end());
    const bool backward = !forward && adjacent(u, p.end()) && adjacent(v, p.start());
    if (!forward && !backward) continue;
    Cycle out;
    out.verts.reserve(k + p.size());
    out.verts.insert(out.verts.end(), c.verts.begin(), c.verts.begin() + static_cast<std::ptrdiff_t>(i + 1));
    if (forward)
      out.verts.insert(out.verts.end(), p.verts.begin(), p.verts.end());
    else
      out.verts.insert(out.verts.end(), p.verts.rbegin(), p.verts.rend());
    out.verts.insert(out.verts.end(), c.verts.begin() + static_cast<std::ptrdiff_t>(i + 1), c.verts.end());
    return out;
  }
  throw Error(ErrorCode::NoConcatenationEdge, "no cycle edge bridges the path ends");
}

/// Merges two vertex-disjoint cycles through edges (u1, v1) of c1 and
/// (u2, v2) of c2 with u1 ~ u2 and v1 ~ v2: both edges are dropped and
/// replaced by (u1, u2) and (v2, v1).
inline Cycle concat_cycles_edges(const SupergridGraph& g, const Cycle& c1, const Cycle& c2) {
  detail::require_cycle(g, c1, "first cycle");
  detail::require_cycle(g, c2, "second cycle");
  if (!detail::disjoint(c1.verts, c2.verts))
    throw Error(ErrorCode::PreconditionViolated, "cycles are not vertex-disjoint");
  const std::size_t k1 = c1.size();
  const std::size_t k2 = c2.size();
  for (std::size_t i = 0; i < k1; ++i) {
    // Edge (u1, v1) = (c1[i], c1[i+1]); walking c1 from v1 forward ends at u1.
    const Point u1 = c1[i];
    const Point v1 = c1[(i + 1) % k1];
    for (std::size_t j = 0; j < k2; ++j) {
      for (int orient = 0; orient < 2; ++orient) {
        // orient 0: (u2, v2) = (c2[j], c2[j+1]); orient 1 swaps the roles.
        const Point a = c2[j];
        const Point b = c2[(j + 1) % k2];
        const Point u2 = orient == 0 ? a : b;
        const Point v2 = orient == 0 ? b : a;
        if (!adjacent(u1, u2) || !adjacent(v1, v2)) continue;
        Cycle out;
        out.verts.reserve(k1 + k2);
        for (std::size_t s = 0; s < k1; ++s) out.verts.push_back(c1[(i + 1 + s) % k1]);  // v1 .. u1
        // From u2 around c2 to v2 without using edge (u2, v2).
        for (std::size_t s = 0; s < k2; ++s) {
          const std::size_t idx = orient == 0 ? (j + k2 - s) % k2 : (j + 1 + s) % k2;
          out.verts.push_back(c2[idx]);
        }
        return out;
      }
    }
  }
  throw Error(ErrorCode::NoBridgeEdges, "no pair of cycle edges can be cross-linked");
}

/// Merges two cycles meeting in exactly one vertex v through cycle edges
/// (u, v) of c1 and (w, v) of c2 with u ~ w; v stays once in the result.
inline Cycle concat_cycles_shared_vertex(const SupergridGraph& g, const Cycle& c1, const Cycle& c2) {
  detail::require_cycle(g, c1, "first cycle");
  detail::require_cycle(g, c2, "second cycle");
  std::vector<std::size_t> shared_in_c1;
  std::unordered_set<Point> in_c2(c2.verts.begin(), c2.verts.end());
  for (std::size_t i = 0; i < c1.size(); ++i)
    if (in_c2.count(c1[i])) shared_in_c1.push_back(i);
  if (shared_in_c1.size() != 1)
    throw Error(ErrorCode::NoSharedVertex,
                "cycles share " + std::to_string(shared_in_c1.size()) + " vertices, expected exactly 1");
  const auto iv = static_cast<std::ptrdiff_t>(shared_in_c1.front());
  const Point v = c1[shared_in_c1.front()];
  const auto jv = static_cast<std::ptrdiff_t>(*position_of(c2, v));
  const auto k1 = static_cast<std::ptrdiff_t>(c1.size());
  const auto k2 = static_cast<std::ptrdiff_t>(c2.size());
  // u is next(v) or prev(v) on c1; w likewise on c2.
  for (int su : {+1, -1}) {
    const Point u = c1.at_cyclic(iv + su);
    for (int sw : {+1, -1}) {
      const Point w = c2.at_cyclic(jv + sw);
      if (!adjacent(u, w)) continue;
      Cycle out;
      out.verts.reserve(static_cast<std::size_t>(k1 + k2 - 1));
      // v, then c1 the long way round ending at u.
      for (std::ptrdiff_t s = 0; s < k1; ++s) out.verts.push_back(c1.at_cyclic(iv - su * s));
      // w, then c2 the long way round, stopping before v.
      for (std::ptrdiff_t s = 0; s < k2 - 1; ++s) out.verts.push_back(c2.at_cyclic(jv + sw + sw * s));
      return out;
    }
  }
  throw Error(ErrorCode::NoPivotEdge, "no cycle neighbors of the shared vertex are adjacent");
}

}  // namespace supergrid
