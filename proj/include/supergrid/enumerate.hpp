#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "supergrid/classify.hpp"
#include "supergrid/grid.hpp"

namespace supergrid {

inline constexpr int kMaxExhaustiveCells = 25;
inline constexpr int kGenerationBudget = 1000;

struct EnumSpec {
  int width = 4;
  int height = 4;
  std::size_t min_vertices = 0;
  std::vector<Predicate> require;
  bool dedup_symmetry = false;
  std::uint64_t seed = 0;
};

/// Bit i of `mask` is cell (i % width, i / width): row-major order.
inline SupergridGraph graph_from_mask(int width, int height, std::uint32_t mask) {
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(__builtin_popcount(mask)));
  for (int i = 0; i < width * height; ++i)
    if (mask & (std::uint32_t{1} << i)) pts.push_back({i % width, i / width});
  return SupergridGraph(std::move(pts));
}

// ----------------------------------------------------------------------------
// Lattice symmetries
// ----------------------------------------------------------------------------

/// Symmetry s in [0, 8): rotate by s % 4 quarter turns, then mirror x when
/// s >= 4.
constexpr Point apply_symmetry(int s, Point p) {
  for (int r = 0; r < s % 4; ++r) p = {-p.y, p.x};
  if (s >= 4) p.x = -p.x;
  return p;
}

inline std::vector<Point> normalized(std::vector<Point> pts) {
  if (pts.empty()) return pts;
  int mx = pts.front().x, my = pts.front().y;
  for (const Point& p : pts) {
    mx = std::min(mx, p.x);
    my = std::min(my, p.y);
  }
  for (Point& p : pts) p = {p.x - mx, p.y - my};
  std::sort(pts.begin(), pts.end());
  return pts;
}

inline std::vector<Point> symmetry_image(int s, const SupergridGraph& g) {
  std::vector<Point> pts;
  pts.reserve(g.size());
  for (const Point& p : g.vertices()) pts.push_back(apply_symmetry(s, p));
  return normalized(std::move(pts));
}

/// Smallest sorted vertex list over the 8 square symmetries, translated to
/// the origin.
inline SupergridGraph canonical_form(const SupergridGraph& g) {
  std::vector<Point> best = symmetry_image(0, g);
  for (int s = 1; s < 8; ++s) {
    auto img = symmetry_image(s, g);
    if (img < best) best = std::move(img);
  }
  return SupergridGraph(std::move(best));
}

inline std::uint32_t mask_of(int width, const std::vector<Point>& pts) {
  std::uint32_t m = 0;
  for (const Point& p : pts) m |= std::uint32_t{1} << (p.y * width + p.x);
  return m;
}

/// True when `mask` is the smallest bitmask among the images of its graph
/// that fit in the box at the origin. For square boxes this is exactly
/// "g == canonical_form(g)" up to the encoding.
inline bool is_box_representative(int width, int height, std::uint32_t mask, const SupergridGraph& g) {
  if (g.empty()) return true;
  if (g.bounds().min_x != 0 || g.bounds().min_y != 0) return false;
  for (int s = 1; s < 8; ++s) {
    const auto img = symmetry_image(s, g);
    const bool fits = std::all_of(img.begin(), img.end(), [&](const Point& p) { return p.x < width && p.y < height; });
    if (fits && mask_of(width, img) < mask) return false;
  }
  return true;
}

inline bool satisfies(const EnumSpec& spec, const SupergridGraph& g) {
  if (g.size() < spec.min_vertices) return false;
  return std::all_of(spec.require.begin(), spec.require.end(), [&](Predicate p) { return evaluate(p, g); });
}

inline void check_box(const EnumSpec& spec) {
  if (spec.width < 1 || spec.height < 1 || spec.width * spec.height > kMaxExhaustiveCells)
    throw Error(ErrorCode::BoxTooLarge, std::to_string(spec.width) + "x" + std::to_string(spec.height) +
                                            " exceeds " + std::to_string(kMaxExhaustiveCells) + " cells");
}

/// Visits graphs for masks in [begin, end) that meet the spec, in
/// increasing mask order. Disjoint ranges can be handed to separate workers.
template <class Fn>
void for_each_graph_in_range(const EnumSpec& spec, std::uint64_t begin, std::uint64_t end, Fn&& fn) {
  check_box(spec);
  const int cells = spec.width * spec.height;
  end = std::min<std::uint64_t>(end, std::uint64_t{1} << cells);
  for (std::uint64_t m = begin; m < end; ++m) {
    const auto mask = static_cast<std::uint32_t>(m);
    if (static_cast<std::size_t>(__builtin_popcount(mask)) < spec.min_vertices) continue;
    SupergridGraph g = graph_from_mask(spec.width, spec.height, mask);
    if (spec.dedup_symmetry && !is_box_representative(spec.width, spec.height, mask, g)) continue;
    if (!satisfies(spec, g)) continue;
    fn(g, mask);
  }
}

template <class Fn>
void for_each_graph(const EnumSpec& spec, Fn&& fn) {
  check_box(spec);
  for_each_graph_in_range(spec, 0, std::uint64_t{1} << (spec.width * spec.height), std::forward<Fn>(fn));
}

/// Pull-style stream over the same sequence as for_each_graph.
class GraphStream {
 public:
  explicit GraphStream(EnumSpec spec) : spec_(std::move(spec)) {
    check_box(spec_);
    limit_ = std::uint64_t{1} << (spec_.width * spec_.height);
  }

  std::optional<SupergridGraph> next() {
    while (next_mask_ < limit_) {
      const auto mask = static_cast<std::uint32_t>(next_mask_++);
      if (static_cast<std::size_t>(__builtin_popcount(mask)) < spec_.min_vertices) continue;
      SupergridGraph g = graph_from_mask(spec_.width, spec_.height, mask);
      if (spec_.dedup_symmetry && !is_box_representative(spec_.width, spec_.height, mask, g)) continue;
      if (satisfies(spec_, g)) {
        last_mask_ = mask;
        return g;
      }
    }
    return std::nullopt;
  }

  std::uint32_t last_mask() const { return last_mask_; }

 private:
  EnumSpec spec_;
  std::uint64_t next_mask_ = 0;
  std::uint64_t limit_ = 0;
  std::uint32_t last_mask_ = 0;
};

inline std::vector<SupergridGraph> enumerate_graphs(const EnumSpec& spec) {
  std::vector<SupergridGraph> out;
  for_each_graph(spec, [&](const SupergridGraph& g, std::uint32_t) { out.push_back(g); });
  return out;
}

// ----------------------------------------------------------------------------
// Randomized generation
// ----------------------------------------------------------------------------

/// Adds every lattice point lying between two same-line points until all
/// four line directions are gap-free. Each added point is forced by the two
/// points around it, so the result is the smallest linear-convex superset.
inline std::vector<Point> linear_convex_closure(std::vector<Point> pts) {
  bool changed = true;
  std::vector<std::pair<int, int>> keyed;
  while (changed) {
    changed = false;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t before = pts.size();
    for (LineDirection dir : kLineDirections) {
      keyed.clear();
      for (const Point& p : pts) keyed.emplace_back(line_key(dir, p).index, line_parameter(dir, p));
      std::sort(keyed.begin(), keyed.end());
      for (std::size_t i = 1; i < keyed.size(); ++i) {
        if (keyed[i].first != keyed[i - 1].first) continue;
        for (int t = keyed[i - 1].second + 1; t < keyed[i].second; ++t)
          pts.push_back(point_on_line({dir, keyed[i].first}, t));
      }
    }
    if (pts.size() != before) changed = true;
  }
  return pts;
}

/// Seeded growth inside the box followed by linear-convex closure. Each
/// attempt grows a connected blob to a random target size; the first blob
/// meeting `spec.require` is returned. Deterministic for a given seed.
inline SupergridGraph random_graph(const EnumSpec& spec) {
  if (spec.width < 1 || spec.height < 1) throw Error(ErrorCode::BoxTooLarge, "empty box");
  std::mt19937_64 rng(spec.seed);
  const int cells = spec.width * spec.height;
  const int lo = std::min<int>(cells, std::max<int>(3, static_cast<int>(spec.min_vertices)));
  std::uniform_int_distribution<int> pick_cell(0, cells - 1);
  std::uniform_int_distribution<int> pick_target(lo, cells);
  std::vector<char> in(static_cast<std::size_t>(cells));
  std::vector<int> candidates;

  for (int attempt = 0; attempt < kGenerationBudget; ++attempt) {
    std::fill(in.begin(), in.end(), 0);
    const int target = pick_target(rng);
    const int start = pick_cell(rng);
    in[static_cast<std::size_t>(start)] = 1;
    int count = 1;
    while (count < target) {
      candidates.clear();
      for (int c = 0; c < cells; ++c) {
        if (in[static_cast<std::size_t>(c)]) continue;
        const Point p{c % spec.width, c / spec.width};
        for (Direction d : kDirections) {
          const Point q = step(p, d);
          if (q.x >= 0 && q.y >= 0 && q.x < spec.width && q.y < spec.height &&
              in[static_cast<std::size_t>(q.y * spec.width + q.x)]) {
            candidates.push_back(c);
            break;
          }
        }
      }
      if (candidates.empty()) break;
      std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
      in[static_cast<std::size_t>(candidates[pick(rng)])] = 1;
      std::vector<Point> pts;
      for (int c = 0; c < cells; ++c)
        if (in[static_cast<std::size_t>(c)]) pts.push_back({c % spec.width, c / spec.width});
      pts = linear_convex_closure(std::move(pts));
      for (const Point& p : pts) in[static_cast<std::size_t>(p.y * spec.width + p.x)] = 1;
      count = static_cast<int>(pts.size());
    }
    std::vector<Point> pts;
    for (int c = 0; c < cells; ++c)
      if (in[static_cast<std::size_t>(c)]) pts.push_back({c % spec.width, c / spec.width});
    SupergridGraph g(std::move(pts));
    if (satisfies(spec, g)) return g;
  }
  throw Error(ErrorCode::GenerationBudgetExhausted,
              "no graph met the requirements after " + std::to_string(kGenerationBudget) + " attempts");
}

}  // namespace supergrid
