#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "supergrid/classify.hpp"
#include "supergrid/cycle_ops.hpp"
#include "supergrid/grid.hpp"

namespace supergrid {

/// Rewiring rules in strict priority order.
enum class ExtensionRule { DirectInsert, Claim1Rewire, Claim2Rewire, FallbackSearch };

inline constexpr std::array<ExtensionRule, 4> kExtensionRules = {
    ExtensionRule::DirectInsert, ExtensionRule::Claim1Rewire, ExtensionRule::Claim2Rewire,
    ExtensionRule::FallbackSearch};

constexpr const char* to_string(ExtensionRule r) {
  switch (r) {
    case ExtensionRule::DirectInsert: return "DIRECT_INSERT";
    case ExtensionRule::Claim1Rewire: return "CLAIM1_REWIRE";
    case ExtensionRule::Claim2Rewire: return "CLAIM2_REWIRE";
    case ExtensionRule::FallbackSearch: return "FALLBACK_SEARCH";
  }
  return "?";
}

/// One growth step. `anchor_u2`/`anchor_uk` are the cycle neighbors of u1
/// after orientation normalization; `construction` names the splice used
/// (see the rules table in the README).
struct ExtensionStep {
  std::size_t cycle_length_before = 0;
  Point attached_vertex;
  ExtensionRule rule = ExtensionRule::DirectInsert;
  Point anchor_u1;
  std::optional<Point> pivot_z;
  std::optional<Point> pivot_y;
  std::optional<Point> anchor_u2;
  std::optional<Point> anchor_uk;
  std::string construction;
};

struct ExtensionTrace {
  std::vector<ExtensionStep> steps;

  std::array<std::size_t, 4> rule_counts() const {
    std::array<std::size_t, 4> counts{};
    for (const auto& s : steps) ++counts[static_cast<std::size_t>(s.rule)];
    return counts;
  }
};

/// Thrown by extend_cycle when no rule can absorb a frontier vertex. The
/// payload is a potential counterexample and is kept verbatim.
class ExtensionStuckError : public Error {
 public:
  ExtensionStuckError(SupergridGraph graph, Cycle cycle, Point frontier)
      : Error(ErrorCode::ExtensionStuck, "cannot extend cycle of length " +
                                             std::to_string(cycle.size()) + " to cover " +
                                             to_string(frontier)),
        graph_(std::move(graph)),
        cycle_(std::move(cycle)),
        frontier_(frontier) {}

  const SupergridGraph& graph() const { return graph_; }
  const Cycle& cycle() const { return cycle_; }
  Point frontier() const { return frontier_; }

 private:
  SupergridGraph graph_;
  Cycle cycle_;
  Point frontier_;
};

enum class FrontierOrder { Forward, Reverse };

struct ExtendOptions {
  /// Forward picks the smallest frontier vertex and earliest attachment;
  /// Reverse picks the largest and latest.
  FrontierOrder order = FrontierOrder::Forward;
  bool allow_fallback = true;
  /// Rule switches, used to exercise lower-priority rules in isolation.
  bool enable_direct_insert = true;
  bool enable_claim1 = true;
  bool enable_claim2 = true;
  /// Cycles at or below this length also get the two-reversal fallback.
  std::size_t fallback_double_reversal_limit = 32;
};

struct Extension {
  Cycle cycle;
  ExtensionStep step;
};

/// Vertices outside `c` adjacent to it, in ascending point order.
inline std::vector<Point> frontier_vertices(const SupergridGraph& g, const Cycle& c) {
  std::unordered_set<Point> on_cycle(c.verts.begin(), c.verts.end());
  std::vector<Point> out;
  for (const Point& p : g.vertices()) {
    if (on_cycle.count(p)) continue;
    for (Direction d : kDirections) {
      if (on_cycle.count(step(p, d))) {
        out.push_back(p);
        break;
      }
    }
  }
  return out;
}

/// 3-cycle u -> v -> w on the smallest vertex u, taking the first adjacent
/// pair (v, w) of N(u) in direction order.
inline Cycle seed_cycle(const SupergridGraph& g) {
  if (!is_two_connected(g)) throw Error(ErrorCode::PreconditionViolated, "two_connected");
  if (!is_linear_convex(g)) throw Error(ErrorCode::PreconditionViolated, "linear_convex");
  const Point u = g.vertices().front();
  const auto nbrs = neighbors(g, u);
  for (std::size_t a = 0; a < nbrs.size(); ++a)
    for (std::size_t b = a + 1; b < nbrs.size(); ++b)
      if (adjacent(nbrs[a], nbrs[b])) return Cycle{{u, nbrs[a], nbrs[b]}};
  throw std::logic_error("no triangle at " + to_string(u) + " in a 2-connected linear-convex graph");
}

namespace detail {

// ---------------------------------------------------------------------------
// Splicing machinery for the rewiring claims.
//
// The cycle is rotated so that ring[0] = u1, ring[1] = u2 and
// ring.back() = uk. Cutting it at u1 and at one or two pivots leaves the
// pivots as single vertices and up to three subpaths S0, S1, S2 in cycle
// order. Every construction is a cyclic arrangement of these pieces plus x
// that starts at u1.
// ---------------------------------------------------------------------------

enum class Layout { SinglePivot, ZThenY, YThenZ };

enum class TokenKind : std::uint8_t { U1, X, Z, Y, Seg, SegRev };

struct Token {
  TokenKind kind;
  int seg = -1;
};

struct SpliceTemplate {
  std::string_view name;
  Layout layout;
  std::vector<Token> tokens;
};

constexpr Token tU1{TokenKind::U1};
constexpr Token tX{TokenKind::X};
constexpr Token tZ{TokenKind::Z};
constexpr Token tY{TokenKind::Y};
constexpr Token seg(int i) { return {TokenKind::Seg, i}; }
constexpr Token rev(int i) { return {TokenKind::SegRev, i}; }

/// Constructions spelled out in the extension argument, in cycle-order
/// piece names. S-indices refer to the layout's own cut order.
inline const std::vector<SpliceTemplate>& splice_templates() {
  static const std::vector<SpliceTemplate> table = {
      // z = u_j, u_{j-1} ~ u_{j+1}: u1 x z P1 P2.
      {"claim1.bypass", Layout::SinglePivot, {tU1, tX, tZ, seg(0), seg(1)}},
      // j = 3 and u2 ~ uk: merge triangle u1 x z with the rest at z.
      {"claim1.shared_vertex", Layout::SinglePivot, {tU1, tX, tZ, seg(1), seg(0)}},
      // {u_{j-1}, u_{j+1}} on the far side of z: u1 x z rev(P1) u2 P2.
      {"claim1.reverse_prefix", Layout::SinglePivot, {tU1, tX, tZ, rev(0), seg(1)}},
      // j = 3 with pivot y = u_t: u1 u2 u_{t-1} rev(P1) u4 z x y u_{t+1} P2.
      {"claim1.double_pivot", Layout::ZThenY, {tU1, seg(0), rev(1), tZ, tX, tY, seg(2)}},
      // y before z, u_{t+1} = u_{j-1}: u1 x y u_{t+1} rev(P1) u2 uk rev(P2) z.
      {"claim1.pivot_before", Layout::YThenZ, {tU1, tX, tY, seg(1), rev(0), rev(2), tZ}},
      // Both pivots bypassed: u1 x y z u2 ... (skipping z and y) ... uk.
      {"claim2.bypass", Layout::ZThenY, {tU1, tX, tY, tZ, seg(0), seg(1), seg(2)}},
      {"claim2.bypass", Layout::YThenZ, {tU1, tX, tY, tZ, seg(0), seg(1), seg(2)}},
      // z = u_{t-1}: u1 x y P1 z rev(u2..u_{t-2}).
      {"claim2.pivot_prev", Layout::ZThenY, {tU1, tX, tY, seg(2), tZ, rev(0)}},
      // z = u_{t+1}: u1 x y rev(u2..u_{t-1}) z P.
      {"claim2.pivot_next", Layout::YThenZ, {tU1, tX, tY, rev(0), tZ, seg(2)}},
      // Separated pivots: u1 x y P3 uk u2 P1 z u_{j+1} P2.
      {"claim2.split", Layout::ZThenY, {tU1, tX, tY, seg(2), seg(0), tZ, seg(1)}},
  };
  return table;
}

struct Pieces {
  Point u1, x;
  std::optional<Point> z, y;
  std::array<std::vector<Point>, 3> segs;
  Layout layout = Layout::SinglePivot;
};

/// Splits ring (ring[0] = u1) at the sorted positions `cuts` (excluding 0).
inline Pieces cut_ring(const std::vector<Point>& ring, Point x, std::size_t z_pos,
                       std::optional<std::size_t> y_pos) {
  Pieces p;
  p.u1 = ring[0];
  p.x = x;
  p.z = ring[z_pos];
  std::vector<std::size_t> cuts{0, z_pos};
  if (y_pos) {
    p.y = ring[*y_pos];
    cuts.push_back(*y_pos);
    p.layout = z_pos < *y_pos ? Layout::ZThenY : Layout::YThenZ;
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(ring.size());
  for (std::size_t s = 0; s + 1 < cuts.size(); ++s)
    p.segs[s].assign(ring.begin() + static_cast<std::ptrdiff_t>(cuts[s] + 1),
                     ring.begin() + static_cast<std::ptrdiff_t>(cuts[s + 1]));
  return p;
}

inline bool closes(const std::vector<Point>& seq) {
  if (seq.size() < 3) return false;
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (!adjacent(seq[i], seq[(i + 1) % seq.size()])) return false;
  return true;
}

inline std::optional<std::vector<Point>> apply_template(const SpliceTemplate& t, const Pieces& p,
                                                        std::size_t expected) {
  if (t.layout != p.layout) return std::nullopt;
  std::vector<Point> seq;
  seq.reserve(expected);
  for (const Token& tok : t.tokens) {
    switch (tok.kind) {
      case TokenKind::U1: seq.push_back(p.u1); break;
      case TokenKind::X: seq.push_back(p.x); break;
      case TokenKind::Z: seq.push_back(*p.z); break;
      case TokenKind::Y: seq.push_back(*p.y); break;
      case TokenKind::Seg: {
        const auto& s = p.segs[static_cast<std::size_t>(tok.seg)];
        seq.insert(seq.end(), s.begin(), s.end());
        break;
      }
      case TokenKind::SegRev: {
        const auto& s = p.segs[static_cast<std::size_t>(tok.seg)];
        seq.insert(seq.end(), s.rbegin(), s.rend());
        break;
      }
    }
  }
  // A template that omits a non-empty segment does not cover V(C) + x.
  if (seq.size() != expected || !closes(seq)) return std::nullopt;
  return seq;
}

/// Exhaustive arrangement of the pieces (u1 first, every other piece in
/// either orientation). At most six movable pieces, so this stays small.
inline std::optional<std::vector<Point>> reconnect_pieces(const Pieces& p) {
  std::vector<std::vector<Point>> movable;
  movable.push_back({p.x});
  if (p.z) movable.push_back({*p.z});
  if (p.y) movable.push_back({*p.y});
  for (const auto& s : p.segs)
    if (!s.empty()) movable.push_back(s);

  std::vector<char> used(movable.size(), 0);
  std::vector<std::pair<std::size_t, bool>> order;
  order.reserve(movable.size());

  auto front = [&](std::size_t i, bool reversed) {
    return reversed ? movable[i].back() : movable[i].front();
  };
  auto back = [&](std::size_t i, bool reversed) {
    return reversed ? movable[i].front() : movable[i].back();
  };

  auto dfs = [&](auto&& self, Point tail) -> bool {
    if (order.size() == movable.size()) return adjacent(tail, p.u1);
    for (std::size_t i = 0; i < movable.size(); ++i) {
      if (used[i]) continue;
      const int orientations = movable[i].size() > 1 ? 2 : 1;
      for (int o = 0; o < orientations; ++o) {
        const bool reversed = o == 1;
        if (!adjacent(tail, front(i, reversed))) continue;
        used[i] = 1;
        order.emplace_back(i, reversed);
        if (self(self, back(i, reversed))) return true;
        order.pop_back();
        used[i] = 0;
      }
    }
    return false;
  };

  if (!dfs(dfs, p.u1)) return std::nullopt;
  std::vector<Point> seq{p.u1};
  for (const auto& [i, reversed] : order) {
    if (reversed)
      seq.insert(seq.end(), movable[i].rbegin(), movable[i].rend());
    else
      seq.insert(seq.end(), movable[i].begin(), movable[i].end());
  }
  return seq;
}

struct Splice {
  std::vector<Point> cycle;
  std::string construction;
};

inline std::optional<Splice> splice(const Pieces& p, std::size_t expected) {
  for (const auto& t : splice_templates())
    if (auto seq = apply_template(t, p, expected)) return Splice{std::move(*seq), std::string(t.name)};
  if (auto seq = reconnect_pieces(p)) return Splice{std::move(*seq), "reconnect"};
  return std::nullopt;
}

inline std::optional<std::size_t> ring_position(const std::vector<Point>& ring, Point p) {
  const auto it = std::find(ring.begin(), ring.end(), p);
  if (it == ring.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ring.begin());
}

/// Reverses the ring in place while keeping u1 at index 0.
inline void flip_ring(std::vector<Point>& ring) { std::reverse(ring.begin() + 1, ring.end()); }

struct ClaimResult {
  Splice splice;
  Point z;
  std::optional<Point> y;
  Point u2, uk;
};

/// Common neighbors of a and b that lie on the ring, in direction order
/// around a, excluding u1.
inline std::vector<Point> ring_common_neighbors(const std::vector<Point>& ring, Point a, Point b) {
  std::vector<Point> out;
  for (Direction d : kDirections) {
    const Point q = step(a, d);
    if (q != ring[0] && adjacent(q, b) && ring_position(ring, q)) out.push_back(q);
  }
  return out;
}

/// Claim-1 style construction around a pivot z on the cycle with z ~ x:
/// first the single-pivot splices, then the double-pivot splices through
/// each y ~ x, y ~ z on the cycle.
inline std::optional<ClaimResult> pivot_splice(std::vector<Point> ring, Point x, Point z) {
  // Orientation normalization: the argument assumes z ~ u2.
  if (!adjacent(z, ring[1]) && adjacent(z, ring.back())) flip_ring(ring);
  const auto z_pos = ring_position(ring, z);
  if (!z_pos || *z_pos == 0) return std::nullopt;
  const std::size_t expected = ring.size() + 1;
  if (auto s = splice(cut_ring(ring, x, *z_pos, std::nullopt), expected))
    return ClaimResult{std::move(*s), z, std::nullopt, ring[1], ring.back()};
  for (const Point y : ring_common_neighbors(ring, z, x)) {
    const auto y_pos = ring_position(ring, y);
    if (auto s = splice(cut_ring(ring, x, *z_pos, *y_pos), expected))
      return ClaimResult{std::move(*s), z, y, ring[1], ring.back()};
  }
  return std::nullopt;
}

/// Candidate pivots Z = {L(u1), R(u1)} - {u2, uk} restricted to the graph,
/// followed by the symmetric vertical pair {U(u1), D(u1)}. Within a pair the
/// left (resp. upper) vertex comes first.
inline std::vector<Point> pivot_candidates(const SupergridGraph& g, const std::vector<Point>& ring) {
  const Point u1 = ring[0];
  std::vector<Point> out;
  for (Point q : {L(u1), R(u1), U(u1), D(u1)})
    if (g.contains(q) && q != ring[1] && q != ring.back()) out.push_back(q);
  return out;
}

inline std::optional<ClaimResult> claim1(const SupergridGraph& g, const std::vector<Point>& ring, Point x) {
  for (const Point z : pivot_candidates(g, ring)) {
    if (!adjacent(z, x)) continue;
    if (auto r = pivot_splice(ring, x, z)) return r;
  }
  return std::nullopt;
}

/// z is not adjacent to x. Pivot through y ~ u1, y ~ x instead: either y
/// takes over the role of z (the substitution case) or both z and y are cut
/// out of the cycle and re-threaded.
inline std::optional<ClaimResult> claim2(const SupergridGraph& g, std::vector<Point> ring, Point x) {
  for (const Point z : pivot_candidates(g, ring)) {
    if (adjacent(z, x)) continue;
    if (!adjacent(z, ring[1]) && adjacent(z, ring.back())) flip_ring(ring);
    const auto z_pos = ring_position(ring, z);
    if (!z_pos) continue;
    for (const Point y : ring_common_neighbors(ring, ring[0], x)) {
      if (y == z) continue;
      if (adjacent(y, ring[1]) || adjacent(y, ring.back())) {
        if (auto r = pivot_splice(ring, x, y)) {
          r->splice.construction = "claim2.substitute+" + r->splice.construction;
          r->z = z;
          r->y = y;
          return r;
        }
      }
      const auto y_pos = ring_position(ring, y);
      if (auto s = splice(cut_ring(ring, x, *z_pos, *y_pos), ring.size() + 1))
        return ClaimResult{std::move(*s), z, y, ring[1], ring.back()};
    }
  }
  return std::nullopt;
}

/// Number of positions i where seq[i] is not adjacent to seq[i+1] (cyclic);
/// stops counting at 2.
inline int broken_edges(const std::vector<Point>& seq, std::size_t& where) {
  int broken = 0;
  for (std::size_t i = 0; i < seq.size() && broken < 2; ++i) {
    if (!adjacent(seq[i], seq[(i + 1) % seq.size()])) {
      ++broken;
      where = i;
    }
  }
  return broken;
}

/// Tries to place x into seq so that the result is a cycle.
inline std::optional<std::vector<Point>> insert_into_sequence(const std::vector<Point>& seq, Point x) {
  std::size_t where = 0;
  const int broken = broken_edges(seq, where);
  auto splice_at = [&](std::size_t i) {
    std::vector<Point> out(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(i + 1));
    out.push_back(x);
    out.insert(out.end(), seq.begin() + static_cast<std::ptrdiff_t>(i + 1), seq.end());
    return out;
  };
  if (broken == 1) {
    if (adjacent(seq[where], x) && adjacent(seq[(where + 1) % seq.size()], x)) return splice_at(where);
    return std::nullopt;
  }
  if (broken == 0) {
    for (std::size_t i = 0; i < seq.size(); ++i)
      if (adjacent(seq[i], x) && adjacent(seq[(i + 1) % seq.size()], x)) return splice_at(i);
  }
  return std::nullopt;
}

/// Bounded exhaustive rewiring: every insertion of x combined with one
/// segment reversal, then (for short cycles) two.
inline std::optional<std::vector<Point>> fallback_rewire(const std::vector<Point>& c, Point x,
                                                         std::size_t double_limit) {
  const std::size_t k = c.size();
  std::vector<Point> seq;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      seq = c;
      std::reverse(seq.begin() + static_cast<std::ptrdiff_t>(i), seq.begin() + static_cast<std::ptrdiff_t>(j + 1));
      if (auto out = insert_into_sequence(seq, x)) return out;
    }
  }
  if (k > double_limit) return std::nullopt;
  std::vector<Point> once, twice;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      once = c;
      std::reverse(once.begin() + static_cast<std::ptrdiff_t>(i), once.begin() + static_cast<std::ptrdiff_t>(j + 1));
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
          twice = once;
          std::reverse(twice.begin() + static_cast<std::ptrdiff_t>(a), twice.begin() + static_cast<std::ptrdiff_t>(b + 1));
          if (auto out = insert_into_sequence(twice, x)) return out;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Grows `c` by exactly one vertex.
///
/// Rules are tried in priority order. DIRECT_INSERT splices any frontier
/// vertex between two adjacent cycle vertices. Otherwise every pair of a
/// frontier vertex x and a cycle neighbor u1 goes through the pivot
/// constructions: CLAIM1_REWIRE when some z in {L, R}(u1) (or the vertical
/// pair) is adjacent to x, then CLAIM2_REWIRE through a common neighbor y of
/// u1 and x. FALLBACK_SEARCH is the bounded reversal search.
inline Extension extend_cycle(const SupergridGraph& g, const Cycle& c, const ExtendOptions& opts = {}) {
  if (!validate_cycle(g, c)) throw Error(ErrorCode::PreconditionViolated, "cycle is not valid in the graph");
  if (c.size() >= g.size()) throw Error(ErrorCode::AlreadyHamiltonian, "cycle covers every vertex");
  auto frontier = frontier_vertices(g, c);
  if (frontier.empty())
    throw ExtensionStuckError(g, c, c[0]);
  const bool reverse = opts.order == FrontierOrder::Reverse;
  if (reverse) std::reverse(frontier.begin(), frontier.end());
  const std::size_t k = c.size();

  ExtensionStep st;
  st.cycle_length_before = k;

  for (const Point x : frontier) {
    if (!opts.enable_direct_insert) break;
    for (std::size_t s = 0; s < k; ++s) {
      const std::size_t i = reverse ? k - 1 - s : s;
      if (adjacent(c[i], x) && adjacent(c[(i + 1) % k], x)) {
        Cycle out;
        out.verts.reserve(k + 1);
        out.verts.insert(out.verts.end(), c.verts.begin(), c.verts.begin() + static_cast<std::ptrdiff_t>(i + 1));
        out.verts.push_back(x);
        out.verts.insert(out.verts.end(), c.verts.begin() + static_cast<std::ptrdiff_t>(i + 1), c.verts.end());
        st.attached_vertex = x;
        st.rule = ExtensionRule::DirectInsert;
        st.anchor_u1 = c[i];
        st.anchor_u2 = c[(i + 1) % k];
        st.construction = "insert";
        return {std::move(out), std::move(st)};
      }
    }
  }

  // Claims run over (x, u1) pairs: frontier vertices in order, each with its
  // cycle attachments in traversal order. A frontier vertex can be a dead end
  // for V(C) + x even though C itself is extendable, so the designated pair
  // alone is not enough.
  std::vector<std::pair<Point, std::size_t>> anchors;
  for (const Point x : frontier) {
    for (std::size_t s = 0; s < k; ++s) {
      const std::size_t i = reverse ? k - 1 - s : s;
      if (adjacent(c[i], x)) anchors.emplace_back(x, i);
    }
  }

  auto finish = [&](ExtensionRule rule, Point x, Point u1, detail::ClaimResult r) -> Extension {
    st.attached_vertex = x;
    st.anchor_u1 = u1;
    st.rule = rule;
    st.pivot_z = r.z;
    st.pivot_y = r.y;
    st.anchor_u2 = r.u2;
    st.anchor_uk = r.uk;
    st.construction = std::move(r.splice.construction);
    return {Cycle{std::move(r.splice.cycle)}, std::move(st)};
  };

  for (const auto& [x, pos] : anchors) {
    if (!opts.enable_claim1) break;
    const std::vector<Point> ring = rotated(c, pos).verts;
    if (auto r = detail::claim1(g, ring, x)) return finish(ExtensionRule::Claim1Rewire, x, ring[0], std::move(*r));
  }
  for (const auto& [x, pos] : anchors) {
    if (!opts.enable_claim2) break;
    const std::vector<Point> ring = rotated(c, pos).verts;
    if (auto r = detail::claim2(g, ring, x)) return finish(ExtensionRule::Claim2Rewire, x, ring[0], std::move(*r));
  }

  if (opts.allow_fallback) {
    for (const Point fx : frontier) {
      if (auto seq = detail::fallback_rewire(c.verts, fx, opts.fallback_double_reversal_limit)) {
        st.attached_vertex = fx;
        st.rule = ExtensionRule::FallbackSearch;
        st.anchor_u1 = c[0];
        st.construction = "reversal_search";
        return {Cycle{std::move(*seq)}, std::move(st)};
      }
    }
  }
  throw ExtensionStuckError(g, c, frontier.front());
}

enum class HamOutcome { Cycle, NoCycleExists, ExtensionFailed };

constexpr const char* to_string(HamOutcome o) {
  switch (o) {
    case HamOutcome::Cycle: return "Cycle";
    case HamOutcome::NoCycleExists: return "NoCycleExists";
    case HamOutcome::ExtensionFailed: return "ExtensionFailed";
  }
  return "?";
}

struct StuckWitness {
  SupergridGraph graph;
  Cycle cycle;
  Point frontier;
};

struct HamResult {
  HamOutcome outcome = HamOutcome::NoCycleExists;
  std::optional<Cycle> cycle;
  ExtensionTrace trace;
  /// Predicate that ruled the input out (NoCycleExists).
  std::string failed_predicate;
  std::optional<StuckWitness> witness;
  /// Every intermediate cycle, seed first, when requested.
  std::vector<Cycle> history;
};

struct SolveOptions {
  /// Strict mode requires 2-connectivity and linear convexity up front.
  bool strict = true;
  ExtendOptions extend;
  bool record_history = false;
};

/// Seed for permissive mode: the first vertex (in point order) that has an
/// adjacent pair in its neighborhood.
inline std::optional<Cycle> seed_any_triangle(const SupergridGraph& g) {
  for (const Point& u : g.vertices()) {
    const auto nbrs = neighbors(g, u);
    for (std::size_t a = 0; a < nbrs.size(); ++a)
      for (std::size_t b = a + 1; b < nbrs.size(); ++b)
        if (adjacent(nbrs[a], nbrs[b])) return Cycle{{u, nbrs[a], nbrs[b]}};
  }
  return std::nullopt;
}

inline HamResult find_hamiltonian_cycle(const SupergridGraph& g, const SolveOptions& opts = {}) {
  HamResult result;
  if (!is_two_connected(g)) {
    result.failed_predicate = "two_connected";
    return result;
  }
  std::optional<Cycle> cycle;
  if (opts.strict) {
    if (!is_linear_convex(g)) {
      result.failed_predicate = "linear_convex";
      return result;
    }
    cycle = seed_cycle(g);
  } else {
    cycle = seed_any_triangle(g);
    if (!cycle) {
      result.failed_predicate = "triangle";
      return result;
    }
  }
  if (opts.record_history) result.history.push_back(*cycle);
  while (cycle->size() < g.size()) {
    try {
      Extension ext = extend_cycle(g, *cycle, opts.extend);
      if (ext.cycle.size() != cycle->size() + 1 || !validate_cycle(g, ext.cycle))
        throw std::logic_error("extension step produced an invalid cycle (rule " +
                               std::string(to_string(ext.step.rule)) + ", " + ext.step.construction + ")");
      result.trace.steps.push_back(std::move(ext.step));
      cycle = std::move(ext.cycle);
      if (opts.record_history) result.history.push_back(*cycle);
    } catch (const ExtensionStuckError& e) {
      result.outcome = HamOutcome::ExtensionFailed;
      result.witness = StuckWitness{e.graph(), e.cycle(), e.frontier()};
      return result;
    }
  }
  result.outcome = HamOutcome::Cycle;
  result.cycle = std::move(cycle);
  return result;
}

/// Independent exhaustive search used as an oracle.
///
/// Backtracks from the smallest vertex over adjacency bitmasks, pruning when
/// an unvisited vertex has fewer than two usable neighbors or the unvisited
/// set falls apart. Deterministic; returns the first cycle found.
inline std::optional<Cycle> brute_force_hamiltonian(const SupergridGraph& g, std::size_t bound = 24) {
  const std::size_t n = g.size();
  if (n > bound || n > 64)
    throw Error(ErrorCode::SizeBoundExceeded, std::to_string(n) + " vertices exceed bound " + std::to_string(bound));
  if (n < 3) return std::nullopt;
  using Mask = std::uint64_t;
  const auto verts = g.vertices();
  std::vector<Mask> adj(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (Direction d : kDirections)
      if (const int j = g.index_of(step(verts[i], d)); j >= 0) adj[i] |= Mask{1} << j;

  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::vector<int> path{0};
  path.reserve(n);

  auto lowest = [](Mask m) { return static_cast<std::size_t>(__builtin_ctzll(m)); };

  auto feasible = [&](Mask unvisited, int tail) {
    if (unvisited == 0) return true;
    const Mask ends = (Mask{1} << tail) | Mask{1};
    for (Mask m = unvisited; m; m &= m - 1) {
      const std::size_t w = lowest(m);
      if (__builtin_popcountll(adj[w] & (unvisited | ends)) < 2) return false;
    }
    Mask reached = Mask{1} << lowest(unvisited);
    Mask frontier = reached;
    while (frontier) {
      Mask next = 0;
      for (Mask m = frontier; m; m &= m - 1) next |= adj[lowest(m)];
      next &= unvisited & ~reached;
      reached |= next;
      frontier = next;
    }
    return reached == unvisited;
  };

  auto dfs = [&](auto&& self, Mask unvisited) -> bool {
    const int tail = path.back();
    if (unvisited == 0) return (adj[static_cast<std::size_t>(tail)] & Mask{1}) != 0;
    for (Mask m = adj[static_cast<std::size_t>(tail)] & unvisited; m; m &= m - 1) {
      const auto w = static_cast<int>(lowest(m));
      const Mask rest = unvisited & ~(Mask{1} << w);
      if (!feasible(rest, w)) continue;
      path.push_back(w);
      if (self(self, rest)) return true;
      path.pop_back();
    }
    return false;
  };

  if (!feasible(all & ~Mask{1}, 0) || !dfs(dfs, all & ~Mask{1})) return std::nullopt;
  Cycle c;
  for (int i : path) c.verts.push_back(verts[static_cast<std::size_t>(i)]);
  return c;
}

}  // namespace supergrid
