#include <gtest/gtest.h>

#include <random>
#include <set>

#include "supergrid/enumerate.hpp"

using namespace supergrid;

namespace {

EnumSpec box(int w, int h, std::size_t min_vertices, std::vector<Predicate> require) {
  EnumSpec s;
  s.width = w;
  s.height = h;
  s.min_vertices = min_vertices;
  s.require = std::move(require);
  return s;
}

}  // namespace

TEST(Enumerate, TwoByTwoStrict) {
  const auto gs = enumerate_graphs(box(2, 2, 3, {Predicate::TwoConnected, Predicate::LinearConvex}));
  ASSERT_EQ(gs.size(), 5u);
  std::size_t triangles = 0;
  for (const auto& g : gs) triangles += g.size() == 3;
  EXPECT_EQ(triangles, 4u);
  EXPECT_EQ(gs.back().size(), 4u);
}

TEST(Enumerate, StripHasNoTwoConnectedSubsets) {
  EXPECT_TRUE(enumerate_graphs(box(1, 3, 3, {Predicate::TwoConnected})).empty());
}

TEST(Enumerate, AllNonemptySubsets) {
  EXPECT_EQ(enumerate_graphs(box(2, 2, 1, {})).size(), 15u);
  EXPECT_EQ(enumerate_graphs(box(2, 2, 0, {})).size(), 16u);
}

TEST(Enumerate, OrderIsRowMajorMask) {
  GraphStream s(box(2, 2, 1, {}));
  EXPECT_EQ(*s.next(), (SupergridGraph{{0, 0}}));
  EXPECT_EQ(s.last_mask(), 1u);
  EXPECT_EQ(*s.next(), (SupergridGraph{{1, 0}}));
  EXPECT_EQ(*s.next(), (SupergridGraph{{0, 0}, {1, 0}}));
  EXPECT_EQ(*s.next(), (SupergridGraph{{0, 1}}));
  EXPECT_EQ(s.last_mask(), 4u);
}

TEST(Enumerate, StreamMatchesCallback) {
  const auto spec = box(3, 3, 3, {Predicate::LinearConvex});
  std::vector<std::uint32_t> masks;
  for_each_graph(spec, [&](const SupergridGraph&, std::uint32_t m) { masks.push_back(m); });
  GraphStream s(spec);
  std::vector<std::uint32_t> streamed;
  while (s.next()) streamed.push_back(s.last_mask());
  EXPECT_EQ(masks, streamed);
}

TEST(Enumerate, RangesPartitionTheSequence) {
  const auto spec = box(3, 3, 0, {Predicate::Connected});
  std::vector<std::uint32_t> whole, parts;
  for_each_graph(spec, [&](const SupergridGraph&, std::uint32_t m) { whole.push_back(m); });
  for (std::uint64_t b = 0; b < 512; b += 100)
    for_each_graph_in_range(spec, b, b + 100, [&](const SupergridGraph&, std::uint32_t m) { parts.push_back(m); });
  EXPECT_EQ(whole, parts);
}

TEST(Enumerate, BoxTooLarge) {
  try {
    enumerate_graphs(box(6, 5, 0, {}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BoxTooLarge);
  }
}

// Counts from the enumerator match an independent filter over raw masks.
TEST(Enumerate, CountsMatchIndependentFilter) {
  for (auto [w, h] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
    std::size_t expect = 0;
    for (std::uint32_t m = 0; m < (1u << (w * h)); ++m) {
      std::vector<Point> pts;
      for (int i = 0; i < w * h; ++i)
        if (m >> i & 1) pts.push_back({i % w, i / w});
      const SupergridGraph g(pts);
      expect += g.size() >= 3 && is_two_connected(g) && is_linear_convex(g);
    }
    EXPECT_EQ(enumerate_graphs(box(w, h, 3, {Predicate::TwoConnected, Predicate::LinearConvex})).size(), expect);
  }
}

TEST(Canonical, Examples) {
  EXPECT_EQ(canonical_form(SupergridGraph{{5, 5}, {6, 5}}), (SupergridGraph{{0, 0}, {1, 0}}));
  EXPECT_EQ(canonical_form(SupergridGraph{{0, 0}, {0, 1}}), (SupergridGraph{{0, 0}, {1, 0}}));
}

TEST(Canonical, LTrominoOrientationsAgree) {
  const SupergridGraph l{{0, 0}, {0, 1}, {1, 1}};
  const auto k = canonical_form(l);
  for (int s = 0; s < 8; ++s) EXPECT_EQ(canonical_form(SupergridGraph(symmetry_image(s, l))), k);
  EXPECT_EQ(canonical_form(SupergridGraph{{0, 0}, {1, 0}, {1, 1}}), k);
  EXPECT_EQ(canonical_form(SupergridGraph{{1, 0}, {0, 1}, {1, 1}}), k);
}

TEST(Canonical, SymmetriesFormTheDihedralGroup) {
  std::set<std::pair<int, int>> images;
  for (int s = 0; s < 8; ++s) {
    const Point p = apply_symmetry(s, {2, 1});
    images.insert({p.x, p.y});
    EXPECT_TRUE(adjacent(apply_symmetry(s, {0, 0}), apply_symmetry(s, {1, 1})));
  }
  EXPECT_EQ(images.size(), 8u);
}

TEST(CanonicalProperty, IdempotentAndInvariant) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    EnumSpec spec = box(5, 5, 1, {});
    spec.seed = seed;
    const auto g = random_graph(spec);
    const auto k = canonical_form(g);
    ASSERT_EQ(canonical_form(k), k);
    for (int s = 0; s < 8; ++s)
      ASSERT_EQ(canonical_form(translate(SupergridGraph(symmetry_image(s, g)), 7, -2)), k);
  }
}

// Dedup keeps exactly one graph per symmetry class that fits the box.
TEST(Enumerate, DedupKeepsOnePerClass) {
  for (auto [w, h] : {std::pair{3, 3}, std::pair{4, 3}}) {
    auto spec = box(w, h, 1, {Predicate::Connected});
    std::set<std::vector<Point>> classes;
    for_each_graph(spec, [&](const SupergridGraph& g, std::uint32_t) {
      const auto k = canonical_form(g);
      classes.insert({k.vertices().begin(), k.vertices().end()});
    });
    spec.dedup_symmetry = true;
    std::set<std::vector<Point>> kept;
    std::size_t n = 0;
    for_each_graph(spec, [&](const SupergridGraph& g, std::uint32_t) {
      ++n;
      const auto k = canonical_form(g);
      kept.insert({k.vertices().begin(), k.vertices().end()});
    });
    EXPECT_EQ(n, classes.size());
    EXPECT_EQ(kept, classes);
  }
}

TEST(RandomGraph, MeetsRequirementsAndIsDeterministic) {
  EnumSpec spec = box(8, 8, 0, {Predicate::TwoConnected, Predicate::LinearConvex});
  spec.seed = 42;
  const auto g = random_graph(spec);
  EXPECT_TRUE(is_two_connected(g));
  EXPECT_TRUE(is_linear_convex(g));
  EXPECT_EQ(random_graph(spec), g);
  spec.seed = 43;
  EXPECT_NE(random_graph(spec), g);
}

TEST(RandomGraph, BudgetExhausted) {
  try {
    random_graph(box(1, 1, 0, {Predicate::TwoConnected}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GenerationBudgetExhausted);
  }
}

TEST(RandomGraph, StaysInBoxAndHonoursMinimum) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    EnumSpec spec = box(7, 4, 10, {Predicate::Connected});
    spec.seed = seed;
    const auto g = random_graph(spec);
    ASSERT_GE(g.size(), 10u);
    ASSERT_TRUE(is_connected(g));
    ASSERT_GE(g.bounds().min_x, 0);
    ASSERT_GE(g.bounds().min_y, 0);
    ASSERT_LT(g.bounds().max_x, 7);
    ASSERT_LT(g.bounds().max_y, 4);
  }
}

// The closure is linear-convex, contains the input, and adds only points
// every linear-convex superset must contain.
TEST(ClosureProperty, SmallestConvexSuperset) {
  std::vector<std::uint32_t> convex;
  for (std::uint32_t m = 0; m < (1u << 16); ++m)
    if (is_linear_convex(graph_from_mask(4, 4, m))) convex.push_back(m);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Point> pts;
    const int n = 2 + static_cast<int>(rng() % 5);
    for (int i = 0; i < n; ++i) pts.push_back({static_cast<int>(rng() % 4), static_cast<int>(rng() % 4)});
    const SupergridGraph input(pts);
    const SupergridGraph closed(linear_convex_closure(pts));
    ASSERT_TRUE(is_linear_convex(closed));
    for (const Point& p : input.vertices()) ASSERT_TRUE(closed.contains(p));
    // Minimality: every convex subset of the 4x4 box holding the input also
    // holds the closure.
    const std::uint32_t need = mask_of(4, pts);
    const std::uint32_t forced = mask_of(4, linear_convex_closure(pts));
    for (std::uint32_t m : convex) {
      if ((m & need) == need) {
        ASSERT_EQ(m & forced, forced) << "mask " << m;
      }
    }
  }
}
