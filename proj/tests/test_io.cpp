#include <gtest/gtest.h>

#include <random>

#include "supergrid/enumerate.hpp"
#include "supergrid/io.hpp"

using namespace supergrid;

TEST(ParseLattice, Examples) {
  EXPECT_EQ(parse_lattice("##\n##"), (SupergridGraph{{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  EXPECT_EQ(parse_lattice("#.#"), (SupergridGraph{{0, 0}, {2, 0}}));
  EXPECT_TRUE(parse_lattice("").empty());
}

TEST(ParseLattice, InvalidCharacterPosition) {
  try {
    parse_lattice("#a#");
    FAIL();
  } catch (const InvalidCharacterError& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidCharacter);
    EXPECT_EQ(e.line(), 0u);
    EXPECT_EQ(e.column(), 1u);
  }
  try {
    parse_lattice("##\n#.x\n");
    FAIL();
  } catch (const InvalidCharacterError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 2u);
  }
}

TEST(ParseLattice, CommentsAndCarriageReturns) {
  EXPECT_EQ(parse_lattice("; header\r\n.#\r\n; mid\r\n#.\r\n"), (SupergridGraph{{1, 0}, {0, 1}}));
}

TEST(RenderLattice, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    EnumSpec spec;
    spec.width = 6;
    spec.height = 5;
    spec.min_vertices = 1;
    spec.seed = seed;
    const auto g = random_graph(spec);
    ASSERT_EQ(parse_lattice(render_lattice(g)), g);
  }
  EXPECT_EQ(render_lattice(SupergridGraph{{1, 0}, {0, 1}}), ".#\n#.\n");
}

TEST(WriteCycle, Example) {
  EXPECT_EQ(write_cycle(Cycle{{{0, 0}, {1, 0}, {1, 1}}}), "0,0\n1,0\n1,1\n");
}

TEST(ParseCycle, RoundTripsRandomCycles) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coord(-1000, 1000);
  for (int i = 0; i < 100; ++i) {
    Cycle c;
    c.verts.resize(3 + rng() % 20);
    for (Point& p : c.verts) p = {coord(rng), coord(rng)};
    ASSERT_EQ(parse_cycle(write_cycle(c)), c);
  }
  try {
    parse_cycle("1,2\n3;4\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
  }
}

TEST(ExportSvg, Square) {
  const std::string svg = export_svg(Cycle{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}}, 10);
  EXPECT_NE(svg.find("points=\"0,0 10,0 10,10 0,10\""), std::string::npos);
  const std::string unit = export_svg(Cycle{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}}, 1);
  EXPECT_NE(unit.find("points=\"0,0 1,0 1,1 0,1\""), std::string::npos);
}

TEST(ExportSvg, NinePointsWithinBlock) {
  const SupergridGraph g{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}, {0, 2}, {1, 2}, {2, 2}};
  const auto c = *find_hamiltonian_cycle(g).cycle;
  const std::string svg = export_svg(c, 7);
  const auto a = svg.find("points=\"") + 8;
  const std::string pts = svg.substr(a, svg.find('"', a) - a);
  std::size_t count = 0;
  std::size_t pos = 0;
  while (pos < pts.size()) {
    std::size_t end = pts.find(' ', pos);
    if (end == std::string::npos) end = pts.size();
    const std::string pair = pts.substr(pos, end - pos);
    const int x = std::stoi(pair.substr(0, pair.find(',')));
    const int y = std::stoi(pair.substr(pair.find(',') + 1));
    EXPECT_TRUE(x >= 0 && x <= 14 && y >= 0 && y <= 14);
    ++count;
    pos = end + 1;
  }
  EXPECT_EQ(count, 9u);
}

TEST(Json, ReportShape) {
  const auto j = to_json(classify(parse_lattice("#.#")));
  EXPECT_EQ(j["vertex_count"], 2);
  EXPECT_EQ(j["linear_convex"], false);
  ASSERT_TRUE(j["violation_witness"].is_array());
  EXPECT_EQ(j["violation_witness"][0]["predicate"], "linear_convex");
  EXPECT_EQ(j["violation_witness"][0]["missing"], Json::array({1, 0}));
  EXPECT_TRUE(to_json(classify(parse_lattice("##\n##")))["violation_witness"].is_null());
}

TEST(Json, TraceLines) {
  const SupergridGraph g{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  const auto r = find_hamiltonian_cycle(g);
  const std::string jsonl = trace_to_jsonl(r.trace);
  ASSERT_EQ(std::count(jsonl.begin(), jsonl.end(), '\n'), 1);
  const auto j = Json::parse(jsonl.substr(0, jsonl.find('\n')));
  EXPECT_EQ(j["rule"], "DIRECT_INSERT");
  EXPECT_EQ(j["cycle_length_before"], 3);
  EXPECT_EQ(j["attached_vertex"], Json::array({1, 1}));
}
