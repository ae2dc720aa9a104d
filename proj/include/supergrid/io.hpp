#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "supergrid/classify.hpp"
#include "supergrid/cycle_ops.hpp"
#include "supergrid/grid.hpp"
#include "supergrid/hamiltonian.hpp"

namespace supergrid {

class InvalidCharacterError : public Error {
 public:
  InvalidCharacterError(std::size_t line, std::size_t column, char ch)
      : Error(ErrorCode::InvalidCharacter, "line " + std::to_string(line) + ", column " +
                                               std::to_string(column) + ": unexpected '" +
                                               std::string(1, ch) + "'"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = nl + 1;
  }
  return lines;
}

}  // namespace detail

// ----------------------------------------------------------------------------
// Lattice documents: '#' is a vertex, '.' is empty, ';' starts a comment line.
// Row y is the y-th non-comment line; line/column in errors are 0-based
// physical positions.
// ----------------------------------------------------------------------------

inline SupergridGraph parse_lattice(std::string_view text) {
  std::vector<Point> pts;
  int y = 0;
  const auto lines = detail::split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::string_view line = lines[ln];
    if (!line.empty() && line.front() == ';') continue;
    for (std::size_t col = 0; col < line.size(); ++col) {
      if (line[col] == '#')
        pts.push_back({static_cast<int>(col), y});
      else if (line[col] != '.')
        throw InvalidCharacterError(ln, col, line[col]);
    }
    ++y;
  }
  return SupergridGraph(std::move(pts));
}

/// Rectangular document spanning (0,0) to the bounding-box maximum.
inline std::string render_lattice(const SupergridGraph& g) {
  if (g.empty()) return {};
  const BoundingBox& b = g.bounds();
  if (b.min_x < 0 || b.min_y < 0)
    throw Error(ErrorCode::PreconditionViolated, "lattice documents need non-negative coordinates");
  std::string out;
  for (int y = 0; y <= b.max_y; ++y) {
    for (int x = 0; x <= b.max_x; ++x) out.push_back(g.contains({x, y}) ? '#' : '.');
    out.push_back('\n');
  }
  return out;
}

// ----------------------------------------------------------------------------
// Cycle listing: one "x,y" per line, closing edge implicit.
// ----------------------------------------------------------------------------

inline std::string write_cycle(const Cycle& c) {
  std::string out;
  for (const Point& p : c.verts) out += std::to_string(p.x) + "," + std::to_string(p.y) + "\n";
  return out;
}

inline Cycle parse_cycle(std::string_view text) {
  Cycle c;
  const auto lines = detail::split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::string_view line = lines[ln];
    if (line.empty()) continue;
    const std::size_t comma = line.find(',');
    Point p;
    auto parse_int = [&](std::string_view s, int& v) {
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      return ec == std::errc() && ptr == s.data() + s.size();
    };
    if (comma == std::string_view::npos || !parse_int(line.substr(0, comma), p.x) ||
        !parse_int(line.substr(comma + 1), p.y))
      throw Error(ErrorCode::ParseError, "line " + std::to_string(ln) + ": expected \"x,y\"");
    c.verts.push_back(p);
  }
  return c;
}

// ----------------------------------------------------------------------------
// SVG stitching trace
// ----------------------------------------------------------------------------

/// One closed polygon through the scaled cycle vertices plus a marker per
/// vertex. y points down, as in the lattice. Integer-only output, so bytes
/// are stable for fixed inputs.
inline std::string export_svg(const Cycle& c, int cell_size) {
  if (cell_size < 1) throw Error(ErrorCode::PreconditionViolated, "cell size must be at least 1");
  int min_x = 0, min_y = 0, max_x = 0, max_y = 0;
  if (!c.verts.empty()) {
    min_x = max_x = c[0].x * cell_size;
    min_y = max_y = c[0].y * cell_size;
  }
  std::string points;
  for (const Point& p : c.verts) {
    const int sx = p.x * cell_size, sy = p.y * cell_size;
    min_x = std::min(min_x, sx);
    max_x = std::max(max_x, sx);
    min_y = std::min(min_y, sy);
    max_y = std::max(max_y, sy);
    if (!points.empty()) points.push_back(' ');
    points += std::to_string(sx) + "," + std::to_string(sy);
  }
  const int margin = cell_size;
  const int radius = std::max(1, cell_size / 5);
  const int stroke = std::max(1, cell_size / 10);
  const int w = max_x - min_x + 2 * margin;
  const int h = max_y - min_y + 2 * margin;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
     << "\" viewBox=\"" << (min_x - margin) << ' ' << (min_y - margin) << ' ' << w << ' ' << h << "\">\n";
  os << "  <polygon points=\"" << points << "\" fill=\"none\" stroke=\"black\" stroke-width=\"" << stroke
     << "\"/>\n";
  for (const Point& p : c.verts)
    os << "  <circle cx=\"" << p.x * cell_size << "\" cy=\"" << p.y * cell_size << "\" r=\"" << radius
       << "\" fill=\"black\"/>\n";
  os << "</svg>\n";
  return os.str();
}

// ----------------------------------------------------------------------------
// JSON reports and traces
// ----------------------------------------------------------------------------

using Json = nlohmann::ordered_json;

inline Json to_json(Point p) { return Json::array({p.x, p.y}); }

inline Json to_json(const std::optional<Point>& p) { return p ? to_json(*p) : Json(nullptr); }

inline Json to_json(const ViolationWitness& w) {
  Json j;
  j["predicate"] = w.predicate;
  j["points"] = Json::array();
  for (const Point& p : w.points) j["points"].push_back(to_json(p));
  if (w.line) j["line"] = {{"direction", to_string(w.line->direction)}, {"index", w.line->index}};
  if (w.missing) j["missing"] = to_json(*w.missing);
  return j;
}

inline Json to_json(const ClassificationReport& r) {
  Json j;
  j["vertex_count"] = r.vertex_count;
  j["connected"] = r.connected;
  j["two_connected"] = r.two_connected;
  j["linear_convex"] = r.linear_convex;
  j["locally_connected"] = r.locally_connected;
  if (r.violation_witness.empty()) {
    j["violation_witness"] = nullptr;
  } else {
    j["violation_witness"] = Json::array();
    for (const auto& w : r.violation_witness) j["violation_witness"].push_back(to_json(w));
  }
  return j;
}

inline Json to_json(const ExtensionStep& s, std::size_t index) {
  Json j;
  j["step"] = index;
  j["cycle_length_before"] = s.cycle_length_before;
  j["attached_vertex"] = to_json(s.attached_vertex);
  j["rule"] = to_string(s.rule);
  j["anchor_u1"] = to_json(s.anchor_u1);
  j["pivot_z"] = to_json(s.pivot_z);
  j["pivot_y"] = to_json(s.pivot_y);
  j["anchor_u2"] = to_json(s.anchor_u2);
  j["anchor_uk"] = to_json(s.anchor_uk);
  j["construction"] = s.construction;
  return j;
}

/// One compact JSON object per step, newline terminated.
inline std::string trace_to_jsonl(const ExtensionTrace& t) {
  std::string out;
  for (std::size_t i = 0; i < t.steps.size(); ++i) out += to_json(t.steps[i], i).dump() + "\n";
  return out;
}

inline Json to_json(const StuckWitness& w) {
  Json j;
  j["outcome"] = "ExtensionFailed";
  j["graph"] = Json::array();
  for (const Point& p : w.graph.vertices()) j["graph"].push_back(to_json(p));
  j["cycle"] = Json::array();
  for (const Point& p : w.cycle.verts) j["cycle"].push_back(to_json(p));
  j["frontier"] = to_json(w.frontier);
  return j;
}

}  // namespace supergrid
