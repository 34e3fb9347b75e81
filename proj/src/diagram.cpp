#include "rookmn/diagram.hpp"

#include <algorithm>

namespace rookmn {

namespace {

void check_element(const Element& x, Int n, const char* what) {
  if (!is_valid(x, Ambient::finite(n))) {
    throw ValidationError(std::string(what) + " " + to_string(x) + " is not valid for n=" +
                          std::to_string(n));
  }
}

std::string escape_xml(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

void put(std::string& line, std::size_t col, char c) {
  if (line.size() < col + 1) line.resize(col + 1, ' ');
  line[col] = c;
}

void put_label(std::string& line, std::size_t col, const std::string& label) {
  if (line.size() < col + label.size()) line.resize(col + label.size(), ' ');
  std::copy(label.begin(), label.end(), line.begin() + static_cast<std::ptrdiff_t>(col));
}

std::string rstrip_join(std::vector<std::string> lines) {
  std::string out;
  for (std::string& line : lines) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

void svg_vertex_row(std::string& out, Int n, Int unit, Int y) {
  for (Int i = 1; i <= n; ++i) {
    out += "<circle cx=\"" + std::to_string((i - 1) * unit) + "\" cy=\"" + std::to_string(y) +
           "\" r=\"3\" fill=\"#111\"/>\n";
  }
}

void svg_label_row(std::string& out, Int n, Int unit, Int y) {
  for (Int i = 1; i <= n; ++i) {
    out += "<text x=\"" + std::to_string((i - 1) * unit) + "\" y=\"" + std::to_string(y) +
           "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\" "
           "fill=\"#111\">" +
           std::to_string(i) + "</text>\n";
  }
}

void svg_edge(std::string& out, Int unit, Int i, Int y1, Int j, Int y2) {
  out += "<line x1=\"" + std::to_string((i - 1) * unit) + "\" y1=\"" + std::to_string(y1) +
         "\" x2=\"" + std::to_string((j - 1) * unit) + "\" y2=\"" + std::to_string(y2) +
         "\" stroke=\"#111\" stroke-width=\"1.5\"/>\n";
}

std::string svg_open(Int n, Int unit, Int min_y, Int height, const std::string& title) {
  const Int min_x = -unit / 2;
  const Int width = (n - 1) * unit + unit;
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
                    std::to_string(width) + "\" height=\"" + std::to_string(height) +
                    "\" viewBox=\"" + std::to_string(min_x) + " " + std::to_string(min_y) + " " +
                    std::to_string(width) + " " + std::to_string(height) + "\">\n";
  out += "<title>" + escape_xml(title) + "</title>\n";
  out += "<rect x=\"" + std::to_string(min_x) + "\" y=\"" + std::to_string(min_y) +
         "\" width=\"" + std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" fill=\"white\"/>\n";
  return out;
}

}  // namespace

DiagramLayout layout(const Element& x, Int n, Int unit) {
  check_element(x, n, "element");
  if (unit < 1) throw ValidationError("diagram unit must be positive");
  DiagramLayout lay;
  lay.n = n;
  lay.unit = unit;
  if (!x.is_zero()) {
    const Triplet& t = x.triplet();
    for (Int i = t.k; i <= t.m; ++i) lay.edges.emplace_back(i, i + t.d);
  }
  return lay;
}

std::string render_ascii(const Element& x, Int n) {
  const DiagramLayout lay = layout(x, n);
  const Int d = x.is_zero() ? 0 : x.triplet().d;

  if (d < -3 || d > 3) {
    // Too steep for character-cell slopes; fall back to listing the edges.
    std::string out = to_string(x) + " :";
    for (const auto& [i, j] : lay.edges) {
      out += " " + std::to_string(i) + "->" + std::to_string(j);
    }
    out += '\n';
    return out;
  }

  // Columns are 4 cells apart, so each of the 3 interior rows advances a
  // slanted edge by exactly d cells and every slope lands on its vertex.
  const Int unit = 4;
  std::vector<std::string> lines(5);
  for (Int i = 1; i <= n; ++i) {
    const std::string label = std::to_string(i);
    put_label(lines[0], static_cast<std::size_t>((i - 1) * unit), label);
    put_label(lines[4], static_cast<std::size_t>((i - 1) * unit), label);
  }
  const char glyph = d == 0 ? '|' : (d > 0 ? '\\' : '/');
  for (const auto& [i, j] : lay.edges) {
    (void)j;
    for (Int row = 1; row <= 3; ++row) {
      put(lines[static_cast<std::size_t>(row)],
          static_cast<std::size_t>((i - 1) * unit + row * d), glyph);
    }
  }
  return rstrip_join(std::move(lines));
}

std::string render_svg(const Element& x, Int n) {
  const DiagramLayout lay = layout(x, n);
  const Int unit = lay.unit;
  std::string out = svg_open(n, unit, -28, 100, to_string(x) + " on n=" + std::to_string(n));
  svg_vertex_row(out, n, unit, 0);
  svg_vertex_row(out, n, unit, unit);
  svg_label_row(out, n, unit, -12);
  svg_label_row(out, n, unit, unit + 18);
  for (const auto& [i, j] : lay.edges) svg_edge(out, unit, i, 0, j, unit);
  out += "</svg>\n";
  return out;
}

std::vector<std::pair<Int, Int>> product_composite_edges(const Element& x, const Element& y,
                                                         Int n) {
  const DiagramLayout top = layout(x, n);
  const DiagramLayout bottom = layout(y, n);
  // Graphical concatenation: a composite edge survives exactly when an x edge
  // ends on the vertex where a y edge starts. No product formula involved.
  std::vector<std::pair<Int, Int>> edges;
  for (const auto& [i, mid] : top.edges) {
    for (const auto& [start, j] : bottom.edges) {
      if (mid == start) edges.emplace_back(i, j);
    }
  }
  return edges;
}

std::string render_product(const Element& x, const Element& y, Int n) {
  const DiagramLayout top = layout(x, n);
  const DiagramLayout bottom = layout(y, n);
  const Int unit = top.unit;
  std::string out = svg_open(n, unit, -28, 2 * unit + 60,
                             to_string(x) + " * " + to_string(y) + " on n=" + std::to_string(n));
  svg_vertex_row(out, n, unit, 0);
  svg_vertex_row(out, n, unit, unit);
  svg_vertex_row(out, n, unit, 2 * unit);
  svg_label_row(out, n, unit, -12);
  svg_label_row(out, n, unit, 2 * unit + 18);
  for (const auto& [i, j] : top.edges) svg_edge(out, unit, i, 0, j, unit);
  for (const auto& [i, j] : bottom.edges) svg_edge(out, unit, i, unit, j, 2 * unit);

  // Composite paths drawn last so they sit on top of the layer edges.
  const Int d_top = x.is_zero() ? 0 : x.triplet().d;
  for (const auto& [i, j] : product_composite_edges(x, y, n)) {
    const Int mid = i + d_top;
    out += "<polyline points=\"" + std::to_string((i - 1) * unit) + ",0 " +
           std::to_string((mid - 1) * unit) + "," + std::to_string(unit) + " " +
           std::to_string((j - 1) * unit) + "," + std::to_string(2 * unit) +
           "\" fill=\"none\" stroke=\"crimson\" stroke-width=\"2.5\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace rookmn
