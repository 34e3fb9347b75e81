#ifndef ROOKMN_DIAGRAM_HPP
#define ROOKMN_DIAGRAM_HPP

#include <string>
#include <utility>
#include <vector>

#include "rookmn/element.hpp"

namespace rookmn {

// A two-row diagram on n top and n bottom vertices: edge (i, j) joins top
// vertex i to bottom vertex j. For <d,k,m> the edges are (i, i+d) for
// k <= i <= m; zero has none. `unit` is the grid spacing in SVG user units.
struct DiagramLayout {
  Int n = 0;
  Int unit = 40;
  std::vector<std::pair<Int, Int>> edges;
};

DiagramLayout layout(const Element& x, Int n, Int unit = 40);

// Two label rows with three slope rows between them, drawn with '|', '\', or
// '/'. Slopes stay legible only up to |d| = 3; steeper elements degrade to a
// one-line textual edge list.
std::string render_ascii(const Element& x, Int n);

// Standalone SVG 1.1 document, byte-deterministic for given inputs.
std::string render_svg(const Element& x, Int n);

// Edges of x*y obtained graphically: concatenate the two diagrams and keep
// the top-to-bottom paths that connect. Computed by path tracing, not by the
// product formula, so it can serve as a cross-check of multiply().
std::vector<std::pair<Int, Int>> product_composite_edges(const Element& x, const Element& y,
                                                         Int n);

// Three-row SVG of the concatenation: x on top, y below, with the surviving
// composite paths overlaid in color.
std::string render_product(const Element& x, const Element& y, Int n);

}  // namespace rookmn

#endif  // ROOKMN_DIAGRAM_HPP
