#pragma once

#include <string>

#include "crossratio/plane.hpp"

namespace crossratio {

/// Inputs of a traced construction, labelled the way they are drawn.
struct ConstructionFigure {
	PlanePoint o, i, a, b, aux;
	ConstructionTrace trace;
};

/// Renders the construction as a standalone SVG document: the construction
/// lines as paths, the points O, I, A, B, B1, P1, C as labelled circles, with
/// an auto-fitted viewBox. Only rational planes embed in the drawing plane;
/// other fields throw Error. Coordinates are rounded to 6 decimals for
/// drawing only.
std::string render_construction_svg(const ConstructionFigure& figure);

} // namespace crossratio
