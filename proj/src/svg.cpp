#include "crossratio/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace crossratio {

namespace {

std::string num(double v) {
	char buf[48];
	std::snprintf(buf, sizeof buf, "%.6f", v);
	std::string s = buf;
	// trim trailing zeros, keep at least one digit after '.'
	while (s.size() > 2 && s.back() == '0' && s[s.size() - 2] != '.')
		s.pop_back();
	if (s == "-0.0")
		s = "0.0";
	return s;
}

double to_double(const FieldElement& x) { return x.as_rational().get_d(); }

struct Box {
	double xmin, xmax, ymin, ymax;
};

} // namespace

std::string render_construction_svg(const ConstructionFigure& fig) {
	if (fig.o.field().kind() != FieldKind::rational)
		throw Error("SVG output is only available for the rational plane");

	const std::vector<std::pair<std::string, const PlanePoint*>> points{
		{"O", &fig.o},  {"I", &fig.i},         {"A", &fig.a},           {"B", &fig.b},
		{"B1", &fig.aux}, {"P1", &fig.trace.p1}, {"C", &fig.trace.result},
	};

	Box box{1e300, -1e300, 1e300, -1e300};
	for (const auto& [label, p] : points) {
		box.xmin = std::min(box.xmin, to_double(p->x));
		box.xmax = std::max(box.xmax, to_double(p->x));
		box.ymin = std::min(box.ymin, to_double(p->y));
		box.ymax = std::max(box.ymax, to_double(p->y));
	}
	const double span = std::max({box.xmax - box.xmin, box.ymax - box.ymin, 1.0});
	const double pad = 0.15 * span;
	box = {box.xmin - pad, box.xmax + pad, box.ymin - pad, box.ymax + pad};
	const double radius = 0.012 * span, font = 0.04 * span, stroke = 0.004 * span;

	// SVG's y axis points down; draw at (x, -y).
	std::string svg;
	svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
	svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(box.xmin) + " " + num(-box.ymax) + " " +
	       num(box.xmax - box.xmin) + " " + num(box.ymax - box.ymin) + "\">\n";
	svg += "  <g fill=\"none\" stroke-width=\"" + num(stroke) + "\">\n";
	for (const auto& step : fig.trace.steps) {
		double x1, y1, x2, y2;
		if (const auto* v = std::get_if<VerticalLine>(&step.line.form())) {
			x1 = x2 = to_double(v->c);
			y1 = box.ymin;
			y2 = box.ymax;
		} else {
			const auto& s = std::get<SlopedLine>(step.line.form());
			const double m = to_double(s.m), b = to_double(s.b);
			x1 = box.xmin;
			x2 = box.xmax;
			y1 = x1 * m + b;
			y2 = x2 * m + b;
		}
		const char* colour = step.description.starts_with("parallel") ? "#c0392b" : "#555555";
		svg += "    <path class=\"construction-line\" stroke=\"" + std::string(colour) + "\" d=\"M " + num(x1) + " " +
		       num(-y1) + " L " + num(x2) + " " + num(-y2) + "\"><title>" + step.description + "</title></path>\n";
	}
	svg += "  </g>\n  <g font-family=\"sans-serif\" font-size=\"" + num(font) + "\">\n";
	for (const auto& [label, p] : points) {
		const double x = to_double(p->x), y = -to_double(p->y);
		svg += "    <circle cx=\"" + num(x) + "\" cy=\"" + num(y) + "\" r=\"" + num(radius) + "\" fill=\"#1f3a93\"/>\n";
		svg += "    <text x=\"" + num(x + 1.5 * radius) + "\" y=\"" + num(y - 1.5 * radius) + "\">" + label + "</text>\n";
	}
	svg += "  </g>\n</svg>\n";
	return svg;
}

} // namespace crossratio
