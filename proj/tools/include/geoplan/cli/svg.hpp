#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace geoplan::cli {

using Point2 = std::pair<double, double>;

// Minimal SVG 1.1 writer. Callers work in chart coordinates inside
// [min, max]^2; the canvas flips y so the chart reads the usual way.
// Numbers are printed with fixed precision so output is byte-stable.
class SvgCanvas {
public:
    SvgCanvas(double min, double max, int pixels = 480);

    void line(Point2 a, Point2 b, const std::string& stroke, double width = 1.5, bool dashed = false);
    void polyline(const std::vector<Point2>& pts, const std::string& stroke, double width = 1.5);
    void polygon(const std::vector<Point2>& pts, const std::string& stroke, const std::string& fill);
    void dot(Point2 p, const std::string& fill, double radius = 4);
    void text(Point2 p, const std::string& s, int size = 12);
    void title(const std::string& s);

    std::string str() const;

private:
    std::string at(Point2 p) const;

    double min_, max_;
    int pixels_;
    std::ostringstream body_;
};

std::string escape_xml(const std::string& s);

// Colors cycled over geodesics.
const std::string& palette(std::size_t i);

} // namespace geoplan::cli
