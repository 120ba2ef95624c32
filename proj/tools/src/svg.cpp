#include "geoplan/cli/svg.hpp"

#include <array>
#include <cstdio>

namespace geoplan::cli {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s = buf;
    if (s == "-0.00") s = "0.00";
    return s;
}

} // namespace

SvgCanvas::SvgCanvas(double min, double max, int pixels) : min_(min), max_(max), pixels_(pixels) {}

std::string SvgCanvas::at(Point2 p) const {
    const double scale = pixels_ / (max_ - min_);
    return num((p.first - min_) * scale) + "," + num((max_ - p.second) * scale);
}

void SvgCanvas::line(Point2 a, Point2 b, const std::string& stroke, double width, bool dashed) {
    body_ << "  <polyline points=\"" << at(a) << " " << at(b) << "\" fill=\"none\" stroke=\"" << stroke
          << "\" stroke-width=\"" << num(width) << "\"";
    if (dashed) body_ << " stroke-dasharray=\"4,3\"";
    body_ << "/>\n";
}

void SvgCanvas::polyline(const std::vector<Point2>& pts, const std::string& stroke, double width) {
    body_ << "  <polyline points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) body_ << (i ? " " : "") << at(pts[i]);
    body_ << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << num(width) << "\"/>\n";
}

void SvgCanvas::polygon(const std::vector<Point2>& pts, const std::string& stroke, const std::string& fill) {
    body_ << "  <polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) body_ << (i ? " " : "") << at(pts[i]);
    body_ << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\"1.00\"/>\n";
}

void SvgCanvas::dot(Point2 p, const std::string& fill, double radius) {
    const std::string xy = at(p);
    const auto comma = xy.find(',');
    body_ << "  <circle cx=\"" << xy.substr(0, comma) << "\" cy=\"" << xy.substr(comma + 1) << "\" r=\"" << num(radius)
          << "\" fill=\"" << fill << "\"/>\n";
}

void SvgCanvas::text(Point2 p, const std::string& s, int size) {
    const std::string xy = at(p);
    const auto comma = xy.find(',');
    body_ << "  <text x=\"" << xy.substr(0, comma) << "\" y=\"" << xy.substr(comma + 1) << "\" font-family=\"sans-serif\" font-size=\""
          << size << "\">" << escape_xml(s) << "</text>\n";
}

void SvgCanvas::title(const std::string& s) {
    body_ << "  <title>" << escape_xml(s) << "</title>\n";
}

std::string SvgCanvas::str() const {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << pixels_ << "\" height=\"" << pixels_
       << "\" viewBox=\"0 0 " << pixels_ << " " << pixels_ << "\">\n"
       << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
       << body_.str() << "</svg>\n";
    return os.str();
}

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

const std::string& palette(std::size_t i) {
    static const std::array<std::string, 8> colors{"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                                   "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};
    return colors[i % colors.size()];
}

} // namespace geoplan::cli
