#include <algorithm>
#include <cmath>
#include <sstream>

#include "cabinet/io.hpp"
#include "number_format.hpp"

namespace cabinet {

namespace {

constexpr double kMargin = 20.0;
constexpr double kSummaryBand = 30.0;

std::string xml_escape(std::string_view s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += ch;
        }
    }
    return out;
}

}  // namespace

std::string render_svg(const Placement& placement, const std::vector<Component>& components,
                       const ObjectiveVector& objectives) {
    using detail::format_number;

    double extent_x = 0.0;
    for (const auto& p : placement.components) {
        extent_x = std::max(extent_x, p.x_mm + p.width_mm);
    }
    const double width = extent_x + 2 * kMargin;
    const double height = placement.total_height_mm + 2 * kMargin + kSummaryBand;
    auto X = [](double v) { return format_number(v + kMargin); };
    auto Y = [](double v) { return format_number(v + kMargin + kSummaryBand); };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_number(width)
        << "\" height=\"" << format_number(height) << "\" viewBox=\"0 0 " << format_number(width)
        << ' ' << format_number(height) << "\">\n";
    out << "  <text class=\"summary\" x=\"" << format_number(kMargin) << "\" y=\""
        << format_number(kMargin + 4) << "\" font-family=\"sans-serif\" font-size=\"14\">heat "
        << format_number(objectives.heat) << " | wire " << format_number(objectives.wire_mm)
        << " mm</text>\n";

    out << "  <g class=\"rails\" stroke=\"#9a9a9a\" stroke-dasharray=\"4 3\">\n";
    for (const auto& r : placement.rows) {
        out << "    <line x1=\"" << X(0) << "\" y1=\"" << Y(r.y_mm + r.height_mm / 2) << "\" x2=\""
            << X(extent_x) << "\" y2=\"" << Y(r.y_mm + r.height_mm / 2) << "\"/>\n";
    }
    out << "  </g>\n";

    out << "  <g class=\"components\" font-family=\"sans-serif\" font-size=\"12\">\n";
    for (const auto& c : components) {
        const PlacedComponent& p = placement.at(c.index);
        out << "    <rect class=\"component" << (c.is_hot ? " hot" : "") << "\" data-index=\""
            << c.index << "\" x=\"" << X(p.x_mm) << "\" y=\"" << Y(p.y_mm) << "\" width=\""
            << format_number(p.width_mm) << "\" height=\"" << format_number(p.height_mm)
            << "\" fill=\"" << (c.is_hot ? "#f4a582" : "#d1e5f0") << "\" stroke=\""
            << (c.is_hot ? "#b2182b" : "#2166ac") << "\" stroke-width=\"1.5\"/>\n";
        out << "    <text x=\"" << X(p.x_mm + 4) << "\" y=\"" << Y(p.y_mm + 16) << "\">#"
            << c.index << ' ' << xml_escape(c.id) << (c.is_hot ? " (hot)" : "") << "</text>\n";
    }
    out << "  </g>\n";

    out << "  <g class=\"wires\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\">\n";
    for (const Edge& e : normalize_edges(components)) {
        const Point a = component_center(placement, e.a);
        const Point b = component_center(placement, e.b);
        const double length = std::abs(a.x_mm - b.x_mm) + std::abs(a.y_mm - b.y_mm);
        out << "    <polyline class=\"wire\" data-a=\"" << e.a << "\" data-b=\"" << e.b
            << "\" data-length-mm=\"" << format_number(length) << "\" points=\"" << X(a.x_mm)
            << ',' << Y(a.y_mm) << ' ' << X(b.x_mm) << ',' << Y(a.y_mm) << ' ' << X(b.x_mm)
            << ',' << Y(b.y_mm) << "\"/>\n";
    }
    out << "  </g>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace cabinet
