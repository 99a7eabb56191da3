#include "simpson/render.hpp"

#include <cmath>
#include <cstdio>

#include "simpson/io.hpp"

namespace simpson {

namespace {

constexpr double kScale = 320.0;
constexpr double kOriginY = 370.0;
constexpr double kArcRadius = 36.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

struct Panel {
    double origin_x;
    const char* symbol;  // θ or η
    const char* title;
};

struct Point {
    double x;
    double y;
};

Point to_screen(const Panel& p, PlaneVector v) {
    return {p.origin_x + kScale * v.horizontal, kOriginY - kScale * v.vertical};
}

std::string line(const char* cls, Point from, Point to) {
    return "  <line class=\"" + std::string(cls) + "\" x1=\"" + num(from.x) + "\" y1=\"" +
           num(from.y) + "\" x2=\"" + num(to.x) + "\" y2=\"" + num(to.y) + "\"/>\n";
}

std::string text(Point at, const std::string& body, const char* cls = "label") {
    return "  <text class=\"" + std::string(cls) + "\" x=\"" + num(at.x) + "\" y=\"" +
           num(at.y) + "\">" + body + "</text>\n";
}

// Counterclockwise arc from the horizontal to `angle`, centred at `center`.
std::string arc(Point center, double angle, double radius) {
    const Point start{center.x + radius, center.y};
    const Point end{center.x + radius * std::cos(angle), center.y - radius * std::sin(angle)};
    return "  <path class=\"arc\" d=\"M " + num(start.x) + " " + num(start.y) + " A " +
           num(radius) + " " + num(radius) + " 0 0 0 " + num(end.x) + " " + num(end.y) +
           "\"/>\n";
}

std::string draw_arm(const Panel& p, PlaneVector parent, PlaneVector inner) {
    const PlaneVector outer = parent - inner;
    const double angle0 = angle_of(parent).radians();
    const double angle1 = angle_of(inner).radians();
    const double angle2 = angle_of(outer).radians();
    const Point origin = to_screen(p, {0.0, 0.0});
    const Point tip0 = to_screen(p, parent);
    const Point tip1 = to_screen(p, inner);
    const std::string sym = p.symbol;

    std::string out = "  <g class=\"panel\">\n";
    out += text({p.origin_x, 24.0}, p.title, "title");
    out += line("axis", origin, {origin.x + kScale + 20.0, origin.y});
    out += line("axis", origin, {origin.x, origin.y - kScale - 20.0});
    out += line("guide", tip1, {tip1.x + 60.0, tip1.y});
    out += line("ray parent", origin, tip0);
    out += text({tip0.x + 6.0, tip0.y - 6.0}, sym + "0 = " + num(angle0));
    out += line("ray inner", origin, tip1);
    out += text({tip1.x + 6.0, tip1.y + 14.0}, sym + "1 = " + num(angle1));
    out += line("ray outer", tip1, tip0);
    out += text({(tip0.x + tip1.x) / 2.0 + 8.0, (tip0.y + tip1.y) / 2.0}, sym + "2 = " + num(angle2));
    out += arc(origin, angle1, kArcRadius);
    out += arc(tip1, angle2, kArcRadius * 0.6);
    out += "  </g>\n";
    return out;
}

}  // namespace

std::string render_decomposition_svg(const Quadruple& q) {
    const Split split = decompose(q);
    std::string out =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"400\" "
        "viewBox=\"0 0 800 400\">\n"
        "  <style>.axis{stroke:#888;stroke-width:1}.guide{stroke:#bbb;stroke-dasharray:4 3}"
        ".ray{stroke-width:2}.parent{stroke:#222}.inner{stroke:#1f77b4}.outer{stroke:#d62728}"
        ".arc{fill:none;stroke:#555}.label{font:12px sans-serif}.title{font:bold 13px "
        "sans-serif}</style>\n";
    out += draw_arm({40.0, "θ", "treated (b, a)"}, q.treated(), split.inner.treated());
    out += draw_arm({440.0, "η", "control (d, c)"}, q.control(), split.inner.control());
    out += "</svg>\n";
    return out;
}

void render_decomposition(const Quadruple& q, const std::filesystem::path& out) {
    const std::string svg = render_decomposition_svg(q);
    io::write_file(out, svg);
}

}  // namespace simpson
