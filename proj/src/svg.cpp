#include "strebel/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace strebel {

namespace {

constexpr double kSize = 1000, kMargin = 50;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    return s == "-0.000" ? "0.000" : s;
}

struct Frame {
    double x0 = 0, y0 = 0, scale = 1;
    void fit(const std::vector<cd>& pts) {
        double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin, ymin = xmin, ymax = -xmin;
        for (cd p : pts) {
            xmin = std::min(xmin, p.real());
            xmax = std::max(xmax, p.real());
            ymin = std::min(ymin, p.imag());
            ymax = std::max(ymax, p.imag());
        }
        if (pts.empty()) xmin = ymin = -1, xmax = ymax = 1;
        double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
        scale = (kSize - 2 * kMargin) / span;
        x0 = (xmin + xmax) / 2;
        y0 = (ymin + ymax) / 2;
    }
    // y grows upwards in the plane and downwards in SVG
    std::string x(cd p) const { return num(kSize / 2 + (p.real() - x0) * scale); }
    std::string y(cd p) const { return num(kSize / 2 - (p.imag() - y0) * scale); }
    std::string xy(cd p) const { return x(p) + "," + y(p); }
};

std::string header() {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" viewBox=\"0 0 1000 1000\">\n"
           "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";
}

}  // namespace

std::string render_svg(const SvgScene& s) {
    std::vector<cd> all;
    for (auto& l : s.polylines) all.insert(all.end(), l.begin(), l.end());
    all.insert(all.end(), s.dots.begin(), s.dots.end());
    all.insert(all.end(), s.circles.begin(), s.circles.end());
    Frame f;
    f.fit(all);
    std::string out = header();
    for (auto& l : s.polylines) {
        out += "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
        for (size_t k = 0; k < l.size(); ++k) out += (k ? " " : "") + f.xy(l[k]);
        out += "\"/>\n";
    }
    for (cd p : s.circles)
        out += "<circle cx=\"" + f.x(p) + "\" cy=\"" + f.y(p) + "\" r=\"8\" fill=\"none\" stroke=\"red\" stroke-width=\"2\"/>\n";
    for (cd p : s.dots) out += "<circle cx=\"" + f.x(p) + "\" cy=\"" + f.y(p) + "\" r=\"5\" fill=\"blue\"/>\n";
    return out + "</svg>\n";
}

std::string render_drawing(const Drawing& d) {
    std::vector<cd> pts;
    for (auto [x, y] : d.xy) pts.push_back({x, y});
    // leave room for the arcs that bulge past the vertices
    std::vector<cd> frame = pts;
    for (cd p : pts) {
        frame.push_back(p + cd(0.6, 0.6));
        frame.push_back(p - cd(0.6, 0.6));
    }
    Frame f;
    f.fit(frame);
    std::string out = header();
    for (auto& e : d.edges) {
        cd a = pts[e.u], b = pts[e.v];
        double k = 0.4 * std::abs(b - a);
        if (e.u == e.v) k = 0.5;
        cd c1 = a + std::polar(k, e.angle_u * M_PI / 180), c2 = b + std::polar(k, e.angle_v * M_PI / 180);
        out += "<path fill=\"none\" stroke=\"black\" stroke-width=\"2\" d=\"M " + f.xy(a) + " C " + f.xy(c1) + " " + f.xy(c2) +
               " " + f.xy(b) + "\"/>\n";
    }
    for (cd p : pts) out += "<circle cx=\"" + f.x(p) + "\" cy=\"" + f.y(p) + "\" r=\"7\" fill=\"black\"/>\n";
    return out + "</svg>\n";
}

}  // namespace strebel
