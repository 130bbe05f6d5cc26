#include "poncelet/svg.hpp"

#include <algorithm>
#include <cmath>

#include "poncelet/numfmt.hpp"

namespace poncelet {

namespace {

struct Bounds {
    double min_x = 0.0, min_y = 0.0, max_x = 1.0, max_y = 1.0;
    bool empty = true;
    void add(Point p) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) return;
        if (empty) {
            min_x = max_x = p.x;
            min_y = max_y = p.y;
            empty = false;
            return;
        }
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
};

std::vector<Point> sample_conic(const PlacedConic& pc, int n) {
    const ConicParams p = conic_params(pc.base);
    std::vector<Point> pts;
    pts.reserve(n);
    if (p.kind == ConicKind::Ellipse) {
        const bool major_y = pc.base.beta > pc.base.alpha;
        const double ax = major_y ? p.b : p.a;
        const double ay = major_y ? p.a : p.b;
        for (int i = 0; i < n; ++i) {
            const double t = two_pi * i / n;
            pts.push_back(from_conic_frame(pc, {ax * std::cos(t), ay * std::sin(t)}));
        }
        return pts;
    }
    // hyperbola branches sampled over a fixed parameter window
    const double tmax = 2.5;
    for (int sgn : {+1, -1})
        for (int i = 0; i <= n / 2; ++i) {
            const double t = -tmax + 2.0 * tmax * i / (n / 2);
            pts.push_back(from_conic_frame(
                pc, {sgn * p.a * std::cosh(t), p.b * std::sinh(t)}));
        }
    return pts;
}

std::string num(double v) { return format_number(v); }

void polyline_path(std::string& out, const std::vector<Point>& pts, bool closed,
                   const std::string& style) {
    if (pts.size() < 2) return;
    out += "<path d=\"M " + num(pts[0].x) + " " + num(pts[0].y);
    for (size_t i = 1; i < pts.size(); ++i)
        out += " L " + num(pts[i].x) + " " + num(pts[i].y);
    if (closed) out += " Z";
    out += "\" " + style + "/>\n";
}

} // namespace

std::string render_svg(const SceneDescription& scene) {
    Bounds bb;
    for (const auto& c : scene.circles) {
        bb.add(c.center + Point{c.radius, c.radius});
        bb.add(c.center - Point{c.radius, c.radius});
    }
    std::vector<std::vector<Point>> conic_samples;
    for (const auto& pc : scene.conics) {
        conic_samples.push_back(sample_conic(pc, 256));
        if (conic_params(pc.base).kind == ConicKind::Ellipse)
            for (const auto& p : conic_samples.back()) bb.add(p);
    }
    for (const auto& t : scene.triangles) {
        bb.add(t.a);
        bb.add(t.b);
        bb.add(t.c);
    }
    for (const auto& pl : scene.polylines)
        for (const auto& p : pl.points) bb.add(p);
    for (const auto& l : scene.labels) bb.add(l.at);
    if (bb.empty) bb = {0.0, 0.0, 1.0, 1.0, false};

    const double pad = 0.05 * std::max(bb.max_x - bb.min_x, bb.max_y - bb.min_y) + 1e-9;
    const double x0 = bb.min_x - pad, y0 = bb.min_y - pad;
    const double w = bb.max_x - bb.min_x + 2.0 * pad;
    const double h = bb.max_y - bb.min_y + 2.0 * pad;
    const double stroke = 0.004 * std::max(w, h);
    const std::string line_style =
        "fill=\"none\" stroke=\"#444444\" stroke-width=\"" + num(stroke) + "\"";

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" +
           num(x0) + " " + num(-y0 - h) + " " + num(w) + " " + num(h) + "\">\n";
    out += "<g transform=\"scale(1,-1)\">\n"; // y-up
    for (const auto& c : scene.circles)
        out += "<circle cx=\"" + num(c.center.x) + "\" cy=\"" + num(c.center.y) +
               "\" r=\"" + num(c.radius) + "\" " + line_style + "/>\n";
    for (const auto& pts : conic_samples) {
        // hyperbola branches are drawn as two open paths
        const size_t half = pts.size() / 2;
        if (pts.size() >= 4 && dist(pts[half - 1], pts[half]) >
                                   4.0 * dist(pts[0], pts[1])) {
            polyline_path(out, {pts.begin(), pts.begin() + half}, false, line_style);
            polyline_path(out, {pts.begin() + half, pts.end()}, false, line_style);
        } else {
            polyline_path(out, pts, true, line_style);
        }
    }
    for (const auto& t : scene.triangles)
        polyline_path(out, {t.a, t.b, t.c}, true, line_style);
    for (const auto& pl : scene.polylines)
        polyline_path(out, pl.points, pl.closed, line_style);
    for (const auto& l : scene.labels)
        out += "<text x=\"" + num(l.at.x) + "\" y=\"" + num(-l.at.y) +
               "\" transform=\"scale(1,-1)\" font-size=\"" + num(8.0 * stroke) +
               "\">" + l.text + "</text>\n";
    out += "</g>\n</svg>\n";
    return out;
}

} // namespace poncelet
