#include "diskgeom/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>

namespace diskgeom {

namespace {

constexpr double kView = 1.2;  // viewBox is [-kView, kView]^2

// Math coordinates -> emitted coordinates: the y axis is flipped so figures
// read with y pointing up.
struct XY {
    double x, y;
};
XY emit_xy(cplx z) { return {z.real(), -z.imag()}; }

std::string num(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.9f", v);
    return buf;
}

// SVG endpoint parameterization (arc implementation notes, F.6.5): center of
// the arc described by "A r r 0 large sweep", used to pick the sweep flag
// that reproduces a known center.
std::optional<XY> svg_arc_center(XY p1, XY p2, double r, bool large, bool sweep) {
    const double hx = (p1.x - p2.x) / 2.0;
    const double hy = (p1.y - p2.y) / 2.0;
    const double d2 = hx * hx + hy * hy;
    const double rad = std::max(0.0, r * r - d2);
    if (d2 == 0.0) return std::nullopt;
    double coef = std::sqrt(rad / d2);
    if (large == sweep) coef = -coef;
    return XY{(p1.x + p2.x) / 2.0 + coef * hy, (p1.y + p2.y) / 2.0 - coef * hx};
}

std::optional<std::pair<cplx, cplx>> clip_line(cplx anchor, cplx dir) {
    // Liang-Barsky against the square viewport.
    double t0 = -1e18, t1 = 1e18;
    const double p[4] = {-dir.real(), dir.real(), -dir.imag(), dir.imag()};
    const double q[4] = {anchor.real() + kView, kView - anchor.real(), anchor.imag() + kView,
                         kView - anchor.imag()};
    for (int i = 0; i < 4; ++i) {
        if (p[i] == 0.0) {
            if (q[i] < 0.0) return std::nullopt;
            continue;
        }
        const double r = q[i] / p[i];
        if (p[i] < 0.0)
            t0 = std::max(t0, r);
        else
            t1 = std::min(t1, r);
    }
    if (t0 >= t1) return std::nullopt;
    return std::make_pair(anchor + t0 * dir, anchor + t1 * dir);
}

struct Emitter {
    std::string out;

    void line(cplx a, cplx b, const char* width) {
        const XY p = emit_xy(a), q = emit_xy(b);
        out += "<line x1=\"" + num(p.x) + "\" y1=\"" + num(p.y) + "\" x2=\"" + num(q.x) +
               "\" y2=\"" + num(q.y) + "\" stroke=\"black\" stroke-width=\"" + width + "\"/>\n";
    }

    void circle(cplx center, double r, const char* width) {
        const XY c = emit_xy(center);
        out += "<circle cx=\"" + num(c.x) + "\" cy=\"" + num(c.y) + "\" r=\"" + num(r) +
               "\" fill=\"none\" stroke=\"black\" stroke-width=\"" + width + "\"/>\n";
    }

    void dot(cplx center) {
        const XY c = emit_xy(center);
        out += "<circle cx=\"" + num(c.x) + "\" cy=\"" + num(c.y) +
               "\" r=\"0.018\" fill=\"black\" stroke=\"none\"/>\n";
    }

    void text(const std::string& t, cplx anchor) {
        const XY c = emit_xy(anchor);
        out += "<text x=\"" + num(c.x + 0.03) + "\" y=\"" + num(c.y - 0.03) +
               "\" font-size=\"0.1\" font-family=\"serif\">" + t + "</text>\n";
    }

    void arc(const Geodesic& g) {
        if (g.kind == Geodesic::Kind::Diameter) {
            line(g.ideal_endpoints.first, g.ideal_endpoints.second, "0.012");
            return;
        }
        const XY p1 = emit_xy(g.ideal_endpoints.first);
        const XY p2 = emit_xy(g.ideal_endpoints.second);
        const XY c = emit_xy(g.center);
        // The in-disk part of an orthogonal circle is always the minor arc;
        // pick the sweep flag whose implied center matches the real one.
        auto dist_to_center = [&](bool s) {
            const auto cand = svg_arc_center(p1, p2, g.radius, false, s);
            if (!cand) return 1e300;
            return std::hypot(cand->x - c.x, cand->y - c.y);
        };
        const bool sweep = dist_to_center(true) < dist_to_center(false);
        out += "<path d=\"M " + num(p1.x) + " " + num(p1.y) + " A " + num(g.radius) + " " +
               num(g.radius) + " 0 0 " + (sweep ? "1" : "0") + " " + num(p2.x) + " " + num(p2.y) +
               "\" fill=\"none\" stroke=\"black\" stroke-width=\"0.012\"/>\n";
    }
};

}  // namespace

std::string emit_svg(const Scene& scene, int size) {
    Emitter e;
    e.out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    e.out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(size) +
             "\" height=\"" + std::to_string(size) + "\" viewBox=\"-1.2 -1.2 2.4 2.4\">\n";
    if (scene.unit_circle) e.circle(cplx(0.0, 0.0), 1.0, "0.008");

    for (const auto& el : scene.elements) {
        std::visit(
            [&](const auto& prim) {
                using T = std::decay_t<decltype(prim)>;
                if constexpr (std::is_same_v<T, Scene::Point>) {
                    e.dot(prim.pos);
                    e.text(prim.label, prim.pos);
                } else if constexpr (std::is_same_v<T, Scene::Segment>) {
                    e.line(prim.p1, prim.p2, "0.006");
                } else if constexpr (std::is_same_v<T, Scene::FullLine>) {
                    if (const auto seg = clip_line(prim.anchor, prim.dir))
                        e.line(seg->first, seg->second, "0.006");
                } else if constexpr (std::is_same_v<T, Scene::GeodesicArc>) {
                    e.arc(prim.geo);
                } else if constexpr (std::is_same_v<T, Scene::CirclePrim>) {
                    e.circle(prim.circle.center, prim.circle.radius, "0.006");
                } else if constexpr (std::is_same_v<T, Scene::Label>) {
                    e.text(prim.text, prim.anchor);
                }
            },
            el);
    }
    e.out += "</svg>\n";
    return e.out;
}

}  // namespace diskgeom
