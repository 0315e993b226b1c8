#pragma once

#include <string>
#include <variant>
#include <vector>

#include "diskgeom/normalize.hpp"

namespace diskgeom {

/// Ordered list of drawing primitives on top of the unit circle, painted in
/// insertion order. Labels are unique per scene; coordinates are finite.
struct Scene {
    struct Point {
        std::string label;
        cplx pos;
    };
    struct Segment {
        cplx p1, p2;
    };
    struct FullLine {  // clipped to the viewport at emit time
        cplx anchor;
        cplx dir;
    };
    struct GeodesicArc {
        Geodesic geo;
    };
    struct CirclePrim {
        Circle circle;
    };
    struct Label {
        std::string text;
        cplx anchor;
    };
    using Element = std::variant<Point, Segment, FullLine, GeodesicArc, CirclePrim, Label>;

    bool unit_circle = true;
    std::vector<Element> elements;

    void add_point(const std::string& label, cplx pos);
    void add_segment(cplx p1, cplx p2);
    void add_line(cplx anchor, cplx dir);
    void add_arc(const Geodesic& g);
    void add_circle(const Circle& c);
    void add_label(const std::string& text, cplx anchor);
};

/// Figure builders mirroring the library's constructions. Throws
/// MissingField naming any required quantity the analysis flagged degenerate.
Scene build_figure(const std::string& name, const QuadAnalysis& qa);

/// Figures defined by a pair of interior points rather than a quadruple.
Scene build_midpoint_figure(DiskPoint x, DiskPoint y);
Scene build_five_points_figure(DiskPoint x, DiskPoint y);

Scene build_symmetrization_figure(const OrderedQuadruple& input, const SymmetrizeResult& sym);

/// All figure names accepted by build_figure / the render command.
const std::vector<std::string>& figure_names();

}  // namespace diskgeom
