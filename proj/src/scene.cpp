#include "diskgeom/scene.hpp"

#include <cmath>
#include <stdexcept>

namespace diskgeom {

namespace {

void require_finite(cplx z) {
    if (!(std::isfinite(z.real()) && std::isfinite(z.imag())))
        throw std::invalid_argument("Scene: non-finite coordinate");
}

cplx need(const std::optional<cplx>& f, const QuadAnalysis& qa, const char* name) {
    if (!f) {
        auto it = qa.degenerate_reasons.find(name);
        throw MissingField(std::string(name) + " is degenerate" +
                           (it == qa.degenerate_reasons.end() ? "" : ": " + it->second));
    }
    return *f;
}

}  // namespace

void Scene::add_point(const std::string& label, cplx pos) {
    require_finite(pos);
    for (const auto& e : elements) {
        if (const auto* p = std::get_if<Point>(&e); p && p->label == label)
            throw std::invalid_argument("Scene: duplicate label " + label);
        if (const auto* l = std::get_if<Label>(&e); l && l->text == label)
            throw std::invalid_argument("Scene: duplicate label " + label);
    }
    elements.push_back(Point{label, pos});
}

void Scene::add_segment(cplx p1, cplx p2) {
    require_finite(p1);
    require_finite(p2);
    elements.push_back(Segment{p1, p2});
}

void Scene::add_line(cplx anchor, cplx dir) {
    require_finite(anchor);
    require_finite(dir);
    if (std::abs(dir) <= 1e-300) throw std::invalid_argument("Scene: zero line direction");
    elements.push_back(FullLine{anchor, dir / std::abs(dir)});
}

void Scene::add_arc(const Geodesic& g) { elements.push_back(GeodesicArc{g}); }

void Scene::add_circle(const Circle& c) { elements.push_back(CirclePrim{c}); }

void Scene::add_label(const std::string& text, cplx anchor) {
    require_finite(anchor);
    for (const auto& e : elements) {
        if (const auto* p = std::get_if<Point>(&e); p && p->label == text)
            throw std::invalid_argument("Scene: duplicate label " + text);
        if (const auto* l = std::get_if<Label>(&e); l && l->text == text)
            throw std::invalid_argument("Scene: duplicate label " + text);
    }
    elements.push_back(Label{text, anchor});
}

const std::vector<std::string>& figure_names() {
    static const std::vector<std::string> names = {
        "quadrilateral", "ideal",    "orthocenter", "rhomboid",
        "orthogonal-circle", "midpoint", "five-points", "symmetrization"};
    return names;
}

namespace {

void add_vertices(Scene& s, const QuadAnalysis& qa) {
    const char* names[4] = {"a", "b", "c", "d"};
    for (int i = 0; i < 4; ++i) s.add_point(names[i], qa.vertices[i]);
}

Scene figure_quadrilateral(const QuadAnalysis& qa) {
    Scene s;
    add_vertices(s, qa);
    const auto& v = qa.vertices;
    for (int i = 0; i < 4; ++i) s.add_segment(v[i], v[(i + 1) % 4]);
    // The two transversals through w2 carrying the feet.
    s.add_line(qa.w2, qa.t2 - qa.w2);
    s.add_line(qa.w2, qa.t1 - qa.w2);
    s.add_point("w2", qa.w2);
    if (qa.w1) s.add_point("w1", *qa.w1);
    if (qa.w3) s.add_point("w3", *qa.w3);
    s.add_point("t1", qa.t1);
    s.add_point("t2", qa.t2);
    s.add_point("t3", qa.t3);
    s.add_point("t4", qa.t4);
    return s;
}

Scene figure_ideal(const QuadAnalysis& qa) {
    Scene s;
    add_vertices(s, qa);
    const auto& v = qa.vertices;
    for (int i = 0; i < 4; ++i) s.add_arc(ideal_geodesic(v[i], v[(i + 1) % 4]));
    return s;
}

Scene figure_orthocenter(const QuadAnalysis& qa) {
    Scene s;
    const cplx w1 = need(qa.w1, qa, "w1");
    const cplx w3 = need(qa.w3, qa, "w3");
    add_vertices(s, qa);
    const auto& v = qa.vertices;
    // Extended side lines meeting at w1 and w3.
    s.add_line(v[0], v[1] - v[0]);
    s.add_line(v[2], v[3] - v[2]);
    s.add_line(v[1], v[2] - v[1]);
    s.add_line(v[0], v[3] - v[0]);
    s.add_segment(cplx(0.0, 0.0), w1);
    s.add_segment(cplx(0.0, 0.0), w3);
    s.add_segment(w1, w3);
    s.add_point("0", cplx(0.0, 0.0));
    s.add_point("w1", w1);
    s.add_point("w2", qa.w2);
    s.add_point("w3", w3);
    return s;
}

Scene figure_rhomboid(const QuadAnalysis& qa) {
    Scene s;
    add_vertices(s, qa);
    const auto& v = qa.vertices;
    s.add_circle(circle_through(v[0], v[1], qa.w2));
    s.add_circle(circle_through(v[1], v[2], qa.w2));
    s.add_circle(circle_through(v[2], v[3], qa.w2));
    s.add_circle(circle_through(v[0], v[3], qa.w2));
    s.add_segment(qa.p1, qa.p2);
    s.add_segment(qa.p2, qa.p3);
    s.add_segment(qa.p3, qa.p4);
    s.add_segment(qa.p4, qa.p1);
    s.add_point("p1", qa.p1);
    s.add_point("p2", qa.p2);
    s.add_point("p3", qa.p3);
    s.add_point("p4", qa.p4);
    s.add_point("p5", qa.p5);
    s.add_point("w2", qa.w2);
    s.add_point("0", cplx(0.0, 0.0));
    return s;
}

Scene figure_orthogonal_circle(const QuadAnalysis& qa) {
    Scene s;
    const cplx w1 = need(qa.w1, qa, "w1");
    const cplx w3 = need(qa.w3, qa, "w3");
    const cplx v2 = need(qa.v2, qa, "v2");
    const cplx p = need(qa.p, qa, "p");
    const cplx qpt = need(qa.q, qa, "q");
    if (!qa.co) throw MissingField("co is degenerate");
    add_vertices(s, qa);
    const auto& v = qa.vertices;
    s.add_arc(ideal_geodesic(v[0], v[2]));
    s.add_arc(ideal_geodesic(v[1], v[3]));
    s.add_arc(ideal_geodesic(p, qpt));
    s.add_circle(*qa.co);
    s.add_line(w3, qpt - w3);  // the five-point line w3, p, w2, v2, q
    s.add_point("w1", w1);
    s.add_point("w2", qa.w2);
    s.add_point("w3", w3);
    s.add_point("w", qa.w);
    s.add_point("v2", v2);
    s.add_point("p", p);
    s.add_point("q", qpt);
    return s;
}

Scene figure_midpoint_quad(const QuadAnalysis& qa) {
    Scene s;
    add_vertices(s, qa);
    const auto& v = qa.vertices;
    s.add_arc(ideal_geodesic(v[0], v[2]));
    s.add_arc(ideal_geodesic(v[1], v[3]));
    s.add_segment(v[0], v[2]);
    s.add_segment(v[1], v[3]);
    s.add_segment(cplx(0.0, 0.0), qa.w2);
    s.add_point("0", cplx(0.0, 0.0));
    s.add_point("w", qa.w);
    s.add_point("w2", qa.w2);
    return s;
}

}  // namespace

Scene build_figure(const std::string& name, const QuadAnalysis& qa) {
    if (name == "quadrilateral") return figure_quadrilateral(qa);
    if (name == "ideal") return figure_ideal(qa);
    if (name == "orthocenter") return figure_orthocenter(qa);
    if (name == "rhomboid") return figure_rhomboid(qa);
    if (name == "orthogonal-circle") return figure_orthogonal_circle(qa);
    if (name == "midpoint") return figure_midpoint_quad(qa);
    if (name == "symmetrization") {
        const OrderedQuadruple q(qa.vertices[0], qa.vertices[1], qa.vertices[2], qa.vertices[3]);
        return build_symmetrization_figure(q, symmetrize(q));
    }
    if (name == "five-points")
        throw UsageError("figure five-points takes --x and --y instead of a quadruple");
    throw UsageError("unknown figure: " + name);
}

Scene build_midpoint_figure(DiskPoint x, DiskPoint y) {
    Scene s;
    const MidpointWitness w = midpoint_witness(x, y);
    s.add_arc(geodesic_through(x, y));
    s.add_segment(cplx(0.0, 0.0), w.u.value());
    s.add_point("0", cplx(0.0, 0.0));
    s.add_point("x", x.value());
    s.add_point("y", y.value());
    s.add_point("z", w.z.value());
    s.add_point("u", w.u.value());
    return s;
}

Scene build_five_points_figure(DiskPoint x, DiskPoint y) {
    Scene s;
    const FivePoints fp = five_points(x, y);
    const DiskPoint z = hyperbolic_midpoint(x, y);
    s.add_arc(geodesic_through(x, y));
    s.add_line(cplx(0.0, 0.0), z.value());
    s.add_point("0", cplx(0.0, 0.0));
    s.add_point("x", x.value());
    s.add_point("y", y.value());
    s.add_point("z", z.value());
    const std::pair<const char*, const ExtendedPoint*> pts[] = {
        {"k", &fp.k}, {"v", &fp.v}, {"s", &fp.s}, {"u", &fp.u}, {"t", &fp.t}};
    for (const auto& [label, ep] : pts)
        if (!ep->is_infinity()) s.add_point(label, ep->value());
    return s;
}

Scene build_symmetrization_figure(const OrderedQuadruple& input, const SymmetrizeResult& sym) {
    Scene s;
    const auto in = input.points();
    const char* in_names[4] = {"a", "b", "c", "d"};
    for (int i = 0; i < 4; ++i) s.add_point(in_names[i], in[i]);
    const auto out = sym.quad.points();
    const char* out_names[4] = {"as", "bs", "cs", "ds"};
    for (int i = 0; i < 4; ++i) s.add_point(out_names[i], out[i]);
    s.add_arc(ideal_geodesic(in[0], in[2]));
    s.add_arc(ideal_geodesic(in[1], in[3]));
    s.add_arc(ideal_geodesic(out[0], out[2]));
    s.add_arc(ideal_geodesic(out[1], out[3]));
    if (std::abs(sym.w) > 1e-12) s.add_line(cplx(0.0, 0.0), sym.w);
    s.add_point("w", sym.w);
    return s;
}

}  // namespace diskgeom
