#include <cmath>
#include <random>

#include "diskgeom/scene.hpp"
#include "diskgeom/svg.hpp"
#include "doctest.h"
#include "support/generators.hpp"
#include "support/svg_check.hpp"

using diskgeom::cplx;
using diskgeom::OrderedQuadruple;
using diskgeom::Scene;

namespace {
const cplx I(0.0, 1.0);

OrderedQuadruple generic_quad() {
    return OrderedQuadruple::from_angles(10.0 * std::numbers::pi / 180.0,
                                         80.0 * std::numbers::pi / 180.0,
                                         200.0 * std::numbers::pi / 180.0,
                                         290.0 * std::numbers::pi / 180.0);
}
}  // namespace

TEST_CASE("scene invariants") {
    Scene s;
    s.add_point("a", cplx(0.1, 0.2));
    CHECK_THROWS_AS(s.add_point("a", cplx(0.3, 0.0)), std::invalid_argument);
    CHECK_THROWS_AS(s.add_point("b", cplx(std::nan(""), 0.0)), std::invalid_argument);
    CHECK_THROWS_AS(s.add_line(cplx(0.0, 0.0), cplx(0.0, 0.0)), std::invalid_argument);
}

TEST_CASE("emit_svg: empty scene has exactly the unit circle") {
    Scene s;
    const std::string svg = diskgeom::emit_svg(s, 400);
    CHECK(svg_check::count_occurrences(svg, "<circle") == 1);
    CHECK(svg.find("viewBox=\"-1.2 -1.2 2.4 2.4\"") != std::string::npos);
    CHECK(svg.find("width=\"400\"") != std::string::npos);
}

TEST_CASE("emit_svg is deterministic") {
    const auto qa = diskgeom::analyze(generic_quad());
    const Scene s = diskgeom::build_figure("rhomboid", qa);
    const std::string once = diskgeom::emit_svg(s, 800);
    const std::string twice = diskgeom::emit_svg(diskgeom::build_figure("rhomboid", qa), 800);
    CHECK(once == twice);
}

TEST_CASE("rhomboid figure: one unit circle, four circumcircles, rhomboid, labels p1..p5") {
    const auto qa = diskgeom::analyze(generic_quad());
    const std::string svg = diskgeom::emit_svg(diskgeom::build_figure("rhomboid", qa), 800);
    // stroked circles: unit circle + the four circumcircles
    CHECK(svg_check::count_occurrences(svg, "fill=\"none\" stroke=\"black\"") >= 5);
    CHECK(svg_check::count_occurrences(svg, "stroke-width=\"0.008\"") == 1);  // unit circle
    int stroked_circles = 0;
    std::size_t pos = 0;
    while ((pos = svg.find("<circle", pos)) != std::string::npos) {
        const std::size_t end = svg.find("/>", pos);
        const std::string el = svg.substr(pos, end - pos);
        if (el.find("fill=\"none\"") != std::string::npos) ++stroked_circles;
        pos = end;
    }
    CHECK(stroked_circles == 5);
    for (const char* label : {">p1<", ">p2<", ">p3<", ">p4<", ">p5<"})
        CHECK(svg.find(label) != std::string::npos);
    // rhomboid = four segments
    CHECK(svg_check::count_occurrences(svg, "<line") >= 4);
}

TEST_CASE("ideal figure arcs stay inside the closed disk") {
    const auto qa = diskgeom::analyze(generic_quad());
    const std::string svg = diskgeom::emit_svg(diskgeom::build_figure("ideal", qa), 800);
    const auto arcs = svg_check::parse_arcs(svg);
    CHECK(arcs.size() == 4);
    for (const auto& arc : arcs)
        for (cplx z : svg_check::sample_arc(arc, 256)) CHECK(std::abs(z) <= 1.0 + 1e-6);
}

TEST_CASE("figures for many random quadruples emit in-disk arcs") {
    std::mt19937_64 rng(601);
    int tested = 0;
    while (tested < 50) {
        const OrderedQuadruple q = gen::quadruple(rng);
        const auto qa = diskgeom::analyze(q);
        if (!qa.w1 || !qa.w3 || !qa.v2) continue;
        for (const char* name : {"ideal", "orthogonal-circle", "midpoint"}) {
            const std::string svg = diskgeom::emit_svg(diskgeom::build_figure(name, qa), 640);
            for (const auto& arc : svg_check::parse_arcs(svg))
                for (cplx z : svg_check::sample_arc(arc, 128)) CHECK(std::abs(z) <= 1.0 + 1e-6);
        }
        ++tested;
    }
}

TEST_CASE("missing fields are reported by name") {
    const auto sq = diskgeom::analyze(OrderedQuadruple(1.0, I, -1.0, -I));
    CHECK_THROWS_WITH_AS(diskgeom::build_figure("orthocenter", sq),
                         doctest::Contains("w1"), diskgeom::MissingField);
    CHECK_THROWS_AS(diskgeom::build_figure("orthogonal-circle", sq), diskgeom::MissingField);
    CHECK_THROWS_AS(diskgeom::build_figure("nonsense", sq), diskgeom::UsageError);
}

TEST_CASE("point-pair figures") {
    const diskgeom::DiskPoint x(cplx(0.5, 0.0)), y(cplx(0.0, 0.5));
    const Scene mid = diskgeom::build_midpoint_figure(x, y);
    const std::string mid_svg = diskgeom::emit_svg(mid, 512);
    for (const char* label : {">x<", ">y<", ">z<", ">u<"})
        CHECK(mid_svg.find(label) != std::string::npos);

    const Scene five = diskgeom::build_five_points_figure(x, y);
    const std::string five_svg = diskgeom::emit_svg(five, 512);
    for (const char* label : {">k<", ">v<", ">s<", ">u<", ">t<", ">z<"})
        CHECK(five_svg.find(label) != std::string::npos);
    for (const auto& arc : svg_check::parse_arcs(five_svg))
        for (cplx z : svg_check::sample_arc(arc, 128)) CHECK(std::abs(z) <= 1.0 + 1e-6);
}

TEST_CASE("symmetrization figure") {
    std::mt19937_64 rng(602);
    const OrderedQuadruple q = gen::quadruple(rng);
    const auto sym = diskgeom::symmetrize(q);
    const Scene s = diskgeom::build_symmetrization_figure(q, sym);
    const std::string svg = diskgeom::emit_svg(s, 512);
    for (const char* label : {">as<", ">bs<", ">cs<", ">ds<", ">w<"})
        CHECK(svg.find(label) != std::string::npos);
}
