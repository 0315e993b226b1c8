#include <cmath>
#include <numbers>
#include <random>

#include "diskgeom/hyperbolic.hpp"
#include "doctest.h"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using diskgeom::cplx;
using diskgeom::DiskPoint;
using diskgeom::ExtendedPoint;
using diskgeom::Geodesic;
using diskgeom::MobiusMap;

namespace {
const cplx I(0.0, 1.0);

cplx image(const MobiusMap& m, cplx z) { return diskgeom::mobius_apply(m, z).value(); }
}  // namespace

TEST_CASE("DiskPoint rejects the boundary and beyond") {
    CHECK_NOTHROW(DiskPoint(cplx(0.99, 0.0)));
    CHECK_THROWS_AS(DiskPoint(cplx(1.0, 0.0)), diskgeom::OutOfDisk);
    CHECK_THROWS_AS(DiskPoint(cplx(0.0, 1.5)), diskgeom::OutOfDisk);
    CHECK_THROWS_AS(DiskPoint(cplx(1.0 - 1e-13, 0.0)), diskgeom::OutOfDisk);
}

TEST_CASE("hyperbolic_distance basics") {
    CHECK(diskgeom::hyperbolic_distance(cplx(0.3, 0.2), cplx(0.3, 0.2)) == 0.0);
    // sh(rho/2) = 0.8/0.6 -> rho = 2 ln 3
    CHECK(diskgeom::hyperbolic_distance(cplx(0.0, 0.0), cplx(0.8, 0.0)) ==
          doctest::Approx(2.0 * std::log(3.0)).epsilon(1e-14));

    std::mt19937_64 rng(201);
    for (int i = 0; i < 2000; ++i) {
        const cplx x = gen::disk_point(rng), y = gen::disk_point(rng);
        const double d = diskgeom::hyperbolic_distance(x, y);
        CHECK(d == diskgeom::hyperbolic_distance(y, x));
        CHECK(d >= 0.0);
        // triangle inequality
        const cplx z = gen::disk_point(rng);
        CHECK(diskgeom::hyperbolic_distance(x, z) <=
              diskgeom::hyperbolic_distance(x, y) + diskgeom::hyperbolic_distance(y, z) + 1e-12);
    }
}

TEST_CASE("hyperbolic_distance is Mobius invariant") {
    std::mt19937_64 rng(202);
    for (int i = 0; i < 2000; ++i) {
        const MobiusMap t = gen::disk_automorphism(rng);
        const cplx x = gen::disk_point(rng), y = gen::disk_point(rng);
        const double before = diskgeom::hyperbolic_distance(x, y);
        const double after = diskgeom::hyperbolic_distance(image(t, x), image(t, y));
        CHECK(std::abs(before - after) < 1e-10);
    }
}

TEST_CASE("distance_cosh_form agrees with the sinh form") {
    CHECK(diskgeom::distance_cosh_form(cplx(0.5, 0.0), cplx(0.5, 0.0)) == 0.0);
    CHECK(diskgeom::distance_cosh_form(cplx(0.3, 0.0), cplx(0.0, 0.6)) ==
          doctest::Approx(diskgeom::hyperbolic_distance(cplx(0.3, 0.0), cplx(0.0, 0.6)))
              .epsilon(1e-12));
    CHECK(std::abs(diskgeom::distance_cosh_form(cplx(0.1, 0.0), cplx(0.2, 0.0)) -
                   diskgeom::hyperbolic_distance(cplx(0.1, 0.0), cplx(0.2, 0.0))) < 1e-12);
    CHECK_THROWS_AS(diskgeom::distance_cosh_form(cplx(0.0, 0.0), cplx(0.5, 0.0)),
                    diskgeom::ZeroArgument);

    std::mt19937_64 rng(203);
    for (int i = 0; i < 2000; ++i) {
        const cplx x = gen::disk_point(rng), y = gen::disk_point(rng);
        if (std::abs(x) < 1e-6 || std::abs(y) < 1e-6) continue;
        CHECK(std::abs(diskgeom::distance_cosh_form(x, y) - diskgeom::hyperbolic_distance(x, y)) <
              1e-10);
    }
}

TEST_CASE("ahlfors_bracket") {
    std::mt19937_64 rng(204);
    for (int i = 0; i < 200; ++i) {
        const cplx y = gen::disk_point(rng);
        CHECK(diskgeom::ahlfors_bracket(cplx(0.0, 0.0), y) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(diskgeom::ahlfors_bracket(y, y) == doctest::Approx(1.0 - std::norm(y)).epsilon(1e-12));
    }
    CHECK(diskgeom::ahlfors_bracket(cplx(0.3, 0.0), cplx(-0.4, 0.0)) ==
          doctest::Approx(std::sqrt(0.91 * 0.84 + 0.49)).epsilon(1e-14));
}

TEST_CASE("t_a_map moves a to 0 and preserves the boundary") {
    std::mt19937_64 rng(205);
    for (int i = 0; i < 500; ++i) {
        const cplx a = gen::disk_point(rng);
        const MobiusMap t = diskgeom::t_a_map(a);
        CHECK(std::abs(image(t, a)) < 1e-14);
        CHECK(std::abs(image(t, cplx(0.0, 0.0)) + a) < 1e-14);
        const cplx u = gen::unit_point(rng);
        CHECK(std::abs(std::abs(image(t, u)) - 1.0) < 1e-12);
    }
}

TEST_CASE("lipschitz_t_a values and sampled stretch") {
    CHECK(diskgeom::lipschitz_t_a(cplx(0.0, 0.0)) == 1.0);
    CHECK(diskgeom::lipschitz_t_a(cplx(0.5, 0.0)) == doctest::Approx(3.0).epsilon(1e-14));

    std::mt19937_64 rng(206);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const cplx a(0.34, -0.41);
    const MobiusMap t = diskgeom::t_a_map(a);
    const double lip = diskgeom::lipschitz_t_a(a);
    double seen = 0.0;
    for (int i = 0; i < 20000; ++i) {
        const cplx x = gen::disk_point(rng, 0.999), y = gen::disk_point(rng, 0.999);
        if (std::abs(x - y) < 1e-9) continue;
        const double ratio = std::abs(image(t, x) - image(t, y)) / std::abs(x - y);
        CHECK(ratio <= lip * (1.0 + 1e-12));
        seen = std::max(seen, ratio);
    }
    // Pairs hugging the boundary at the maximal-stretch direction a/|a|.
    const cplx hot = a / std::abs(a);
    for (int i = 0; i < 200; ++i) {
        const cplx x = hot * std::polar(1.0 - 1e-6, 1e-5 * uni(rng));
        const cplx y = hot * std::polar(1.0 - 1e-6, -1e-5 * uni(rng));
        if (std::abs(x - y) < 1e-12) continue;
        seen = std::max(seen, std::abs(image(t, x) - image(t, y)) / std::abs(x - y));
    }
    CHECK(seen <= lip * (1.0 + 1e-12));
    CHECK(seen >= 0.99 * lip);
}

TEST_CASE("mobius apply / compose / inverse") {
    const MobiusMap id = MobiusMap::identity();
    CHECK(std::abs(image(id, cplx(0.3, 0.4)) - cplx(0.3, 0.4)) == 0.0);

    const MobiusMap m(1.0, 2.0, cplx(0.0, 1.0), 1.0);
    const cplx pole = -m.d / m.c;
    CHECK(diskgeom::mobius_apply(m, pole).is_infinity());
    CHECK(std::abs(image(m, cplx(0, 0)) - m.b / m.d) < 1e-15);
    // infinity -> a/c
    CHECK(std::abs(diskgeom::mobius_apply(m, ExtendedPoint::infinity()).value() - m.a / m.c) <
          1e-15);

    CHECK_THROWS_AS(MobiusMap(1.0, 2.0, 2.0, 4.0), diskgeom::DegenerateMap);

    std::mt19937_64 rng(207);
    for (int i = 0; i < 1000; ++i) {
        const MobiusMap m1 = gen::mobius(rng), m2 = gen::mobius(rng);
        const cplx z = gen::disk_point(rng);
        if (std::abs(m2.c * z + m2.d) < 0.2) continue;
        const ExtendedPoint inner = diskgeom::mobius_apply(m2, z);
        if (std::abs(m1.c * inner.value() + m1.d) < 0.2) continue;
        const cplx via_compose = image(diskgeom::mobius_compose(m1, m2), z);
        const cplx via_steps = image(m1, inner.value());
        CHECK(std::abs(via_compose - via_steps) < 1e-10 * std::max(1.0, std::abs(via_steps)));

        const cplx back = image(diskgeom::mobius_compose(diskgeom::mobius_inverse(m1), m1), z);
        CHECK(std::abs(back - z) < 1e-10);
    }
}

TEST_CASE("geodesic_through: diameters") {
    const Geodesic g = diskgeom::geodesic_through(cplx(0.2, 0.0), cplx(0.7, 0.0));
    CHECK(g.kind == Geodesic::Kind::Diameter);
    CHECK(std::abs(g.ideal_endpoints.first - cplx(-1.0, 0.0)) < 1e-12);
    CHECK(std::abs(g.ideal_endpoints.second - cplx(1.0, 0.0)) < 1e-12);

    // Swapping the arguments swaps the endpoints.
    const Geodesic r = diskgeom::geodesic_through(cplx(0.7, 0.0), cplx(0.2, 0.0));
    CHECK(std::abs(r.ideal_endpoints.first - cplx(1.0, 0.0)) < 1e-12);

    // Through the origin.
    const Geodesic o = diskgeom::geodesic_through(cplx(0.0, 0.0), cplx(0.3, 0.3));
    CHECK(o.kind == Geodesic::Kind::Diameter);

    CHECK_THROWS_AS(diskgeom::geodesic_through(cplx(0.1, 0.1), cplx(0.1, 0.1)),
                    diskgeom::IdenticalPoints);
}

TEST_CASE("geodesic_through: arcs are orthogonal, contain x and y, order endpoints") {
    const Geodesic g = diskgeom::geodesic_through(cplx(0.5, 0.0), cplx(0.0, 0.5));
    CHECK(g.kind == Geodesic::Kind::Arc);
    // The carrier also passes through the inverse point 2 = (0.5)*.
    CHECK(std::abs(std::abs(cplx(2.0, 0.0) - g.center) - g.radius) < 1e-12);

    std::mt19937_64 rng(208);
    int tested = 0;
    while (tested < 2000) {
        const cplx x = gen::disk_point(rng), y = gen::disk_point(rng);
        if (std::abs(x - y) < 1e-3) continue;
        if (std::abs(std::imag(std::conj(x) * y)) < 1e-6) continue;  // skip diameters
        const Geodesic a = diskgeom::geodesic_through(x, y);
        REQUIRE(a.kind == Geodesic::Kind::Arc);
        // orthogonality |c|^2 = 1 + r^2
        CHECK(std::abs(std::norm(a.center) - 1.0 - a.radius * a.radius) <
              1e-10 * std::max(1.0, std::norm(a.center)));
        // carrier contains x and y
        CHECK(std::abs(std::abs(x - a.center) - a.radius) < 1e-10 * std::max(1.0, a.radius));
        CHECK(std::abs(std::abs(y - a.center) - a.radius) < 1e-10 * std::max(1.0, a.radius));
        // endpoints on the unit circle and on the carrier
        for (cplx e : {a.ideal_endpoints.first, a.ideal_endpoints.second}) {
            CHECK(std::abs(std::abs(e) - 1.0) < 1e-10);
            CHECK(std::abs(std::abs(e - a.center) - a.radius) < 1e-10 * std::max(1.0, a.radius));
        }
        // endpoint set matches a generic circle-circle solve
        const auto ref = oracles::circle_circle(cplx(0.0, 0.0), 1.0, a.center, a.radius);
        REQUIRE(ref.size() == 2);
        CHECK(std::min(std::abs(a.ideal_endpoints.first - ref[0]),
                       std::abs(a.ideal_endpoints.first - ref[1])) < 1e-9);
        // traversal order x_*, x, y, y_*
        const double px = diskgeom::geodesic_parameter(a, x);
        const double py = diskgeom::geodesic_parameter(a, y);
        CHECK(0.0 < px);
        CHECK(px < py);
        CHECK(py < 1.0);
        // same carrier when arguments swap, endpoints reversed
        const Geodesic b = diskgeom::geodesic_through(y, x);
        CHECK(std::abs(b.center - a.center) < 1e-10 * std::max(1.0, std::abs(a.center)));
        CHECK(std::abs(b.radius - a.radius) < 1e-10 * std::max(1.0, a.radius));
        CHECK(std::abs(b.ideal_endpoints.first - a.ideal_endpoints.second) < 1e-10);
        ++tested;
    }
}

TEST_CASE("ideal_geodesic") {
    const Geodesic d = diskgeom::ideal_geodesic(cplx(1.0, 0.0), cplx(-1.0, 0.0));
    CHECK(d.kind == Geodesic::Kind::Diameter);

    const Geodesic g = diskgeom::ideal_geodesic(cplx(1.0, 0.0), I);
    CHECK(g.kind == Geodesic::Kind::Arc);
    CHECK(std::abs(g.center - cplx(1.0, 1.0)) < 1e-14);
    CHECK(g.radius == doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS(diskgeom::ideal_geodesic(cplx(0.5, 0.0), I), diskgeom::NotUnimodular);
    CHECK_THROWS_AS(diskgeom::ideal_geodesic(I, I), diskgeom::IdenticalPoints);

    std::mt19937_64 rng(209);
    int tested = 0;
    while (tested < 1000) {
        const cplx a = gen::unit_point(rng), b = gen::unit_point(rng);
        if (std::abs(a - b) < 1e-3 || std::abs(a + b) < 1e-3) continue;
        const Geodesic arc = diskgeom::ideal_geodesic(a, b);
        CHECK(std::abs(std::abs(a - arc.center) - arc.radius) < 1e-10 * std::max(1.0, arc.radius));
        CHECK(std::abs(std::abs(b - arc.center) - arc.radius) < 1e-10 * std::max(1.0, arc.radius));
        CHECK(std::abs(std::norm(arc.center) - 1.0 - arc.radius * arc.radius) <
              1e-10 * std::max(1.0, std::norm(arc.center)));
        ++tested;
    }
}

TEST_CASE("geodesic_pair_distance_oracle") {
    // Crossing diameters: distance 0.
    const Geodesic g1 = diskgeom::ideal_geodesic(cplx(1.0, 0.0), cplx(-1.0, 0.0));
    const Geodesic g2 = diskgeom::ideal_geodesic(I, -I);
    CHECK(diskgeom::geodesic_pair_distance_oracle(g1, g2, 128) < 1e-6);

    // Square quadruple: the opposite-side distance is 2 ln(1 + sqrt 2).
    const cplx a(1.0, 0.0), b = I, c(-1.0, 0.0), d = -I;
    const Geodesic s1 = diskgeom::ideal_geodesic(a, d);
    const Geodesic s2 = diskgeom::ideal_geodesic(b, c);
    const double expected = 2.0 * std::log(1.0 + std::sqrt(2.0));
    CHECK(std::abs(diskgeom::geodesic_pair_distance_oracle(s1, s2, 512) - expected) < 1e-5);

    // Monotone under grid refinement (nested grids).
    const double at128 = diskgeom::geodesic_pair_distance_oracle(s1, s2, 128);
    const double at1024 = diskgeom::geodesic_pair_distance_oracle(s1, s2, 1024);
    CHECK(at1024 <= at128 + 1e-12);
}

TEST_CASE("geodesic_point and geodesic_parameter round trip") {
    std::mt19937_64 rng(210);
    for (int i = 0; i < 200; ++i) {
        const cplx x = gen::disk_point(rng), y = gen::disk_point(rng);
        if (std::abs(x - y) < 1e-2) continue;
        const Geodesic g = diskgeom::geodesic_through(x, y);
        for (double t : {0.1, 0.35, 0.62, 0.9}) {
            const cplx z = diskgeom::geodesic_point(g, t);
            CHECK(std::abs(z) < 1.0);
            CHECK(diskgeom::geodesic_parameter(g, z) == doctest::Approx(t).epsilon(1e-9));
        }
    }
}
