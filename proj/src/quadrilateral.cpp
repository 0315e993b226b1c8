#include "diskgeom/quadrilateral.hpp"

#include <cmath>
#include <numbers>

namespace diskgeom {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double arg_2pi(cplx z) {
    double a = std::arg(z);
    if (a < 0.0) a += kTwoPi;
    return a;
}

// sinh(rho/2) straight from the metric definition; avoids an asinh/sinh
// round trip in the ratio identities.
double sh_half_rho(cplx x, cplx y) {
    return std::abs(x - y) / std::sqrt((1.0 - std::norm(x)) * (1.0 - std::norm(y)));
}

}  // namespace

OrderedQuadruple::OrderedQuadruple(cplx a, cplx b, cplx c, cplx d, double tol)
    : a_(a), b_(b), c_(c), d_(d) {
    for (cplx z : {a, b, c, d})
        if (std::abs(std::abs(z) - 1.0) > tol)
            throw NotUnimodular("OrderedQuadruple: vertex is not on the unit circle");
    const std::array<cplx, 4> p{a, b, c, d};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (std::abs(p[i] - p[j]) <= 1e-9)
                throw DegenerateQuadruple("OrderedQuadruple: two vertices coincide");
    const double tb = arg_2pi(b / a), tc = arg_2pi(c / a), td = arg_2pi(d / a);
    if (!(tb < tc && tc < td))
        throw DegenerateQuadruple("OrderedQuadruple: vertices are not in positive order");
}

OrderedQuadruple OrderedQuadruple::from_angles(double a, double b, double c, double d, double tol) {
    return OrderedQuadruple(std::polar(1.0, a), std::polar(1.0, b), std::polar(1.0, c),
                            std::polar(1.0, d), tol);
}

VertexIntersections vertex_intersections(const OrderedQuadruple& q) {
    VertexIntersections w{
        unit_line_intersection(q.a(), q.b(), q.c(), q.d()),
        unit_line_intersection(q.a(), q.c(), q.b(), q.d()),
        unit_line_intersection(q.a(), q.d(), q.b(), q.c()),
    };
    // Diagonals of a convex cyclic quadrilateral always cross inside.
    if (w.w2.is_infinity() || std::abs(w.w2.value()) >= 1.0)
        throw DegenerateQuadruple("vertex_intersections: diagonal crossing left the disk");
    return w;
}

DiskPoint diagonal_hyperbolic_intersection(const OrderedQuadruple& q) {
    const cplx a = q.a(), b = q.b(), c = q.c(), d = q.d();
    const cplx qa = a - b + c - d;
    const cplx qb = -2.0 * (a * c - b * d);
    const cplx qc = a * c * (b + d) - b * d * (a + c);

    cplx r1, r2;
    if (std::abs(qa) <= 1e-12 * std::abs(a * c - b * d)) {
        // Leading coefficient vanishes (the square sits here): linear branch.
        const cplx y = -qc / qb;
        if (std::abs(y) >= 1.0 - 1e-12)
            throw NoInteriorRoot("diagonal_hyperbolic_intersection: linear root not inside the disk");
        return DiskPoint(y);
    }
    const cplx disc = qb * qb - 4.0 * qa * qc;
    cplx sq = std::sqrt(disc);
    if (std::real(std::conj(qb) * sq) < 0.0) sq = -sq;
    const cplx p = -0.5 * (qb + sq);
    if (std::abs(p) > 1e-30 * std::abs(qc)) {
        r1 = p / qa;
        r2 = qc / p;
    } else {
        r1 = (-qb + sq) / (2.0 * qa);
        r2 = (-qb - sq) / (2.0 * qa);
    }
    const cplx y = std::abs(r1) < std::abs(r2) ? r1 : r2;
    if (std::abs(y) >= 1.0 - 1e-12)
        throw NoInteriorRoot("diagonal_hyperbolic_intersection: no root inside the disk");
    return DiskPoint(y);
}

SideDistances opposite_side_distances(const OrderedQuadruple& q) {
    const double cr1 = cross_ratio(q.a(), q.b(), q.c(), q.d());
    const double cr2 = cross_ratio(q.d(), q.a(), q.b(), q.c());
    if (cr1 <= 1.0 + 1e-12 || cr2 <= 1.0 + 1e-12)
        throw DegenerateQuadruple("opposite_side_distances: cross ratio not above 1");
    return {2.0 * std::atanh(std::sqrt(1.0 / cr1)), 2.0 * std::atanh(std::sqrt(1.0 / cr2))};
}

LambertFeet lambert_feet(const OrderedQuadruple& q) {
    const VertexIntersections w = vertex_intersections(q);
    const cplx w2 = w.w2.value();

    LambertFeet feet{};
    feet.w1_at_infinity = w.w1.is_infinity();
    feet.w3_at_infinity = w.w3.is_infinity();
    // A side-line intersection at infinity means that side pair is parallel;
    // the line L[w1,w2] degenerates to the line through w2 in that direction.
    const cplx w1p = feet.w1_at_infinity ? w2 + (q.b() - q.a()) : w.w1.value();
    const cplx w3p = feet.w3_at_infinity ? w2 + (q.d() - q.a()) : w.w3.value();

    auto foot = [&](cplx wp, cplx s1, cplx s2) {
        const ExtendedPoint t = line_intersection(wp, w2, s1, s2);
        if (t.is_infinity())
            throw DegenerateConfiguration("lambert_feet: foot escaped to infinity");
        return t.value();
    };
    feet.t1 = foot(w3p, q.a(), q.b());
    feet.t2 = foot(w1p, q.b(), q.c());
    feet.t3 = foot(w3p, q.c(), q.d());
    feet.t4 = foot(w1p, q.a(), q.d());
    for (cplx t : {feet.t1, feet.t2, feet.t3, feet.t4})
        if (std::abs(t) >= 1.0)
            throw DegenerateConfiguration("lambert_feet: foot left the unit disk");
    return feet;
}

TheoremRatios theorem12_ratios(const OrderedQuadruple& q) {
    const LambertFeet f = lambert_feet(q);
    const cplx w2 = vertex_intersections(q).w2.value();
    // The (t1,t3) transversal runs between sides [a,d] and [b,c], whose
    // geodesic gap is d1; the (t2,t4) one measures d2.
    TheoremRatios r{};
    r.r1 = (sh_half_rho(w2, f.t1) + sh_half_rho(w2, f.t3)) / sh_half_rho(f.t1, f.t3);
    r.r2 = (sh_half_rho(w2, f.t2) + sh_half_rho(w2, f.t4)) / sh_half_rho(f.t2, f.t4);
    return r;
}

RhomboidCenters rhomboid_centers(const OrderedQuadruple& q) {
    const cplx w2 = vertex_intersections(q).w2.value();
    auto center = [&](cplx u, cplx v) {
        const ExtendedPoint m = circumcenter(u, v, w2);
        if (m.is_infinity())
            throw DegenerateQuadruple("rhomboid_centers: a defining circle degenerated");
        return m.value();
    };
    RhomboidCenters rc{};
    rc.p1 = center(q.a(), q.b());
    rc.p2 = center(q.b(), q.c());
    rc.p3 = center(q.c(), q.d());
    rc.p4 = center(q.a(), q.d());
    const ExtendedPoint p5 = line_intersection(rc.p1, rc.p3, rc.p2, rc.p4);
    if (p5.is_infinity())
        throw DegenerateQuadruple("rhomboid_centers: rhomboid diagonals are parallel");
    rc.p5 = p5.value();
    return rc;
}

SecondaryPoints secondary_points(const OrderedQuadruple& q) {
    const cplx w2 = vertex_intersections(q).w2.value();
    const RhomboidCenters rc = rhomboid_centers(q);
    // The two intersection points of two circles are mirror images across the
    // line of centers; w2 is known, so the second point is its reflection.
    const cplx v1 = reflect_across_line(w2, rc.p1, rc.p3);
    const cplx v2 = reflect_across_line(w2, rc.p2, rc.p4);
    if (std::abs(v1 - w2) <= 1e-12 || std::abs(v2 - w2) <= 1e-12)
        throw TangentCircles("secondary_points: circles touch only at w2");
    return {v1, v2};
}

OrthogonalCircleData orthogonal_circle_and_bisector(const OrderedQuadruple& q) {
    const VertexIntersections w = vertex_intersections(q);
    if (w.w1.is_infinity())
        throw DegenerateConfiguration("orthogonal_circle_and_bisector: w1 is at infinity");
    const cplx w1 = w.w1.value();
    const double r2 = std::norm(w1) - 1.0;
    if (r2 <= 0.0)
        throw DegenerateConfiguration("orthogonal_circle_and_bisector: w1 is not outside the disk");
    const Circle co(w1, std::sqrt(r2));
    auto [p, q_pt] = unit_circle_intersection(co);
    return {co, p, q_pt};
}

QuadAnalysis analyze(const OrderedQuadruple& q) {
    QuadAnalysis out{};
    out.vertices = q.points();
    out.cross_ratio = cross_ratio(q.a(), q.b(), q.c(), q.d());

    const VertexIntersections w = vertex_intersections(q);
    if (w.w1.is_infinity())
        out.degenerate_reasons["w1"] = "sides [a,b] and [c,d] are parallel";
    else
        out.w1 = w.w1.value();
    if (w.w3.is_infinity())
        out.degenerate_reasons["w3"] = "sides [a,d] and [b,c] are parallel";
    else
        out.w3 = w.w3.value();
    out.w2 = w.w2.value();
    out.w = diagonal_hyperbolic_intersection(q).value();

    const SideDistances d = opposite_side_distances(q);
    out.d1 = d.d1;
    out.d2 = d.d2;

    const LambertFeet feet = lambert_feet(q);
    out.t1 = feet.t1;
    out.t2 = feet.t2;
    out.t3 = feet.t3;
    out.t4 = feet.t4;
    out.feet_fallback = feet.w1_at_infinity || feet.w3_at_infinity;

    const RhomboidCenters rc = rhomboid_centers(q);
    out.p1 = rc.p1;
    out.p2 = rc.p2;
    out.p3 = rc.p3;
    out.p4 = rc.p4;
    out.p5 = rc.p5;

    try {
        const SecondaryPoints v = secondary_points(q);
        out.v1 = v.v1;
        out.v2 = v.v2;
    } catch (const TangentCircles&) {
        out.degenerate_reasons["v1"] = "C[a,b,w2] and C[c,d,w2] are tangent at w2";
        out.degenerate_reasons["v2"] = "C[b,c,w2] and C[a,d,w2] are tangent at w2";
    }

    try {
        const OrthogonalCircleData oc = orthogonal_circle_and_bisector(q);
        out.co = oc.co;
        out.p = oc.p;
        out.q = oc.q;
    } catch (const DegenerateConfiguration&) {
        out.degenerate_reasons["co"] = "w1 is at infinity";
        out.degenerate_reasons["p"] = "w1 is at infinity";
        out.degenerate_reasons["q"] = "w1 is at infinity";
    }
    return out;
}

}  // namespace diskgeom
