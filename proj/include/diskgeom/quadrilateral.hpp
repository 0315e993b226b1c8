#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "diskgeom/midpoint.hpp"

namespace diskgeom {

/// Four unit-modulus points in positive (counterclockwise) order.
class OrderedQuadruple {
public:
    OrderedQuadruple(cplx a, cplx b, cplx c, cplx d, double tol = 1e-9);
    static OrderedQuadruple from_angles(double a, double b, double c, double d,
                                        double tol = 1e-9);  // radians

    cplx a() const noexcept { return a_; }
    cplx b() const noexcept { return b_; }
    cplx c() const noexcept { return c_; }
    cplx d() const noexcept { return d_; }
    std::array<cplx, 4> points() const noexcept { return {a_, b_, c_, d_}; }

private:
    cplx a_, b_, c_, d_;
};

struct VertexIntersections {
    ExtendedPoint w1;  // L[a,b] ^ L[c,d]
    ExtendedPoint w2;  // L[a,c] ^ L[b,d]; always finite, inside the disk
    ExtendedPoint w3;  // L[a,d] ^ L[b,c]
};

VertexIntersections vertex_intersections(const OrderedQuadruple& q);

/// Crossing point of the diagonal geodesics, i.e. the interior root of
/// (a-b+c-d) z^2 - 2(ac-bd) z + (ac(b+d) - bd(a+c)) = 0.
DiskPoint diagonal_hyperbolic_intersection(const OrderedQuadruple& q);

struct SideDistances {
    double d1;  // between the geodesics over sides [a,d] and [b,c]
    double d2;  // between the geodesics over sides [a,b] and [c,d]
};

/// d1 = 2 artanh sqrt(1/|a,b,c,d|), d2 = 2 artanh sqrt(1/|d,a,b,c|).
SideDistances opposite_side_distances(const OrderedQuadruple& q);

struct LambertFeet {
    cplx t1, t2, t3, t4;
    bool w1_at_infinity;  // feet on L[w1,w2] built from the parallel-side direction
    bool w3_at_infinity;  // same for L[w3,w2]
};

/// t1 = L[w3,w2]^L[a,b], t2 = L[w1,w2]^L[b,c], t3 = L[w3,w2]^L[c,d],
/// t4 = L[w1,w2]^L[a,d]. When w1 (or w3) is at infinity the line through w2
/// keeps the direction of the then-parallel side pair.
LambertFeet lambert_feet(const OrderedQuadruple& q);

struct TheoremRatios {
    double r1;  // (sh + sh)/sh over w2, t1, t3; equals tanh(d1/2)
    double r2;  // same over w2, t2, t4; equals tanh(d2/2)
};

TheoremRatios theorem12_ratios(const OrderedQuadruple& q);

struct RhomboidCenters {
    cplx p1, p2, p3, p4;  // circumcenters of {a,b,w2}, {b,c,w2}, {c,d,w2}, {a,d,w2}
    cplx p5;              // diagonal crossing; equals w2/2
};

RhomboidCenters rhomboid_centers(const OrderedQuadruple& q);

struct SecondaryPoints {
    cplx v1;  // second point of C[a,b,w2] ^ C[c,d,w2]
    cplx v2;  // second point of C[b,c,w2] ^ C[a,d,w2]
};

/// Throws TangentCircles when the circle pairs touch only at w2.
SecondaryPoints secondary_points(const OrderedQuadruple& q);

struct OrthogonalCircleData {
    Circle co;  // orthogonal to the unit circle, centered at w1
    cplx p, q;  // its intersections with the unit circle
};

/// Throws DegenerateConfiguration when w1 is at infinity.
OrthogonalCircleData orthogonal_circle_and_bisector(const OrderedQuadruple& q);

/// Everything above in one bundle. Degenerate pieces are flagged with a
/// reason instead of throwing.
struct QuadAnalysis {
    std::array<cplx, 4> vertices;
    double cross_ratio;

    std::optional<cplx> w1, w3;
    cplx w2;
    cplx w;
    double d1, d2;
    cplx t1, t2, t3, t4;
    bool feet_fallback;
    cplx p1, p2, p3, p4, p5;
    std::optional<cplx> v1, v2;
    std::optional<Circle> co;
    std::optional<cplx> p, q;

    /// field name -> why it is missing
    std::map<std::string, std::string> degenerate_reasons;
};

QuadAnalysis analyze(const OrderedQuadruple& q);

}  // namespace diskgeom
