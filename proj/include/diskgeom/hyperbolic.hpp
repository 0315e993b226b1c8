#pragma once

#include <utility>

#include "diskgeom/complex_plane.hpp"

namespace diskgeom {

/// A point strictly inside the unit disk. Construction rejects anything
/// within 1e-12 of the boundary; ideal (boundary) points are plain cplx
/// values checked for unit modulus by the operations that take them.
class DiskPoint {
public:
    DiskPoint(cplx z);  // NOLINT: implicit on purpose
    DiskPoint(double re, double im) : DiskPoint(cplx(re, im)) {}
    cplx value() const noexcept { return v_; }
    operator cplx() const noexcept { return v_; }

private:
    cplx v_;
};

/// Fractional-linear map z -> (a z + b) / (c z + d), det != 0.
struct MobiusMap {
    cplx a, b, c, d;
    MobiusMap(cplx a, cplx b, cplx c, cplx d);
    static MobiusMap identity() { return MobiusMap(1.0, 0.0, 0.0, 1.0); }
    cplx det() const { return a * d - b * c; }
};

/// A hyperbolic line of the disk: a diameter, or an arc of a circle
/// orthogonal to the unit circle. `ideal_endpoints` = (x_*, y_*) ordered so
/// that x_*, x, y, y_* lie in this order along the carrier.
struct Geodesic {
    enum class Kind { Diameter, Arc };
    Kind kind;
    cplx direction;   // Diameter only: unit vector from x toward y
    cplx center;      // Arc only: |center| > 1
    double radius;    // Arc only
    std::pair<cplx, cplx> ideal_endpoints;
};

/// rho(x,y) = 2 arsinh(|x-y| / sqrt((1-|x|^2)(1-|y|^2))).
double hyperbolic_distance(DiskPoint x, DiskPoint y);

/// Equivalent cross-ratio form 2 arcosh(sqrt(|x,x*,y*,y|)); requires both
/// points nonzero (throws ZeroArgument otherwise).
double distance_cosh_form(DiskPoint x, DiskPoint y);

/// sqrt((1-|x|^2)(1-|y|^2) + |x-y|^2).
double ahlfors_bracket(DiskPoint x, DiskPoint y);

/// Disk automorphism z -> (z - a) / (1 - conj(a) z), sending a to 0.
MobiusMap t_a_map(DiskPoint a);

/// Euclidean Lipschitz constant of t_a_map(a): (1+|a|)/(1-|a|).
double lipschitz_t_a(DiskPoint a);

ExtendedPoint mobius_apply(const MobiusMap& m, ExtendedPoint z);
MobiusMap mobius_compose(const MobiusMap& m1, const MobiusMap& m2);  // acts as m1 after m2
MobiusMap mobius_inverse(const MobiusMap& m);

/// The geodesic through two distinct interior points.
Geodesic geodesic_through(DiskPoint x, DiskPoint y);

/// The geodesic with ideal endpoints a, b (unit modulus). Arc center is
/// 2ab/(a+b); antipodal endpoints give a diameter.
Geodesic ideal_geodesic(cplx a, cplx b);

/// Grid + golden-section estimate of inf rho over g1 x g2. Test oracle for
/// the closed-form opposite-side distances; returns 0 for crossing geodesics.
double geodesic_pair_distance_oracle(const Geodesic& g1, const Geodesic& g2, int grid);

/// Point of a geodesic at parameter t in (0,1); endpoints are the ideal ones.
cplx geodesic_point(const Geodesic& g, double t);

/// Inverse of geodesic_point for a point on the carrier: 0 at the first
/// ideal endpoint, 1 at the second.
double geodesic_parameter(const Geodesic& g, cplx z);

/// Unit tangent direction of the carrier at a point z of the geodesic
/// (defined up to sign).
cplx geodesic_tangent_at(const Geodesic& g, cplx z);

}  // namespace diskgeom
