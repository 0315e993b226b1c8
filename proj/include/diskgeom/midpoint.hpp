#pragma once

#include "diskgeom/hyperbolic.hpp"

namespace diskgeom {

/// Closed-form hyperbolic midpoint z of the geodesic segment from x to y:
/// z = (y(1-|x|^2) + x(1-|y|^2)) / (1 - |x|^2|y|^2 + A[x,y] sqrt((1-|x|^2)(1-|y|^2))).
DiskPoint hyperbolic_midpoint(DiskPoint x, DiskPoint y);

/// u = (y(1-|x|^2) + x(1-|y|^2)) / (1 - |x|^2|y|^2); the segment from 0 to u
/// has the same hyperbolic midpoint as the one from x to y.
DiskPoint point_u(DiskPoint x, DiskPoint y);

/// Gyro-scalar half: x / (1 + sqrt(1-|x|^2)); doubling under mobius_add gives x back.
DiskPoint gyro_half(DiskPoint x);

/// Mobius addition (x + y) / (1 + conj(x) y).
DiskPoint mobius_add(DiskPoint x, DiskPoint y);

/// Mobius coaddition; shares its closed form with point_u.
DiskPoint coaddition(DiskPoint x, DiskPoint y);

/// gyro_half(coaddition(x, y)); coincides with hyperbolic_midpoint.
DiskPoint gyromidpoint(DiskPoint x, DiskPoint y);

struct FivePoints {
    ExtendedPoint k, v, s, u, t;
};

/// The five chord intersections built from x, y, their inverse points and the
/// ideal endpoints of the geodesic through them; all finite ones lie on the
/// line through 0 and the hyperbolic midpoint. Requires 0, x, y non-collinear.
FivePoints five_points(DiskPoint x, DiskPoint y);

struct MidpointWitness {
    DiskPoint x, y;
    DiskPoint z;  // hyperbolic midpoint
    DiskPoint u;  // auxiliary point with midpoint(0, u) == z
};

MidpointWitness midpoint_witness(DiskPoint x, DiskPoint y);

}  // namespace diskgeom
