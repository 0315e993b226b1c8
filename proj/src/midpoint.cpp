#include "diskgeom/midpoint.hpp"

#include <cmath>

namespace diskgeom {

DiskPoint hyperbolic_midpoint(DiskPoint x, DiskPoint y) {
    const cplx xv = x.value(), yv = y.value();
    if (std::abs(xv - yv) == 0.0) return x;  // the formula's limit is x anyway
    const double nx = 1.0 - std::norm(xv);
    const double ny = 1.0 - std::norm(yv);
    const double bracket = std::sqrt(nx * ny + std::norm(xv - yv));
    const cplx num = yv * nx + xv * ny;
    const double den = 1.0 - std::norm(xv) * std::norm(yv) + bracket * std::sqrt(nx * ny);
    return DiskPoint(num / den);
}

DiskPoint point_u(DiskPoint x, DiskPoint y) {
    const cplx xv = x.value(), yv = y.value();
    const double nx = 1.0 - std::norm(xv);
    const double ny = 1.0 - std::norm(yv);
    return DiskPoint((yv * nx + xv * ny) / (1.0 - std::norm(xv) * std::norm(yv)));
}

DiskPoint gyro_half(DiskPoint x) {
    const cplx xv = x.value();
    return DiskPoint(xv / (1.0 + std::sqrt(1.0 - std::norm(xv))));
}

DiskPoint mobius_add(DiskPoint x, DiskPoint y) {
    const cplx xv = x.value(), yv = y.value();
    return DiskPoint((xv + yv) / (1.0 + std::conj(xv) * yv));
}

DiskPoint coaddition(DiskPoint x, DiskPoint y) { return point_u(x, y); }

DiskPoint gyromidpoint(DiskPoint x, DiskPoint y) { return gyro_half(coaddition(x, y)); }

FivePoints five_points(DiskPoint x, DiskPoint y) {
    const cplx xv = x.value(), yv = y.value();
    const double collin = std::abs(std::imag(std::conj(xv) * yv));
    if (collin <= 1e-11 * std::max(std::abs(xv) * std::abs(yv), 1e-30))
        throw DegenerateConfiguration("five_points: 0, x, y are collinear");

    const Geodesic g = geodesic_through(x, y);
    const auto [xs, ys] = g.ideal_endpoints;  // x_*, y_* in traversal order
    // The endpoint ordering is load-bearing: x_*, x, y, y_* along the carrier.
    if (!(geodesic_parameter(g, xv) < geodesic_parameter(g, yv)))
        throw DegenerateConfiguration("five_points: geodesic endpoint order violated");

    const cplx xstar = xv / std::norm(xv);
    const cplx ystar = yv / std::norm(yv);

    FivePoints out{
        line_intersection(xs, xstar, ys, ystar),  // k
        line_intersection(xv, xs, yv, ys),        // v
        line_intersection(xv, ys, yv, xs),        // s
        line_intersection(xv, ystar, yv, xstar),  // u
        line_intersection(xs, ystar, ys, xstar),  // t
    };
    return out;
}

MidpointWitness midpoint_witness(DiskPoint x, DiskPoint y) {
    return MidpointWitness{x, y, hyperbolic_midpoint(x, y), point_u(x, y)};
}

}  // namespace diskgeom
