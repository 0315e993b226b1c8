#pragma once

#include <complex>
#include <span>
#include <utility>

#include "diskgeom/errors.hpp"

namespace diskgeom {

using cplx = std::complex<double>;

/// A point of the extended complex plane: either a finite complex value or
/// the point at infinity. Finite coordinates are always finite doubles.
class ExtendedPoint {
public:
    ExtendedPoint(cplx z);  // NOLINT: implicit on purpose
    ExtendedPoint(double re) : ExtendedPoint(cplx(re, 0.0)) {}  // NOLINT
    ExtendedPoint(double re, double im) : ExtendedPoint(cplx(re, im)) {}
    static ExtendedPoint infinity() { return ExtendedPoint(); }

    bool is_infinity() const noexcept { return inf_; }
    /// Finite value; throws DegenerateInput when called on the infinity marker.
    cplx value() const;

private:
    ExtendedPoint() : val_(0.0), inf_(true) {}
    cplx val_;
    bool inf_;
};

struct Circle {
    cplx center;
    double radius;
    Circle(cplx center, double radius);
};

/// Intersection of line a-b with line c-d; infinity marker for parallel
/// distinct lines. Throws CoincidentLines / DegenerateInput.
ExtendedPoint line_intersection(cplx a, cplx b, cplx c, cplx d);

/// Same intersection for unit-modulus inputs via the simplified chord form
/// (ab(c+d) - cd(a+b)) / (ab - cd). Throws NotUnimodular.
ExtendedPoint unit_line_intersection(cplx a, cplx b, cplx c, cplx d);

/// Center of the circle through three points; infinity marker when collinear.
ExtendedPoint circumcenter(cplx a, cplx b, cplx c);

/// Orthocenter of a triangle (Euler's explicit formula). Throws CollinearInput.
cplx orthocenter(cplx a, cplx b, cplx c);

/// Absolute cross ratio |a-c||b-d| / (|a-b||c-d|), with the usual limit
/// convention when one argument is the point at infinity.
double cross_ratio(ExtendedPoint a, ExtendedPoint b, ExtendedPoint c, ExtendedPoint d);

/// Inversion in the unit circle: x -> x/|x|^2, 0 <-> infinity.
ExtendedPoint inverse_point(ExtendedPoint x);

/// True when every point lies within tol * diameter of the least-squares
/// line through the set. Fewer than three points are trivially collinear.
bool are_collinear(std::span<const cplx> points, double tol);

/// Circle through three non-collinear points. Throws CollinearInput.
Circle circle_through(cplx a, cplx b, cplx c);

/// Mirror image of z across the line through p and q.
cplx reflect_across_line(cplx z, cplx p, cplx q);

/// Both intersection points of a circle with the unit circle.
/// Throws DegenerateConfiguration when they do not meet in two points.
std::pair<cplx, cplx> unit_circle_intersection(const Circle& c);

}  // namespace diskgeom
