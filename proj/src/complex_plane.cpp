#include "diskgeom/complex_plane.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace diskgeom {

namespace {

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double input_scale(std::initializer_list<cplx> zs) {
    double s = 1.0;
    for (cplx z : zs) s = std::max(s, std::abs(z));
    return s;
}

}  // namespace

ExtendedPoint::ExtendedPoint(cplx z) : val_(z), inf_(false) {
    if (!finite(z)) throw DegenerateInput("ExtendedPoint: non-finite coordinates");
}

cplx ExtendedPoint::value() const {
    if (inf_) throw DegenerateInput("ExtendedPoint: arithmetic on the point at infinity");
    return val_;
}

Circle::Circle(cplx center_, double radius_) : center(center_), radius(radius_) {
    if (!finite(center) || !std::isfinite(radius) || radius <= 0.0)
        throw DegenerateInput("Circle: requires a finite center and positive radius");
}

ExtendedPoint line_intersection(cplx a, cplx b, cplx c, cplx d) {
    const double scale = input_scale({a, b, c, d});
    const double s_ab = std::abs(a - b);
    const double s_cd = std::abs(c - d);
    if (s_ab <= 1e-13 * scale || s_cd <= 1e-13 * scale)
        throw DegenerateInput("line_intersection: the two points of a line coincide");

    const cplx ab = std::conj(a) * b - a * std::conj(b);
    const cplx cd = std::conj(c) * d - c * std::conj(d);
    const cplx u = ab * (c - d) - (a - b) * cd;
    const cplx v = (std::conj(a) - std::conj(b)) * (c - d) - (a - b) * (std::conj(c) - std::conj(d));

    const double v_scale = 2.0 * s_ab * s_cd;
    const double u_scale = std::abs(ab) * s_cd + s_ab * std::abs(cd) + v_scale * scale;
    if (std::abs(v) <= 1e-12 * v_scale) {
        if (std::abs(u) <= 1e-12 * u_scale)
            throw CoincidentLines("line_intersection: the two lines coincide");
        return ExtendedPoint::infinity();
    }
    return ExtendedPoint(u / v);
}

ExtendedPoint unit_line_intersection(cplx a, cplx b, cplx c, cplx d) {
    for (cplx z : {a, b, c, d})
        if (std::abs(std::abs(z) - 1.0) > 1e-9)
            throw NotUnimodular("unit_line_intersection: input is not on the unit circle");
    if (std::abs(a - b) <= 1e-13 || std::abs(c - d) <= 1e-13)
        throw DegenerateInput("unit_line_intersection: the two points of a chord coincide");

    const cplx ab = a * b;
    const cplx cd = c * d;
    const cplx num = ab * (c + d) - cd * (a + b);
    const cplx den = ab - cd;
    if (std::abs(den) <= 1e-12) {
        if (std::abs(num) <= 1e-11) throw CoincidentLines("unit_line_intersection: chords lie on one line");
        return ExtendedPoint::infinity();
    }
    return ExtendedPoint(num / den);
}

ExtendedPoint circumcenter(cplx a, cplx b, cplx c) {
    const double scale = input_scale({a, b, c});
    if (std::abs(a - b) <= 1e-13 * scale || std::abs(b - c) <= 1e-13 * scale ||
        std::abs(a - c) <= 1e-13 * scale)
        throw DegenerateInput("circumcenter: repeated point");

    const cplx num = std::norm(a) * (b - c) + std::norm(b) * (c - a) + std::norm(c) * (a - b);
    const cplx den = a * (std::conj(c) - std::conj(b)) + b * (std::conj(a) - std::conj(c)) +
                     c * (std::conj(b) - std::conj(a));
    const double den_scale = std::abs(a) * std::abs(c - b) + std::abs(b) * std::abs(a - c) +
                             std::abs(c) * std::abs(b - a) + scale;
    if (std::abs(den) <= 1e-12 * den_scale) return ExtendedPoint::infinity();
    return ExtendedPoint(num / den);
}

cplx orthocenter(cplx a, cplx b, cplx c) {
    const cplx num = std::conj(a) * (b + c - a) * (b - c) + std::conj(b) * (c + a - b) * (c - a) +
                     std::conj(c) * (a + b - c) * (a - b);
    const cplx den = std::conj(a) * (b - c) + std::conj(b) * (c - a) + std::conj(c) * (a - b);
    const double scale = input_scale({a, b, c});
    const double den_scale = std::abs(a) * std::abs(b - c) + std::abs(b) * std::abs(c - a) +
                             std::abs(c) * std::abs(a - b) + scale;
    if (std::abs(den) <= 1e-12 * den_scale)
        throw CollinearInput("orthocenter: vertices are collinear");
    return num / den;
}

double cross_ratio(ExtendedPoint a, ExtendedPoint b, ExtendedPoint c, ExtendedPoint d) {
    const ExtendedPoint pts[4] = {a, b, c, d};
    int n_inf = 0;
    double scale = 1.0;
    for (const auto& p : pts) {
        if (p.is_infinity())
            ++n_inf;
        else
            scale = std::max(scale, std::abs(p.value()));
    }
    if (n_inf > 1) throw DegenerateInput("cross_ratio: more than one point at infinity");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            if (pts[i].is_infinity() || pts[j].is_infinity()) continue;
            if (std::abs(pts[i].value() - pts[j].value()) <= 1e-14 * scale)
                throw DegenerateInput("cross_ratio: repeated point");
        }

    // Factors containing the infinite argument cancel in the limit.
    auto factor = [](const ExtendedPoint& u, const ExtendedPoint& v) -> double {
        if (u.is_infinity() || v.is_infinity()) return 1.0;
        return std::abs(u.value() - v.value());
    };
    const double num = factor(a, c) * factor(b, d);
    const double den = factor(a, b) * factor(c, d);
    return num / den;
}

ExtendedPoint inverse_point(ExtendedPoint x) {
    if (x.is_infinity()) return ExtendedPoint(cplx(0.0, 0.0));
    const cplx z = x.value();
    if (z == cplx(0.0, 0.0)) return ExtendedPoint::infinity();
    return ExtendedPoint(z / std::norm(z));
}

bool are_collinear(std::span<const cplx> points, double tol) {
    const std::size_t n = points.size();
    if (n <= 2) return true;

    double diameter = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            diameter = std::max(diameter, std::abs(points[i] - points[j]));
    if (diameter <= 0.0) return true;

    cplx mean(0.0, 0.0);
    for (cplx p : points) mean += p;
    mean /= static_cast<double>(n);

    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (cplx p : points) {
        const double dx = p.real() - mean.real();
        const double dy = p.imag() - mean.imag();
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    // Principal axis of the centered scatter; residuals are measured against it.
    const double theta = 0.5 * std::atan2(2.0 * sxy, sxx - syy);
    const cplx dir = std::polar(1.0, theta);

    double worst = 0.0;
    for (cplx p : points)
        worst = std::max(worst, std::abs(std::imag((p - mean) * std::conj(dir))));
    return worst <= tol * diameter;
}

Circle circle_through(cplx a, cplx b, cplx c) {
    const ExtendedPoint m = circumcenter(a, b, c);
    if (m.is_infinity()) throw CollinearInput("circle_through: points are collinear");
    const cplx center = m.value();
    const double radius = (std::abs(a - center) + std::abs(b - center) + std::abs(c - center)) / 3.0;
    return Circle(center, radius);
}

cplx reflect_across_line(cplx z, cplx p, cplx q) {
    const cplx d = q - p;
    if (std::abs(d) <= 1e-300) throw DegenerateInput("reflect_across_line: p equals q");
    const cplx u = d / std::abs(d);
    return p + u * u * std::conj(z - p);
}

std::pair<cplx, cplx> unit_circle_intersection(const Circle& c) {
    const double d = std::abs(c.center);
    if (d <= 1e-300)
        throw DegenerateConfiguration("unit_circle_intersection: concentric with the unit circle");
    const double x = (d * d + 1.0 - c.radius * c.radius) / (2.0 * d);
    const double h2 = 1.0 - x * x;
    if (h2 <= 0.0)
        throw DegenerateConfiguration("unit_circle_intersection: circles do not meet in two points");
    const double h = std::sqrt(h2);
    const cplx axis = c.center / d;
    return {axis * cplx(x, h), axis * cplx(x, -h)};
}

}  // namespace diskgeom
