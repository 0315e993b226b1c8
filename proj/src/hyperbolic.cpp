#include "diskgeom/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

namespace diskgeom {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double mod_2pi(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    return r;
}

double rho_raw(cplx x, cplx y) {
    const double den = (1.0 - std::norm(x)) * (1.0 - std::norm(y));
    return 2.0 * std::asinh(std::abs(x - y) / std::sqrt(den));
}

// Squared sinh(rho/2); strictly monotone in rho, cheap to minimize over.
double rho_surrogate(cplx x, cplx y) {
    const double den = (1.0 - std::norm(x)) * (1.0 - std::norm(y));
    if (den <= 0.0) return std::numeric_limits<double>::infinity();
    return std::norm(x - y) / den;
}

// In-disk sweep of an arc carrier: z(t) = center + radius e^{i(theta0 + sweep t)},
// t in [0,1], running from e1 to e2 through the part of the circle inside the disk.
struct ArcSpan {
    double theta0;
    double sweep;
};

ArcSpan in_disk_span(cplx center, double radius, cplx e1, cplx e2) {
    const double t1 = std::arg(e1 - center);
    const double t2 = std::arg(e2 - center);
    double sweep = mod_2pi(t2 - t1);
    const cplx mid = center + std::polar(radius, t1 + 0.5 * sweep);
    if (std::abs(mid) > 1.0) sweep -= kTwoPi;  // go the other way around
    return {t1, sweep};
}

double golden_min_1d(const std::function<double(double)>& f, double lo, double hi, int iters) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters; ++i) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    return f1 < f2 ? x1 : x2;
}

}  // namespace

DiskPoint::DiskPoint(cplx z) : v_(z) {
    if (!(std::isfinite(z.real()) && std::isfinite(z.imag())))
        throw OutOfDisk("DiskPoint: non-finite coordinates");
    if (std::abs(z) >= 1.0 - 1e-12)
        throw OutOfDisk("DiskPoint: point is not strictly inside the unit disk");
}

MobiusMap::MobiusMap(cplx a_, cplx b_, cplx c_, cplx d_) : a(a_), b(b_), c(c_), d(d_) {
    if (std::abs(det()) <= 1e-12)
        throw DegenerateMap("MobiusMap: determinant is (numerically) zero");
}

double hyperbolic_distance(DiskPoint x, DiskPoint y) { return rho_raw(x, y); }

double distance_cosh_form(DiskPoint x, DiskPoint y) {
    const cplx xv = x.value(), yv = y.value();
    if (xv == cplx(0.0, 0.0) || yv == cplx(0.0, 0.0))
        throw ZeroArgument("distance_cosh_form: undefined at the origin, use hyperbolic_distance");
    if (std::abs(xv - yv) == 0.0) return 0.0;
    const double cr = cross_ratio(ExtendedPoint(xv), inverse_point(ExtendedPoint(xv)),
                                  inverse_point(ExtendedPoint(yv)), ExtendedPoint(yv));
    return 2.0 * std::acosh(std::sqrt(std::max(1.0, cr)));
}

double ahlfors_bracket(DiskPoint x, DiskPoint y) {
    const cplx xv = x.value(), yv = y.value();
    return std::sqrt((1.0 - std::norm(xv)) * (1.0 - std::norm(yv)) + std::norm(xv - yv));
}

MobiusMap t_a_map(DiskPoint a) {
    const cplx av = a.value();
    return MobiusMap(1.0, -av, -std::conj(av), 1.0);
}

double lipschitz_t_a(DiskPoint a) {
    const double r = std::abs(a.value());
    return (1.0 + r) / (1.0 - r);
}

ExtendedPoint mobius_apply(const MobiusMap& m, ExtendedPoint z) {
    if (z.is_infinity()) {
        if (std::abs(m.c) <= 1e-300) return ExtendedPoint::infinity();
        return ExtendedPoint(m.a / m.c);
    }
    const cplx zv = z.value();
    const cplx den = m.c * zv + m.d;
    const double den_scale = std::abs(m.c) * std::abs(zv) + std::abs(m.d);
    if (std::abs(den) <= 1e-15 * den_scale) return ExtendedPoint::infinity();
    return ExtendedPoint((m.a * zv + m.b) / den);
}

MobiusMap mobius_compose(const MobiusMap& m1, const MobiusMap& m2) {
    return MobiusMap(m1.a * m2.a + m1.b * m2.c, m1.a * m2.b + m1.b * m2.d,
                     m1.c * m2.a + m1.d * m2.c, m1.c * m2.b + m1.d * m2.d);
}

MobiusMap mobius_inverse(const MobiusMap& m) { return MobiusMap(m.d, -m.b, -m.c, m.a); }

Geodesic geodesic_through(DiskPoint x, DiskPoint y) {
    const cplx xv = x.value(), yv = y.value();
    if (std::abs(xv - yv) <= 1e-14)
        throw IdenticalPoints("geodesic_through: the two points coincide");

    // 0, x, y collinear <=> the geodesic is a diameter. The threshold matches
    // the blowup of the arc-center formula.
    const double collin = std::abs(std::imag(std::conj(xv) * yv));
    if (collin <= 1e-11 * std::max(std::abs(xv) * std::abs(yv), 1e-30)) {
        const cplx t = (yv - xv) / std::abs(yv - xv);
        Geodesic g;
        g.kind = Geodesic::Kind::Diameter;
        g.direction = t;
        g.center = cplx(0.0, 0.0);
        g.radius = 0.0;
        g.ideal_endpoints = {-t, t};
        return g;
    }

    const cplx xstar = xv / std::norm(xv);
    const ExtendedPoint m = circumcenter(xv, yv, xstar);
    const cplx center = m.value();  // finite: collinear case was handled above
    const double radius = (std::abs(center - xv) + std::abs(center - yv)) / 2.0;
    auto [e1, e2] = unit_circle_intersection(Circle(center, radius));

    // Order the endpoints so that x_*, x, y, y_* follow the carrier.
    const ArcSpan span = in_disk_span(center, radius, e1, e2);
    auto along = [&](cplx z) {
        double d = std::arg(z - center) - span.theta0;
        return span.sweep >= 0.0 ? mod_2pi(d) : mod_2pi(-d);
    };
    Geodesic g;
    g.kind = Geodesic::Kind::Arc;
    g.direction = cplx(0.0, 0.0);
    g.center = center;
    g.radius = radius;
    if (along(xv) <= along(yv))
        g.ideal_endpoints = {e1, e2};
    else
        g.ideal_endpoints = {e2, e1};
    return g;
}

Geodesic ideal_geodesic(cplx a, cplx b) {
    if (std::abs(std::abs(a) - 1.0) > 1e-9 || std::abs(std::abs(b) - 1.0) > 1e-9)
        throw NotUnimodular("ideal_geodesic: endpoints must be on the unit circle");
    if (std::abs(a - b) <= 1e-9) throw IdenticalPoints("ideal_geodesic: endpoints coincide");

    Geodesic g;
    g.ideal_endpoints = {a, b};
    if (std::abs(a + b) <= 1e-9) {
        g.kind = Geodesic::Kind::Diameter;
        g.direction = (b - a) / std::abs(b - a);
        g.center = cplx(0.0, 0.0);
        g.radius = 0.0;
        return g;
    }
    g.kind = Geodesic::Kind::Arc;
    g.direction = cplx(0.0, 0.0);
    g.center = 2.0 * a * b / (a + b);
    g.radius = (std::abs(g.center - a) + std::abs(g.center - b)) / 2.0;
    return g;
}

cplx geodesic_point(const Geodesic& g, double t) {
    if (g.kind == Geodesic::Kind::Diameter) {
        const auto& [e1, e2] = g.ideal_endpoints;
        return e1 + t * (e2 - e1);
    }
    const ArcSpan span = in_disk_span(g.center, g.radius, g.ideal_endpoints.first, g.ideal_endpoints.second);
    return g.center + std::polar(g.radius, span.theta0 + span.sweep * t);
}

double geodesic_parameter(const Geodesic& g, cplx z) {
    if (g.kind == Geodesic::Kind::Diameter) {
        const auto& [e1, e2] = g.ideal_endpoints;
        const cplx d = e2 - e1;
        return std::real((z - e1) * std::conj(d)) / std::norm(d);
    }
    const ArcSpan span = in_disk_span(g.center, g.radius, g.ideal_endpoints.first, g.ideal_endpoints.second);
    double d = std::arg(z - g.center) - span.theta0;
    d = span.sweep >= 0.0 ? mod_2pi(d) : -mod_2pi(-d);
    return d / span.sweep;
}

cplx geodesic_tangent_at(const Geodesic& g, cplx z) {
    if (g.kind == Geodesic::Kind::Diameter) return g.direction;
    const cplx radial = z - g.center;
    return cplx(0.0, 1.0) * radial / std::abs(radial);
}

double geodesic_pair_distance_oracle(const Geodesic& g1, const Geodesic& g2, int grid) {
    const int n = std::max(grid, 2);
    auto f = [&](double t1, double t2) {
        return rho_surrogate(geodesic_point(g1, t1), geodesic_point(g2, t2));
    };

    double best = std::numeric_limits<double>::infinity();
    double bt1 = 0.5, bt2 = 0.5;
    for (int i = 1; i < n; ++i) {
        const double t1 = static_cast<double>(i) / n;
        const cplx p1 = geodesic_point(g1, t1);
        for (int j = 1; j < n; ++j) {
            const double t2 = static_cast<double>(j) / n;
            const double v = rho_surrogate(p1, geodesic_point(g2, t2));
            if (v < best) {
                best = v;
                bt1 = t1;
                bt2 = t2;
            }
        }
    }

    // Two rounds of coordinate-wise golden-section refinement around the
    // best grid cell; never worse than the plain grid value.
    const double step = 1.0 / n;
    for (int round = 0; round < 2; ++round) {
        bt1 = golden_min_1d([&](double t) { return f(t, bt2); },
                            std::max(0.0, bt1 - step), std::min(1.0, bt1 + step), 48);
        bt2 = golden_min_1d([&](double t) { return f(bt1, t); },
                            std::max(0.0, bt2 - step), std::min(1.0, bt2 + step), 48);
        best = std::min(best, f(bt1, bt2));
    }
    return 2.0 * std::asinh(std::sqrt(best));
}

}  // namespace diskgeom
