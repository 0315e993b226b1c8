#include "diskgeom/normalize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

namespace diskgeom {

namespace {

constexpr double kPi = std::numbers::pi;

// Mobius map sending (a, b, d) to (0, 1, inf); at most one argument infinite.
MobiusMap three_point_map(const ExtendedPoint& a, const ExtendedPoint& b, const ExtendedPoint& d) {
    if (a.is_infinity()) {
        const cplx bv = b.value(), dv = d.value();
        return MobiusMap(0.0, bv - dv, 1.0, -dv);
    }
    if (b.is_infinity()) {
        const cplx av = a.value(), dv = d.value();
        return MobiusMap(1.0, -av, 1.0, -dv);
    }
    if (d.is_infinity()) {
        const cplx av = a.value(), bv = b.value();
        return MobiusMap(1.0, -av, 0.0, bv - av);
    }
    const cplx av = a.value(), bv = b.value(), dv = d.value();
    return MobiusMap(bv - dv, -av * (bv - dv), bv - av, -dv * (bv - av));
}

void check_distinct(const std::array<ExtendedPoint, 4>& pts) {
    int n_inf = 0;
    double scale = 1.0;
    for (const auto& p : pts) {
        if (p.is_infinity())
            ++n_inf;
        else
            scale = std::max(scale, std::abs(p.value()));
    }
    if (n_inf > 1) throw DegenerateInput("normalize: more than one point at infinity");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            if (pts[i].is_infinity() || pts[j].is_infinity()) continue;
            if (std::abs(pts[i].value() - pts[j].value()) <= 1e-13 * scale)
                throw DegenerateInput("normalize: repeated point");
        }
}

double circ_gap(double x, double y) {
    double d = std::fmod(std::abs(x - y), 2.0 * kPi);
    return std::min(d, 2.0 * kPi - d);
}

}  // namespace

double lipschitz_cost(const MobiusMap& m, int samples, std::uint64_t seed) {
    const int n = std::max(samples, 1);

    bool has_pole = std::abs(m.c) > 1e-300;
    cplx pole(0.0, 0.0);
    if (has_pole) {
        pole = -m.d / m.c;
        if (std::abs(pole) < 1.0 - 1e-9)
            throw PoleInDomain("lipschitz_cost: pole lies inside the unit disk");
    }
    const double exclusion = 1e-2;
    auto usable = [&](cplx z) { return !has_pole || std::abs(z - pole) > exclusion; };
    auto apply = [&](cplx z) { return (m.a * z + m.b) / (m.c * z + m.d); };

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto disk_point = [&]() {
        const double r = (1.0 - 1e-7) * std::sqrt(unit(rng));
        return std::polar(r, 2.0 * kPi * unit(rng));
    };

    double sup = 0.0;
    for (int i = 0; i < n; ++i) {
        cplx z1, z2;
        if (i % 2 == 0) {
            z1 = disk_point();
            z2 = disk_point();
        } else {
            // Close pairs hugging the boundary, where the stretch peaks.
            const double phi = 2.0 * kPi * unit(rng);
            z1 = std::polar(1.0 - 1e-7, phi);
            z2 = std::polar(1.0 - 1e-7, phi + 1e-6);
        }
        if (!usable(z1) || !usable(z2)) continue;
        const double sep = std::abs(z1 - z2);
        if (sep <= 1e-12) continue;
        sup = std::max(sup, std::abs(apply(z1) - apply(z2)) / sep);
    }
    return sup;
}

CanonicalForm normalize_zero_one_inf(ExtendedPoint a, ExtendedPoint b, ExtendedPoint c,
                                     ExtendedPoint d, int cost_samples, std::uint64_t seed) {
    check_distinct({a, b, c, d});
    MobiusMap h = three_point_map(a, b, d);
    const ExtendedPoint p = mobius_apply(h, c);
    if (p.is_infinity()) throw DegenerateInput("normalize_zero_one_inf: c collided with d");

    CanonicalForm out{h,
                      p.value(),
                      {mobius_apply(h, a), mobius_apply(h, b), mobius_apply(h, c), mobius_apply(h, d)},
                      0.0};
    out.lipschitz_cost = lipschitz_cost(h, cost_samples, seed);
    return out;
}

CanonicalForm normalize_symmetric(cplx a, cplx b, cplx c, cplx d, int cost_samples,
                                  std::uint64_t seed) {
    check_distinct({ExtendedPoint(a), ExtendedPoint(b), ExtendedPoint(c), ExtendedPoint(d)});
    const double cr = cross_ratio(a, b, c, d);
    // (1+y)/(1-y) = sqrt(cr) on the real branch; in (-1, 1) for every cr > 0.
    const double root = std::sqrt(cr);
    const double y = (root - 1.0) / (root + 1.0);

    const MobiusMap h_src = three_point_map(a, b, d);
    const MobiusMap h_dst = three_point_map(cplx(-1.0, 0.0), cplx(-y, 0.0), cplx(1.0, 0.0));
    const MobiusMap g = mobius_compose(mobius_inverse(h_dst), h_src);

    CanonicalForm out{g,
                      cplx(y, 0.0),
                      {mobius_apply(g, a), mobius_apply(g, b), mobius_apply(g, c), mobius_apply(g, d)},
                      0.0};
    out.lipschitz_cost = lipschitz_cost(g, cost_samples, seed);
    return out;
}

SymmetrizeResult symmetrize(const OrderedQuadruple& q) {
    const cplx w = diagonal_hyperbolic_intersection(q).value();
    if (std::abs(w) <= 1e-12)
        return {q, true, "diagonals cross at the origin; already symmetric about a diameter", w};

    // With w != 0 at most one of w1, w3 is at infinity (both infinite would
    // make the quadruple a rectangle, caught above). An infinite one enters
    // only through the direction of its parallel side pair.
    const VertexIntersections wi = vertex_intersections(q);
    if (wi.w1.is_infinity() && wi.w3.is_infinity())
        throw DegenerateConfiguration("symmetrize: both side-line intersections at infinity");
    const cplx what = w / std::abs(w);

    // Two points spanning the line L[w1,w3] carrying the circle centers.
    cplx line_p, line_q;
    if (wi.w1.is_infinity()) {
        line_p = wi.w3.value();
        line_q = line_p + (q.b() - q.a());
    } else if (wi.w3.is_infinity()) {
        line_p = wi.w1.value();
        line_q = line_p + (q.d() - q.a());
    } else {
        line_p = wi.w1.value();
        line_q = wi.w3.value();
    }

    // Tangents at w of the diagonal geodesics and of the orthogonal circle
    // centered at w1 (which passes through w). For w1 at infinity the
    // radius direction [w1, w] degenerates to the parallel-side direction.
    const cplx tau_ac = geodesic_tangent_at(ideal_geodesic(q.a(), q.c()), w);
    const cplx tau_bd = geodesic_tangent_at(ideal_geodesic(q.b(), q.d()), w);
    const cplx to_w1 = wi.w1.is_infinity() ? q.b() - q.a() : wi.w1.value() - w;
    const cplx dir_pq = cplx(0.0, 1.0) * to_w1 / std::abs(to_w1);

    // Rotate about w until the pq tangent is perpendicular to L[0,w].
    double theta = std::arg(cplx(0.0, 1.0) * what / dir_pq);
    if (theta > kPi / 2.0) theta -= kPi;
    if (theta <= -kPi / 2.0) theta += kPi;
    const cplx rot = std::polar(1.0, theta);

    // The rotated diagonal geodesic through w with tangent tau has its center
    // on the normal at w; orthogonality puts that center on L[w1,w3].
    auto rotated_chord = [&](cplx tau) -> std::pair<cplx, cplx> {
        const cplx tau_s = rot * tau;
        if (std::abs(std::imag(std::conj(tau_s) * what)) <= 1e-12) {
            // Rotated geodesic is the diameter through w.
            const cplx e = tau_s / std::abs(tau_s);
            return {e, -e};
        }
        const ExtendedPoint ce = line_intersection(w, w + cplx(0.0, 1.0) * tau_s, line_p, line_q);
        if (ce.is_infinity())
            throw DegenerateConfiguration("symmetrize: rotated center escaped to infinity");
        const cplx cs = ce.value();
        return unit_circle_intersection(Circle(cs, std::abs(cs - w)));
    };

    const auto [pa, pc] = rotated_chord(tau_ac);
    const auto [pb, pd] = rotated_chord(tau_bd);

    // Mirror across the diameter through w; it must swap the two new chords.
    auto mirror = [&](cplx z) { return what * what * std::conj(z); };
    auto nearest = [](cplx z, cplx u, cplx v) { return std::abs(z - u) <= std::abs(z - v) ? u : v; };
    for (cplx z : {pa, pc}) {
        const cplx img = mirror(z);
        if (std::abs(img - nearest(img, pb, pd)) > 1e-6)
            throw DegenerateConfiguration("symmetrize: mirror symmetry not attained");
    }

    // Two labelings differ by a cyclic shift of two; pick the one closest to
    // the input vertices so symmetric inputs are exact fixed points.
    const std::array<double, 4> in_args = {std::arg(q.a()), std::arg(q.b()), std::arg(q.c()),
                                           std::arg(q.d())};
    std::optional<SymmetrizeResult> best;
    double best_cost = std::numeric_limits<double>::infinity();
    for (cplx a_s : {pa, pc}) {
        const cplx ref = nearest(mirror(a_s), pb, pd);
        const cplx b_s = (std::abs(ref - pb) <= std::abs(ref - pd)) ? pd : pb;
        // Mirror the other two vertices exactly so the output is
        // symmetric by construction.
        const cplx c_s = mirror(b_s);
        const cplx d_s = mirror(a_s);
        try {
            OrderedQuadruple oq(a_s, b_s, c_s, d_s);
            const std::array<double, 4> out_args = {std::arg(a_s), std::arg(b_s), std::arg(c_s),
                                                    std::arg(d_s)};
            double cost = 0.0;
            for (int i = 0; i < 4; ++i) cost += circ_gap(out_args[i], in_args[i]);
            if (cost < best_cost) {
                best = SymmetrizeResult{oq, false, "", w};
                best_cost = cost;
            }
        } catch (const Error&) {
            continue;  // labeling not positively ordered; the other one is
        }
    }
    if (!best) throw DegenerateConfiguration("symmetrize: no positively ordered labeling found");
    return *best;
}

}  // namespace diskgeom
