#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "diskgeom/quadrilateral.hpp"

namespace diskgeom {

inline constexpr int kLipschitzSamples = 20000;
inline constexpr std::uint64_t kDefaultSeed = 0x5eed5eedULL;

/// A canonical repositioning of a quadruple by a Mobius map, together with
/// the map's sampled euclidean Lipschitz cost over the closed disk.
struct CanonicalForm {
    MobiusMap map;
    cplx parameter;  // p for the (0,1,p,inf) form, y for the (-1,-y,y,1) form
    std::array<ExtendedPoint, 4> images;
    double lipschitz_cost;
};

/// Map the quadruple to (0, 1, p, inf); p equals the absolute cross ratio
/// and is real > 1 for positively ordered circle quadruples.
CanonicalForm normalize_zero_one_inf(ExtendedPoint a, ExtendedPoint b, ExtendedPoint c,
                                     ExtendedPoint d, int cost_samples = kLipschitzSamples,
                                     std::uint64_t seed = kDefaultSeed);

/// Map the quadruple to (-1, -y, y, 1) with |y| <= 1, where
/// (1+y)/(1-y) = sqrt(cross ratio).
CanonicalForm normalize_symmetric(cplx a, cplx b, cplx c, cplx d,
                                  int cost_samples = kLipschitzSamples,
                                  std::uint64_t seed = kDefaultSeed);

struct SymmetrizeResult {
    OrderedQuadruple quad;
    bool degenerate;     // input returned unchanged
    std::string reason;  // why, when degenerate
    cplx w;              // fixed point of the rotation (diagonal crossing)
};

/// Euclidean construction repositioning the vertices so the quadruple is
/// mirror-symmetric about the diameter through w, preserving the cross
/// ratio and keeping w fixed. Throws DegenerateConfiguration when w1 or w3
/// is at infinity; returns the input flagged degenerate when w = 0.
SymmetrizeResult symmetrize(const OrderedQuadruple& q);

/// Sampled supremum of euclidean distance ratios over the closed unit disk
/// (random pairs plus boundary-biased close pairs); a lower bound of the
/// true supremum. Throws PoleInDomain when the pole lies strictly inside
/// the disk; a pole on the boundary circle is skirted by a small exclusion
/// neighborhood and the estimate stays finite.
double lipschitz_cost(const MobiusMap& m, int samples, std::uint64_t seed = kDefaultSeed);

}  // namespace diskgeom
