#pragma once

// The kite table: a triangle with base angles alpha, beta doubled across the
// side joining them. Vertices in counterclockwise order are V0 (kite angle
// 2*alpha), V1 (the mirrored apex, angle pi-alpha-beta), V2 (angle 2*beta),
// V3 (the apex). The axis of symmetry V0--V2 is an interior diagonal, not a
// side. Sides are labeled 1..4 counterclockwise starting from the base side
// V0->V1; trajectories of interest start on side 1. Coordinates put the axis
// on the x-axis and normalize the diameter to 1.

#include <array>
#include <memory>

#include "kite/angle.hpp"
#include "kite/direction.hpp"
#include "kite/errors.hpp"
#include "kite/vec2.hpp"

namespace kite {

struct SideInfo {
    int label = 0;
    V2<Real> p, q;        // endpoints, p -> q counterclockwise
    long ia = 0, ib = 0, ic = 0;  // inclination = ia*alpha + ib*beta + ic*pi (mod pi)
    Real length;
};

struct KiteSpec {
    AngleSpec alpha, beta;
    long prec = 128;

    Quad<Real> verts;
    std::array<SideInfo, 4> sides;
    int base_side = 1;

    Real scale;      // unit-diameter normalization factor applied to the raw triangle
    Real perimeter;
    Real min_width;  // smallest width across any side
    Real chi_min;    // smallest interior angle
    bool rational_pi = false;

    const SideInfo& side(int label) const { return sides[label - 1]; }

    std::shared_ptr<const DirectionBasis> basis(const AngleSpec& theta0) const {
        return std::make_shared<DirectionBasis>(DirectionBasis{theta0, alpha, beta});
    }

    KiteSpec at_precision(long new_prec) const;
};

// Builds the unit-diameter kite. Throws DegenerateTriangle if the angles do
// not form a triangle or if the doubled shape is not convex (alpha or beta
// >= pi/2), which the corridor machinery requires.
KiteSpec build_kite(const AngleSpec& alpha, const AngleSpec& beta, long prec = 128);

// Reflects a direction across the given side: d -> 2*gamma - d with gamma the
// side inclination. Exact on coefficients.
Direction reflect_direction(const Direction& d, int side, const KiteSpec& kite);

// True if the direction points from side `side` into the kite interior
// (strictly transversal).
bool points_inward(const KiteSpec& kite, int side, const Direction& d);

struct LengthConstants {
    Real c_low;    // c_low * N(S) <= L(S) for traced trajectories
    Real C_high;   // L(S) <= C_high * N(S); equals 1 by unit diameter
    Real min_width;
};
LengthConstants estimate_length_constants(const KiteSpec& kite);

}  // namespace kite
