#include "kite/kite.hpp"

#include <cmath>

namespace kite {

KiteSpec build_kite(const AngleSpec& alpha, const AngleSpec& beta, long prec) {
    if (prec < 64) throw ConfigError("working precision must be at least 64 bits");

    // Exact degeneracy checks first, then numeric sign checks.
    AngleSpec sum{alpha.pi_coeff + beta.pi_coeff, alpha.offset + beta.offset};
    if (sum.pi_coeff == 1 && sum.offset == 0)
        throw DegenerateTriangle("alpha + beta = pi exactly");
    Real a = alpha.eval(prec), b = beta.eval(prec);
    Real pi = Real::pi(prec);
    if (a.sgn() <= 0 || b.sgn() <= 0) throw DegenerateTriangle("angles must be positive");
    if (a + b >= pi) throw DegenerateTriangle("alpha + beta >= pi");
    Real half_pi = pi / Real(2, prec);
    if (a >= half_pi || b >= half_pi)
        throw DegenerateTriangle("doubled kite is not convex (angle >= pi/2)");

    KiteSpec k;
    k.alpha = alpha;
    k.beta = beta;
    k.prec = prec;
    k.rational_pi = alpha.rational_pi() && beta.rational_pi();

    // Triangle scaled so the side opposite angle x has length sin(x):
    // A=(0,0), B=(sin(alpha+beta), 0), apex C above the axis, C' its mirror.
    Real sa = sin(a), sb = sin(b), sg = sin(a + b);
    Real ca = cos(a);
    V2<Real> A{Real(0, prec), Real(0, prec)};
    V2<Real> B{sg, Real(0, prec)};
    V2<Real> C{sb * ca, sb * sa};
    V2<Real> Cm{sb * ca, -(sb * sa)};

    k.verts = {A, Cm, B, C};

    // Diameter over the six vertex pairs.
    Real diam(0, prec);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            V2<Real> d = k.verts[j] - k.verts[i];
            Real len = sqrt(dot(d, d));
            if (len > diam) diam = len;
        }
    k.scale = Real(1, prec) / diam;
    for (auto& v : k.verts) v = k.scale * v;

    static const long incl[4][3] = {{-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {1, 0, 0}};
    k.perimeter = Real(0, prec);
    for (int s = 0; s < 4; ++s) {
        SideInfo& si = k.sides[s];
        si.label = s + 1;
        si.p = k.verts[s];
        si.q = k.verts[(s + 1) % 4];
        si.ia = incl[s][0];
        si.ib = incl[s][1];
        si.ic = incl[s][2];
        V2<Real> d = si.q - si.p;
        si.length = sqrt(dot(d, d));
        k.perimeter += si.length;
    }

    // Width across each side: the farthest vertex's distance to the side line.
    k.min_width = Real(4, prec);
    for (int s = 0; s < 4; ++s) {
        const SideInfo& si = k.sides[s];
        V2<Real> e = si.q - si.p;
        Real w(0, prec);
        for (int v = 0; v < 4; ++v) {
            Real h = abs(cross(e, k.verts[v] - si.p)) / si.length;
            if (h > w) w = h;
        }
        if (w < k.min_width) k.min_width = w;
    }

    Real two(2, prec);
    k.chi_min = min(min(two * a, two * b), pi - a - b);
    return k;
}

KiteSpec KiteSpec::at_precision(long new_prec) const {
    return build_kite(alpha, beta, new_prec);
}

Direction reflect_direction(const Direction& d, int side, const KiteSpec& kite) {
    const SideInfo& s = kite.side(side);
    return d.reflected(s.ia, s.ib, s.ic);
}

bool points_inward(const KiteSpec& kite, int side, const Direction& d) {
    const SideInfo& s = kite.side(side);
    Real theta = d.eval(kite.prec);
    V2<Real> u{cos(theta), sin(theta)};
    return cross(s.q - s.p, u).sgn() > 0;
}

LengthConstants estimate_length_constants(const KiteSpec& kite) {
    long prec = kite.prec;
    Real pi = Real::pi(prec);
    // Between two crossings of the table a trajectory can rattle through at
    // most ceil(pi/chi) corner reflections, so the width is spread over that
    // many combinatorial steps.
    Real corner_steps = ceil(pi / kite.chi_min) + Real(2, prec);
    LengthConstants lc{kite.min_width / corner_steps, Real(1, prec), kite.min_width};
    return lc;
}

}  // namespace kite
