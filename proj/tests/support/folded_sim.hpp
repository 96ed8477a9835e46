#pragma once

// Independent oracle: simulates the billiard inside the folded kite by
// explicit point/velocity reflections, never touching the unfolding code
// path. Used to cross-check unfold_ray word-for-word.

#include "kite/kite.hpp"
#include "kite/word.hpp"

namespace kite::testsupport {

struct FoldedResult {
    SymbolicWord word;
    bool vertex_hit = false;
    V2<Real> point;  // final position
    V2<Real> dir;    // final unit velocity
};

inline FoldedResult folded_trace(const KiteSpec& k, int side, const Rat& frac, const Real& theta,
                                 int steps, double vertex_tol = 1e-12) {
    long prec = k.prec;
    FoldedResult res;
    const SideInfo& s0 = k.side(side);
    Real mu = to_real(frac, prec);
    V2<Real> x{s0.p.x + mu * (s0.q.x - s0.p.x), s0.p.y + mu * (s0.q.y - s0.p.y)};
    V2<Real> v{cos(theta), sin(theta)};
    int cur = side;
    Real tol(vertex_tol, prec);

    for (int step = 0; step < steps; ++step) {
        int hit_side = 0;
        Real best_t(0, prec);
        Real best_w(0, prec);
        for (int s = 1; s <= 4; ++s) {
            if (s == cur) continue;
            const SideInfo& si = k.side(s);
            V2<Real> e = si.q - si.p;
            Real den = cross(v, e);
            if (den.is_zero()) continue;
            Real t = cross(si.p - x, e) / den;
            Real w = cross(si.p - x, v) / den;
            if (t.sgn() <= 0) continue;
            if (w < -tol || w > Real(1, prec) + tol) continue;
            if (hit_side == 0 || t < best_t) {
                hit_side = s;
                best_t = t;
                best_w = w;
            }
        }
        if (hit_side == 0) {
            res.vertex_hit = true;  // no transversal crossing found: degenerate
            break;
        }
        if (best_w < tol || best_w > Real(1, prec) - tol) {
            res.vertex_hit = true;
            break;
        }
        x = {x.x + best_t * v.x, x.y + best_t * v.y};
        const SideInfo& si = k.side(hit_side);
        V2<Real> e = si.q - si.p;
        Real nlen = si.length;
        V2<Real> n{-e.y / nlen, e.x / nlen};
        Real d = dot(v, n);
        v = {v.x - Real(2, prec) * d * n.x, v.y - Real(2, prec) * d * n.y};
        res.word.push(uint8_t(hit_side));
        cur = hit_side;
    }
    res.point = x;
    res.dir = v;
    return res;
}

}  // namespace kite::testsupport
