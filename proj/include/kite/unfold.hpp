#pragma once

// Katok-Zemlyakov unfolding of a single ray: instead of reflecting the
// trajectory we reflect the kite, so the trajectory becomes one straight ray
// crossing a chain of mirrored copies. The word is the sequence of side
// labels the ray crosses.
//
// Sign decisions near a vertex are made in three stages: tolerance-guarded
// floating point at the working precision, adaptive precision doubling (the
// whole trace is re-run from its exact inputs), and, when every angle is a
// rational multiple of pi, exact cyclotomic arithmetic. A ray that still
// cannot be separated from a vertex after the precision cap is reported as a
// vertex hit, where the construction is undefined.

#include <optional>
#include <vector>

#include "kite/cyclotomic.hpp"
#include "kite/direction.hpp"
#include "kite/kite.hpp"
#include "kite/word.hpp"

namespace kite {

enum class Tri { Neg, Zero, Pos, Ambig };

// Sign of x with an ambiguity band of 2^(-prec/2) * scale.
Tri sign_with_tol(const Real& x, long prec, const Real& scale);

// Exact geometry shared by one (kite, direction) pair: unnormalized vertices
// and the unit direction vector in the cyclotomic field. Available when both
// the kite angles and the direction are rational multiples of pi with small
// denominators.
struct ExactCtx {
    std::shared_ptr<const CycField> field;
    Quad<Cyc> verts;
    V2<Cyc> u;
};
std::optional<ExactCtx> make_exact_ctx(const KiteSpec& kite, const Direction& dir);

struct RayStart {
    int side = 1;
    Rat fraction{1, 2};  // position as a fraction of the side, strictly in (0,1)
};

struct RayTrace {
    SymbolicWord word;
    std::vector<Quad<Real>> copies;  // copies[i] = kite after i reflections
    std::vector<V2<Real>> hits;      // unfolded crossing points, one per letter
    bool vertex_hit = false;
    int vertex_hit_step = 0;  // 1-based letter index at which the ray met a vertex
    Real geom_length;         // start to last recorded hit
};

RayTrace unfold_ray(const KiteSpec& kite, const RayStart& start, const Direction& dir,
                    int max_steps, int max_doublings = 4);

}  // namespace kite
