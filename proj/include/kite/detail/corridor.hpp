#pragma once

// Shared corridor stepper: advances a parallel slab (a beam or a coding cell)
// through one kite copy. Used by the beam engine and by partition refinement
// so both make identical geometric decisions.

#include <optional>
#include <vector>

#include "kite/unfold.hpp"

namespace kite::detail {

// Raised when a vertex-versus-boundary comparison stays inside the tolerance
// band and no exact lane is available; the caller re-runs at doubled
// precision.
struct RetryPrecisionCorridor {
    int step;
    long cell = -1;
};

struct CorridorCtx {
    const KiteSpec* kite = nullptr;
    int base_side = 1;
    long prec = 0;
    std::optional<ExactCtx> exact;

    V2<Real> u, n;     // unit direction and left normal
    V2<Real> sp, e;    // base side origin and edge vector
    Real d_e;          // cross(u, e) > 0; offset of fraction mu is mu * d_e
    V2<Real> mid;      // base midpoint, for geometric-length reporting

    std::optional<V2<Cyc>> xu, xn, xsp, xe;
    std::optional<Cyc> xd_e;

    Real offset(const V2<Real>& p) const { return dot(n, p - sp); }
    Cyc xoffset(const V2<Cyc>& p) const { return dot(*xn, p - *xsp); }

    // Throws ConfigError unless dir points inward transversally from the side.
    static CorridorCtx make(const KiteSpec& kite, int base_side, const Direction& dir);
};

struct CellState {
    Real clo, chi;                  // slab offsets, clo < chi
    std::optional<Cyc> xclo, xchi;  // exact lane twins
    Quad<Real> copy;
    std::optional<Quad<Cyc>> xcopy;
    int entry = 1;
    int steps_done = 0;  // letters emitted so far

    static CellState initial(const CorridorCtx& ctx, const Rat& lo, const Rat& hi);
    Real lo_frac(const CorridorCtx& ctx) const { return clo / ctx.d_e; }
    Real hi_frac(const CorridorCtx& ctx) const { return chi / ctx.d_e; }
};

struct SplitPoint {
    int vertex;               // base-kite vertex index in the current copy
    Real offset;              // slab offset of the splitting ray (bitwise-stable)
    std::optional<Cyc> xoffset;
    Real t_along;             // distance along the direction, for ordering
    V2<Real> point;           // unfolded vertex coordinates
};

struct StepOutcome {
    int letter = 0;                  // set when the cell advanced cleanly
    Real t_mid;                      // mid-ray distance at the crossing (clean steps)
    std::vector<SplitPoint> splits;  // nonempty when vertices lie strictly inside
};

// One corridor step. If vertices lie strictly inside the open slab, returns
// them (sorted by offset) and leaves the cell unchanged. Otherwise crosses
// the unique exit side: appends nothing to any word (caller's job), reflects
// the copy in place and returns the exit letter.
StepOutcome corridor_step(const CorridorCtx& ctx, CellState& cell);

// Splits a cell at the given (sorted, strictly interior) points; returns the
// sub-cells in offset order. Children share the parent's copy and entry side.
std::vector<CellState> split_cell(const CellState& cell, const std::vector<SplitPoint>& pts);

}  // namespace kite::detail
