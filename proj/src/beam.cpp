#include "kite/beam.hpp"

#include <algorithm>

#include "kite/detail/corridor.hpp"

namespace kite {

using detail::CellState;
using detail::CorridorCtx;
using detail::RetryPrecisionCorridor;

Real incidence_sin(const KiteSpec& kite, int side, const Direction& dir) {
    const SideInfo& s = kite.side(side);
    Real theta = dir.eval(kite.prec);
    V2<Real> u{cos(theta), sin(theta)};
    return abs(cross(u, s.q - s.p)) / s.length;
}

BeamOutcome trace_beam(const KiteSpec& kite, const BeamSpec& beam, long max_N,
                       int max_doublings) {
    KiteSpec working = kite;
    int pending_step = 0;
    for (int attempt = 0; attempt <= max_doublings; ++attempt) {
        try {
            CorridorCtx ctx = CorridorCtx::make(working, beam.base_side, beam.dir);
            CellState cell = CellState::initial(ctx, beam.lo, beam.hi);
            SymbolicWord word;
            Real t_last(0, working.prec);
            for (long step = 1; step <= max_N; ++step) {
                auto out = detail::corridor_step(ctx, cell);
                if (!out.splits.empty()) {
                    const auto* first = &out.splits.front();
                    for (const auto& sp : out.splits)
                        if (sp.t_along < first->t_along) first = &sp;
                    SplitEvent ev;
                    ev.step = step;
                    ev.vertex = first->vertex;
                    ev.split_frac = first->offset / ctx.d_e;
                    ev.split_arc = ev.split_frac * working.side(beam.base_side).length;
                    ev.prefix = word;
                    ev.vertex_point = first->point;
                    ev.T = dot(ctx.u, first->point - ctx.mid);
                    return ev;
                }
                word.push(uint8_t(out.letter));
                t_last = out.t_mid;
            }
            return SurvivedToHorizon{word, max_N, t_last};
        } catch (const RetryPrecisionCorridor& r) {
            pending_step = r.step;
            working = working.at_precision(working.prec * 2);
        }
    }
    throw BoundaryVertexAmbiguous(
        "vertex on corridor boundary within tolerance at maximum precision", pending_step);
}

std::optional<long> splitting_time(const KiteSpec& kite, const BeamSpec& beam, long max_N,
                                   int max_doublings) {
    BeamOutcome out = trace_beam(kite, beam, max_N, max_doublings);
    if (const auto* ev = std::get_if<SplitEvent>(&out)) return ev->step;
    return std::nullopt;
}

BeamSpec centered_beam(const KiteSpec& kite, int side, const Rat& center, double eps,
                       const Direction& dir) {
    Real s = incidence_sin(kite, side, dir);
    Real len = kite.side(side).length;
    Real half = Real(eps, kite.prec) / (Real(2, kite.prec) * s * len);
    // Rational rounding keeps beam bounds exact for downstream comparisons.
    double h = half.to_double();
    Rat hq(h);
    hq.canonicalize();
    Rat lo = center - hq, hi = center + hq;
    if (lo < 0) lo = 0;
    if (hi > 1) hi = 1;
    BeamSpec b;
    b.base_side = side;
    b.lo = lo;
    b.hi = hi;
    b.dir = dir;
    return b;
}

ShearExtension shear_extend(const KiteSpec& kite, const BeamSpec& beam,
                            const Real& periodic_value,
                            const std::pair<Real, Real>& strip_arc, const Real& L_S) {
    long prec = kite.prec;
    CorridorCtx ctx = CorridorCtx::make(kite, beam.base_side, beam.dir);
    const SideInfo& side = kite.side(beam.base_side);
    Real len = side.length;
    Real lo_arc = to_real(beam.lo, prec) * len;
    Real hi_arc = to_real(beam.hi, prec) * len;
    Real inc = abs(ctx.d_e) / len;  // sin(incidence)

    // The periodic strip must start from the beam base.
    if (strip_arc.second <= lo_arc || strip_arc.first >= hi_arc)
        throw NoPeriodicInside("periodic strip does not start from the beam base");

    Real theta = beam.dir.eval(prec);
    Real phi = circle_distance(theta, periodic_value);
    ShearExtension ext;
    ext.phi = phi;
    Real width = (hi_arc - lo_arc) * inc;

    if (phi.is_zero()) {
        ext.delta = Real(0, prec);
        ext.new_width = width;
        ext.new_lo_arc = lo_arc;
        ext.new_hi_arc = hi_arc;
        return ext;
    }

    // End segment of the survived corridor folds back onto the base line
    // shifted by the component of the periodic translation across the beam.
    V2<Real> vp{L_S * cos(periodic_value), L_S * sin(periodic_value)};
    V2<Real> e_hat{ctx.e.x / len, ctx.e.y / len};
    Real shift = -dot(ctx.n, vp) / dot(ctx.n, e_hat);  // arc-length offset of the folded end
    Real new_lo = min(lo_arc, lo_arc + shift);
    Real new_hi = max(hi_arc, hi_arc + shift);
    if (abs(shift) > hi_arc - lo_arc)
        throw NoPeriodicInside("shear exceeds beam width; end segment detached from base");
    ext.delta = abs(shift) * inc;
    ext.new_width = width + ext.delta;
    ext.new_lo_arc = new_lo;
    ext.new_hi_arc = new_hi;
    return ext;
}

}  // namespace kite
