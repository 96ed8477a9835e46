#include "kite/detail/corridor.hpp"

#include <algorithm>

namespace kite::detail {

namespace {

enum class Band { Below, OnLow, Inside, OnHigh, Above };

// Sign of x - y with bitwise-equality short circuit, tolerance band, and
// exact-lane fallback. thunk() must return the exact difference sign.
template <class ExactThunk>
Tri guarded_sign(const Real& x, const Real& y, long prec, const Real& scale, bool have_exact,
                 ExactThunk&& thunk, int step) {
    if (x == y) return Tri::Zero;
    Tri t = sign_with_tol(x - y, prec, scale);
    if (t != Tri::Ambig) return t;
    if (have_exact) {
        int s = thunk();
        return s == 0 ? Tri::Zero : (s > 0 ? Tri::Pos : Tri::Neg);
    }
    throw RetryPrecisionCorridor{step};
}

}  // namespace

CorridorCtx CorridorCtx::make(const KiteSpec& kite, int base_side, const Direction& dir) {
    CorridorCtx ctx;
    ctx.kite = &kite;
    ctx.base_side = base_side;
    ctx.prec = kite.prec;
    const SideInfo& s = kite.side(base_side);
    Real theta = dir.eval(kite.prec);
    ctx.u = {cos(theta), sin(theta)};
    ctx.n = {-ctx.u.y, ctx.u.x};
    ctx.sp = s.p;
    ctx.e = s.q - s.p;
    ctx.d_e = cross(ctx.u, ctx.e);
    Real half(0.5, kite.prec);
    ctx.mid = {s.p.x + half * ctx.e.x, s.p.y + half * ctx.e.y};

    ctx.exact = make_exact_ctx(kite, dir);
    if (ctx.exact) {
        ctx.xu = ctx.exact->u;
        ctx.xn = V2<Cyc>{-ctx.exact->u.y, ctx.exact->u.x};
        ctx.xsp = ctx.exact->verts[base_side - 1];
        ctx.xe = ctx.exact->verts[base_side % 4] - ctx.exact->verts[base_side - 1];
        ctx.xd_e = cross(*ctx.xu, *ctx.xe);
        int sg = ctx.xd_e->sign();
        if (sg <= 0)
            throw ConfigError("direction must point inward transversally from the base side");
        return ctx;
    }
    Tri t = sign_with_tol(ctx.d_e, kite.prec, Real(1, kite.prec));
    if (t != Tri::Pos)
        throw ConfigError("direction must point inward transversally from the base side");
    return ctx;
}

CellState CellState::initial(const CorridorCtx& ctx, const Rat& lo, const Rat& hi) {
    if (!(lo >= 0 && lo < hi && hi <= 1))
        throw ConfigError("beam interval must satisfy 0 <= lo < hi <= 1");
    CellState c;
    c.clo = to_real(lo, ctx.prec) * ctx.d_e;
    c.chi = to_real(hi, ctx.prec) * ctx.d_e;
    c.copy = ctx.kite->verts;
    c.entry = ctx.base_side;
    if (ctx.exact) {
        auto f = ctx.exact->field;
        c.xclo = Cyc(f, lo) * *ctx.xd_e;
        c.xchi = Cyc(f, hi) * *ctx.xd_e;
        c.xcopy = ctx.exact->verts;
    }
    return c;
}

StepOutcome corridor_step(const CorridorCtx& ctx, CellState& cell) {
    const long prec = ctx.prec;
    const int step = cell.steps_done + 1;
    const bool ex = cell.xcopy.has_value();
    const Real one(1, prec);

    Band band[4];
    Real off[4];
    std::optional<Cyc> xoff[4];
    for (int v = 0; v < 4; ++v) {
        off[v] = ctx.offset(cell.copy[v]);
        if (ex) xoff[v] = ctx.xoffset((*cell.xcopy)[v]);
        Real scale = max(one, abs(off[v]));
        Tri lo_t = guarded_sign(off[v], cell.clo, prec, scale, ex,
                                [&] { return (*xoff[v] - *cell.xclo).sign(); }, step);
        Tri hi_t = guarded_sign(cell.chi, off[v], prec, scale, ex,
                                [&] { return (*cell.xchi - *xoff[v]).sign(); }, step);
        if (lo_t == Tri::Neg) band[v] = Band::Below;
        else if (lo_t == Tri::Zero) band[v] = Band::OnLow;
        else if (hi_t == Tri::Neg) band[v] = Band::Above;
        else if (hi_t == Tri::Zero) band[v] = Band::OnHigh;
        else band[v] = Band::Inside;
    }

    StepOutcome out;
    for (int v = 0; v < 4; ++v) {
        if (band[v] != Band::Inside) continue;
        SplitPoint sp;
        sp.vertex = v;
        sp.offset = off[v];
        if (ex) sp.xoffset = xoff[v];
        sp.t_along = dot(ctx.u, cell.copy[v] - ctx.sp);
        sp.point = cell.copy[v];
        out.splits.push_back(std::move(sp));
    }
    if (!out.splits.empty()) {
        std::sort(out.splits.begin(), out.splits.end(),
                  [](const SplitPoint& a, const SplitPoint& b) { return a.offset < b.offset; });
        return out;
    }

    auto low_end = [&](int v) { return band[v] == Band::Below || band[v] == Band::OnLow; };
    auto high_end = [&](int v) { return band[v] == Band::Above || band[v] == Band::OnHigh; };
    int exit = 0;
    for (int s = 1; s <= 4; ++s) {
        if (s == cell.entry) continue;
        int v1 = s - 1, v2 = s % 4;
        if ((low_end(v1) && high_end(v2)) || (high_end(v1) && low_end(v2))) {
            exit = s;
            break;
        }
    }
    if (exit == 0) throw std::logic_error("corridor_step: no exit side found");

    // Distance along the mid ray to this crossing, before reflecting.
    const V2<Real>& spx = cell.copy[exit - 1];
    V2<Real> e_side = cell.copy[exit % 4] - spx;
    out.t_mid = cross(spx - ctx.mid, e_side) / cross(ctx.u, e_side);

    cell.copy = reflect_quad(cell.copy, exit);
    if (ex) cell.xcopy = reflect_quad(*cell.xcopy, exit);
    cell.entry = exit;
    cell.steps_done = step;
    out.letter = exit;
    return out;
}

std::vector<CellState> split_cell(const CellState& cell, const std::vector<SplitPoint>& pts) {
    std::vector<CellState> out;
    Real lo = cell.clo;
    std::optional<Cyc> xlo = cell.xclo;
    auto push = [&](const Real& hi, const std::optional<Cyc>& xhi) {
        if (lo == hi) return;  // two vertices on one ray: skip empty middle
        CellState c = cell;
        c.clo = lo;
        c.chi = hi;
        c.xclo = xlo;
        c.xchi = xhi;
        out.push_back(std::move(c));
    };
    for (const auto& p : pts) {
        push(p.offset, p.xoffset);
        lo = p.offset;
        xlo = p.xoffset;
    }
    push(cell.chi, cell.xchi);
    return out;
}

}  // namespace kite::detail
