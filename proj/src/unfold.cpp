#include "kite/unfold.hpp"

#include <numeric>

namespace kite {

Tri sign_with_tol(const Real& x, long prec, const Real& scale) {
    if (x.is_zero()) return Tri::Zero;
    Real tol = pow2(-prec / 2, prec) * scale;
    if (abs(x) <= tol) return Tri::Ambig;
    return x.sgn() > 0 ? Tri::Pos : Tri::Neg;
}

namespace {

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

// Retry the whole trace at doubled precision; `step` is the 1-based letter
// index at which the ambiguity arose.
struct RetryPrecision {
    int step;
};

}  // namespace

std::optional<ExactCtx> make_exact_ctx(const KiteSpec& kite, const Direction& dir) {
    if (!kite.rational_pi) return std::nullopt;
    RationalAngle th = dir.exact_angle();
    if (!th.rational_pi()) return std::nullopt;

    Rat ra = kite.alpha.pi_coeff, rb = kite.beta.pi_coeff, rt = th.R;
    if (!ra.get_den().fits_slong_p() || !rb.get_den().fits_slong_p() || !rt.get_den().fits_slong_p())
        return std::nullopt;
    long n = lcm_long(4, 2 * ra.get_den().get_si());
    n = lcm_long(n, 2 * rb.get_den().get_si());
    n = lcm_long(n, 2 * rt.get_den().get_si());
    if (n > 512) return std::nullopt;  // field degree not worth it

    auto f = CycField::make(n);
    ExactCtx ctx;
    ctx.field = f;
    Cyc sa = Cyc::sin_pi(f, ra), ca = Cyc::cos_pi(f, ra);
    Cyc sb = Cyc::sin_pi(f, rb);
    Cyc sg = Cyc::sin_pi(f, ra + rb);
    Cyc zero(f, Rat(0));
    V2<Cyc> A{zero, zero};
    V2<Cyc> B{sg, zero};
    V2<Cyc> C{sb * ca, sb * sa};
    V2<Cyc> Cm{sb * ca, -(sb * sa)};
    ctx.verts = {A, Cm, B, C};
    ctx.u = {Cyc::cos_pi(f, rt), Cyc::sin_pi(f, rt)};
    return ctx;
}

namespace {

struct RayAttempt {
    RayAttempt(const KiteSpec& kite, const RayStart& s, const std::optional<ExactCtx>& x,
               const Direction& dir, int steps)
        : k(kite), start(s), exact(x), max_steps(steps), theta_(dir.eval(kite.prec)) {}

    const KiteSpec& k;
    const RayStart& start;
    const std::optional<ExactCtx>& exact;
    int max_steps;
    Real theta_;

    V2<Real> P, u;
    std::optional<V2<Cyc>> xP;
    std::optional<Quad<Cyc>> xcopy;
    SymbolicWord word_so_far;  // for lazy exact replay

    void ensure_exact_state() {
        if (!exact || xcopy) return;
        const auto& f = exact->field;
        Cyc mu(f, start.fraction);
        const V2<Cyc>& a = exact->verts[start.side - 1];
        const V2<Cyc>& b = exact->verts[start.side % 4];
        xP = V2<Cyc>{a.x + mu * (b.x - a.x), a.y + mu * (b.y - a.y)};
        Quad<Cyc> q = exact->verts;
        for (size_t i = 0; i < word_so_far.size(); ++i) q = reflect_quad(q, word_so_far[i]);
        xcopy = q;
    }

    // Resolves an ambiguous cross(u, v - P) via the exact lane.
    // Returns Zero only for true collinearity.
    Tri resolve_cross(int vertex_idx) {
        if (!exact) return Tri::Ambig;
        ensure_exact_state();
        Cyc cx = cross(exact->u, (*xcopy)[vertex_idx] - *xP);
        int s = cx.sign();
        return s == 0 ? Tri::Zero : (s > 0 ? Tri::Pos : Tri::Neg);
    }

    RayTrace run() {
        long prec = k.prec;
        RayTrace out;
        const SideInfo& s0 = k.side(start.side);
        Real mu = to_real(start.fraction, prec);
        P = {s0.p.x + mu * (s0.q.x - s0.p.x), s0.p.y + mu * (s0.q.y - s0.p.y)};
        u = {cos(theta_), sin(theta_)};

        Quad<Real> copy = k.verts;
        int entry = start.side;
        out.copies.push_back(copy);
        Real one(1, prec);

        for (int step = 1; step <= max_steps; ++step) {
            // Classify every vertex against the ray line.
            Tri vsign[4];
            for (int v = 0; v < 4; ++v) {
                V2<Real> dvec = copy[v] - P;
                Real c = cross(u, dvec);
                Real scale = max(one, max(abs(dvec.x), abs(dvec.y)));
                Tri t = sign_with_tol(c, prec, scale);
                if (t == Tri::Ambig) {
                    t = resolve_cross(v);
                    if (t == Tri::Ambig) throw RetryPrecision{step};
                }
                if (t == Tri::Zero) {
                    // Collinear vertex: a hit if it lies ahead of the start.
                    Real ahead = dot(u, dvec);
                    Tri at = sign_with_tol(ahead, prec, max(one, abs(ahead)));
                    if (at == Tri::Ambig) {
                        if (exact) {
                            ensure_exact_state();
                            int sg = dot(exact->u, (*xcopy)[v] - *xP).sign();
                            at = sg == 0 ? Tri::Zero : (sg > 0 ? Tri::Pos : Tri::Neg);
                        } else {
                            throw RetryPrecision{step};
                        }
                    }
                    if (at == Tri::Pos) {
                        out.vertex_hit = true;
                        out.vertex_hit_step = step;
                        finish(out);
                        return out;
                    }
                }
                vsign[v] = t;
            }

            // Exit side: the unique side (other than the entry) whose endpoint
            // signs straddle the ray line strictly.
            int exit = 0;
            for (int s = 1; s <= 4; ++s) {
                if (s == entry) continue;
                Tri t1 = vsign[s - 1], t2 = vsign[s % 4];
                if ((t1 == Tri::Pos && t2 == Tri::Neg) || (t1 == Tri::Neg && t2 == Tri::Pos)) {
                    exit = s;
                    break;
                }
            }
            if (exit == 0) throw std::logic_error("unfold_ray: no exit side in convex copy");

            // Crossing point of the ray with the exit side line.
            const V2<Real>& sp = copy[exit - 1];
            V2<Real> e = copy[exit % 4] - sp;
            Real t_hit = cross(sp - P, e) / cross(u, e);
            out.hits.push_back({P.x + t_hit * u.x, P.y + t_hit * u.y});
            out.word.push(uint8_t(exit));
            word_so_far.push(uint8_t(exit));

            copy = reflect_quad(copy, exit);
            if (xcopy) xcopy = reflect_quad(*xcopy, exit);
            out.copies.push_back(copy);
            entry = exit;
        }
        finish(out);
        return out;
    }

    void finish(RayTrace& out) {
        long prec = k.prec;
        if (out.hits.empty()) {
            out.geom_length = Real(0, prec);
            return;
        }
        V2<Real> d = out.hits.back() - P;
        out.geom_length = sqrt(dot(d, d));
    }
};

}  // namespace

RayTrace unfold_ray(const KiteSpec& kite, const RayStart& start, const Direction& dir,
                    int max_steps, int max_doublings) {
    if (start.side < 1 || start.side > 4) throw ConfigError("side label out of range");
    if (start.fraction <= 0 || start.fraction >= 1)
        throw ConfigError("ray start must be strictly interior to its side");
    if (!points_inward(kite, start.side, dir))
        throw ConfigError("direction does not point into the kite from the start side");

    auto exact = make_exact_ctx(kite, dir);
    KiteSpec working = kite;
    int pending_step = 0;
    for (int attempt = 0; attempt <= max_doublings; ++attempt) {
        RayAttempt ra(working, start, exact, dir, max_steps);
        try {
            return ra.run();
        } catch (const RetryPrecision& r) {
            pending_step = r.step;
            working = working.at_precision(working.prec * 2);
        }
    }
    // Precision cap exhausted while a vertex stayed inside the ambiguity band.
    RayTrace out;
    out.vertex_hit = true;
    out.vertex_hit_step = pending_step;
    out.geom_length = Real(0, kite.prec);
    return out;
}

}  // namespace kite
