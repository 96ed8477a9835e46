#include "kite/periodic.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "kite/detail/corridor.hpp"
#include "kite/direction.hpp"

namespace kite {

namespace {

using Word = std::vector<uint8_t>;

Word rotate(const Word& w, size_t k) {
    Word r(w.size());
    for (size_t i = 0; i < w.size(); ++i) r[i] = w[(i + k) % w.size()];
    return r;
}

Word canonical_class(const Word& w) {
    Word best = w;
    Word rev(w.rbegin(), w.rend());
    for (size_t k = 0; k < w.size(); ++k) {
        best = std::min(best, rotate(w, k));
        best = std::min(best, rotate(rev, k));
    }
    return best;
}

bool is_primitive(const Word& w) {
    size_t n = w.size();
    for (size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool periodic = true;
        for (size_t i = 0; i < n && periodic; ++i) periodic = w[i] == w[i % d];
        if (periodic) return false;
    }
    return true;
}

// Rotation part of the word's reflection composition, as an exact angle.
// Trivial iff the value is 0 mod 2*pi.
bool rotation_trivial(const KiteSpec& k, const Word& w) {
    if (w.size() % 2 != 0) return false;  // odd compositions reverse orientation
    Rat R(0), Q(0);
    int sign = 1;
    // d -> 2*gamma - d per letter; net shift = 2 * sum(+-gamma_i)
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        const SideInfo& s = k.side(*it);
        Rat gR = Rat(s.ia) * k.alpha.pi_coeff + Rat(s.ib) * k.beta.pi_coeff + Rat(s.ic);
        Rat gQ = Rat(s.ia) * k.alpha.offset + Rat(s.ib) * k.beta.offset;
        R += Rat(2 * sign) * gR;
        Q += Rat(2 * sign) * gQ;
        sign = -sign;
    }
    return Q == 0 && is_even_integer(R);
}

template <class F>
struct Iso2 {
    F m00, m01, m10, m11;
    F tx, ty;

    V2<F> apply(const V2<F>& p) const {
        return {m00 * p.x + m01 * p.y + tx, m10 * p.x + m11 * p.y + ty};
    }
    V2<F> linear(const V2<F>& v) const {
        return {m00 * v.x + m01 * v.y, m10 * v.x + m11 * v.y};
    }
    // this after o (apply o first)
    Iso2 compose(const Iso2& o) const {
        Iso2 r;
        r.m00 = m00 * o.m00 + m01 * o.m10;
        r.m01 = m00 * o.m01 + m01 * o.m11;
        r.m10 = m10 * o.m00 + m11 * o.m10;
        r.m11 = m10 * o.m01 + m11 * o.m11;
        V2<F> t = linear({o.tx, o.ty});
        r.tx = t.x + tx;
        r.ty = t.y + ty;
        return r;
    }
};

// Reflection across the line through p, q; scaled-normal form, no sqrt.
template <class F>
Iso2<F> line_reflection(const V2<F>& p, const V2<F>& q) {
    V2<F> e = q - p;
    F ee = dot(e, e);
    Iso2<F> r;
    r.m00 = (e.x * e.x - e.y * e.y) / ee;
    r.m11 = (e.y * e.y - e.x * e.x) / ee;
    r.m01 = (e.x * e.y + e.x * e.y) / ee;
    r.m10 = r.m01;
    V2<F> mp = V2<F>{r.m00 * p.x + r.m01 * p.y, r.m10 * p.x + r.m11 * p.y};
    r.tx = p.x - mp.x;
    r.ty = p.y - mp.y;
    return r;
}

// g_w = R_{w1} o R_{w2} o ... o R_{wk} over base-side lines.
template <class F>
Iso2<F> word_isometry(const Quad<F>& verts, const Word& w, const F& one, const F& zero) {
    Iso2<F> g{one, zero, zero, one, zero, zero};
    for (uint8_t s : w) {
        Iso2<F> r = line_reflection<F>(verts[s - 1], verts[s % 4]);
        g = g.compose(r);
    }
    return g;
}

// Forced-word strip trace: the sub-interval of the start side whose corridor
// exits through exactly the prescribed sides. Interval arithmetic is in slab
// offsets; empty (or tolerance-thin, without an exact lane) strips are
// rejected.
struct StripResult {
    bool realized = false;
    Real lo_frac, hi_frac;
    Real width;
};

struct StripRetry {};

StripResult trace_strip(const KiteSpec& k, const Word& w, const V2<Real>& u,
                        const std::optional<ExactCtx>& exact) {
    long prec = k.prec;
    int start_side = w.back();
    const SideInfo& s0 = k.side(start_side);
    V2<Real> n{-u.y, u.x};
    V2<Real> e = s0.q - s0.p;
    Real d_e = cross(u, e);
    StripResult out;
    if (!(d_e.sgn() > 0)) return out;  // direction does not enter through this side

    auto offset = [&](const V2<Real>& p) { return dot(n, p - s0.p); };
    Real lo(0, prec), hi = d_e;
    Quad<Real> copy = k.verts;

    std::optional<V2<Cyc>> xn;
    std::optional<V2<Cyc>> xsp;
    std::optional<Quad<Cyc>> xcopy;
    std::optional<Cyc> xlo, xhi;
    if (exact) {
        xn = V2<Cyc>{-exact->u.y, exact->u.x};
        xsp = exact->verts[start_side - 1];
        xcopy = exact->verts;
        V2<Cyc> xe = exact->verts[start_side % 4] - *xsp;
        xlo = Cyc(exact->field, Rat(0));
        xhi = cross(exact->u, xe);
    }
    auto xoffset = [&](const V2<Cyc>& p) { return dot(*xn, p - *xsp); };

    Real one(1, prec);
    for (uint8_t sd : w) {
        // Constrain to rays crossing the span of side sd of the current copy.
        Real o1 = offset(copy[sd - 1]), o2 = offset(copy[sd % 4]);
        Real blo = min(o1, o2), bhi = max(o1, o2);
        std::optional<Cyc> xblo, xbhi;
        if (exact) {
            Cyc c1 = xoffset((*xcopy)[sd - 1]), c2 = xoffset((*xcopy)[sd % 4]);
            int cmp = (c2 - c1).sign();
            xblo = cmp >= 0 ? c1 : c2;
            xbhi = cmp >= 0 ? c2 : c1;
            // keep numeric bounds consistent with the exact ordering
            if ((cmp >= 0) != (o1 <= o2)) std::swap(blo, bhi);
        }
        bool take_lo = exact ? (*xblo - *xlo).sign() > 0 : blo > lo;
        if (take_lo) {
            lo = blo;
            xlo = xblo;
        }
        bool take_hi = exact ? (*xbhi - *xhi).sign() < 0 : bhi < hi;
        if (take_hi) {
            hi = bhi;
            xhi = xbhi;
        }

        // Emptiness check, exact when possible.
        if (exact) {
            if ((*xhi - *xlo).sign() <= 0) return out;
        } else {
            Tri t = sign_with_tol(hi - lo, prec, one);
            if (t == Tri::Neg || t == Tri::Zero) return out;
            if (t == Tri::Ambig) throw StripRetry{};
        }
        copy = reflect_quad(copy, sd);
        if (exact) xcopy = reflect_quad(*xcopy, sd);
    }

    out.realized = true;
    out.lo_frac = lo / d_e;
    out.hi_frac = hi / d_e;
    out.width = hi - lo;
    return out;
}

// Numeric unfolded ray trace used by the closure re-simulation; returns the
// word and the last crossing point, or nullopt on a vertex grazing.
struct RaySim {
    SymbolicWord word;
    V2<Real> last_hit;
};
std::optional<RaySim> simulate_ray(const KiteSpec& k, int start_side, const V2<Real>& P,
                                   const V2<Real>& u, long steps) {
    long prec = k.prec;
    Quad<Real> copy = k.verts;
    int entry = start_side;
    RaySim out;
    out.last_hit = P;
    Real one(1, prec);
    for (long i = 0; i < steps; ++i) {
        int exit = 0;
        for (int s = 1; s <= 4; ++s) {
            if (s == entry) continue;
            Real c1 = cross(u, copy[s - 1] - P), c2 = cross(u, copy[s % 4] - P);
            if (sign_with_tol(c1, prec, one) == Tri::Ambig ||
                sign_with_tol(c2, prec, one) == Tri::Ambig)
                return std::nullopt;
            if (c1.sgn() * c2.sgn() < 0) {
                exit = s;
                break;
            }
        }
        if (exit == 0) return std::nullopt;
        const V2<Real>& sp = copy[exit - 1];
        V2<Real> e = copy[exit % 4] - sp;
        Real t = cross(sp - P, e) / cross(u, e);
        out.last_hit = {P.x + t * u.x, P.y + t * u.y};
        out.word.push(uint8_t(exit));
        copy = reflect_quad(copy, exit);
        entry = exit;
    }
    return out;
}

}  // namespace

// Re-simulates one period from the witness point; the distance between the
// final crossing and (start + translation) is the closure residual.
Real closure_residual(const KiteSpec& kite, const PeriodicDirection& e) {
    long prec = kite.prec;
    const auto& letters = e.word.letters();
    Word rooted(letters.begin(), letters.end());
    // root the word at the stored strip side
    for (size_t r = 0; r < rooted.size(); ++r) {
        Word cand = rotate(rooted, r);
        if (cand.back() == uint8_t(e.strip_side)) {
            rooted = cand;
            break;
        }
    }
    Real one(1, prec), zero(0, prec);
    Iso2<Real> g = word_isometry<Real>(kite.verts, rooted, one, zero);
    V2<Real> v{g.tx, g.ty};
    Real vlen = sqrt(dot(v, v));
    V2<Real> u{v.x / vlen, v.y / vlen};
    const SideInfo& ss = kite.side(e.strip_side);
    Real mu = to_real(e.witness_frac, prec);
    V2<Real> P{ss.p.x + mu * (ss.q.x - ss.p.x), ss.p.y + mu * (ss.q.y - ss.p.y)};
    auto sim = simulate_ray(kite, e.strip_side, P, u, e.length);
    if (!sim) return Real(1, prec);  // grazing: report a failing residual
    if (!(sim->word == SymbolicWord(rooted))) return Real(1, prec);
    V2<Real> expected{P.x + v.x, P.y + v.y};
    V2<Real> d = sim->last_hit - expected;
    return sqrt(dot(d, d));
}

long PeriodicCatalog::count_up_to(long len) const {
    long c = 0;
    for (const auto& e : entries)
        if (e.length <= len) ++c;
    return c;
}

PeriodicCatalog enumerate_periodic_directions(const KiteSpec& kite, long n_max, long cap) {
    if (n_max > cap)
        throw EnumerationCapExceeded("enumeration length " + std::to_string(n_max) +
                                     " exceeds cap " + std::to_string(cap));
    PeriodicCatalog cat;
    cat.base_side = kite.base_side;
    cat.exhaustive_to = n_max;

    // Exact lane for the whole enumeration when the kite angles allow it.
    std::optional<ExactCtx> kite_exact;
    {
        Direction probe = Direction::pure(kite.basis(AngleSpec{}), 0, 0, 0);
        kite_exact = make_exact_ctx(kite, probe);  // u unused; verts + field reused
    }

    std::vector<Word> stack;
    for (long L = 2; L <= n_max; L += 2) {
        Word w(size_t(L), 0);
        // enumerate cyclically admissible words, keep canonical class reps
        std::function<void(size_t)> rec = [&](size_t i) {
            if (i == size_t(L)) {
                if (w.back() == w.front()) return;
                if (canonical_class(w) != w) return;
                if (!is_primitive(w)) return;
                if (!rotation_trivial(kite, w)) return;

                // Translation vector and direction.
                long prec = kite.prec;
                Real one(1, prec), zero(0, prec);
                Iso2<Real> g = word_isometry<Real>(kite.verts, w, one, zero);
                V2<Real> v{g.tx, g.ty};
                Real vlen = sqrt(dot(v, v));
                if (vlen.is_zero()) return;  // identity: no direction (would need |w|=0)
                V2<Real> u{v.x / vlen, v.y / vlen};

                std::optional<ExactCtx> exact;
                if (kite_exact) {
                    exact = kite_exact;
                    auto f = exact->field;
                    Cyc cone(f, Rat(1)), czero(f, Rat(0));
                    Iso2<Cyc> xg = word_isometry<Cyc>(exact->verts, w, cone, czero);
                    exact->u = V2<Cyc>{xg.tx, xg.ty};  // unnormalized; signs only
                    if (xg.tx.is_zero() && xg.ty.is_zero()) return;
                }

                // Trace rooted at the word's last letter: if the class is
                // realizable at all, this reading realizes with direction u
                // (the reverse reading is the same strip backwards).
                StripResult strip;
                try {
                    strip = trace_strip(kite, w, u, exact);
                } catch (const StripRetry&) {
                    strip.realized = false;  // tolerance-thin strip, no exact lane
                }
                if (!strip.realized) {
                    ++cat.candidates_rejected;
                    return;
                }

                PeriodicDirection pd;
                pd.word = SymbolicWord(w);
                pd.length = L;
                pd.direction = canonical_angle(atan2(v.y, v.x));
                pd.translation = v;
                pd.strip_side = w.back();
                pd.strip_lo = strip.lo_frac;
                pd.strip_hi = strip.hi_frac;
                pd.strip_width = strip.width;
                pd.touches_base =
                    std::find(w.begin(), w.end(), uint8_t(kite.base_side)) != w.end();

                // Closure re-simulation from the strip midpoint.
                Real mid = (strip.lo_frac + strip.hi_frac) / Real(2, prec);
                Rat frac(mid.to_double());
                frac.canonicalize();
                if (frac <= 0 || frac >= 1) frac = Rat(1, 2);
                pd.witness_frac = frac;
                pd.closure_residual = closure_residual(kite, pd);

                cat.entries.push_back(std::move(pd));
                return;
            }
            for (uint8_t c = 1; c <= 4; ++c) {
                if (i > 0 && w[i - 1] == c) continue;
                w[i] = c;
                rec(i + 1);
            }
        };
        rec(0);
    }

    std::sort(cat.entries.begin(), cat.entries.end(),
              [](const PeriodicDirection& a, const PeriodicDirection& b) {
                  if (a.length != b.length) return a.length < b.length;
                  return a.word < b.word;
              });
    return cat;
}

PhiValue phi(const KiteSpec& kite, const Real& theta_value, long n, const PeriodicCatalog& cat,
             bool allow_heuristic) {
    long prec = kite.prec;
    PhiValue out{Real(1, prec), false, false};
    if (cat.exhaustive_to < n - 1) {
        if (!allow_heuristic)
            throw CatalogNotExhaustive("catalog exhaustive to " +
                                       std::to_string(cat.exhaustive_to) +
                                       ", phi needs length < " + std::to_string(n));
        out.heuristic = true;
    }
    Real pi = Real::pi(prec);
    bool any = false;
    for (const auto& e : cat.entries) {
        if (e.length >= n) continue;
        Real d1 = circle_distance(theta_value, e.direction);
        Real d2 = circle_distance(theta_value, canonical_angle(e.direction + pi));
        Real d = min(d1, d2);
        if (!any || d < out.value) out.value = d;
        any = true;
    }
    if (!any) {
        out.value = Real(1, prec);
        return out;
    }
    if (out.value <= pow2(1 - prec / 2, prec)) out.periodic_theta = true;
    return out;
}

PhiValue phi(const KiteSpec& kite, const Direction& theta, long n, const PeriodicCatalog& cat,
             bool allow_heuristic) {
    return phi(kite, canonical_angle(theta.eval(kite.prec)), n, cat, allow_heuristic);
}

PhiTable make_phi_table(const KiteSpec& kite, const Real& theta_value, long n_max,
                        const PeriodicCatalog& cat, bool allow_heuristic) {
    PhiTable t;
    t.theta = theta_value;
    t.n_max = n_max;
    for (long n = 1; n <= n_max; ++n)
        t.values.push_back(phi(kite, theta_value, n, cat, allow_heuristic));
    return t;
}

long count_periodic_beams(const PeriodicCatalog& cat, long n) {
    if (cat.exhaustive_to < n - 1)
        throw CatalogNotExhaustive("catalog exhaustive to " + std::to_string(cat.exhaustive_to) +
                                   ", P(n) needs length < " + std::to_string(n));
    return cat.count_up_to(n - 1);
}

std::optional<std::pair<Real, Real>> strip_on_side(const KiteSpec& kite,
                                                   const PeriodicDirection& entry, int side) {
    const auto& letters = entry.word.letters();
    auto it = std::find(letters.begin(), letters.end(), uint8_t(side));
    if (it == letters.end()) return std::nullopt;
    size_t idx = size_t(it - letters.begin());
    Word rooted(letters.begin(), letters.end());
    rooted = rotate(rooted, (idx + 1) % letters.size());  // ends at `side`

    // Re-rooting conjugates the period isometry, so the traversal direction
    // must be recomputed for the rooted word.
    long prec = kite.prec;
    Real one(1, prec), zero(0, prec);
    Iso2<Real> g = word_isometry<Real>(kite.verts, rooted, one, zero);
    V2<Real> v{g.tx, g.ty};
    Real vlen = sqrt(dot(v, v));
    if (vlen.is_zero()) return std::nullopt;
    V2<Real> u{v.x / vlen, v.y / vlen};
    std::optional<ExactCtx> exact;  // numeric is enough for reporting
    StripResult strip;
    try {
        strip = trace_strip(kite, rooted, u, exact);
    } catch (const StripRetry&) {
        return std::nullopt;
    }
    if (!strip.realized) return std::nullopt;
    return std::make_pair(strip.lo_frac, strip.hi_frac);
}

void write_catalog(const std::string& path, const PeriodicCatalog& cat) {
    std::ofstream f(path);
    f << "# periodic direction catalog\n";
    f << "# exhaustive_to " << cat.exhaustive_to << "\n";
    f << "# base_side " << cat.base_side << "\n";
    f << "# rejected " << cat.candidates_rejected << "\n";
    f << "# columns: length word direction(60 digits) strip_width strip_side strip_lo strip_hi\n";
    for (const auto& e : cat.entries)
        f << e.length << " " << e.word.str() << " " << e.direction.str(60) << " "
          << e.strip_width.str(20) << " " << e.strip_side << " " << e.strip_lo.str(20) << " "
          << e.strip_hi.str(20) << "\n";
}

PeriodicCatalog read_catalog(const std::string& path, long prec) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open catalog: " + path);
    PeriodicCatalog cat;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream ss(line.substr(1));
            std::string key;
            ss >> key;
            if (key == "exhaustive_to") ss >> cat.exhaustive_to;
            if (key == "base_side") ss >> cat.base_side;
            if (key == "rejected") ss >> cat.candidates_rejected;
            continue;
        }
        std::istringstream ss(line);
        PeriodicDirection e;
        std::string word, dir, width, slo, shi;
        ss >> e.length >> word >> dir >> width >> e.strip_side >> slo >> shi;
        e.word = SymbolicWord::from_str(word);
        auto parse = [prec](const std::string& s) {
            Real r(prec);
            mpfr_set_str(r.raw(), s.c_str(), 10, MPFR_RNDN);
            return r;
        };
        e.direction = parse(dir);
        e.strip_width = parse(width);
        e.strip_lo = parse(slo);
        e.strip_hi = parse(shi);
        cat.entries.push_back(std::move(e));
    }
    return cat;
}

}  // namespace kite
