#include "kite/diophantine.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace kite {

std::pair<Real, Real> normalize_angles(const AngleSpec& alpha, const AngleSpec& beta,
                                       AngleUnit unit, long prec) {
    Real pi = Real::pi(prec);
    auto norm = [&](const AngleSpec& a) -> Real {
        switch (unit) {
            case AngleUnit::PerPi: return to_real(a.pi_coeff, prec) + to_real(a.offset, prec) / pi;
            case AngleUnit::PerTwoPi:
                return (to_real(a.pi_coeff, prec) + to_real(a.offset, prec) / pi) / Real(2, prec);
            case AngleUnit::Raw: return a.eval(prec);
        }
        return a.eval(prec);
    };
    return {norm(alpha), norm(beta)};
}

namespace {

Real combo_frac(const Real& x, const Real& y, long n, long m) {
    long prec = x.prec();
    return dist_to_int(Real(double(n), prec) * x + Real(double(m), prec) * y);
}

}  // namespace

SmallDenominator small_denominator(const Real& x, const Real& y, long k) {
    if (k < 1) throw ConfigError("small denominator index k must be >= 1");
    SmallDenominator best;
    bool first = true;
    // <v> = <-v>, so scan only n > 0, plus n = 0 with m > 0.
    for (long n = 0; n <= k; ++n) {
        long m_lo = n == 0 ? 1 : -(k - n);
        for (long m = m_lo; m <= k - n; ++m) {
            if (n == 0 && m == 0) continue;
            Real v = combo_frac(x, y, n, m);
            if (first || v < best.value) {
                best = {v, n, m};
                first = false;
            }
        }
    }
    return best;
}

SmallDenominator small_denominator_exhaustive(const Real& x, const Real& y, long k) {
    if (k < 1) throw ConfigError("small denominator index k must be >= 1");
    SmallDenominator best;
    bool first = true;
    for (long n = -k; n <= k; ++n) {
        for (long m = -(k - std::abs(n)); m <= k - std::abs(n); ++m) {
            if (n == 0 && m == 0) continue;
            Real v = combo_frac(x, y, n, m);
            if (first || v < best.value) {
                best = {v, n, m};
                first = false;
            }
        }
    }
    return best;
}

bool independence_heuristic(const Real& x, const Real& y, long max_k, double threshold) {
    long prec = x.prec();
    Real thr(threshold, prec);
    for (long n = 0; n <= max_k; ++n) {
        // incremental inner loop: t = n*x + m*y
        long m_lo = n == 0 ? 1 : -(max_k - n);
        Real t = Real(double(n), prec) * x + Real(double(m_lo), prec) * y;
        for (long m = m_lo; m <= max_k - n; ++m) {
            if (!(n == 0 && m == 0) && dist_to_int(t) <= thr) return false;
            t += y;
        }
    }
    return true;
}

bool is_relative_eps_net(std::vector<Real> points, const Real& u, const Real& v, double eps) {
    if (points.empty()) throw EmptySet("relative eps-net test on an empty set");
    if (!(v > u)) throw ConfigError("segment must have positive length");
    long prec = u.prec();
    for (const Real& p : points)
        if (p < u || p > v) throw ConfigError("point outside the segment");
    std::sort(points.begin(), points.end());
    Real eps_abs = Real(eps, prec) * (v - u);
    if (points.front() - u > eps_abs) return false;
    if (v - points.back() > eps_abs) return false;
    Real two(2, prec);
    for (size_t i = 0; i + 1 < points.size(); ++i)
        if (points[i + 1] - points[i] > two * eps_abs) return false;
    return true;
}

bool is_alpha_beta_connected(const std::vector<Real>& seq, const Real& alpha, const Real& beta,
                             double tol) {
    if (seq.size() < 2) throw ConfigError("connected sequence needs at least two points");
    long prec = alpha.prec();
    Real t(tol, prec);
    Real two_pi = Real(2, prec) * Real::pi(prec);
    for (size_t i = 0; i + 1 < seq.size(); ++i) {
        Real diff = seq[i + 1] - seq[i];
        bool ok = false;
        for (const Real& cand : {alpha, -alpha, beta, -beta}) {
            Real r = canonical_angle(diff - cand);
            if (r <= t || two_pi - r <= t) {
                ok = true;
                break;
            }
        }
        if (!ok) return false;
    }
    return true;
}

bool contains_relative_net_subset(const std::vector<Real>& points, double eps) {
    size_t n = points.size();
    if (n < 2) return false;
    long prec = points.front().prec();
    Real two_pi = Real(2, prec) * Real::pi(prec);
    Real zero(0, prec);
    // For every counterclockwise arc between two set points, the best
    // candidate subset is every set point inside that arc.
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            Real span = canonical_angle(points[j] - points[i]);
            if (span.is_zero()) continue;
            std::vector<Real> inside;
            for (size_t t = 0; t < n; ++t) {
                Real rel = canonical_angle(points[t] - points[i]);
                if (rel <= span) inside.push_back(rel);
                else if ((two_pi - rel).is_zero()) inside.push_back(zero);
            }
            if (inside.size() >= 2 && is_relative_eps_net(inside, zero, span, eps)) return true;
        }
    }
    return false;
}

namespace {

using Lattice = std::pair<long, long>;

std::vector<Lattice> canonical(std::vector<Lattice> pts) {
    std::sort(pts.begin(), pts.end());
    long ax = pts.front().first, ay = pts.front().second;
    for (auto& p : pts) {
        p.first -= ax;
        p.second -= ay;
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

std::vector<Real> to_circle(const std::vector<Lattice>& pts, const Real& alpha, const Real& beta) {
    long prec = alpha.prec();
    std::vector<Real> out;
    out.reserve(pts.size());
    for (const auto& [a, b] : pts)
        out.push_back(canonical_angle(Real(double(a), prec) * alpha + Real(double(b), prec) * beta));
    return out;
}

// Spanning walk over the connected lattice set: DFS with explicit backtrack
// steps, so consecutive points always differ by one generator.
void spanning_walk(const std::vector<Lattice>& pts, std::vector<Lattice>& walk,
                   std::vector<std::string>& steps) {
    std::set<Lattice> in(pts.begin(), pts.end());
    std::set<Lattice> seen;
    const Lattice start = pts.front();

    std::function<void(const Lattice&)> dfs = [&](const Lattice& p) {
        seen.insert(p);
        walk.push_back(p);
        static const long dx[4] = {1, -1, 0, 0};
        static const long dy[4] = {0, 0, 1, -1};
        static const char* tok[4] = {"+a", "-a", "+b", "-b"};
        static const char* rtok[4] = {"-a", "+a", "-b", "+b"};
        for (int d = 0; d < 4; ++d) {
            Lattice q{p.first + dx[d], p.second + dy[d]};
            if (!in.count(q) || seen.count(q)) continue;
            steps.push_back(tok[d]);
            dfs(q);
            steps.push_back(rtok[d]);
            walk.push_back(p);
        }
    };
    dfs(start);
}

}  // namespace

NetFunctionEstimate estimate_net_function(const Real& alpha, const Real& beta, double eps,
                                          const NetSearchBudget& budget) {
    if (!(eps > 0 && eps < 1)) throw ConfigError("eps must be in (0, 1)");
    NetFunctionEstimate est;
    est.epsilon = eps;
    est.budget = budget;

    // Connected point sets generated by +-alpha/+-beta steps are, up to
    // translation, connected subsets of the (a, b) lattice containing the
    // origin. Net-free sets are closed under connected deletion, so growing
    // only net-free sets reaches every net-free set.
    std::set<std::vector<Lattice>> seen;
    std::vector<std::vector<Lattice>> frontier{{{0, 0}}};
    seen.insert(frontier.front());
    long best_size = 1;
    std::vector<Lattice> best_set = frontier.front();
    long nodes = 0;
    bool cut = false;
    long first_all_net_size = -1;

    for (long size = 1; size < budget.max_cardinality && !frontier.empty(); ++size) {
        std::vector<std::vector<Lattice>> next;
        for (const auto& s : frontier) {
            std::set<Lattice> in(s.begin(), s.end());
            for (const auto& p : s) {
                static const long dx[4] = {1, -1, 0, 0};
                static const long dy[4] = {0, 0, 1, -1};
                for (int d = 0; d < 4; ++d) {
                    Lattice q{p.first + dx[d], p.second + dy[d]};
                    if (in.count(q)) continue;
                    std::vector<Lattice> grown = s;
                    grown.push_back(q);
                    grown = canonical(std::move(grown));
                    if (!seen.insert(grown).second) continue;
                    if (++nodes > budget.max_nodes) {
                        cut = true;
                        break;
                    }
                    if (!contains_relative_net_subset(to_circle(grown, alpha, beta), eps))
                        next.push_back(std::move(grown));
                }
                if (cut) break;
            }
            if (cut) break;
        }
        if (cut) break;
        if (!next.empty()) {
            best_size = size + 1;
            best_set = next.front();
        } else {
            first_all_net_size = size + 1;
            break;
        }
        frontier = std::move(next);
    }

    est.lower_bound = best_size;
    est.budget_exhausted = cut;
    if (!cut && first_all_net_size > 0) est.upper_bound = first_all_net_size - 1;

    std::vector<Lattice> walk;
    spanning_walk(best_set, walk, est.witness_steps);
    est.witness = to_circle(walk, alpha, beta);
    return est;
}

void write_f_table(const std::string& path, const std::vector<NetFunctionEstimate>& rows) {
    std::ofstream f(path);
    f << "# net function estimates\n";
    f << "# columns: epsilon lower_bound upper_bound_or_NA witness_steps\n";
    f << "# lower_bound L: some ab-connected set of L points has no relative eps-net subset\n";
    f << "# upper bound is a search candidate (complete to the stated budget), not certified\n";
    f << "# segment convention: minimal closed arc spanning the subset itself\n";
    for (const auto& r : rows) {
        f << r.epsilon << " " << r.lower_bound << " ";
        if (r.upper_bound) f << *r.upper_bound;
        else f << "NA";
        f << " ";
        if (r.witness_steps.empty()) f << "-";
        for (size_t i = 0; i < r.witness_steps.size(); ++i)
            f << (i ? "," : "") << r.witness_steps[i];
        if (r.budget_exhausted) f << " budget_exhausted";
        f << "\n";
    }
}

std::vector<NetFunctionEstimate> read_f_table(const std::string& path, long) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open F-table: " + path);
    std::vector<NetFunctionEstimate> rows;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        NetFunctionEstimate r;
        std::string ub, steps;
        ss >> r.epsilon >> r.lower_bound >> ub >> steps;
        if (ub != "NA") r.upper_bound = std::stol(ub);
        std::string tail;
        ss >> tail;
        r.budget_exhausted = tail == "budget_exhausted";
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace kite
