#pragma once

// Evaluators for the explicit bound formulas: P_ab(eps), M(eps), T(eps),
// U(n,rho), the generic exponential bound, N_theta(n), R(m), L(n). Inner
// arguments like (eps/1600)^(16/eps) underflow doubles almost immediately, so
// evaluation runs in MPFR with log10 values carried alongside; linear values
// are reported only when they fit a double.
//
// Every produced number carries the label of its weakest input: certified
// (exact kernels / enumerated catalogs), heuristic (search candidates,
// non-exhaustive catalogs), or assumed-table (user-supplied F values).

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kite/diophantine.hpp"
#include "kite/errors.hpp"
#include "kite/periodic.hpp"

namespace kite {

enum class SourceLabel { Certified, Heuristic, AssumedTable };
const char* label_name(SourceLabel l);
SourceLabel weakest(SourceLabel a, SourceLabel b);

struct ConstantsConfig {
    double C_dichotomy = 1.0;
    double c_shear = 1.0;
    double C_phi_arg = 1.0;
    double C_generic = 10.0;
    double C_theorem2 = 0.01;
    std::string provenance = "default";  // default | calibrated | user

    uint64_t hash() const;
    std::string str() const;
};
void write_constants(const std::string& path, const ConstantsConfig& c);
ConstantsConfig read_constants(const std::string& path);

struct SourcedValue {
    double log10_value = 0;             // always meaningful (value > 0)
    std::optional<double> value;        // linear, when within double range
    SourceLabel label = SourceLabel::Certified;
};

// The integer-table convention f(x) = f(floor(x) + 1) for non-integer x.
long convention_index(double x);
// Table form (1-indexed); throws OutOfTable outside 1..size.
double convention_extend(const std::vector<double>& table, double x);

// F_ab resolved by log10 of its (usually astronomically small) argument.
class FSource {
public:
    static FSource assumed_constant(double F);
    // rows (log10_eps, F): step function, constant on each cell of the grid;
    // log10_eps sorted ascending. Resolution outside the covered range uses
    // the nearest end when extend_tails, else throws FSourceUnresolved.
    static FSource assumed_table(std::vector<std::pair<double, double>> rows, bool extend_tails);
    // backed by estimate_net_function results; upper candidates (heuristic)
    // give conservative complexity bounds, certified floors do not.
    static FSource from_estimates(const std::vector<NetFunctionEstimate>& est, bool use_upper);

    SourcedValue resolve_log10_eps(double log10_eps) const;

private:
    SourceLabel label_ = SourceLabel::AssumedTable;
    std::vector<std::pair<double, double>> rows_;
    bool extend_tails_ = true;
};

// P_ab(eps) = (16/eps) * F((eps/1600)^(16/eps)).
struct PValue {
    SourcedValue P;
    double inner_log10 = 0;  // log10 of the inner argument
};
PValue P_alpha_beta(double eps, const FSource& f, long prec = 256);

// M(eps) = C / N_ab(P_ab(eps)); N evaluated via the integer convention.
// Throws ZeroDenominator on degenerate (rationally dependent) pairs.
SourcedValue M_of_eps(double eps, const FSource& f, const ConstantsConfig& c, const Real& x,
                      const Real& y, long prec = 256);

// T(eps) = max{M, C / phi(C_phi_arg * M)}. Throws PeriodicTheta when phi = 0.
struct TValue {
    SourcedValue T;
    bool phi_branch = false;  // the C/phi term was the max
    long phi_index = 0;       // integer argument fed to phi
};
TValue T_of_eps(double eps, const SourcedValue& M, const std::function<PhiValue(long)>& phi_at,
                const ConstantsConfig& c);

// U(n, rho): union of intervals of radius rho*4^(-n)*4^(-n-1) around the
// periodic directions (both senses) of length < n.
struct BadSet {
    std::vector<std::pair<Real, Real>> intervals;  // merged, within [0, 2*pi)
    Real measure;
    long n = 0;
    double rho = 0;
    bool contains(const Real& theta) const;
};
BadSet bad_set(const KiteSpec& kite, long n, double rho, const PeriodicCatalog& cat);
// Union over 2 <= n <= n_max.
BadSet bad_set_union(const KiteSpec& kite, long n_max, double rho, const PeriodicCatalog& cat);

// Generic bound C * exp(C * M) for directions outside U(rho).
SourcedValue generic_T_bound(const SourcedValue& M, const ConstantsConfig& c);

// N_theta(n) = max{m : T(1/m) <= n} over the monotone envelope of the
// empirical splitting-time table (index m-1 holds T(1/m); nullopt = unsplit).
std::vector<std::optional<long>> monotone_envelope(const std::vector<std::optional<long>>& T);
long N_theta(long n, const std::vector<std::optional<long>>& T_envelope);

// R(m) = N_ab(16*m*F((1/(1600*m))^(16*m))), non-increasing in m.
class RSource {
public:
    RSource(FSource f, Real x, Real y, long prec = 256);
    SourcedValue at(long m) const;  // throws RSourceUnresolved / ZeroDenominator

private:
    FSource f_;
    Real x_, y_;
    long prec_;
    mutable std::vector<std::pair<long, SourcedValue>> cache_;
};

// L(n) = max{m : R(m) >= C/ln(n)}, 0 when even m = 1 fails. n >= 2.
struct LValue {
    long L = 0;
    SourceLabel label = SourceLabel::Certified;
};
LValue theorem2_L(long n, const RSource& r, const ConstantsConfig& c, long m_cap = 64);

// Smallest C_theorem2 on a log grid for which p(n) >= L(n) holds on the
// given (n, p) corpus rows; upward-closed in C, so this is the grid's first
// passing point.
double calibrate_C_theorem2(const std::vector<std::pair<long, long>>& n_p_rows, const RSource& r,
                            long m_cap = 64);

struct BoundProfileRow {
    std::string quantity;
    double argument;
    double value_log10;
    SourceLabel label;
};
void write_bound_profile(const std::string& path, const std::vector<BoundProfileRow>& rows,
                         const ConstantsConfig& constants);

}  // namespace kite
