#pragma once

// Number-theoretic kernels: small denominators N_ab(k), relative eps-nets,
// ab-connected sequences, and bounded-search estimation of the net function
// F_ab(eps).
//
// Conventions (configurable): angles are divided by pi before taking
// distances to the nearest integer, so angles that are rational multiples of
// pi are exactly the degenerate inputs. The segment of a relative eps-net is
// the minimal closed arc spanning the candidate subset itself.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kite/angle.hpp"
#include "kite/errors.hpp"
#include "kite/rational.hpp"
#include "kite/real.hpp"

namespace kite {

enum class AngleUnit { PerPi, PerTwoPi, Raw };

// (x, y) normalized per the unit convention.
std::pair<Real, Real> normalize_angles(const AngleSpec& alpha, const AngleSpec& beta,
                                       AngleUnit unit, long prec);

struct SmallDenominator {
    Real value;     // min <n*x + m*y> over 0 < |n|+|m| <= k
    long n = 0, m = 0;  // witness attaining it
};

// Symmetry-pruned scan (candidates up to (n,m) ~ -(n,m) identification).
SmallDenominator small_denominator(const Real& x, const Real& y, long k);

// Literal double loop over all 0 < |n|+|m| <= k; the definition itself,
// used as the oracle for the pruned scan.
SmallDenominator small_denominator_exhaustive(const Real& x, const Real& y, long k);

// Heuristic rational-independence check: <n*x + m*y> > threshold for all
// 0 < |n|+|m| <= max_k. Degenerate pairs (the distance hits ~0) fail.
bool independence_heuristic(const Real& x, const Real& y, long max_k = 1000,
                            double threshold = 1e-12);

// True iff every point of [u, v] is within eps*(v-u) of some point of the
// set (the set blown up to unit length is a standard eps-net).
// Throws EmptySet on an empty point list.
bool is_relative_eps_net(std::vector<Real> points, const Real& u, const Real& v, double eps);

// True iff consecutive circle differences are each +-alpha or +-beta
// within tol.
bool is_alpha_beta_connected(const std::vector<Real>& seq, const Real& alpha, const Real& beta,
                             double tol = 1e-20);

struct NetSearchBudget {
    long max_cardinality = 8;   // largest connected point-set size explored
    long max_nodes = 200000;    // search tree nodes
};

struct NetFunctionEstimate {
    double epsilon = 0;
    long lower_bound = 0;  // certified: an ab-connected set of this size has no net subset
    std::optional<long> upper_bound;  // candidate from exhausting all sets of the next size
    std::vector<Real> witness;        // the lower-bound set, in connected walk order
    std::vector<std::string> witness_steps;  // "+a"/"-a"/"+b"/"-b" tokens of the walk
    bool budget_exhausted = false;    // search stopped on budget, bounds are partial
    NetSearchBudget budget;
};

// Searches connected point sets generated by +-alpha/+-beta steps from 0 for
// the largest one containing no relative eps-net subset (the lower-bound
// witness); if every connected set of size L+1 contains one, reports the
// candidate upper bound L. Sets budget_exhausted instead of throwing so the
// partial estimate is always returned.
NetFunctionEstimate estimate_net_function(const Real& alpha, const Real& beta, double eps,
                                          const NetSearchBudget& budget = {});

// True iff some subset (of size >= 2 spanning a positive arc) of the set is a
// relative eps-net of its own spanning segment. Exact polynomial check: it
// suffices to test, for every point pair, all set points inside that span.
bool contains_relative_net_subset(const std::vector<Real>& points, double eps);

// F-table rows: (epsilon, lower_bound, upper_bound_or_NA, witness steps).
void write_f_table(const std::string& path, const std::vector<NetFunctionEstimate>& rows);
std::vector<NetFunctionEstimate> read_f_table(const std::string& path, long prec);

}  // namespace kite
