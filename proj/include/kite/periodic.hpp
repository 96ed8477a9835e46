#pragma once

// Periodic direction enumeration. A periodic orbit is determined by its
// cyclic word: the word's reflection composition must be a translation
// (exact integer test on the direction algebra), the candidate direction is
// the translation direction, and the orbit family is the strip of base
// points realizing the word. Words are canonicalized under rotation and
// reversal, so each geometric strip is cataloged once; the reversed
// traversal contributes the antipodal direction, which phi accounts for.

#include <optional>
#include <string>
#include <vector>

#include "kite/beam.hpp"
#include "kite/unfold.hpp"
#include "kite/word.hpp"

namespace kite {

struct PeriodicDirection {
    SymbolicWord word;      // canonical representative (min over rotations/reversal)
    long length = 0;        // combinatorial length of one period
    Real direction;         // circle value of the traversal direction
    V2<Real> translation;   // unfolded period vector
    int strip_side = 0;     // side carrying the realizing interval (= word.back())
    Real strip_lo, strip_hi;  // fraction interval on strip_side (open strip)
    Real strip_width;         // perpendicular width of the strip
    Rat witness_frac;         // interior fraction used for the closure re-check
    Real closure_residual;    // |endpoint - (start + translation)| from re-simulation
    bool touches_base = false;  // some orbit of the family crosses the base side
};

struct PeriodicCatalog {
    std::vector<PeriodicDirection> entries;  // sorted by (length, word)
    long exhaustive_to = 0;   // every primitive word with length <= this was tested
    long candidates_rejected = 0;  // translation words whose strip is empty
    long base_side = 1;

    long count_up_to(long len) const;  // entries with length <= len
};

// Enumerates all realized periodic strips with period length <= n_max.
// Throws EnumerationCapExceeded when n_max exceeds the cap.
PeriodicCatalog enumerate_periodic_directions(const KiteSpec& kite, long n_max, long cap = 14);

// phi(n): distance from theta to the nearest periodic direction of length
// < n (both traversal senses of every strip count); 1 when no such direction
// exists. periodic_theta is set when theta lies on a cataloged direction
// within 2^(1-p/2).
struct PhiValue {
    Real value;
    bool periodic_theta = false;
    bool heuristic = false;  // catalog not exhaustive below n; value is an upper bound
};
PhiValue phi(const KiteSpec& kite, const Real& theta_value, long n, const PeriodicCatalog& cat,
             bool allow_heuristic = false);
PhiValue phi(const KiteSpec& kite, const Direction& theta, long n, const PeriodicCatalog& cat,
             bool allow_heuristic = false);

struct PhiTable {
    Real theta;
    long n_max = 0;
    std::vector<PhiValue> values;  // values[i] = phi(i+1)
};
PhiTable make_phi_table(const KiteSpec& kite, const Real& theta_value, long n_max,
                        const PeriodicCatalog& cat, bool allow_heuristic = false);

// P(n): number of cataloged periodic beams (strips) of length < n.
long count_periodic_beams(const PeriodicCatalog& cat, long n);

// Strip interval on a chosen side, re-rooting the word there; nullopt when
// the word never crosses that side.
std::optional<std::pair<Real, Real>> strip_on_side(const KiteSpec& kite,
                                                   const PeriodicDirection& entry, int side);

// Re-simulates one period from the stored witness; distance between the
// final crossing and (start + translation). Rebuild the kite at doubled
// precision to re-check closure there.
Real closure_residual(const KiteSpec& kite, const PeriodicDirection& entry);

// Plain-text catalog: rows (length, word, direction to 60 digits, width);
// reloadable to skip re-enumeration.
void write_catalog(const std::string& path, const PeriodicCatalog& cat);
PeriodicCatalog read_catalog(const std::string& path, long prec);

}  // namespace kite
