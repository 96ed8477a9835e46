#pragma once

// Directional complexity p_theta(n) via the coding partition of the base
// side: the maximal intervals of starting points whose trajectories share a
// length-n word. Words and cells correspond one-to-one (each word's start set
// is an interval), so p_theta(n) is exactly the cell count at depth n.
// Refinement advances every cell by one letter; a cell splits exactly when a
// vertex shadow falls strictly inside its corridor. Boundary rays (which hit
// vertices, where the coding is undefined) are excluded from cells and kept
// as diagnostics.

#include <memory>
#include <string>
#include <vector>

#include "kite/beam.hpp"
#include "kite/detail/corridor.hpp"
#include "kite/word.hpp"

namespace kite {

class CodingPartition {
public:
    // Depth-0 partition: the whole open side, empty word.
    CodingPartition(const KiteSpec& kite, int base_side, const Direction& dir);

    CodingPartition(CodingPartition&&) = default;
    CodingPartition& operator=(CodingPartition&&) = default;

    long depth() const { return depth_; }
    long cell_count() const { return long(cells_.size()); }

    // Advance every cell by one letter; returns the number of cells that
    // split. Throws detail::RetryPrecisionCorridor when a decision needs more
    // precision (caller rebuilds at doubled precision).
    long refine();

    struct CellView {
        Real lo_frac, hi_frac;
        SymbolicWord word;
    };
    std::vector<CellView> cells() const;
    const std::vector<Real>& boundary_fracs() const { return boundary_fracs_; }
    const KiteSpec& kite() const { return *kite_; }

private:
    std::unique_ptr<KiteSpec> kite_;
    detail::CorridorCtx ctx_;
    std::vector<detail::CellState> cells_;
    std::vector<WordRef> words_;
    std::vector<Real> boundary_fracs_;
    long depth_ = 0;
};

struct ComplexityProfile {
    long n_max = 0;
    std::vector<long> p;        // p[i] = p_theta(i+1)
    std::vector<long> splits;   // splits[i] = cells split while refining depth i -> i+1
    std::vector<double> boundary_fracs;  // vertex-shadow base points (fractions)

    long p_at(long n) const { return p.at(size_t(n - 1)); }
    // Smallest n* with p constant on [n*, n_max]; n_max+1 if none.
    long stabilization_depth() const;
};

ComplexityProfile directional_complexity(const KiteSpec& kite, const Direction& dir, long n_max,
                                         int max_doublings = 4);

// Divides the base side into m equal cells, takes the worst splitting time
// T_emp, and verifies p_theta(T_emp) >= m. Throws UnsplitCells when some
// cells survive to the horizon.
struct PartitionBound {
    long m = 0;
    long T_emp = 0;
    bool verified = false;  // p_theta(T_emp) >= m
    long p_at_T = 0;
    std::vector<long> cell_times;
};
PartitionBound empirical_partition_bound(const KiteSpec& kite, const Direction& dir, long m,
                                         long horizon);

void write_profile_csv(const std::string& path, const ComplexityProfile& profile);
void write_profile_json(const std::string& path, const ComplexityProfile& profile);

}  // namespace kite
