#include "kite/partition.hpp"

#include <fstream>

#include "json.hpp"

namespace kite {

using detail::CellState;
using detail::CorridorCtx;
using detail::RetryPrecisionCorridor;

CodingPartition::CodingPartition(const KiteSpec& kite, int base_side, const Direction& dir)
    : kite_(std::make_unique<KiteSpec>(kite)) {
    ctx_ = CorridorCtx::make(*kite_, base_side, dir);
    ctx_.kite = kite_.get();
    cells_.push_back(CellState::initial(ctx_, Rat(0), Rat(1)));
    words_.push_back(nullptr);
}

long CodingPartition::refine() {
    std::vector<CellState> next_cells;
    std::vector<WordRef> next_words;
    next_cells.reserve(cells_.size() + 4);
    next_words.reserve(cells_.size() + 4);
    long split_count = 0;

    for (size_t i = 0; i < cells_.size(); ++i) {
        CellState& cell = cells_[i];
        detail::StepOutcome out;
        try {
            out = detail::corridor_step(ctx_, cell);
        } catch (RetryPrecisionCorridor& r) {
            r.cell = long(i);
            throw;
        }
        if (out.splits.empty()) {
            next_words.push_back(word_extend(words_[i], uint8_t(out.letter)));
            next_cells.push_back(std::move(cell));
            continue;
        }
        ++split_count;
        for (const auto& sp : out.splits) boundary_fracs_.push_back(sp.offset / ctx_.d_e);
        for (CellState& child : detail::split_cell(cell, out.splits)) {
            auto child_out = detail::corridor_step(ctx_, child);
            if (!child_out.splits.empty())
                throw std::logic_error("sub-cell split again at the same depth");
            next_words.push_back(word_extend(words_[i], uint8_t(child_out.letter)));
            next_cells.push_back(std::move(child));
        }
    }
    cells_ = std::move(next_cells);
    words_ = std::move(next_words);
    ++depth_;
    return split_count;
}

std::vector<CodingPartition::CellView> CodingPartition::cells() const {
    std::vector<CellView> out;
    out.reserve(cells_.size());
    for (size_t i = 0; i < cells_.size(); ++i)
        out.push_back({cells_[i].lo_frac(ctx_), cells_[i].hi_frac(ctx_), word_materialize(words_[i])});
    return out;
}

long ComplexityProfile::stabilization_depth() const {
    if (p.empty()) return 1;
    long n_star = n_max;
    for (long i = long(p.size()) - 2; i >= 0; --i) {
        if (p[size_t(i)] != p.back()) break;
        n_star = i + 1;
    }
    return n_star;
}

ComplexityProfile directional_complexity(const KiteSpec& kite, const Direction& dir, long n_max,
                                         int max_doublings) {
    KiteSpec working = kite;
    long pending_cell = -1;
    int pending_step = 0;
    for (int attempt = 0; attempt <= max_doublings; ++attempt) {
        try {
            CodingPartition part(working, working.base_side, dir);
            ComplexityProfile prof;
            prof.n_max = n_max;
            for (long n = 0; n < n_max; ++n) {
                long splits = part.refine();
                prof.splits.push_back(splits);
                prof.p.push_back(part.cell_count());
            }
            for (const Real& b : part.boundary_fracs())
                prof.boundary_fracs.push_back(b.to_double());
            return prof;
        } catch (const RetryPrecisionCorridor& r) {
            pending_cell = r.cell;
            pending_step = r.step;
            working = working.at_precision(working.prec * 2);
        }
    }
    throw BoundaryVertexAmbiguous("partition refinement undecidable at maximum precision",
                                  pending_step, pending_cell);
}

PartitionBound empirical_partition_bound(const KiteSpec& kite, const Direction& dir, long m,
                                         long horizon) {
    if (m < 1) throw ConfigError("partition count m must be >= 1");
    PartitionBound out;
    out.m = m;
    std::vector<long> unsplit;
    long worst = -1;
    for (long i = 0; i < m; ++i) {
        BeamSpec cell;
        cell.base_side = kite.base_side;
        cell.lo = Rat(i, m);
        cell.hi = Rat(i + 1, m);
        cell.dir = dir;
        auto t = splitting_time(kite, cell, horizon);
        if (!t) {
            unsplit.push_back(i);
            out.cell_times.push_back(-1);
        } else {
            out.cell_times.push_back(*t);
            worst = std::max(worst, *t);
        }
    }
    if (!unsplit.empty())
        throw UnsplitCells("some partition cells never split before the horizon", unsplit, worst);
    out.T_emp = worst;
    ComplexityProfile prof = directional_complexity(kite, dir, out.T_emp);
    out.p_at_T = prof.p_at(out.T_emp);
    out.verified = out.p_at_T >= m;
    return out;
}

void write_profile_csv(const std::string& path, const ComplexityProfile& profile) {
    std::ofstream f(path);
    f << "n,p_theta_n\n";
    for (long n = 1; n <= profile.n_max; ++n) f << n << "," << profile.p_at(n) << "\n";
}

void write_profile_json(const std::string& path, const ComplexityProfile& profile) {
    nlohmann::ordered_json j;
    j["n_max"] = profile.n_max;
    j["p"] = profile.p;
    j["splits"] = profile.splits;
    j["boundary_fracs"] = profile.boundary_fracs;
    std::ofstream f(path);
    f << j.dump(2) << "\n";
}

}  // namespace kite
