#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace kite {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateTriangle : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

// A vertex sits on a corridor boundary within tolerance even at the maximum
// working precision; the beam edge is degenerate.
struct BoundaryVertexAmbiguous : Error {
    BoundaryVertexAmbiguous(const std::string& what, int step, long cell = -1)
        : Error(what), step(step), cell(cell) {}
    int step;
    long cell;  // partition cell index when raised during refinement, else -1
};

struct CatalogNotExhaustive : Error {
    using Error::Error;
};

struct EnumerationCapExceeded : Error {
    using Error::Error;
};

// theta coincides with a periodic direction: phi = 0 and the splitting-time
// bound is undefined.
struct PeriodicTheta : Error {
    using Error::Error;
};

struct ZeroDenominator : Error {
    using Error::Error;
};

struct FSourceUnresolved : Error {
    using Error::Error;
};

struct RSourceUnresolved : Error {
    using Error::Error;
};

struct OutOfTable : Error {
    using Error::Error;
};

struct EmptySet : Error {
    using Error::Error;
};

struct NoPeriodicInside : Error {
    using Error::Error;
};

struct UnsplitCells : Error {
    UnsplitCells(const std::string& what, std::vector<long> cells, long t_emp_split)
        : Error(what), cells(std::move(cells)), t_emp_over_split_cells(t_emp_split) {}
    std::vector<long> cells;          // indices of cells that reached the horizon unsplit
    long t_emp_over_split_cells;      // max splitting time among the cells that did split, -1 if none
};

}  // namespace kite
