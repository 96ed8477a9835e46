#pragma once

// (eps, T)-beams: corridors of parallel trajectories swept through the
// unfolded plane. A beam is a slab between two parallel rays launched from an
// interval of the base side; it keeps a single symbolic word until a kite
// vertex enters the open slab, which splits the coding.
//
// The slab is fixed once (parallel corridor), so the state per step is just
// the current kite copy. Vertex-versus-boundary comparisons follow the
// closed-corridor convention: a vertex exactly on a boundary ray does not
// split the beam. Interval endpoints are stored as slab offsets so that a
// vertex created boundary compares bitwise-equal when met again.

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "kite/unfold.hpp"

namespace kite {

struct BeamSpec {
    int base_side = 1;
    Rat lo{0}, hi{1};  // base interval as fractions of the side, 0 <= lo < hi <= 1
    Direction dir;
};

// Reporting view of a corridor (arc-length units, unit-diameter kite).
struct BeamCorridor {
    int base_side = 1;
    Real a, b;    // arc-length interval on the base side
    Real width;   // (b - a) * sin(incidence)
    SymbolicWord word;
    long N = 0;   // combinatorial length reached
    Real T;       // geometric length along the mid ray
};

struct SplitEvent {
    long step = 0;        // N0: 1-based letter index at which sub-beam words first differ
    int vertex = 0;       // base-kite vertex index 0..3 of the splitting vertex
    Real split_arc;       // arc-length parameter of the splitting ray on the base side
    Real split_frac;      // same as a fraction of the side
    SymbolicWord prefix;  // the step-1 letters shared before the divergence
    V2<Real> vertex_point;  // unfolded coordinates of the splitting vertex
    Real T;               // geometric length when the vertex was met
};

struct SurvivedToHorizon {
    SymbolicWord word;
    long N = 0;
    Real T;
};

using BeamOutcome = std::variant<SplitEvent, SurvivedToHorizon>;

BeamOutcome trace_beam(const KiteSpec& kite, const BeamSpec& beam, long max_N,
                       int max_doublings = 4);

// First splitting time, or nullopt when the beam survives to the horizon.
std::optional<long> splitting_time(const KiteSpec& kite, const BeamSpec& beam, long max_N,
                                   int max_doublings = 4);

// Beam of width eps centered at the given fraction of the base side.
BeamSpec centered_beam(const KiteSpec& kite, int side, const Rat& center, double eps,
                       const Direction& dir);

// Widening step used by the splitting-time iteration: a beam that survived to
// length L_S while containing a periodic strip of a nearby direction gains a
// base shear delta ~ L_S * sin(phi). The returned base is the union of the
// old base and the folded-back end segment.
struct ShearExtension {
    Real delta;       // width gained
    Real new_width;
    Real new_lo_arc, new_hi_arc;  // extended base interval, arc length
    Real phi;         // angle between beam and periodic direction
};
ShearExtension shear_extend(const KiteSpec& kite, const BeamSpec& beam,
                            const Real& periodic_value,
                            const std::pair<Real, Real>& strip_arc, const Real& L_S);

// Incidence sine of a direction against a side (absolute value).
Real incidence_sin(const KiteSpec& kite, int side, const Direction& dir);

}  // namespace kite
