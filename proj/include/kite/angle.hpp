#pragma once

// Angles kept in exact form r*pi + q with rational r, q. Every angle in a run
// (kite angles, direction seeds) is one of these, which makes circle-point
// equality and periodicity checks exact integer questions instead of
// floating-point ones, and lets any geometric quantity be re-evaluated at a
// higher precision from its exact source.

#include <string>

#include "kite/rational.hpp"
#include "kite/real.hpp"

namespace kite {

struct AngleSpec {
    Rat pi_coeff{0};  // value = pi_coeff * pi + offset  (radians)
    Rat offset{0};

    // Accepts the minimal expression grammar: "0.3", "7/10", "pi/4",
    // "pi*7/10", "pi*7/10 - 0.0001". Throws ConfigError on malformed input.
    static AngleSpec parse(const std::string& text);

    bool rational_pi() const { return offset == 0; }
    Real eval(long prec) const {
        return to_real(pi_coeff, prec) * Real::pi(prec) + to_real(offset, prec);
    }
    std::string str() const;

    friend bool operator==(const AngleSpec& a, const AngleSpec& b) {
        return a.pi_coeff == b.pi_coeff && a.offset == b.offset;
    }
};

// Exact point of the circle written as R*pi + Q. Since pi is irrational,
// R*pi + Q == R'*pi + Q' (mod 2*pi) iff Q == Q' and R - R' is an even integer.
struct RationalAngle {
    Rat R{0}, Q{0};

    Real eval(long prec) const {
        return to_real(R, prec) * Real::pi(prec) + to_real(Q, prec);
    }
    bool same_circle_point(const RationalAngle& o) const {
        return Q == o.Q && is_even_integer(R - o.R);
    }
    bool rational_pi() const { return Q == 0; }

    friend RationalAngle operator+(const RationalAngle& a, const RationalAngle& b) {
        return {a.R + b.R, a.Q + b.Q};
    }
    friend RationalAngle operator-(const RationalAngle& a, const RationalAngle& b) {
        return {a.R - b.R, a.Q - b.Q};
    }
    friend RationalAngle operator*(const Rat& s, const RationalAngle& a) {
        return {s * a.R, s * a.Q};
    }
};

// Reduce to [0, 2*pi).
Real canonical_angle(const Real& x);

// Distance between two circle points (shorter arc).
Real circle_distance(const Real& a, const Real& b);

}  // namespace kite
