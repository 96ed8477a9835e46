#pragma once

// Directions as symbolic circle points s*theta0 + a*alpha + b*beta + c*pi.
// Reflection across a kite side maps d to 2*gamma - d where gamma is the side
// inclination, itself an integer combination of (alpha, beta, pi); so the
// whole reflection group acts by exact integer coefficient updates and two
// directions are equal iff their coefficient tuples are.

#include <memory>

#include "kite/angle.hpp"

namespace kite {

struct DirectionBasis {
    AngleSpec theta0;  // the initial direction seed
    AngleSpec alpha;   // triangle base angles
    AngleSpec beta;
};

class Direction {
public:
    Direction() = default;

    static Direction seed(std::shared_ptr<const DirectionBasis> basis) {
        Direction d;
        d.basis_ = std::move(basis);
        d.uses_theta0_ = true;
        d.s_ = 1;
        return d;
    }
    static Direction pure(std::shared_ptr<const DirectionBasis> basis, long a, long b, long c) {
        Direction d;
        d.basis_ = std::move(basis);
        d.uses_theta0_ = false;
        d.a_ = a;
        d.b_ = b;
        d.c_ = c;
        return d;
    }

    int sign() const { return s_; }
    bool uses_theta0() const { return uses_theta0_; }
    long a() const { return a_; }
    long b() const { return b_; }
    long c() const { return c_; }
    const std::shared_ptr<const DirectionBasis>& basis() const { return basis_; }

    // 2*(ga*alpha + gb*beta + gc*pi) - d, exact.
    Direction reflected(long ga, long gb, long gc) const {
        Direction d = *this;
        d.s_ = -s_;
        d.a_ = 2 * ga - a_;
        d.b_ = 2 * gb - b_;
        d.c_ = 2 * gc - c_;
        return d;
    }

    RationalAngle exact_angle() const {
        RationalAngle r;
        r.R = Rat(a_) * basis_->alpha.pi_coeff + Rat(b_) * basis_->beta.pi_coeff + Rat(c_);
        r.Q = Rat(a_) * basis_->alpha.offset + Rat(b_) * basis_->beta.offset;
        if (uses_theta0_) {
            r.R += Rat(s_) * basis_->theta0.pi_coeff;
            r.Q += Rat(s_) * basis_->theta0.offset;
        }
        return r;
    }

    Real eval(long prec) const { return exact_angle().eval(prec); }
    bool rational_pi() const { return exact_angle().rational_pi(); }

    friend bool operator==(const Direction& x, const Direction& y) {
        return x.uses_theta0_ == y.uses_theta0_ && (!x.uses_theta0_ || x.s_ == y.s_) &&
               x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
    }

private:
    std::shared_ptr<const DirectionBasis> basis_;
    int s_ = 1;
    bool uses_theta0_ = false;
    long a_ = 0, b_ = 0, c_ = 0;
};

}  // namespace kite
