#pragma once

// Exact arithmetic in the real subfield of Q(zeta_n), used to decide
// geometric ties (vertex exactly on a beam boundary, ray exactly through a
// vertex) when every angle in play is a rational multiple of pi. For such
// configurations floating point cannot separate "exactly on" from "2^-p
// away", no matter the precision; here zero tests are exact coefficient
// checks and nonzero signs come from interval refinement.

#include <memory>
#include <vector>

#include "kite/rational.hpp"
#include "kite/real.hpp"

namespace kite {

struct CycField {
    long n = 0;                          // zeta = exp(2*pi*i/n), 4 | n
    long deg = 0;                        // deg Phi_n = euler phi(n)
    std::vector<Rat> phi;                // monic cyclotomic polynomial, size deg+1
    std::vector<std::vector<Rat>> pow_red;  // x^(deg+k) mod Phi_n, k in [0, deg)

    // Smallest usable field order containing zeta_4 and e^{i*pi*p/q} for the
    // given denominators.
    static std::shared_ptr<const CycField> make(long n);
};

class Cyc {
public:
    Cyc() = default;
    Cyc(std::shared_ptr<const CycField> f, const Rat& constant);

    static Cyc zeta_pow(std::shared_ptr<const CycField> f, long k);
    // cos(r*pi), sin(r*pi) for rational r; requires n % (2*den(r)) == 0.
    static Cyc cos_pi(std::shared_ptr<const CycField> f, const Rat& r);
    static Cyc sin_pi(std::shared_ptr<const CycField> f, const Rat& r);

    bool valid() const { return f_ != nullptr; }
    const std::shared_ptr<const CycField>& field() const { return f_; }

    Cyc operator-() const;
    friend Cyc operator+(const Cyc& a, const Cyc& b);
    friend Cyc operator-(const Cyc& a, const Cyc& b);
    friend Cyc operator*(const Cyc& a, const Cyc& b);
    friend Cyc operator/(const Cyc& a, const Cyc& b);
    Cyc& operator+=(const Cyc& o) { *this = *this + o; return *this; }
    Cyc& operator-=(const Cyc& o) { *this = *this - o; return *this; }
    Cyc& operator*=(const Cyc& o) { *this = *this * o; return *this; }

    Cyc inverse() const;

    bool is_zero() const;
    // Exact sign of the (real) value: -1, 0, +1.
    int sign() const;
    // Numeric value of the real part at the given precision.
    Real eval(long prec) const;

private:
    std::shared_ptr<const CycField> f_;
    std::vector<Rat> c_;  // reduced coefficients over the power basis, size deg
};

}  // namespace kite
