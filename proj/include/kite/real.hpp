#pragma once

// High-precision real numbers on top of MPFR, with explicit per-value
// precision. The working precision of every derived quantity is the max of
// its operands, so a computation started at p bits can be re-run at 2p bits
// by rebuilding its inputs.

#include <mpfr.h>

#include <cassert>
#include <cstdio>
#include <string>
#include <utility>

namespace kite {

class Real {
public:
    Real() { mpfr_init2(v_, 64); mpfr_set_nan(v_); }
    explicit Real(long prec) { mpfr_init2(v_, prec); mpfr_set_nan(v_); }
    Real(double x, long prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
    Real(int x, long prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, x, MPFR_RNDN); }

    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    long prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    static Real pi(long prec) { Real r(prec); mpfr_const_pi(r.v_, MPFR_RNDN); return r; }
    static Real from_mpq(const mpq_t q, long prec) {
        Real r(prec); mpfr_set_q(r.v_, q, MPFR_RNDN); return r;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sgn() const { return mpfr_sgn(v_); }

    // Decimal rendering with a fixed significant-digit count; stable across runs.
    std::string str(int digits = 20) const {
        char* buf = nullptr;
        mpfr_asprintf(&buf, "%.*Rg", digits, v_);
        std::string out(buf);
        mpfr_free_str(buf);
        return out;
    }

    friend Real operator+(const Real& a, const Real& b) { return bin(a, b, mpfr_add); }
    friend Real operator-(const Real& a, const Real& b) { return bin(a, b, mpfr_sub); }
    friend Real operator*(const Real& a, const Real& b) { return bin(a, b, mpfr_mul); }
    friend Real operator/(const Real& a, const Real& b) { return bin(a, b, mpfr_div); }
    Real operator-() const { Real r(prec()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

    Real& operator+=(const Real& o) { *this = *this + o; return *this; }
    Real& operator-=(const Real& o) { *this = *this - o; return *this; }
    Real& operator*=(const Real& o) { *this = *this * o; return *this; }
    Real& operator/=(const Real& o) { *this = *this / o; return *this; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_); }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_); }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_); }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_); }
    friend bool operator!=(const Real& a, const Real& b) { return !mpfr_equal_p(a.v_, b.v_); }

private:
    using Bin = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    static Real bin(const Real& a, const Real& b, Bin fn) {
        Real r(a.prec() > b.prec() ? a.prec() : b.prec());
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    mpfr_t v_;
};

inline Real un(const Real& a, int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) {
    Real r(a.prec());
    fn(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

inline Real abs(const Real& a) { return un(a, mpfr_abs); }
inline Real sqrt(const Real& a) { return un(a, mpfr_sqrt); }
inline Real sin(const Real& a) { return un(a, mpfr_sin); }
inline Real cos(const Real& a) { return un(a, mpfr_cos); }
inline Real tan(const Real& a) { return un(a, mpfr_tan); }
inline Real exp(const Real& a) { return un(a, mpfr_exp); }
inline Real log(const Real& a) { return un(a, mpfr_log); }
inline Real log2(const Real& a) { return un(a, mpfr_log2); }
inline Real log10(const Real& a) { return un(a, mpfr_log10); }
inline Real un_round(const Real& a, int (*fn)(mpfr_ptr, mpfr_srcptr)) {
    Real r(a.prec());
    fn(r.raw(), a.raw());
    return r;
}
inline Real floor(const Real& a) { return un_round(a, mpfr_floor); }
inline Real ceil(const Real& a) { return un_round(a, mpfr_ceil); }
inline Real round_nearest(const Real& a) { return un_round(a, mpfr_round); }

inline Real atan2(const Real& y, const Real& x) {
    Real r(y.prec() > x.prec() ? y.prec() : x.prec());
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline Real pow(const Real& b, const Real& e) {
    Real r(b.prec() > e.prec() ? b.prec() : e.prec());
    mpfr_pow(r.raw(), b.raw(), e.raw(), MPFR_RNDN);
    return r;
}
inline Real min(const Real& a, const Real& b) { return a < b ? a : b; }
inline Real max(const Real& a, const Real& b) { return a > b ? a : b; }

// 2^{-k} at precision enough to hold it exactly.
inline Real pow2(long k, long prec) {
    Real r(1.0, prec);
    mpfr_mul_2si(r.raw(), r.raw(), k, MPFR_RNDN);
    return r;
}

// Distance from x to the nearest integer.
inline Real dist_to_int(const Real& x) { return abs(x - round_nearest(x)); }

}  // namespace kite
