#include "kite/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace kite {

namespace {

using Poly = std::vector<Rat>;  // coefficient list, index = power

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient of a by monic b, remainder returned in a.
Poly divmod_monic(Poly& a, const Poly& b) {
    Poly q;
    if (a.size() < b.size()) return q;
    q.assign(a.size() - b.size() + 1, Rat(0));
    for (long i = long(a.size()) - 1; i >= long(b.size()) - 1; --i) {
        Rat coef = a[i];
        if (coef == 0) continue;
        long shift = i - (long(b.size()) - 1);
        q[shift] = coef;
        for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= coef * b[j];
    }
    trim(a);
    return q;
}

// Cyclotomic polynomials by recursive exact division of x^n - 1.
Poly cyclotomic_poly(long n, std::map<long, Poly>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    Poly p(n + 1, Rat(0));
    p[0] = -1;
    p[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        Poly phi_d = cyclotomic_poly(d, memo);
        Poly rem = p;
        p = divmod_monic(rem, phi_d);
        if (!rem.empty()) throw std::logic_error("cyclotomic division not exact");
    }
    trim(p);
    return memo.emplace(n, p).first->second;
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

Poly sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rat(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

Poly scale(Poly a, const Rat& s) {
    for (auto& c : a) c *= s;
    return a;
}

}  // namespace

std::shared_ptr<const CycField> CycField::make(long n) {
    static std::mutex mu;
    static std::map<long, std::shared_ptr<const CycField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    if (n <= 0 || n % 4 != 0)
        throw std::invalid_argument("cyclotomic field order must be a positive multiple of 4");
    auto f = std::make_shared<CycField>();
    f->n = n;
    std::map<long, Poly> memo;
    f->phi = cyclotomic_poly(n, memo);
    f->deg = long(f->phi.size()) - 1;
    // Reduction rows for x^(deg+k), k in [0, deg): enough for products of two
    // reduced elements (degree <= 2*deg-2).
    Poly cur(f->deg + 1, Rat(0));  // x^deg
    cur[f->deg] = 1;
    for (long k = 0; k < f->deg; ++k) {
        Poly rem = cur;
        divmod_monic(rem, f->phi);
        rem.resize(f->deg, Rat(0));
        f->pow_red.push_back(rem);
        // cur *= x
        cur.insert(cur.begin(), Rat(0));
    }
    cache.emplace(n, f);
    return f;
}

Cyc::Cyc(std::shared_ptr<const CycField> f, const Rat& constant) : f_(std::move(f)) {
    c_.assign(f_->deg, Rat(0));
    c_[0] = constant;
}

Cyc Cyc::zeta_pow(std::shared_ptr<const CycField> f, long k) {
    k %= f->n;
    if (k < 0) k += f->n;
    Cyc r(f, Rat(0));
    if (k < f->deg) {
        r.c_[k] = 1;
        return r;
    }
    // x^k mod Phi: multiply by x one step at a time, folding the overflow
    // coefficient through the x^deg reduction row.
    Poly cur(f->deg, Rat(0));  // x^deg reduced
    cur = f->pow_red[0];
    for (long e = f->deg; e < k; ++e) {
        Rat lead = cur[f->deg - 1];
        for (long j = f->deg - 1; j > 0; --j) cur[j] = cur[j - 1];
        cur[0] = 0;
        if (lead != 0) {
            const Poly& row = f->pow_red[0];
            for (long j = 0; j < f->deg; ++j) cur[j] += lead * row[j];
        }
    }
    r.c_ = cur;
    return r;
}

Cyc Cyc::cos_pi(std::shared_ptr<const CycField> f, const Rat& r) {
    Rat rr = r;
    rr.canonicalize();
    long q = rr.get_den().get_si();
    if (f->n % (2 * q) != 0) throw std::invalid_argument("angle not representable in field");
    long k = (rr.get_num().get_si() % (2 * q)) * (f->n / (2 * q));
    Cyc z = zeta_pow(f, k), zb = zeta_pow(f, -k);
    Cyc sum = z + zb;
    Cyc half(f, Rat(1, 2));
    return sum * half;
}

Cyc Cyc::sin_pi(std::shared_ptr<const CycField> f, const Rat& r) {
    Rat rr = r;
    rr.canonicalize();
    long q = rr.get_den().get_si();
    if (f->n % (2 * q) != 0) throw std::invalid_argument("angle not representable in field");
    long k = (rr.get_num().get_si() % (2 * q)) * (f->n / (2 * q));
    // sin = (z - z^-1) / (2i), 1/i = zeta_n^{-n/4}
    Cyc diff = zeta_pow(f, k) - zeta_pow(f, -k);
    Cyc inv_2i = zeta_pow(f, -f->n / 4) * Cyc(f, Rat(1, 2));
    return diff * inv_2i;
}

Cyc Cyc::operator-() const {
    Cyc r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Cyc operator+(const Cyc& a, const Cyc& b) {
    Cyc r = a;
    for (long i = 0; i < a.f_->deg; ++i) r.c_[i] += b.c_[i];
    return r;
}

Cyc operator-(const Cyc& a, const Cyc& b) {
    Cyc r = a;
    for (long i = 0; i < a.f_->deg; ++i) r.c_[i] -= b.c_[i];
    return r;
}

Cyc operator*(const Cyc& a, const Cyc& b) {
    const auto& f = a.f_;
    long d = f->deg;
    std::vector<Rat> prod(2 * d - 1, Rat(0));
    for (long i = 0; i < d; ++i) {
        if (a.c_[i] == 0) continue;
        for (long j = 0; j < d; ++j) {
            if (b.c_[j] == 0) continue;
            prod[i + j] += a.c_[i] * b.c_[j];
        }
    }
    Cyc r(f, Rat(0));
    for (long i = 0; i < d && i < long(prod.size()); ++i) r.c_[i] = prod[i];
    for (long k = 0; d + k < long(prod.size()); ++k) {
        if (prod[d + k] == 0) continue;
        const auto& row = f->pow_red[k];
        for (long j = 0; j < d; ++j) r.c_[j] += prod[d + k] * row[j];
    }
    return r;
}

Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inverse(); }

Cyc Cyc::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
    // Extended Euclid over Q[x]: u*self + v*Phi = gcd = const.
    Poly r0 = f_->phi;
    Poly r1 = c_;
    trim(r1);
    Poly s0, s1{Rat(1)};
    s0.clear();
    while (true) {
        // r0 = q*r1 + r2  (r1 not necessarily monic: normalize)
        Rat lead = r1.back();
        Poly r1m = scale(r1, Rat(1) / lead);
        Poly rem = r0;
        Poly q = divmod_monic(rem, r1m);
        q = scale(q, Rat(1) / lead);
        Poly s2 = sub(s0, mul(q, s1));
        if (rem.empty()) {
            // gcd = r1 (degree 0 since Phi irreducible and self != 0)
            if (r1.size() != 1) throw std::logic_error("non-trivial gcd with cyclotomic polynomial");
            Poly red = scale(s1, Rat(1) / r1[0]);
            divmod_monic(red, f_->phi);  // leaves the remainder in red
            red.resize(f_->deg, Rat(0));
            Cyc out(f_, Rat(0));
            out.c_ = red;
            return out;
        }
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
}

bool Cyc::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

Real Cyc::eval(long prec) const {
    // Real part: sum c_j * cos(2*pi*j/n).
    Real acc(0.0, prec);
    Real two_pi = Real(2, prec) * Real::pi(prec);
    Real n(double(f_->n), prec);
    for (long j = 0; j < f_->deg; ++j) {
        if (c_[j] == 0) continue;
        Real angle = two_pi * Real(double(j), prec) / n;
        acc += to_real(c_[j], prec) * cos(angle);
    }
    return acc;
}

int Cyc::sign() const {
    if (is_zero()) return 0;
    Rat mag(0);
    for (const auto& c : c_) mag += ::abs(c);
    for (long prec = 128;; prec *= 2) {
        Real v = eval(prec);
        Real bound = to_real(mag, prec) * pow2(-prec + 16, prec);
        if (abs(v) > bound) return v.sgn();
        if (prec > (1 << 22)) throw std::logic_error("sign refinement failed to converge");
    }
}

}  // namespace kite
