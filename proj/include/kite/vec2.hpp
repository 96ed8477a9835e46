#pragma once

// Planar vectors over an arbitrary scalar field. Instantiated with Real for
// the numeric lane and Cyc for the exact lane, so the same formulas drive
// both. Reflections avoid square roots (scaled-normal form) so they stay
// inside the field.

#include <array>

namespace kite {

template <class F>
struct V2 {
    F x, y;

    friend V2 operator+(const V2& a, const V2& b) { return {a.x + b.x, a.y + b.y}; }
    friend V2 operator-(const V2& a, const V2& b) { return {a.x - b.x, a.y - b.y}; }
    friend V2 operator*(const F& s, const V2& v) { return {s * v.x, s * v.y}; }
};

template <class F>
F dot(const V2<F>& a, const V2<F>& b) {
    return a.x * b.x + a.y * b.y;
}

template <class F>
F cross(const V2<F>& a, const V2<F>& b) {
    return a.x * b.y - a.y * b.x;
}

// Reflection of point p across the line through a and b (b != a).
// Uses w*(2*dot/|w|^2) - v which requires only field operations.
template <class F>
V2<F> reflect_point(const V2<F>& p, const V2<F>& a, const V2<F>& b) {
    V2<F> w = b - a;
    V2<F> v = p - a;
    F scale = (dot(v, w) + dot(v, w)) / dot(w, w);
    return {a.x + scale * w.x - v.x, a.y + scale * w.y - v.y};
}

// The four vertices of a kite copy in the unfolded plane. Side i (1-based)
// joins vertex i-1 to vertex i mod 4; labels are inherited from the base kite.
template <class F>
using Quad = std::array<V2<F>, 4>;

template <class F>
Quad<F> reflect_quad(const Quad<F>& q, int side) {
    const V2<F>& a = q[side - 1];
    const V2<F>& b = q[side % 4];
    Quad<F> out = q;
    for (int i = 0; i < 4; ++i) {
        if (i == side - 1 || i == side % 4) continue;  // shared side is fixed
        out[i] = reflect_point(q[i], a, b);
    }
    return out;
}

}  // namespace kite
