#pragma once

// Deterministic uniform doubles from mt19937_64 (std distributions are not
// portable across standard libraries; this is).

#include <cstdint>
#include <random>

namespace kite::testsupport {

class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    double uniform() { return double(eng_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    long uniform_int(long lo, long hi) {  // inclusive bounds
        return lo + long(eng_() % uint64_t(hi - lo + 1));
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace kite::testsupport
