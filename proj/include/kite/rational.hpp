#pragma once

// Exact rationals (GMP) plus parsing of the decimal / rational literals used
// in configuration files. Decimal strings parse exactly: "0.7" means 7/10.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

#include "kite/real.hpp"

namespace kite {

using Rat = mpq_class;

// Parses "123", "-4.25", "7/10", ".5". Returns nullopt on malformed input.
std::optional<Rat> parse_rational(const std::string& text);

inline Real to_real(const Rat& q, long prec) {
    return Real::from_mpq(q.get_mpq_t(), prec);
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline bool is_even_integer(const Rat& q) {
    return is_integer(q) && mpz_even_p(q.get_num().get_mpz_t());
}

}  // namespace kite
