#include "kite/rational.hpp"

#include <cctype>

namespace kite {

std::optional<Rat> parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) return std::nullopt;

    bool neg = false;
    size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    std::string ipart, fpart, den;
    enum { INT, FRAC, DEN } state = INT;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            (state == INT ? ipart : state == FRAC ? fpart : den).push_back(c);
        } else if (c == '.' && state == INT) {
            state = FRAC;
        } else if (c == '/' && state == INT && !ipart.empty()) {
            state = DEN;
        } else {
            return std::nullopt;
        }
    }
    if (ipart.empty() && fpart.empty()) return std::nullopt;
    if (state == DEN && den.empty()) return std::nullopt;

    // Explicit base 10 (the mpz string constructor would treat a leading
    // zero as octal).
    auto digits = [](const std::string& d) {
        mpz_class z(0);
        if (!d.empty()) z.set_str(d, 10);
        return z;
    };

    Rat r;
    if (state == DEN) {
        r = Rat(digits(ipart), digits(den));
        if (r.get_den() == 0) return std::nullopt;
    } else {
        mpz_class num = digits(ipart);
        if (!fpart.empty()) {
            mpz_class scale;
            mpz_ui_pow_ui(scale.get_mpz_t(), 10, fpart.size());
            num = num * scale + digits(fpart);
            r = Rat(num, scale);
        } else {
            r = Rat(num);
        }
    }
    r.canonicalize();
    if (neg) r = -r;
    return r;
}

}  // namespace kite
