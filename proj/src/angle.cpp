#include "kite/angle.hpp"

#include <cctype>
#include <vector>

#include "kite/errors.hpp"

namespace kite {

namespace {

// Splits into signed terms at top-level +/-.
std::vector<std::string> signed_terms(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if ((c == '+' || c == '-') && i > 0 && !cur.empty()) {
            out.push_back(cur);
            cur.clear();
        }
        cur.push_back(c);
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace

AngleSpec AngleSpec::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::tolower(c)));
    if (s.empty()) throw ConfigError("empty angle expression");

    AngleSpec spec;
    for (const std::string& term : signed_terms(s)) {
        bool neg = term[0] == '-';
        std::string body = (term[0] == '+' || term[0] == '-') ? term.substr(1) : term;
        if (body.empty()) throw ConfigError("malformed angle term in '" + text + "'");

        size_t pi_pos = body.find("pi");
        if (pi_pos != std::string::npos) {
            // forms: pi | pi*R | pi/R | R*pi
            Rat coeff(1);
            std::string rest = body.substr(0, pi_pos) + body.substr(pi_pos + 2);
            if (!rest.empty()) {
                if (rest.front() == '*') rest.erase(rest.begin());
                else if (rest.front() == '/') rest = "1/" + rest.substr(1);
                else if (rest.back() == '*') rest.pop_back();
                auto r = parse_rational(rest);
                if (!r) throw ConfigError("bad pi coefficient in '" + text + "'");
                coeff = *r;
            }
            spec.pi_coeff += neg ? -coeff : coeff;
        } else {
            auto r = parse_rational(body);
            if (!r) throw ConfigError("bad numeric term in '" + text + "'");
            spec.offset += neg ? -*r : *r;
        }
    }
    return spec;
}

std::string AngleSpec::str() const {
    std::string out;
    if (pi_coeff != 0) {
        out = "pi*" + pi_coeff.get_str();
        if (offset > 0) out += "+" + offset.get_str();
        else if (offset < 0) out += offset.get_str();
    } else {
        out = offset.get_str();
    }
    return out;
}

Real canonical_angle(const Real& x) {
    long prec = x.prec();
    Real two_pi = Real(2, prec) * Real::pi(prec);
    Real y = x - two_pi * floor(x / two_pi);
    if (y >= two_pi) y -= two_pi;  // boundary rounding
    if (y.sgn() < 0) y += two_pi;
    return y;
}

Real circle_distance(const Real& a, const Real& b) {
    long prec = a.prec() > b.prec() ? a.prec() : b.prec();
    Real d = canonical_angle(a - b);
    Real two_pi = Real(2, prec) * Real::pi(prec);
    return min(d, two_pi - d);
}

}  // namespace kite
