#include "doctest.h"

#include <cmath>

#include "kite/angle.hpp"
#include "kite/cyclotomic.hpp"
#include "kite/rational.hpp"
#include "kite/real.hpp"

using namespace kite;

TEST_CASE("rational parsing") {
    CHECK(*parse_rational("0.7") == Rat(7, 10));
    CHECK(*parse_rational("-0.0001") == Rat(-1, 10000));
    CHECK(*parse_rational("7/10") == Rat(7, 10));
    CHECK(*parse_rational("3") == Rat(3));
    CHECK(*parse_rational(".5") == Rat(1, 2));
    CHECK(!parse_rational("abc").has_value());
    CHECK(!parse_rational("1/0").has_value());
    // leading zeros in the fractional part must not be read as octal
    CHECK(*parse_rational("0.000014") == Rat(14, 1000000));
    CHECK(*parse_rational("1.052") == Rat(1052, 1000));
}

TEST_CASE("angle spec grammar") {
    AngleSpec a = AngleSpec::parse("pi*7/10 - 0.0001");
    CHECK(a.pi_coeff == Rat(7, 10));
    CHECK(a.offset == Rat(-1, 10000));

    AngleSpec b = AngleSpec::parse("pi/4");
    CHECK(b.pi_coeff == Rat(1, 4));
    CHECK(b.rational_pi());

    AngleSpec c = AngleSpec::parse("0.3");
    CHECK(c.pi_coeff == 0);
    CHECK(c.offset == Rat(3, 10));

    // round trip through str()
    AngleSpec d = AngleSpec::parse(a.str());
    CHECK(d == a);

    CHECK_THROWS(AngleSpec::parse("pii"));
    CHECK_THROWS(AngleSpec::parse(""));
}

TEST_CASE("rational angle circle equality") {
    RationalAngle x{Rat(1, 2), Rat(3, 10)};
    RationalAngle y{Rat(5, 2), Rat(3, 10)};   // +2*pi
    RationalAngle z{Rat(3, 2), Rat(3, 10)};   // +pi
    CHECK(x.same_circle_point(y));
    CHECK(!x.same_circle_point(z));
}

TEST_CASE("real precision propagation and helpers") {
    Real a(1.0, 100), b(3.0, 200);
    CHECK((a / b).prec() == 200);
    Real third = a / b;
    // dist to nearest integer of 1/3 is 1/3
    Real d = dist_to_int(third);
    CHECK(abs(d - third).to_double() < 1e-25);

    Real pi = Real::pi(256);
    CHECK(canonical_angle(pi * Real(5, 256)).str(10) == pi.str(10));
    CHECK(circle_distance(Real(0.1, 128), Real(6.2, 128)).to_double() ==
          doctest::Approx(0.1 + 2 * 3.14159265358979 - 6.2).epsilon(1e-6));
}

TEST_CASE("cyclotomic exact arithmetic in Q(zeta_8)") {
    auto f = CycField::make(8);
    CHECK(f->deg == 4);

    Cyc c = Cyc::cos_pi(f, Rat(1, 4));  // sqrt(2)/2
    Cyc s = Cyc::sin_pi(f, Rat(1, 4));
    CHECK((c - s).is_zero());
    Cyc two_c2 = c * c + c * c;
    CHECK((two_c2 - Cyc(f, Rat(1))).is_zero());  // 2*cos^2(pi/4) = 1

    CHECK(c.sign() == 1);
    CHECK((-c).sign() == -1);
    CHECK(c.eval(128).to_double() == doctest::Approx(0.7071067811865476));

    // inverse: c * c^{-1} = 1
    Cyc inv = c.inverse();
    CHECK((c * inv - Cyc(f, Rat(1))).is_zero());

    // sin(pi/2) = 1, cos(pi/2) = 0
    CHECK((Cyc::sin_pi(f, Rat(1, 2)) - Cyc(f, Rat(1))).is_zero());
    CHECK(Cyc::cos_pi(f, Rat(1, 2)).is_zero());
}

TEST_CASE("cyclotomic pythagorean identity in a bigger field") {
    auto f = CycField::make(40);  // handles denominators 4 and 5
    Cyc s = Cyc::sin_pi(f, Rat(2, 5)), c = Cyc::cos_pi(f, Rat(2, 5));
    CHECK((s * s + c * c - Cyc(f, Rat(1))).is_zero());
    Cyc r = Cyc::sin_pi(f, Rat(1, 4)) * Cyc::cos_pi(f, Rat(2, 5));
    CHECK(r.sign() == 1);
    CHECK(r.eval(128).to_double() ==
          doctest::Approx(0.7071067811865476 * std::cos(2 * M_PI / 5)));
}
