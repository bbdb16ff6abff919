#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cla/cyclotomic.hpp"

using namespace cla;

namespace {

std::vector<Cyc> sample_scalars() {
    std::vector<Cyc> v;
    v.push_back(Cyc::zero(12));
    v.push_back(Cyc::one(12));
    v.push_back(Cyc(12, Rational(-1)));
    v.push_back(Cyc(12, Rational(1, 2)));
    v.push_back(Cyc(12, Rational(-7, 3)));
    v.push_back(Cyc::root_of_unity(12, 1));
    v.push_back(Cyc::root_of_unity(12, 3));  // i
    v.push_back(Cyc::root_of_unity(12, 4));  // primitive cube root
    v.push_back(Cyc::root_of_unity(12, 7));
    v.push_back(Cyc::root_of_unity(12, 11));
    v.push_back(Cyc(12, Rational(2, 3)) + Cyc::root_of_unity(12, 2));
    v.push_back(Cyc::root_of_unity(12, 5) - Cyc(12, Rational(5)));
    return v;
}

} // namespace

TEST_CASE("field axioms hold on a spanning sample") {
    auto xs = sample_scalars();
    Cyc zero = Cyc::zero(12), one = Cyc::one(12);
    for (const auto& a : xs) {
        CHECK(a + zero == a);
        CHECK(a * one == a);
        CHECK(a - a == zero);
        CHECK(a * zero == zero);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == one);
            CHECK(a.inverse() * a == one);
            CHECK(a / a == one);
        }
        for (const auto& b : xs) {
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            for (const auto& c : xs) {
                CHECK((a + b) + c == a + (b + c));
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
            }
        }
    }
}

TEST_CASE("roots of unity multiply by adding exponents") {
    for (long j = 0; j < 12; ++j)
        for (long k = 0; k < 12; ++k)
            CHECK(Cyc::root_of_unity(12, j) * Cyc::root_of_unity(12, k) ==
                  Cyc::root_of_unity(12, j + k));
    CHECK(Cyc::root_of_unity(12, 12) == Cyc::one(12));
    Cyc i = Cyc::root_of_unity(12, 3);
    CHECK(i * i == Cyc(12, Rational(-1)));
    Cyc xi = Cyc::root_of_unity(12, 4);
    CHECK(xi * xi * xi == Cyc::one(12));
    CHECK(xi * xi + xi + Cyc::one(12) == Cyc::zero(12)); // minimal polynomial of a cube root
}

TEST_CASE("rationality predicates") {
    CHECK(Cyc(12, Rational(3, 4)).is_rational());
    CHECK(Cyc(12, Rational(3, 4)).rational_part() == Rational(3, 4));
    CHECK(!Cyc::root_of_unity(12, 3).is_rational());
    CHECK(Cyc::zero(12).is_zero());
    CHECK(!Cyc::one(12).is_zero());
    // zeta^6 = -1 reduces back to a rational
    CHECK(Cyc::root_of_unity(12, 6).is_rational());
    CHECK(Cyc::root_of_unity(12, 6).rational_part() == Rational(-1));
}

TEST_CASE("print and parse round trip") {
    for (const auto& a : sample_scalars()) CHECK(parse_scalar(a.str(), 12) == a);
    // products and quotients stay closed and round-trip too
    auto xs = sample_scalars();
    for (const auto& a : xs)
        for (const auto& b : xs) {
            CHECK(parse_scalar((a * b).str(), 12) == a * b);
            if (!b.is_zero()) CHECK(parse_scalar((a / b).str(), 12) == a / b);
        }
}

TEST_CASE("scalar grammar") {
    CHECK(parse_scalar("1/2", 12) == Cyc(12, Rational(1, 2)));
    CHECK(parse_scalar("-3", 12) == Cyc(12, Rational(-3)));
    CHECK(parse_scalar("i", 12) == Cyc::root_of_unity(12, 3));
    CHECK(parse_scalar("zeta12^7", 12) == Cyc::root_of_unity(12, 7));
    CHECK(parse_scalar("zeta3", 12) == Cyc::root_of_unity(12, 4));
    CHECK(parse_scalar("2*zeta3", 12) == Cyc(12, Rational(2)) * Cyc::root_of_unity(12, 4));
    CHECK(parse_scalar("1/2*zeta12^2 - 1/2", 12) ==
          Cyc(12, Rational(1, 2)) * Cyc::root_of_unity(12, 2) - Cyc(12, Rational(1, 2)));
    CHECK(parse_scalar("-i + 1", 12) == Cyc::one(12) - Cyc::root_of_unity(12, 3));
    CHECK(parse_scalar("zeta12^-1", 12) == Cyc::root_of_unity(12, 11));
    CHECK_THROWS_AS(parse_scalar("zeta5", 12), std::invalid_argument); // 5 does not divide 12
    CHECK_THROWS_AS(parse_scalar("", 12), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar("1 +", 12), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar("q", 12), std::invalid_argument);
}

TEST_CASE("inverse of zero is rejected") {
    CHECK_THROWS_AS(Cyc::zero(12).inverse(), std::domain_error);
}
