#include <catch2/catch_amalgamated.hpp>

#include <hplane/rational.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <random>
#include <unordered_set>
#include <vector>

using hplane::Integer;
using hplane::Rational;
using BigRat = boost::multiprecision::cpp_rational;

namespace {

// Reference values live entirely in boost's rational type; the class under
// test never touches this path.
struct RefValue {
    BigRat v;
};

Integer random_integer(std::mt19937_64& rng, int max_bits) {
    std::uniform_int_distribution<int> bits(1, max_bits);
    const int nbits = bits(rng);
    Integer out = 0;
    for (int produced = 0; produced < nbits; produced += 32) {
        out <<= 32;
        out |= std::uniform_int_distribution<std::uint32_t>()(rng);
    }
    out >>= (32 - nbits % 32) % 32;
    if (std::uniform_int_distribution<int>(0, 1)(rng)) out = -out;
    return out;
}

std::pair<Rational, BigRat> random_pair(std::mt19937_64& rng, int max_bits) {
    Integer n = random_integer(rng, max_bits);
    Integer d = random_integer(rng, max_bits);
    if (d == 0) d = 1;
    if (d < 0) d = -d;
    return {Rational(n, d), BigRat(n, d)};
}

}  // namespace

TEST_CASE("rational canonical form", "[rational]") {
    CHECK(Rational(6, 4).numerator() == 3);
    CHECK(Rational(6, 4).denominator() == 2);
    CHECK(Rational(-6, 4).str() == "-3/2");
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(5, 1).str() == "5");
    CHECK(Rational(-5).str() == "-5");

    // p/q and (kp)/(kq) must be the same stored value, for any nonzero k.
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 200; ++i) {
        const auto [r, ref] = random_pair(rng, 70);
        Integer k = random_integer(rng, 40);
        if (k == 0) k = 3;
        const Rational scaled(r.numerator() * k, r.denominator() * k);
        CHECK(scaled == r);
        CHECK(scaled.numerator() == r.numerator());
        CHECK(scaled.denominator() == r.denominator());
        CHECK(scaled.hash() == r.hash());
    }
}

TEST_CASE("rational arithmetic matches the big-rational reference", "[rational]") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 500; ++round) {
        // Mix sizes so fast/spilled operand combinations all occur.
        const int bits_a = (round % 3 == 0) ? 150 : 40;
        const int bits_b = (round % 5 == 0) ? 150 : 40;
        const auto [a, ra] = random_pair(rng, bits_a);
        const auto [b, rb] = random_pair(rng, bits_b);

        const BigRat sum = ra + rb, diff = ra - rb, prod = ra * rb;
        CHECK((a + b).numerator() == numerator(sum));
        CHECK((a + b).denominator() == denominator(sum));
        CHECK((a - b).numerator() == numerator(diff));
        CHECK((a * b).numerator() == numerator(prod));
        CHECK((a * b).denominator() == denominator(prod));
        if (!b.is_zero()) {
            const BigRat quot = ra / rb;
            CHECK((a / b).numerator() == numerator(quot));
            CHECK((a / b).denominator() == denominator(quot));
        }
        CHECK((a < b) == (ra < rb));
        CHECK((a == b) == (ra == rb));
        CHECK((-a).numerator() == numerator(BigRat(-ra)));
    }
}

TEST_CASE("rational spill and demotion round-trip", "[rational]") {
    const Rational huge(Integer(1) << 100, Integer(3));
    CHECK(huge.numerator() == Integer(1) << 100);

    // Falls back below the 64-bit threshold: must compare and hash like a
    // value that was never large.
    const Rational small = huge - Rational(Integer((Integer(1) << 100) - 1), Integer(3));
    CHECK(small == Rational(1, 3));
    CHECK(small.hash() == Rational(1, 3).hash());
    CHECK(small.str() == "1/3");

    const Rational back = small * Rational(Integer(1) << 80);
    CHECK(back.denominator() == 3);
    CHECK(back.numerator() == Integer(1) << 80);
}

TEST_CASE("rational int64 boundary values", "[rational]") {
    const std::int64_t min64 = std::numeric_limits<std::int64_t>::min();
    const Rational r(min64);
    CHECK(r.numerator() == Integer(min64));
    CHECK(r.denominator() == 1);
    CHECK(-r == Rational(Integer(min64) * -1));
    CHECK(r + Rational(1) == Rational(Integer(min64) + 1));

    const Rational m(std::numeric_limits<std::int64_t>::max());
    CHECK((m * Rational(2)).numerator() == Integer(std::numeric_limits<std::int64_t>::max()) * 2);
}

TEST_CASE("rational parse and serialize", "[rational]") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-0") == Rational(0));
    CHECK(Rational::parse("12/4") == Rational(3));

    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("-"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1//2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("a"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("+3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);

    std::mt19937_64 rng(99);
    for (int i = 0; i < 200; ++i) {
        const auto [r, ref] = random_pair(rng, (i % 4 == 0) ? 140 : 50);
        CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("rational construction errors", "[rational]") {
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational hashing is value-based", "[rational]") {
    std::mt19937_64 rng(4242);
    std::unordered_set<Rational> seen;
    for (int i = 0; i < 300; ++i) {
        const auto [r, ref] = random_pair(rng, (i % 6 == 0) ? 120 : 30);
        const Rational again(r.numerator(), r.denominator());
        CHECK(std::hash<Rational>{}(r) == std::hash<Rational>{}(again));
        seen.insert(r);
        CHECK(seen.count(again) == 1);
    }
}

TEST_CASE("rational to_double sanity", "[rational]") {
    CHECK(Rational(1, 2).to_double() == 0.5);
    CHECK(Rational(-7, 4).to_double() == -1.75);
    const Rational big(Integer(1) << 70, Integer(1) << 69);
    CHECK(big.to_double() == 2.0);
}
