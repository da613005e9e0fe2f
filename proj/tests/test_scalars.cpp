#include <cmath>

#include "doctest.h"

#include "fta/certify.hpp"
#include "fta/complex.hpp"
#include "fta/random.hpp"

using fta::Complex;
using fta::Rational;
using CQ = Complex<Rational>;
using CD = Complex<double>;

namespace {

CQ q(long re, long im) { return {Rational(re), Rational(im)}; }

Rational frac(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Random double with random sign and magnitude in [2^-20, 2^20].
double random_magnitude(fta::SplitMix64& rng) {
    const double mant = rng.uniform(1.0, 2.0);
    const int e = static_cast<int>(rng.uniform_int(-20, 19));
    const double v = std::ldexp(mant, e);
    return rng.next() & 1 ? -v : v;
}

CQ exact(const CD& z) { return {fta::rational_from_double(z.re), fta::rational_from_double(z.im)}; }

// |float - exact|_1 <= ulps * 2^-53 * magnitude
bool within_ulps(const CD& got, const CQ& want, const Rational& magnitude, int ulps) {
    const Rational err = fta::one_norm(exact(got) - want);
    return err <= Rational(ulps) * fta::rational_from_double(0x1p-53) * magnitude;
}

}  // namespace

TEST_CASE("field operations on the examples") {
    CHECK(q(1, 1) * q(1, -1) == q(2, 0));
    const CQ z{frac(-7, 3), frac(5, 11)};
    CHECK(z * q(1, 0) == z);
    CHECK(q(0, 2) / q(1, 1) == q(1, 1));
    CHECK(q(1, 1) * q(1, 1) == q(0, 2));

    CHECK(CD(1, 1) * CD(1, -1) == CD(2, 0));
    CHECK(CD(0, 2) / CD(1, 1) == CD(1, 1));
}

TEST_CASE("division by zero is reported") {
    CHECK_THROWS_AS(q(1, 2) / q(0, 0), fta::DivisionByZero);
    CHECK_THROWS_AS(CD(1, 2) / CD(0, 0), fta::DivisionByZero);
    CHECK_THROWS_AS(fta::checked_div(Rational(1), Rational(0)), fta::DivisionByZero);
}

TEST_CASE("conjugate and one-norm") {
    CHECK(fta::conj(q(3, 4)) == q(3, -4));
    CHECK(fta::conj(q(5, 0)) == q(5, 0));
    CHECK(fta::one_norm(fta::conj(q(3, -7))) == 10);
    CHECK(fta::one_norm(q(3, -7)) == 10);
    CHECK(fta::one_norm(q(1, 1)) == 2);
    CHECK(fta::one_norm(q(0, 0)) == 0);
    CHECK(fta::one_norm(CQ{frac(-7, 16), frac(3, 2)}) == frac(31, 16));
    CHECK(fta::abs_value(Rational(-3)) == 3);
    CHECK(fta::abs_value(-2.5) == 2.5);
}

TEST_CASE("norm product verdict on the examples") {
    auto v = fta::check_norm_product(q(1, 1), q(1, -1));
    CHECK(v.holds());
    CHECK(v.lower == 2);
    CHECK(v.product == 2);
    CHECK(v.upper == 4);
    CHECK(v.lower_tight());

    v = fta::check_norm_product(q(1, 0), q(0, 1));
    CHECK(v.holds());
    CHECK(v.lower == frac(1, 2));
    CHECK(v.upper_tight());

    v = fta::check_norm_product(q(3, 4), q(2, -1));
    CHECK(v.holds());
    CHECK(v.product == 15);
    CHECK(v.lower == frac(21, 2));
    CHECK(v.upper == 21);

    v = fta::check_norm_product(q(0, 0), q(5, -2));
    CHECK(v.holds());
    CHECK(v.lower == 0);
    CHECK(v.upper == 0);
}

TEST_CASE("norm properties on random exact values") {
    fta::SplitMix64 rng(11);
    for (int t = 0; t < 20000; ++t) {
        const CQ z = fta::random_complex_rational(rng);
        const CQ w = fta::random_complex_rational(rng);
        REQUIRE(fta::one_norm(fta::conj(z)) == fta::one_norm(z));
        REQUIRE(fta::conj(fta::conj(z)) == z);
        REQUIRE((fta::one_norm(z) > 0 || z.is_zero()));
        REQUIRE(fta::check_norm_product(z, w).holds());
        REQUIRE(fta::one_norm(z + w) <= fta::one_norm(z) + fta::one_norm(w));
    }
}

TEST_CASE("field axioms on random exact triples") {
    fta::SplitMix64 rng(5);
    for (int t = 0; t < 2000; ++t) {
        const CQ a = fta::random_complex_rational(rng, 50, 50);
        const CQ b = fta::random_complex_rational(rng, 50, 50);
        const CQ c = fta::random_complex_rational(rng, 50, 50);
        REQUIRE(a * b == b * a);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) REQUIRE((a / b) * b == a);
    }
}

TEST_CASE("float backend tracks the exact backend") {
    fta::SplitMix64 rng(99);
    for (int t = 0; t < 20000; ++t) {
        const CD z{random_magnitude(rng), random_magnitude(rng)};
        const CD w{random_magnitude(rng), random_magnitude(rng)};
        const CQ ze = exact(z), we = exact(w);
        const Rational nz = fta::one_norm(ze), nw = fta::one_norm(we);
        REQUIRE(within_ulps(z + w, ze + we, nz + nw, 8));
        REQUIRE(within_ulps(z - w, ze - we, nz + nw, 8));
        REQUIRE(within_ulps(z * w, ze * we, nz * nw, 8));
        REQUIRE(within_ulps(z / w, ze / we, nz * nw / fta::norm_squared(we), 8));
    }
}

TEST_CASE("rational parsing and printing") {
    CHECK(fta::parse_rational("-7/16") == frac(-7, 16));
    CHECK(fta::parse_rational("6/8") == frac(3, 4));
    CHECK(fta::parse_rational("1.25") == frac(5, 4));
    CHECK(fta::parse_rational("-3e-2") == frac(-3, 100));
    CHECK(fta::parse_rational("2E3") == 2000);
    CHECK(fta::parse_rational(".5") == frac(1, 2));
    CHECK(fta::to_string(frac(-7, 16)) == "-7/16");
    CHECK(fta::to_string(Rational(3)) == "3");
    CHECK(fta::to_string(0.1) == "0.1");
    CHECK_THROWS_AS(fta::parse_rational("1/0"), fta::ParseError);
    CHECK_THROWS_AS(fta::parse_rational("abc"), fta::ParseError);
    CHECK_THROWS_AS(fta::parse_rational(""), fta::ParseError);
    CHECK_THROWS_AS(fta::parse_rational("1.2.3"), fta::ParseError);
}

TEST_CASE("norm harness") {
    const auto ok = fta::run_norm_checks(2000, 7);
    CHECK(ok.passed());
    CHECK(ok.samples == 2000);

    // 0.49 |z||w| falls below the lower bound for every nonzero pair; only the
    // forced z = 0 sample survives.
    const auto mutated = fta::run_norm_checks(2000, 7, fta::NormMutation::shrink_product);
    CHECK_FALSE(mutated.passed());
    CHECK(mutated.lower_failures == 1999);
    CHECK(mutated.first_failures.size() == 5);
}

TEST_CASE("splitmix64 reference stream") {
    // First outputs for seed 1234567 from the published reference implementation.
    fta::SplitMix64 rng(1234567);
    CHECK(rng.next() == 6457827717110365317ull);
    CHECK(rng.next() == 3203168211198807973ull);
    CHECK(rng.next() == 9817491932198370423ull);
}
