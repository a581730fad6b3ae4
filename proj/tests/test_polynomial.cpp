#include "doctest.h"
#include "matroot/polynomial.hpp"

using namespace matroot;

namespace {
const Ring z = Ring::integers();

std::vector<BigInt> values(const std::vector<Scalar>& xs) {
    std::vector<BigInt> out;
    for (const Scalar& x : xs) out.push_back(x.value());
    return out;
}
}  // namespace

TEST_CASE("coefficients are trimmed and indexed safely") {
    Polynomial zero = Polynomial::from_int_coeffs(z, {0, 0, 0});
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);

    Polynomial f = Polynomial::from_int_coeffs(z, {1, 2, 3, 0});
    CHECK(f.degree() == 2);
    CHECK(f.coeff(0).value() == 1);
    CHECK(f.coeff(2).value() == 3);
    CHECK(f.coeff(9).is_zero());
    CHECK(!f.is_monic());
    CHECK(Polynomial::from_int_coeffs(z, {-3, 0, 1}).is_monic());
}

TEST_CASE("exact evaluation") {
    // x^3 - 2x + 5 at x = -4 is -64 + 8 + 5
    Polynomial f = Polynomial::from_int_coeffs(z, {5, -2, 0, 1});
    CHECK(f.eval(Scalar(z, -4)).value() == -51);

    Ring f7 = Ring::prime_field(7);
    Polynomial g = Polynomial::from_int_coeffs(f7, {5, -2, 0, 1});
    CHECK(g.eval(Scalar(f7, 3)).value() == (27 - 6 + 5) % 7);
}

TEST_CASE("roots over a prime field by full scan") {
    Ring f5 = Ring::prime_field(5);
    Ring f7 = Ring::prime_field(7);

    // x^3 - 1: a single cube root of unity mod 5, three mod 7.
    CHECK(values(roots_over_field(Polynomial::from_int_coeffs(f5, {-1, 0, 0, 1}))) ==
          std::vector<BigInt>{1});
    CHECK(values(roots_over_field(Polynomial::from_int_coeffs(f7, {-1, 0, 0, 1}))) ==
          std::vector<BigInt>{1, 2, 4});

    CHECK(values(roots_over_field(Polynomial::from_int_coeffs(f5, {1, 0, 1}))) ==
          std::vector<BigInt>{2, 3});
    CHECK(roots_over_field(Polynomial::from_int_coeffs(f5, {2, 0, 1})).empty());

    CHECK_THROWS_AS(roots_over_field(Polynomial::from_int_coeffs(f5, {0})), ZeroPolynomial);
    CHECK_THROWS_AS(roots_over_field(Polynomial::from_int_coeffs(z, {-1, 1})), RingMismatch);
}

TEST_CASE("integer roots of monic polynomials") {
    // The quartic arising from the upper-triangular worked example.
    Polynomial quartic = Polynomial::from_int_coeffs(z, {-3, -8, -6, 0, 1});
    CHECK(values(integer_roots(quartic)) == std::vector<BigInt>{-1, 3});

    CHECK(values(integer_roots(Polynomial::from_int_coeffs(z, {-4, 0, 1}))) ==
          std::vector<BigInt>{-2, 2});
    CHECK(integer_roots(Polynomial::from_int_coeffs(z, {1, 0, 1})).empty());

    // Zero constant term contributes the root 0 once.
    CHECK(values(integer_roots(Polynomial::from_int_coeffs(z, {0, 0, 1}))) ==
          std::vector<BigInt>{0});
    CHECK(values(integer_roots(Polynomial::from_int_coeffs(z, {0, -4, 0, 1}))) ==
          std::vector<BigInt>{-2, 0, 2});

    CHECK_THROWS_AS(integer_roots(Polynomial::from_int_coeffs(z, {1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(integer_roots(Polynomial::from_int_coeffs(z, {})), ZeroPolynomial);
}

TEST_CASE("integer roots survive large constant terms") {
    // (x - 2)(x + 10^9) is monic with a huge constant term; the magnitude
    // bound keeps the divisor scan from walking all divisors of 2*10^9.
    BigInt big = 1000000000;
    Polynomial f(z, {Scalar(z, -2 * big), Scalar(z, big - 2), Scalar(z, 1)});
    CHECK(values(integer_roots(f)) == std::vector<BigInt>{-big, 2});
}

TEST_CASE("scalar nth roots") {
    CHECK(values(nth_roots_of_scalar(Scalar(z, 8), 3)) == std::vector<BigInt>{2});
    CHECK(values(nth_roots_of_scalar(Scalar(z, -8), 3)) == std::vector<BigInt>{-2});
    CHECK(values(nth_roots_of_scalar(Scalar(z, 16), 4)) == std::vector<BigInt>{-2, 2});
    CHECK(values(nth_roots_of_scalar(Scalar(z, 0), 5)) == std::vector<BigInt>{0});
    CHECK(nth_roots_of_scalar(Scalar(z, -4), 2).empty());
    CHECK(nth_roots_of_scalar(Scalar(z, 7), 3).empty());
    CHECK(values(nth_roots_of_scalar(Scalar(z, 1), 2)) == std::vector<BigInt>{-1, 1});

    Ring f5 = Ring::prime_field(5);
    Ring f7 = Ring::prime_field(7);
    CHECK(values(nth_roots_of_scalar(Scalar(f5, 1), 3)) == std::vector<BigInt>{1});
    CHECK(values(nth_roots_of_scalar(Scalar(f5, 2), 3)) == std::vector<BigInt>{3});
    CHECK(values(nth_roots_of_scalar(Scalar(f7, 1), 3)) == std::vector<BigInt>{1, 2, 4});

    CHECK_THROWS_AS(nth_roots_of_scalar(Scalar(z, 4), 0), std::invalid_argument);
}

TEST_CASE("perfect square witness") {
    CHECK(is_perfect_square(Scalar(z, 49))->value() == 7);
    CHECK(is_perfect_square(Scalar(z, 0))->value() == 0);
    CHECK(is_perfect_square(Scalar(z, 1))->value() == 1);
    CHECK(!is_perfect_square(Scalar(z, 50)).has_value());
    CHECK(!is_perfect_square(Scalar(z, -4)).has_value());

    BigInt huge("123456789123456789");
    CHECK(is_perfect_square(Scalar(z, huge * huge))->value() == huge);
    CHECK(!is_perfect_square(Scalar(z, huge * huge + 1)).has_value());

    CHECK_THROWS_AS(is_perfect_square(Scalar(Ring::prime_field(5), 4)), RingMismatch);
}
