#include "rhombil/combinat.hpp"
#include "rhombil/errors.hpp"

#include <doctest.h>

using namespace rhombil;

TEST_SUITE("combinat") {

TEST_CASE("rationals print as num/den or as an integer")
{
    CHECK(to_string(Rational(6) / 3) == "2");
    CHECK(to_string(Rational(3) / 6) == "1/2");
    CHECK(to_string(Rational(-7, 4)) == "-7/4");
}

TEST_CASE("dyadic test looks at the reduced denominator")
{
    CHECK(is_dyadic(Rational(3, 8)));
    CHECK(is_dyadic(Rational(5)));
    CHECK_FALSE(is_dyadic(Rational(1, 3)));
    CHECK_FALSE(is_dyadic(Rational(1, 12)));
}

TEST_CASE("pochhammer symbols")
{
    CHECK(pochhammer(3, 0) == 1);
    CHECK(pochhammer(3, 4) == 3 * 4 * 5 * 6);
    CHECK(pochhammer(Rational(1, 2), 2) == Rational(3, 4));
    CHECK(pochhammer(5, -2) == Rational(1, 4 * 3));
    CHECK_THROWS_AS(pochhammer(2, -2), ZeroDenominator);

    CHECK(skip_pochhammer(1, 3) == 1 * 3 * 5);
    CHECK(skip_pochhammer(7, -2) == Rational(1, 5 * 3));
    CHECK_THROWS_AS(skip_pochhammer(4, -2), ZeroDenominator);
}

TEST_CASE("pochhammer splits at any point")
{
    for (long n = -3; n <= 3; ++n)
        for (long m = -3; m <= 3; ++m) {
            const Rational x(7, 3);
            CHECK(pochhammer(x, n + m) == pochhammer(x, n) * pochhammer(x + n, m));
        }
}

TEST_CASE("trapezoidal products")
{
    CHECK(trapezoid_T(2, 3, 0) == 1);
    // (2)_3 * (3)_1
    CHECK(trapezoid_T(2, 3, 2) == 2 * 3 * 4 * 3);
    // [2]_3 * [4]_1
    CHECK(trapezoid_V(2, 3, 2) == 2 * 4 * 6 * 4);
    CHECK_THROWS_AS(trapezoid_T(1, 1, -1), NegativeArgument);
}

TEST_CASE("factorial family")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(20) == Integer("2432902008176640000"));
    CHECK(hyperfactorial(0) == 1);
    CHECK(hyperfactorial(4) == 1 * 1 * 2 * 6);
    CHECK_THROWS_AS(factorial(-1), NegativeArgument);

    CHECK(hyperfactorial2(6) == 1 * 2 * 24);
    CHECK(hyperfactorial2(7, H2Reading::Skip) == 1 * 6 * 120);
    CHECK(hyperfactorial2(7, H2Reading::Printed) == Integer(1) * 2 * 6 * 24 * 120);
    CHECK(hyperfactorial2(1) == 1);
}

TEST_CASE("hole sequence sums")
{
    const HoleSeq a = {2, 1, 3, 4, 5};
    CHECK(seq_O(a) == 10);
    CHECK(seq_E(a) == 5);
    CHECK(seq_s(a, 0) == 0);
    CHECK(seq_s(a, 3) == 6);
    CHECK(seq_s(a, 5) == 15);
    CHECK_THROWS_AS(seq_s(a, 6), IndexOutOfRange);
    CHECK(seq_o(a, 2) == 8);
    CHECK(seq_e(a, 1) == 5);
    CHECK(seq_e(a, 2) == 4);
    CHECK_THROWS_AS(check_entries({1, -1}), NegativeArgument);
}

}
