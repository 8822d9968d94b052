#include "rhombil/engine.hpp"
#include "rhombil/errors.hpp"
#include "rhombil/formulas.hpp"

#include <doctest.h>

using namespace rhombil;

TEST_SUITE("formulas") {

TEST_CASE("halved hexagons")
{
    CHECK(formula_P(0, 0, 5) == 1);
    CHECK(formula_P(1, 1, 1) == 2);
    CHECK(formula_P(2, 2, 1) == 5);
    CHECK(formula_P(1, 3, 1) == 4);
    CHECK(formula_P(2, 3, 2) == 40);
    CHECK(formula_Pprime(1, 1, 1) == Rational(3, 2));
    CHECK(formula_Pprime(2, 2, 1) == Rational(5, 2));
    CHECK_THROWS_AS(formula_P(2, 1, 0), ParameterOrder);
}

TEST_CASE("trapezoids")
{
    CHECK(formula_Q({}) == 1);
    CHECK(formula_Q({1, 1}) == 2);
    CHECK(formula_Q({1, 1, 1, 1}) == 16);
    CHECK(formula_Qprime({1, 1}) == Rational(3, 2));
    CHECK(formula_K({1, 1}) == 1);
    CHECK(formula_Kprime({0, 0, 1, 1}) == formula_Kprime({1, 1}));
    CHECK_THROWS_AS(formula_Q({1, 2, 3}), OddLength);
}

TEST_CASE("defected halved hexagons at (1,1,1; 1,1)")
{
    const Rational expected[8] = {180, 36, Rational(135, 2), 21, 175, 40, 60, 15};
    for (int m = 1; m <= 8; ++m) CHECK(formula_H(m, 1, 1, 1, {1, 1}) == expected[m - 1]);
}

TEST_CASE("H1 at x = 0 splits into two halved hexagons")
{
    CHECK(formula_H(1, 0, 1, 1, {1, 1}) == 20);
    for (int y = 0; y <= 2; ++y)
        for (int z = 0; z <= 2; ++z)
            for (int a = 0; a <= 2; ++a)
                for (int b = 0; b <= 2; ++b)
                    CHECK(formula_H(1, 0, y, z, {a, b}) == formula_P(b + z, b + z, a) * formula_P(y, y + 2 * a, b));
}

TEST_CASE("odd-length and empty hole sequences are padded")
{
    CHECK(formula_H(1, 1, 2, 1, {1, 2, 1}) == formula_H(1, 1, 2, 1, {1, 2, 1, 0}));
    CHECK(formula_H(1, 1, 1, 1, {}) == formula_H(1, 1, 1, 1, {0, 0}));
}

TEST_CASE("domains")
{
    CHECK_FALSE(h_in_domain(2, 1, 1, 1, {0, 1}));  // a1 >= 1
    CHECK_FALSE(h_in_domain(4, 1, 1, 0, {1, 0}));  // z + E >= 1
    CHECK(h_in_domain(2, 1, 1, 0, {1, 0}));        // flat bottom
    CHECK_THROWS_AS(formula_H(4, 1, 1, 0, {1, 0}), FormulaSingular);
    CHECK_THROWS_AS(formula_H(9, 1, 1, 1, {1, 1}), BadParameters);
}

TEST_CASE("flat-bottom H2 and H8 match the engine")
{
    for (int m : {2, 8})
        for (int a1 = 1; a1 <= 2; ++a1)
            for (int x = 0; x <= 2; ++x)
                for (int y = 0; y <= 2; ++y)
                    CHECK(formula_H(m, x, y, 0, {a1}) == count_tilings(build_H(m, x, y, 0, {a1})));
}

TEST_CASE("symmetric hexagon")
{
    CHECK(formula_S(2, 1, 2, {1, 1}) == 128);
    CHECK(formula_S(0, 1, 2, {2}) == 3);
    // z outside 2E-1 .. 2y+2E+1
    CHECK(formula_S(0, 1, 6, {2, 1}) == 0);
    CHECK(formula_S(1, 1, 1, {1, 2}) == 0);

    const SFactorization f = s_factorization(2, 1, 2, {1, 1});
    CHECK(f.parity_case == 3);
    CHECK(f.prefactor == 4);
    CHECK(describe(f.first) == "H5(2,1,0;0,1)");
    CHECK(describe(f.second) == "H8(2,1,0;1,1)");
    CHECK_THROWS_AS(s_factorization(1, 1, 2, {1}), ParityMismatch);
    CHECK_THROWS_AS(s_factorization(1, 1, 1, {0}), BadParameters);
}

TEST_CASE("convention switches change the value")
{
    Conventions printed;
    printed.h24_sub = Conventions::H24Sub::Printed;
    CHECK(formula_H(2, 0, 1, 0, {1, 1}, printed) != formula_H(2, 0, 1, 0, {1, 1}));
    Conventions c_limit;
    c_limit.pprime_limit = Conventions::PprimeLimit::C;
    CHECK(formula_Pprime(0, 0, 1, c_limit) != formula_Pprime(0, 0, 1));
}

TEST_CASE("evaluate dispatches on the family")
{
    RegionSpec s;
    s.family = Family::H1;
    s.x = 0, s.y = 1, s.z = 1, s.seq = {1, 1};
    CHECK(evaluate(s).value == 20);
    s.family = Family::Pp;
    s.a = 1, s.b = 1, s.c = 1;
    CHECK(evaluate(s).value == Rational(3, 2));
}

}
