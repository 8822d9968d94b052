#include "rhombil/engine.hpp"
#include "rhombil/errors.hpp"
#include "rhombil/formulas.hpp"

#include <doctest.h>

#include <cstdlib>
#include <random>

using namespace rhombil;

namespace {

Region random_region(std::mt19937_64& rng, std::size_t max_cells)
{
    Region r;
    std::bernoulli_distribution keep(0.7);
    for (int row = 0; row < 4; ++row)
        for (int col = -3; col <= 4; ++col)
            if (r.cells.size() < max_cells && keep(rng)) r.cells.insert(Cell{row, col});
    std::uniform_int_distribution<int> w(1, 4);
    for (Cell c : r.cells)
        for (Cell n : neighbors(c))
            if (c < n && r.contains(n) && keep(rng)) r.set_weight(c, n, Rational(w(rng), w(rng)));
    return r;
}

} // namespace

TEST_SUITE("engine") {

TEST_CASE("trivial regions")
{
    CHECK(count_tilings(Region{}) == 1);
    Region one;
    one.cells = {Cell{0, 0}};
    CHECK(count_tilings(one) == 0);
    Region pair;
    pair.cells = {Cell{0, 0}, Cell{0, 1}};
    pair.set_weight(Cell{0, 0}, Cell{0, 1}, Rational(2, 7));
    CHECK(count_tilings(pair) == Rational(2, 7));
    CHECK(count_tilings_reference(pair) == Rational(2, 7));
}

TEST_CASE("small families against their formulas")
{
    CHECK(count_tilings(build_P(1, 1, 1)) == 2);
    CHECK(count_tilings(build_P(2, 3, 2)) == 40);
    CHECK(count_tilings(build_Pprime(1, 1, 1)) == Rational(3, 2));
    CHECK(count_tilings(build_H(1, 0, 1, 1, {1, 1})) == 20);
    CHECK(count_tilings(build_S(2, 1, 2, {1, 1})) == 128);
}

TEST_CASE("engine agrees with brute force on random small regions")
{
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 200; ++i) {
        const Region r = random_region(rng, kReferenceCap);
        CHECK(count_tilings(r) == count_tilings_reference(r));
    }
}

TEST_CASE("unbalanced regions have no tilings")
{
    Region r = build_P(2, 2, 1);
    r.cells.erase(r.cells.begin());
    CHECK_FALSE(r.balanced());
    CHECK(count_tilings(r) == 0);
    CHECK(count_tilings_reference(r) == 0);
}

TEST_CASE("reference counter refuses large regions")
{
    CHECK_THROWS_AS(count_tilings_reference(build_P(3, 3, 3)), TooLarge);
}

TEST_CASE("count is linear in a single edge weight")
{
    const Region base = build_H(1, 1, 1, 1, {1, 1});
    const Cell a{2, 2}, b{3, 2};
    REQUIRE(base.contains(a));
    REQUIRE(base.contains(b));
    auto with = [&](const Rational& w) {
        Region r = base;
        r.set_weight(a, b, w);
        return count_tilings(r);
    };
    const Rational m1 = with(1), m2 = with(2), m3 = with(Rational(7, 3));
    CHECK(m2 - m1 == (m3 - m1) * Rational(3, 4));
}

TEST_CASE("forced lozenges do not change the count")
{
    for (const Region& r : {build_H(1, 0, 2, 1, {1, 1}), build_H(5, 1, 0, 2, {1, 2}), build_P(1, 3, 2)}) {
        const Reduction red = reduce_forced(r);
        CHECK(red.factor * count_tilings(red.region) == count_tilings(r));
    }
    Region lone;
    lone.cells = {Cell{0, 0}, Cell{0, 4}};
    CHECK(reduce_forced(lone).factor == 0);
}

TEST_CASE("state cap is enforced")
{
    EngineOptions tight;
    tight.state_cap = 2;
    CHECK_THROWS_AS(count_tilings(build_P(3, 3, 3), tight), ResourceLimit);
    try {
        count_tilings(build_P(3, 3, 3), tight);
    } catch (const ResourceLimit& e) {
        CHECK(e.width() > 0);
    }
    setenv("RHOMBIL_STATE_CAP", "7", 1);
    CHECK(EngineOptions::from_env().state_cap == 7);
    setenv("RHOMBIL_STATE_CAP", "junk", 1);
    CHECK(EngineOptions::from_env().state_cap == (std::size_t(1) << 24));
    unsetenv("RHOMBIL_STATE_CAP");
}

TEST_CASE("sweep picks the narrower axis")
{
    CountStats st;
    Region strip;
    for (int c = 0; c < 40; ++c) strip.cells.insert(Cell{0, c});
    CHECK(count_tilings(strip, EngineOptions{}, &st) == 1);
    CHECK(st.width == 1);
    Region band;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 40; ++c) band.cells.insert(Cell{r, c});
    const Rational by_columns = count_tilings(band, EngineOptions{}, &st);
    CHECK(st.axis == SweepAxis::Columns);
    CHECK(st.width <= 3);
    CHECK(by_columns > 0);
}

TEST_CASE("Kuo condensation on a corner quad")
{
    const Region g = build_H(1, 1, 1, 1, {1, 1});
    const KuoQuad q = corner_quad(g);
    CHECK(q.u.up() == q.w.up());
    CHECK(q.v.up() == q.s.up());
    auto M = [&](KuoTerm t) { return count_tilings(kuo_corner_delete(g, q, t)); };
    CHECK(count_tilings(g) * M(KuoTerm::UVWS) == M(KuoTerm::UV) * M(KuoTerm::WS) + M(KuoTerm::US) * M(KuoTerm::VW));

    CHECK_THROWS_AS(delete_pair(g, q.u, q.w), ClassViolation);
    const KuoQuad bad{q.u, q.w, q.v, q.s};
    CHECK_THROWS_AS(kuo_corner_delete(g, bad, KuoTerm::UV), ClassViolation);
    CHECK_THROWS_AS(corner_quad(Region{}), MissingCell);
}

}
