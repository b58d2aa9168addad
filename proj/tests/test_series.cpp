#include <doctest.h>

#include <random>

#include "modserre/errors.hpp"
#include "modserre/series.hpp"
#include "modserre/verify.hpp"

using namespace modserre;

namespace {

SymFunction p(std::initializer_list<int> parts, const HodgePoly& c = HodgePoly(1))
{
    return SymFunction::monomial(Partition(parts), c);
}

} // namespace

TEST_CASE("truncation")
{
    const Truncation t(5);
    CHECK(t.weight_cap(1) == 3);
    CHECK(t.weight_cap(5) == 15);
    CHECK(t.weight_cap(0) == 15);
    CHECK(t.admits(2, 6));
    CHECK_FALSE(t.admits(2, 7));
    CHECK_FALSE(t.admits(6, 0));
    CHECK(Truncation(0).weight_cap(0) == 0);
    CHECK_THROWS_AS(Truncation(-1), PreconditionError);
    CHECK_THROWS_AS(Truncation(2, {4, 3}), PreconditionError);
    CHECK_THROWS_AS(Truncation(2, {3}), PreconditionError);
}

TEST_CASE("p_1 * p_1 = p_[1,1]")
{
    const Truncation t(2);
    const SymSeries p1 = basis_p(1, t);
    CHECK(p1 * p1 == SymSeries::monomial(t, 0, Partition{1, 1}));
    CHECK(SymSeries::one(t) * p1 == p1);
}

TEST_CASE("series products truncate per layer")
{
    const Truncation t(2);
    const SymSeries a = SymSeries::monomial(t, 1, Partition{2});
    const SymSeries b = SymSeries::monomial(t, 1, Partition{1});
    const SymSeries c = SymSeries::monomial(t, 1, Partition{3});
    CHECK(a * b == SymSeries::monomial(t, 2, Partition{2, 1}));
    CHECK((a * c).coeff(2, Partition{3, 2}) == HodgePoly(1));
    CHECK((c * c).coeff(2, Partition{3, 3}) == HodgePoly(1));
    CHECK((a * c * b).is_zero());
    CHECK_THROWS_AS(a * SymSeries::one(Truncation(3)), PreconditionError);
}

TEST_CASE("series ring laws")
{
    const Truncation t(3);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 60; ++i) {
        const SymSeries a = random_series(rng, t, 4);
        const SymSeries b = random_series(rng, t, 4);
        const SymSeries c = random_series(rng, t, 4);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("h_n: closed form agrees with Newton's identity")
{
    // n h_n = sum_{k=1}^n p_k h_{n-k}
    for (int n = 1; n <= 9; ++n) {
        SymFunction rhs;
        for (int k = 1; k <= n; ++k) {
            rhs += SymFunction::power_sum(k) * h_function(n - k);
        }
        CHECK(h_function(n) * BigRational(n) == rhs);
    }
    CHECK(h_function(0) == SymFunction(HodgePoly(1)));
    CHECK(h_function(2) == p({1, 1}, ratio(1, 2)) + p({2}, ratio(1, 2)));
}

TEST_CASE("h_2 and h_3 from the generating function")
{
    // exp(p_1 t + p_2 t^2/2 + p_3 t^3/3) expanded by hand to t^3.
    const SymFunction p1 = SymFunction::power_sum(1);
    const SymFunction p2 = SymFunction::power_sum(2);
    const SymFunction p3 = SymFunction::power_sum(3);
    const SymFunction t2 = p1 * p1 * ratio(1, 2) + p2 * ratio(1, 2);
    const SymFunction t3 = p1 * p1 * p1 * ratio(1, 6) + p1 * p2 * ratio(1, 2) + p3 * ratio(1, 3);
    CHECK(h_function(2) == t2);
    CHECK(h_function(3) == t3);
    CHECK(basis_h(3, Truncation(1)) == SymSeries::embed(Truncation(1), t3));
}

TEST_CASE("Adams operations on series")
{
    const Truncation t(4);
    const SymSeries a = SymSeries::monomial(t, 1, Partition{2, 1}, HodgePoly::q_power(1));
    const SymSeries a2 = adams_sf(2, a);
    CHECK(a2 == SymSeries::monomial(t, 2, Partition{4, 2}, HodgePoly::q_power(2)));
    CHECK(adams_sf(1, a) == a);
    CHECK(adams_sf(5, a).is_zero());

    std::mt19937_64 rng(5);
    for (int i = 0; i < 60; ++i) {
        const SymSeries x = random_series(rng, t, 3);
        const SymSeries y = random_series(rng, t, 3);
        const int k = 1 + i % 3;
        CHECK(adams_sf(k, x * y) == adams_sf(k, x) * adams_sf(k, y));
        CHECK(adams_sf(2, adams_sf(2, x)) == adams_sf(4, x));
        CHECK(adams_sf(k, x + y) == adams_sf(k, x) + adams_sf(k, y));
    }
}

TEST_CASE("partial derivatives")
{
    const SymFunction f = p({2, 2, 1}, HodgePoly::q_power(1));
    CHECK(partial_p(2, f) == p({2, 1}, HodgePoly::q_power(1, 2)));
    CHECK(partial_p(1, f) == p({2, 2}, HodgePoly::q_power(1)));
    CHECK(partial_p(3, f).is_zero());
    CHECK(partial_p(1, SymFunction(HodgePoly(5))).is_zero());

    // Leibniz rule.
    const SymFunction g = p({3, 1}) + p({1, 1}, ratio(1, 2));
    for (int k = 1; k <= 3; ++k) {
        CHECK(partial_p(k, f * g) == partial_p(k, f) * g + f * partial_p(k, g));
    }
    // Mixed partials commute.
    CHECK(partial_p(1, partial_p(2, f * g)) == partial_p(2, partial_p(1, f * g)));
}

TEST_CASE("component and rank specialization")
{
    const Truncation t(2);
    SymSeries s(t);
    s.add_term(1, Partition{1, 1}, HodgePoly(3));
    s.add_term(1, Partition{2}, HodgePoly(7));
    s.add_term(1, Partition{1}, HodgePoly(2));
    s.add_term(2, Partition{1, 1}, HodgePoly(1));
    const SymSeries c = component(s, 1, 2);
    CHECK(c.term_count() == 2);
    CHECK(rank_specialize(s, 1, 2) == HodgePoly(6));
    CHECK(rank_specialize(s, 1, 1) == HodgePoly(2));
    CHECK(rank_specialize(basis_h(3, t), 0, 3) == HodgePoly(1));
}

TEST_CASE("terms outside the truncation are dropped")
{
    const Truncation t(1);
    SymSeries s(t);
    s.add_term(1, Partition{2, 2}, HodgePoly(1));
    s.add_term(2, Partition{1}, HodgePoly(1));
    CHECK(s.is_zero());
    const auto terms = SymSeries::monomial(t, 1, Partition{1}).terms();
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].lambda == 1);
}
