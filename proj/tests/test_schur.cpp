#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "modserre/errors.hpp"
#include "modserre/schur.hpp"

using namespace modserre;

namespace {

SymFunction p(std::initializer_list<int> parts, const BigRational& c)
{
    return SymFunction::monomial(Partition(parts), HodgePoly(c));
}

} // namespace

TEST_CASE("small Schur functions")
{
    CHECK(schur_function(Partition{}) == SymFunction(HodgePoly(1)));
    CHECK(schur_function(Partition{2}) == p({1, 1}, ratio(1, 2)) + p({2}, ratio(1, 2)));
    CHECK(schur_function(Partition{1, 1}) == p({1, 1}, ratio(1, 2)) - p({2}, ratio(1, 2)));
    CHECK(schur_function(Partition{2, 1}) == p({1, 1, 1}, ratio(1, 3)) - p({3}, ratio(1, 3)));
    CHECK(schur_function(Partition{3}) == h_function(3));
}

TEST_CASE("character values")
{
    CHECK(character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(character(Partition{2, 1}, Partition{2, 1}) == 0);
    CHECK(character(Partition{2, 1}, Partition{3}) == -1);
    CHECK(character(Partition{2, 2}, Partition{2, 2}) == 2);
    CHECK(character(Partition{3, 1}, Partition{4}) == -1);
    CHECK(character(Partition{}, Partition{}) == 1);
    CHECK_THROWS_AS(character(Partition{2}, Partition{1}), PreconditionError);
}

TEST_CASE("character tables are orthogonal")
{
    for (int n = 1; n <= 7; ++n) {
        const auto ps = partitions_of(n);
        for (const auto& mu : ps) {
            for (const auto& nu : ps) {
                BigRational inner = 0;
                for (const auto& rho : ps) {
                    inner += BigRational(character(mu, rho) * character(nu, rho)) / BigRational(z_factor(rho));
                }
                CHECK(inner == (mu == nu ? 1 : 0));
            }
            CHECK(BigInt(character(mu, Partition(std::vector<int>(static_cast<std::size_t>(n), 1)))) ==
                  hook_length_count(mu));
        }
    }
}

TEST_CASE("Jacobi-Trudi agrees with Murnaghan-Nakayama")
{
    for (int n = 0; n <= 8; ++n) {
        for (const auto& mu : partitions_of(n)) {
            CHECK(schur_function(mu) == schur_function_mn(mu));
        }
    }
    CHECK_THROWS_AS(schur_function_mn(Partition{13}), PreconditionError);
}

TEST_CASE("Schur functions are homogeneous of the right degree")
{
    for (int n = 0; n <= 7; ++n) {
        for (const auto& mu : partitions_of(n)) {
            CHECK(schur_function(mu).is_homogeneous(n));
        }
    }
}

TEST_CASE("to_schur and from_schur")
{
    // Conversion round trips in both directions.
    for (int n = 1; n <= 6; ++n) {
        for (const auto& mu : partitions_of(n)) {
            const SchurForm form = to_schur(schur_function(mu), n);
            REQUIRE(form.size() == 1);
            CHECK(form[0].first == mu);
            CHECK(form[0].second == HodgePoly(1));
        }
        for (const auto& rho : partitions_of(n)) {
            const SymFunction f = SymFunction::monomial(rho, HodgePoly::q_power(1, 3));
            CHECK(from_schur(to_schur(f, n)) == f);
        }
    }
    // p_1^2 = s_2 + s_11; p_2 = s_2 - s_11.
    const SchurForm p11 = to_schur(SymFunction::monomial(Partition{1, 1}), 2);
    CHECK(p11 == SchurForm{{Partition{2}, HodgePoly(1)}, {Partition{1, 1}, HodgePoly(1)}});
    const SchurForm p2 = to_schur(SymFunction::power_sum(2), 2);
    CHECK(p2 == SchurForm{{Partition{2}, HodgePoly(1)}, {Partition{1, 1}, HodgePoly(-1)}});
    CHECK(to_schur(SymFunction::power_sum(2), 3).empty());
}

TEST_CASE("Schur rank counts dimensions")
{
    const SchurForm form{{Partition{2, 2}, HodgePoly(1)}, {Partition{3, 1}, HodgePoly::q_power(1)}};
    CHECK(schur_rank(form) == HodgePoly(2) + HodgePoly::q_power(1, 3));
    // Rank of p_1^n is n!.
    for (int n = 1; n <= 6; ++n) {
        const SchurForm f = to_schur(SymFunction::monomial(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))), n);
        CHECK(schur_rank(f) == HodgePoly(BigRational(factorial(n))));
    }
}

TEST_CASE("series overloads")
{
    const Truncation t(2);
    CHECK(schur_to_p(Partition{2, 1}, t) == schur_to_p_mn(Partition{2, 1}, t));
    const SymSeries s = schur_to_p(Partition{2}, t).shifted(1);
    CHECK(to_schur(s, 1, 2) == SchurForm{{Partition{2}, HodgePoly(1)}});
    CHECK(to_schur(s, 0, 2).empty());
}
