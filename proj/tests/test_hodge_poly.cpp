#include <doctest.h>

#include <random>

#include "modserre/errors.hpp"
#include "modserre/expr.hpp"
#include "modserre/hodge_poly.hpp"
#include "modserre/verify.hpp"

using namespace modserre;

namespace {

HodgePoly q(int k = 1, long c = 1) { return HodgePoly::q_power(k, BigRational(c)); }

HodgePoly headline_poly() { return reference::headline_rank(); }

HodgePoly reparse(const std::string& text)
{
    return eval_function(parse_expression(text)).coeff(Partition{});
}

} // namespace

TEST_CASE("rational parsing is canonical")
{
    CHECK(parse_rational("6/4") == ratio(3, 2));
    CHECK(parse_rational("-0/5") == 0);
    CHECK(to_string(parse_rational("10/5")) == "2");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK(ratio(6, 2).get_den() == 1);
}

TEST_CASE("arithmetic examples")
{
    CHECK(q() * q() == HodgePoly::monomial(2, 2));
    CHECK(q() + HodgePoly(1) + HodgePoly(-1) == q());
    CHECK(q(3) * q() == q(4));
    CHECK((q() - q()).is_zero());
    CHECK((q() - q()).terms().empty());
}

TEST_CASE("ring laws on random sparse polynomials")
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const HodgePoly a = random_hodge(rng, 4, false);
        const HodgePoly b = random_hodge(rng, 4, false);
        const HodgePoly c = random_hodge(rng, 4, i % 3 == 0);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - b) + b == a);
    }
}

TEST_CASE("Adams operation on coefficients")
{
    const HodgePoly f = HodgePoly::monomial(1, 2, 3) + q(2);
    CHECK(hp_adams(1, f) == f);
    CHECK(hp_adams(2, q() + HodgePoly(1)) == q(2) + HodgePoly(1));
    CHECK(hp_adams(3, q(2, 2)) == q(6, 2));
    CHECK_THROWS_AS(hp_adams(0, f), PreconditionError);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        const HodgePoly a = random_hodge(rng, 3, false);
        const HodgePoly b = random_hodge(rng, 3, false);
        const int k = 1 + i % 4;
        const int l = 1 + i % 3;
        CHECK(hp_adams(k, a * b) == hp_adams(k, a) * hp_adams(k, b));
        CHECK(hp_adams(k, hp_adams(l, a)) == hp_adams(k * l, a));
    }
}

TEST_CASE("duality")
{
    CHECK(hp_dual(7, headline_poly()) == headline_poly());
    CHECK(hp_dual(1, HodgePoly(1)) == q());
    CHECK(hp_dual(0, HodgePoly(1)) == HodgePoly(1));
    CHECK(hp_dual(3, HodgePoly::monomial(1, 2)) == HodgePoly::monomial(2, 1));
    CHECK_THROWS_AS(hp_dual(1, q(2)), DualityDomainError);

    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
        const HodgePoly a = random_hodge(rng, 5, false);
        CHECK(hp_dual(5, hp_dual(5, a)) == a);
    }
}

TEST_CASE("diagonal extraction")
{
    const auto r = hp_to_q_poly(q(5) + q(4));
    REQUIRE(std::holds_alternative<QPoly>(r));
    CHECK(std::get<QPoly>(r) == QPoly{{4, 1}, {5, 1}});

    const auto off = hp_to_q_poly(HodgePoly::monomial(1, 2));
    REQUIRE(std::holds_alternative<OffDiagonal>(off));
    CHECK(std::get<OffDiagonal>(off) == OffDiagonal{1, 2});

    const auto t = hp_to_q_poly(headline_poly());
    REQUIRE(std::holds_alternative<QPoly>(t));
    std::vector<long> coeffs;
    for (const auto& c : dense_q_coefficients(std::get<QPoly>(t))) {
        coeffs.push_back(c.get_num().get_si());
    }
    CHECK(coeffs == std::vector<long>{1, 5, 16, 29, 29, 16, 5, 1});
}

TEST_CASE("canonical rendering")
{
    CHECK(HodgePoly().to_string() == "0");
    CHECK(HodgePoly(1).to_string() == "1");
    CHECK((q(2, 3) + HodgePoly(1)).to_string() == "1 + 3*q^2");
    CHECK((HodgePoly::monomial(1, 2, ratio(-1, 2)) + q()).to_string() == "q - 1/2*u*v^2");
    CHECK(HodgePoly::monomial(2, 0).to_string() == "u^2");
    CHECK((-q()).to_string() == "-q");
    CHECK(render_q_display(headline_poly()) == "q^7 + 5q^6 + 16q^5 + 29q^4 + 29q^3 + 16q^2 + 5q + 1");
    CHECK(render_q_display(q(2, -1) + HodgePoly(ratio(1, 2))) == "-q^2 + 1/2");
}

TEST_CASE("render then parse is a fixed point")
{
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        const HodgePoly a = random_hodge(rng, 4, i % 2 == 0);
        const std::string text = a.to_string();
        const HodgePoly back = reparse(text);
        CHECK(back == a);
        CHECK(back.to_string() == text);
    }
}
