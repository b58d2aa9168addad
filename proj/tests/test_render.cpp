#include <doctest.h>

#include "modserre/render.hpp"
#include "modserre/table.hpp"
#include "modserre/verify.hpp"

using namespace modserre;

namespace {

const SymSeries& psi()
{
    static const SymSeries value = run_pipeline(embedded_dataset(), PipelineConfig{});
    return value;
}

} // namespace

TEST_CASE("Schur text")
{
    const SchurForm form{{Partition{4}, HodgePoly::q_power(1) + HodgePoly(1)}, {Partition{2, 2}, HodgePoly(-1)}};
    CHECK(render_schur_text(form) == "s[4] * (q + 1) + s[2,2] * (-1)");
    CHECK(render_schur_text(SchurForm{}) == "0");
}

TEST_CASE("LaTeX pieces")
{
    CHECK(latex_partition(Partition{4}) == "4");
    CHECK(latex_partition(Partition{3, 1, 1}) == "31^2");
    CHECK(latex_partition(Partition{2, 2, 1}) == "2^21");
    CHECK(latex_q_poly(reference::q_poly({1, 1})) == "q + 1");
    CHECK(latex_q_poly(reference::q_poly({1, 0, 3})) == "3q^{2} + 1");
    const SchurForm form{{Partition{4}, reference::q_poly({1, 1})}, {Partition{3, 1}, HodgePoly::q_power(2)}};
    CHECK(render_schur_latex(form) == "(q + 1)s_{4} + q^{2}s_{31}");
    const SchurForm signs{{Partition{4}, HodgePoly::q_power(1)},
                          {Partition{2, 2}, HodgePoly(-1)},
                          {Partition{3, 1}, HodgePoly(-2) - HodgePoly::q_power(1)},
                          {Partition{2, 1, 1}, HodgePoly(-1) + HodgePoly::q_power(1)}};
    CHECK(render_schur_latex(signs) == "qs_{4} - s_{2^2} - (q + 2)s_{31} + (q - 1)s_{21^2}");
    CHECK(render_schur_latex(SchurForm{{Partition{1}, HodgePoly(-3)}}) == "-3s_{1}");
}

TEST_CASE("slot report text")
{
    const SlotReport r = make_slot_report(psi(), Slot{3, 1});
    const std::string text = render_report_text(r);
    CHECK(text.find("slot M[3,1] closed") != std::string::npos);
    CHECK(text.find("lambda=5") != std::string::npos);
    CHECK(text.find("dim=7") != std::string::npos);
    CHECK(text.find("rank: q^7 + 5q^6 + 16q^5 + 29q^4 + 29q^3 + 16q^2 + 5q + 1") != std::string::npos);
    CHECK(text.find("duality: ok") != std::string::npos);
    CHECK(render_report_latex(r).find("s_{1}") != std::string::npos);
}

TEST_CASE("slot report JSON")
{
    const SlotReport r = make_slot_report(psi(), Slot{0, 5});
    const auto j = report_json(r);
    CHECK(j["g"] == 0);
    CHECK(j["n"] == 5);
    CHECK(j["lambda"] == 3);
    CHECK(j["dim"] == 2);
    CHECK(j["rank_q"] == nlohmann::ordered_json::array({1, 5, 1}));
    CHECK(j["duality"] == true);
    CHECK(j["hodge_diagonal"] == true);
    REQUIRE(j["schur"].size() == 2);
    CHECK(j["schur"][0]["partition"] == nlohmann::ordered_json::array({5}));
    CHECK(j["schur"][0]["coeff_q"] == nlohmann::ordered_json::array({1, 1, 1}));
    CHECK(j["schur"][1]["partition"] == nlohmann::ordered_json::array({4, 1}));
    CHECK(j["schur"][1]["coeff_q"] == nlohmann::ordered_json::array({0, 1}));
}

TEST_CASE("exact values in JSON")
{
    CHECK(rational_json(BigRational(7)) == 7);
    CHECK(rational_json(ratio(-3, 6)) == "-1/2");
    CHECK(rational_json(BigRational(BigInt("123456789012345678901234567890"))) == "123456789012345678901234567890");
    const auto h = hodge_json(HodgePoly::monomial(1, 2, ratio(1, 3)) + HodgePoly(1));
    CHECK(h.dump() == R"({"u^0 v^0":"1","u^1 v^2":"1/3"})");

    const Truncation t(1);
    SymSeries s(t);
    s.add_term(1, Partition{2, 1}, HodgePoly(2));
    const auto sj = series_json(s);
    REQUIRE(sj.size() == 1);
    CHECK(sj[0]["lambda"] == 1);
    CHECK(sj[0]["p"] == nlohmann::ordered_json::array({2, 1}));
    CHECK(render_series_text(s).find("p[2,1]") != std::string::npos);
}
