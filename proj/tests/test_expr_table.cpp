#include <doctest.h>

#include <string>

#include "modserre/errors.hpp"
#include "modserre/expr.hpp"
#include "modserre/schur.hpp"
#include "modserre/table.hpp"

using namespace modserre;

namespace {

SymFunction eval(const std::string& text) { return eval_function(parse_expression(text)); }

std::string parse_error(const std::string& text)
{
    try {
        parse_expression(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

std::string table_error(const std::string& text)
{
    try {
        parse_table(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("expression trees")
{
    CHECK(to_string(parse_expression("q*s[4] - s[2,2]")) == "(- (* q s[4]) s[2,2])");
    CHECK(to_string(parse_expression("-q^2 + 1/2")) == "(+ (neg (^ q 2)) 1/2)");
    CHECK(to_string(parse_expression("(q + 1)*s[1]")) == "(* (+ q 1) s[1])");
    CHECK(to_string(parse_expression("h[2]*p[1]")) == "(* h[2] p[1])");
}

TEST_CASE("expression values")
{
    CHECK(eval("q*s[4] - s[2,2]") == schur_function(Partition{4}) * HodgePoly::q_power(1) - schur_function(Partition{2, 2}));
    CHECK(eval("u*v") == SymFunction(HodgePoly::q_power(1)));
    CHECK(eval("q^3") == SymFunction(HodgePoly::q_power(3)));
    CHECK(eval("s[]") == SymFunction(HodgePoly(1)));
    CHECK(eval("h[0]") == SymFunction(HodgePoly(1)));
    CHECK(eval("h[3]") == h_function(3));
    CHECK(eval("s[1]^2") == eval("p[1]^2"));
    CHECK(eval("s[2] + s[1,1]") == eval("p[1]*p[1]"));
    CHECK(eval("2/4*p[2]") == SymFunction::monomial(Partition{2}, HodgePoly(ratio(1, 2))));
    CHECK(eval("-(-q)") == SymFunction(HodgePoly::q_power(1)));
    CHECK(eval("1 - 2 - 3") == SymFunction(HodgePoly(-4)));
    CHECK(eval_expression(parse_expression("s[4]"), Truncation(1)) ==
          SymSeries::embed(Truncation(1), schur_function(Partition{4})));
}

TEST_CASE("expression errors")
{
    CHECK(parse_error("qs[4]").find("unknown identifier 'qs'") != std::string::npos);
    CHECK(parse_error("s[1,2]").find("weakly decreasing: s[1,2]") != std::string::npos);
    CHECK(parse_error("s[0]").find("positive") != std::string::npos);
    CHECK(parse_error("p[0]").find("p[0]") != std::string::npos);
    CHECK(parse_error("q +").find("column") != std::string::npos);
    CHECK(parse_error("q $ 1").find("line 1, column 3") != std::string::npos);
    CHECK(parse_error("(q + 1").size() > 0);
    CHECK(parse_error("1/0").size() > 0);
    CHECK(parse_error("2q").size() > 0);
    CHECK(parse_error("q*s[4]").empty());
    CHECK_THROWS_AS(parse_expression("s[4", 3, 10), ParseError);
}

TEST_CASE("error positions are relative to the document")
{
    try {
        parse_expression("q + $", 4, 10);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
        CHECK(e.column() == 14);
    }
}

TEST_CASE("table parsing")
{
    const ModuliTable t = parse_table("# comment\n\nM[0,3] = s[3]\nM[1,1] = q*s[1]  # trailing\n");
    CHECK(t.size() == 2);
    CHECK(*t.find(Slot{0, 3}) == schur_function(Partition{3}));
    CHECK(*t.find(Slot{1, 1}) == eval("q*p[1]"));
    CHECK(parse_source("M[0,3] = s[3]\n").rows[0].column == 10);
}

TEST_CASE("table errors")
{
    CHECK(table_error("M[0,2] = s[2]\n").find("not stable") != std::string::npos);
    CHECK(table_error("M[0,3] = s[3]\nM[0,3] = s[3]\n").find("line 2") != std::string::npos);
    CHECK(table_error("M[0,3] = s[3]\nM[0,3] = s[3]\n").find("duplicate") != std::string::npos);
    CHECK(table_error("M[0,4] = s[3]\n").find("not homogeneous of weight 4") != std::string::npos);
    CHECK(table_error("M[0,4] = q*s[4] + s[2]\n").find("not homogeneous") != std::string::npos);
    CHECK(table_error("X[0,3] = s[3]\n").find("line 1") != std::string::npos);
    CHECK(table_error("M[0,3] s[3]\n").size() > 0);
    CHECK(table_error("M[0,3] = s[2,1]\nM[0,4] = qs[4]\n").find("line 2") != std::string::npos);
}

TEST_CASE("embedded dataset")
{
    const ModuliTable t = embedded_dataset();
    CHECK(t.size() == 14);
    CHECK(*t.find(Slot{0, 4}) == eval("q*s[4] - s[2,2]"));
    CHECK(*t.find(Slot{3, 1}) == eval("(q^7 + 2*q^6 + q^5 + q + 1)*s[1]"));
    for (const auto& [slot, entry] : t.entries()) {
        CHECK(entry.is_homogeneous(slot.points));
    }
    CHECK(embedded_dataset_text().find("M[2,3]") != std::string_view::npos);
}

TEST_CASE("render_table round trip")
{
    const ModuliTable t = embedded_dataset();
    const std::string text = render_table(t);
    CHECK(parse_table(text) == t);
    CHECK(render_table(parse_table(text)) == text);
    CHECK(text.find("M[0,4] = q*s[4] - s[2,2]\n") != std::string::npos);
}
