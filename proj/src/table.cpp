#include "modserre/table.hpp"

#include <cctype>
#include <set>

#include "modserre/errors.hpp"
#include "modserre/expr.hpp"

namespace modserre {

namespace detail {
std::string_view embedded_dataset_text() noexcept;
}

namespace {

class LineCursor {
public:
    LineCursor(std::string_view text, int line) : text_(text), line_(line) {}

    void skip_space()
    {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) {
            ++pos_;
        }
    }

    void expect(char c, const char* what)
    {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c) {
            fail(std::string("expected ") + what);
        }
        ++pos_;
    }

    int integer()
    {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (pos_ == start || pos_ - start > 6) {
            pos_ = start;
            fail("expected a nonnegative integer");
        }
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, column()); }

    int column() const { return static_cast<int>(pos_) + 1; }
    std::string_view rest() const { return text_.substr(pos_); }

private:
    std::string_view text_;
    int line_;
    std::size_t pos_ = 0;
};

} // namespace

SourceTable parse_source(std::string_view text)
{
    SourceTable table;
    std::set<Slot> seen;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find('\n', start), text.size());
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        start = end + 1;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        if (line.find_first_not_of(" \t\r") == std::string_view::npos) {
            if (end == text.size()) {
                break;
            }
            continue;
        }
        LineCursor cur(line, line_no);
        cur.expect('M', "a row of the form M[g,n] = <expression>");
        cur.expect('[', "'[' after M");
        const int g = cur.integer();
        cur.expect(',', "','");
        const int n = cur.integer();
        cur.expect(']', "']'");
        cur.expect('=', "'='");
        const Slot slot{g, n};
        if (!slot.stable()) {
            throw ParseError("slot M[" + std::to_string(g) + "," + std::to_string(n) +
                                 "] is not stable (need n >= 1 and 2g-2+n > 0)",
                             line_no, 1);
        }
        if (!seen.insert(slot).second) {
            throw ParseError("duplicate slot M[" + std::to_string(g) + "," + std::to_string(n) + "]", line_no, 1);
        }
        cur.skip_space();
        const int column = cur.column();
        table.rows.push_back(SourceRow{slot, std::string(cur.rest()), line_no, column});
        if (end == text.size()) {
            break;
        }
    }
    return table;
}

ModuliTable evaluate_source(const SourceTable& source)
{
    ModuliTable table;
    for (const auto& row : source.rows) {
        const Expr e = parse_expression(row.expression, row.line, row.column);
        SymFunction value = eval_function(e);
        if (!value.is_homogeneous(row.slot.points)) {
            throw ParseError("entry for M[" + std::to_string(row.slot.genus) + "," +
                                 std::to_string(row.slot.points) + "] is not homogeneous of weight " +
                                 std::to_string(row.slot.points),
                             row.line, row.column);
        }
        table.set(row.slot, std::move(value));
    }
    return table;
}

namespace {

std::string schur_term(bool first, const HodgePoly& c, const Partition& mu)
{
    const std::string atom = "s" + mu.to_string();
    std::string body;
    bool negative = false;
    if (c.size() == 1) {
        const auto& [exp, coeff] = *c.terms().begin();
        negative = coeff < 0;
        const HodgePoly magnitude = negative ? -c : c;
        const std::string text = magnitude.to_string();
        body = magnitude == HodgePoly(1) ? atom : text + "*" + atom;
    } else {
        body = "(" + c.to_string() + ")*" + atom;
    }
    if (first) {
        return negative ? "-" + body : body;
    }
    return (negative ? " - " : " + ") + body;
}

} // namespace

std::string render_table(const ModuliTable& table)
{
    std::string out;
    for (const auto& [slot, entry] : table.entries()) {
        out += "M[" + std::to_string(slot.genus) + "," + std::to_string(slot.points) + "] = ";
        const SchurForm form = to_schur(entry, slot.points);
        if (form.empty()) {
            out += "0";
        }
        bool first = true;
        for (const auto& [mu, c] : form) {
            out += schur_term(first, c, mu);
            first = false;
        }
        out += "\n";
    }
    return out;
}

std::string_view embedded_dataset_text() noexcept { return detail::embedded_dataset_text(); }

ModuliTable embedded_dataset() { return parse_table(embedded_dataset_text()); }

} // namespace modserre
