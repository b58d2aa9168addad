#include "modserre/expr.hpp"

#include <cctype>

#include "modserre/errors.hpp"
#include "modserre/schur.hpp"

namespace modserre {

namespace {

enum class Tok { number, ident, lbracket, rbracket, comma, lparen, rparen, plus, minus, star, caret, end };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

const char* describe(Tok t)
{
    switch (t) {
    case Tok::number: return "number";
    case Tok::ident: return "identifier";
    case Tok::lbracket: return "'['";
    case Tok::rbracket: return "']'";
    case Tok::comma: return "','";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::plus: return "'+'";
    case Tok::minus: return "'-'";
    case Tok::star: return "'*'";
    case Tok::caret: return "'^'";
    case Tok::end: return "end of input";
    }
    return "?";
}

std::vector<Token> lex(std::string_view text, int line, int column)
{
    std::vector<Token> out;
    std::size_t i = 0;
    auto col = [&](std::size_t pos) { return column + static_cast<int>(pos); };
    while (i < text.size()) {
        const char c = text[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                ++i;
            }
            if (i + 1 < text.size() && text[i] == '/' && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
                ++i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                    ++i;
                }
            }
            out.push_back({Tok::number, std::string(text.substr(start, i - start)), line, col(start)});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
                ++i;
            }
            out.push_back({Tok::ident, std::string(text.substr(start, i - start)), line, col(start)});
            continue;
        }
        Tok kind{};
        switch (c) {
        case '[': kind = Tok::lbracket; break;
        case ']': kind = Tok::rbracket; break;
        case ',': kind = Tok::comma; break;
        case '(': kind = Tok::lparen; break;
        case ')': kind = Tok::rparen; break;
        case '+': kind = Tok::plus; break;
        case '-': kind = Tok::minus; break;
        case '*': kind = Tok::star; break;
        case '^': kind = Tok::caret; break;
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", line, col(start));
        }
        out.push_back({kind, std::string(1, c), line, col(start)});
        ++i;
    }
    out.push_back({Tok::end, "", line, col(text.size())});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    Expr parse_all()
    {
        Expr e = parse_sum();
        if (peek().kind != Tok::end) {
            fail(peek().kind == Tok::number || peek().kind == Tok::ident || peek().kind == Tok::lparen
                     ? "expected operator before " + quoted(peek()) + " (multiplication must be explicit)"
                     : "unexpected " + quoted(peek()));
        }
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& take() { return tokens_[pos_++]; }

    static std::string quoted(const Token& t)
    {
        return t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
    }

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError(msg, peek().line, peek().column);
    }

    const Token& expect(Tok kind)
    {
        if (peek().kind != kind) {
            fail(std::string("expected ") + describe(kind) + ", found " + quoted(peek()));
        }
        return take();
    }

    int expect_integer(const char* what)
    {
        const Token& t = expect(Tok::number);
        if (t.text.find('/') != std::string::npos || t.text.size() > 6) {
            throw ParseError(std::string("expected a small nonnegative integer ") + what, t.line, t.column);
        }
        return std::stoi(t.text);
    }

    static Expr node(Expr::Kind kind, const Token& at)
    {
        Expr e;
        e.kind = kind;
        e.line = at.line;
        e.column = at.column;
        return e;
    }

    Expr parse_sum()
    {
        Expr lhs = parse_product();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            const Token& op = take();
            Expr e = node(op.kind == Tok::plus ? Expr::Kind::add : Expr::Kind::sub, op);
            e.children.push_back(std::move(lhs));
            e.children.push_back(parse_product());
            lhs = std::move(e);
        }
        return lhs;
    }

    Expr parse_product()
    {
        Expr lhs = parse_unary();
        while (peek().kind == Tok::star) {
            const Token& op = take();
            Expr e = node(Expr::Kind::mul, op);
            e.children.push_back(std::move(lhs));
            e.children.push_back(parse_unary());
            lhs = std::move(e);
        }
        return lhs;
    }

    Expr parse_unary()
    {
        if (peek().kind == Tok::minus) {
            const Token& op = take();
            Expr e = node(Expr::Kind::neg, op);
            e.children.push_back(parse_unary());
            return e;
        }
        return parse_power();
    }

    Expr parse_power()
    {
        Expr base = parse_atom();
        if (peek().kind == Tok::caret) {
            const Token& op = take();
            Expr e = node(Expr::Kind::pow, op);
            e.index = expect_integer("exponent");
            e.children.push_back(std::move(base));
            return e;
        }
        return base;
    }

    Expr parse_atom()
    {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::number: {
            take();
            Expr e = node(Expr::Kind::number, t);
            e.number = parse_rational(t.text);
            return e;
        }
        case Tok::lparen: {
            take();
            Expr e = parse_sum();
            expect(Tok::rparen);
            return e;
        }
        case Tok::ident: return parse_identifier();
        default: fail("expected an operand, found " + quoted(t));
        }
    }

    Expr parse_identifier()
    {
        const Token& t = take();
        if (t.text == "q" || t.text == "u" || t.text == "v") {
            Expr e = node(Expr::Kind::symbol, t);
            e.symbol = t.text[0];
            return e;
        }
        if (t.text == "s") {
            Expr e = node(Expr::Kind::schur, t);
            expect(Tok::lbracket);
            std::vector<int> parts;
            if (peek().kind != Tok::rbracket) {
                parts.push_back(expect_integer("partition part"));
                while (peek().kind == Tok::comma) {
                    take();
                    parts.push_back(expect_integer("partition part"));
                }
            }
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (parts[i] <= 0) {
                    throw ParseError("partition parts must be positive", t.line, t.column);
                }
                if (i > 0 && parts[i] > parts[i - 1]) {
                    std::string written;
                    for (std::size_t k = 0; k < parts.size(); ++k) {
                        written += (k > 0 ? "," : "") + std::to_string(parts[k]);
                    }
                    throw ParseError("partition parts must be weakly decreasing: s[" + written + "]", t.line,
                                     t.column);
                }
            }
            expect(Tok::rbracket);
            e.shape = Partition(std::move(parts));
            return e;
        }
        if (t.text == "h" || t.text == "p") {
            Expr e = node(t.text == "h" ? Expr::Kind::homogeneous : Expr::Kind::power_sum, t);
            expect(Tok::lbracket);
            e.index = expect_integer("index");
            expect(Tok::rbracket);
            if (e.kind == Expr::Kind::power_sum && e.index == 0) {
                throw ParseError("p[0] is not a power sum", t.line, t.column);
            }
            return e;
        }
        throw ParseError("unknown identifier '" + t.text + "' (multiplication must be explicit)", t.line,
                         t.column);
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace

std::string to_string(const Expr& e)
{
    switch (e.kind) {
    case Expr::Kind::number: return e.number.get_str();
    case Expr::Kind::symbol: return std::string(1, e.symbol);
    case Expr::Kind::schur: return "s" + e.shape.to_string();
    case Expr::Kind::homogeneous: return "h[" + std::to_string(e.index) + "]";
    case Expr::Kind::power_sum: return "p[" + std::to_string(e.index) + "]";
    case Expr::Kind::neg: return "(neg " + to_string(e.children[0]) + ")";
    case Expr::Kind::pow: return "(^ " + to_string(e.children[0]) + " " + std::to_string(e.index) + ")";
    case Expr::Kind::add:
    case Expr::Kind::sub:
    case Expr::Kind::mul: {
        const char* op = e.kind == Expr::Kind::add ? "+" : e.kind == Expr::Kind::sub ? "-" : "*";
        return std::string("(") + op + " " + to_string(e.children[0]) + " " + to_string(e.children[1]) + ")";
    }
    }
    return "?";
}

Expr parse_expression(std::string_view text, int line, int column)
{
    return Parser(lex(text, line, column)).parse_all();
}

SymFunction eval_function(const Expr& e)
{
    switch (e.kind) {
    case Expr::Kind::number: return SymFunction(HodgePoly(e.number));
    case Expr::Kind::symbol:
        switch (e.symbol) {
        case 'q': return SymFunction(HodgePoly::q_power(1));
        case 'u': return SymFunction(HodgePoly::monomial(1, 0));
        default: return SymFunction(HodgePoly::monomial(0, 1));
        }
    case Expr::Kind::schur: return schur_function(e.shape);
    case Expr::Kind::homogeneous: return h_function(e.index);
    case Expr::Kind::power_sum: return SymFunction::power_sum(e.index);
    case Expr::Kind::neg: return -eval_function(e.children[0]);
    case Expr::Kind::add: return eval_function(e.children[0]) + eval_function(e.children[1]);
    case Expr::Kind::sub: return eval_function(e.children[0]) - eval_function(e.children[1]);
    case Expr::Kind::mul: return eval_function(e.children[0]) * eval_function(e.children[1]);
    case Expr::Kind::pow: {
        const SymFunction base = eval_function(e.children[0]);
        SymFunction r(HodgePoly(1));
        for (int i = 0; i < e.index; ++i) {
            r = r * base;
        }
        return r;
    }
    }
    return {};
}

SymSeries eval_expression(const Expr& e, const Truncation& trunc)
{
    return SymSeries::embed(trunc, eval_function(e));
}

} // namespace modserre
