#include "modserre/rational.hpp"

#include <cctype>

#include "modserre/errors.hpp"

namespace modserre {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

BigRational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const auto num = body.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw ParseError("malformed rational '" + std::string(text) + "'", 0, 0);
    }
    BigInt n(std::string(num), 10);
    BigInt d(std::string(den), 10);
    if (d == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'", 0, 0);
    }
    BigRational r(negative ? BigInt(-n) : n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const BigRational& value) { return value.get_str(); }

std::string to_string(const BigInt& value) { return value.get_str(); }

BigInt factorial(int n)
{
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

} // namespace modserre
