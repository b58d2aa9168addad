#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace modserre {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Accepts "a" or "a/b" with an optional leading '-'; the result is canonical.
// Throws ParseError (line 0) on anything else or on a zero denominator.
BigRational parse_rational(std::string_view text);

std::string to_string(const BigRational& value);
std::string to_string(const BigInt& value);

// num/den in lowest terms; den must be nonzero.
inline BigRational ratio(const BigInt& num, const BigInt& den)
{
    BigRational r(num, den);
    r.canonicalize();
    return r;
}
inline BigRational ratio(long num, long den) { return ratio(BigInt(num), BigInt(den)); }

inline bool is_integer(const BigRational& value) { return value.get_den() == 1; }

BigInt factorial(int n);

} // namespace modserre
