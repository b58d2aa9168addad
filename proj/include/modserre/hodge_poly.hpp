#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "modserre/rational.hpp"

namespace modserre {

// Sparse polynomial in the Hodge variables u, v with rational coefficients.
// Zero coefficients are never stored; terms iterate in ascending (i, j).
class HodgePoly {
public:
    struct Exponent {
        int u = 0;
        int v = 0;
        friend auto operator<=>(const Exponent&, const Exponent&) = default;
    };
    using TermMap = std::map<Exponent, BigRational>;

    HodgePoly() = default;
    HodgePoly(const BigRational& constant); // NOLINT(google-explicit-constructor)
    HodgePoly(long constant);               // NOLINT(google-explicit-constructor)

    static HodgePoly monomial(int u_exp, int v_exp, const BigRational& coeff = 1);
    // q^k with q = uv.
    static HodgePoly q_power(int k, const BigRational& coeff = 1);

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    BigRational coeff(int u_exp, int v_exp) const;

    // Adds c * u^i v^j in place.
    void add_term(int u_exp, int v_exp, const BigRational& coeff);

    HodgePoly& operator+=(const HodgePoly& other);
    HodgePoly& operator-=(const HodgePoly& other);
    HodgePoly& operator*=(const HodgePoly& other);
    HodgePoly& operator*=(const BigRational& scalar);

    friend HodgePoly operator+(HodgePoly a, const HodgePoly& b) { return a += b; }
    friend HodgePoly operator-(HodgePoly a, const HodgePoly& b) { return a -= b; }
    friend HodgePoly operator*(const HodgePoly& a, const HodgePoly& b);
    friend HodgePoly operator*(HodgePoly a, const BigRational& s) { return a *= s; }
    friend HodgePoly operator*(const BigRational& s, HodgePoly a) { return a *= s; }
    HodgePoly operator-() const;

    friend bool operator==(const HodgePoly&, const HodgePoly&) = default;

    // Canonical text: ascending (i, j), "c*q^k" on the diagonal, "c*u^i*v^j"
    // otherwise, e.g. "1 + 5*q - 1/2*u*v^2". The zero polynomial is "0".
    std::string to_string() const;

private:
    TermMap terms_;
};

// u^i v^j -> u^{ki} v^{kj}; throws PreconditionError when k < 1.
HodgePoly hp_adams(int k, const HodgePoly& a);

// u^i v^j -> u^{d-i} v^{d-j}; throws DualityDomainError when some exponent
// exceeds d.
HodgePoly hp_dual(int d, const HodgePoly& a);

struct QTerm {
    int degree;
    BigRational coeff;
    friend bool operator==(const QTerm&, const QTerm&) = default;
};
using QPoly = std::vector<QTerm>; // ascending degree
struct OffDiagonal {
    int u;
    int v;
    friend bool operator==(const OffDiagonal&, const OffDiagonal&) = default;
};

// Succeeds iff every term lies on the diagonal i = j; otherwise reports the
// first off-diagonal exponent in canonical order.
std::variant<QPoly, OffDiagonal> hp_to_q_poly(const HodgePoly& a);

// Dense ascending q-coefficients, or nothing when off-diagonal.
std::vector<BigRational> dense_q_coefficients(const QPoly& q);

// Descending-degree display form for diagonal polynomials,
// "q^7 + 5q^6 + ... + 1"; falls back to to_string() off the diagonal.
std::string render_q_display(const HodgePoly& a);

} // namespace modserre
