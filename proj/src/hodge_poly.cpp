#include "modserre/hodge_poly.hpp"

#include "modserre/errors.hpp"

namespace modserre {

HodgePoly::HodgePoly(const BigRational& constant)
{
    if (constant != 0) {
        terms_.emplace(Exponent{0, 0}, constant);
    }
}

HodgePoly::HodgePoly(long constant) : HodgePoly(BigRational(constant)) {}

HodgePoly HodgePoly::monomial(int u_exp, int v_exp, const BigRational& coeff)
{
    if (u_exp < 0 || v_exp < 0) {
        throw PreconditionError("negative exponent in Hodge monomial");
    }
    HodgePoly r;
    r.add_term(u_exp, v_exp, coeff);
    return r;
}

HodgePoly HodgePoly::q_power(int k, const BigRational& coeff) { return monomial(k, k, coeff); }

BigRational HodgePoly::coeff(int u_exp, int v_exp) const
{
    const auto it = terms_.find(Exponent{u_exp, v_exp});
    return it == terms_.end() ? BigRational(0) : it->second;
}

void HodgePoly::add_term(int u_exp, int v_exp, const BigRational& coeff)
{
    if (coeff == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(Exponent{u_exp, v_exp}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

HodgePoly& HodgePoly::operator+=(const HodgePoly& other)
{
    for (const auto& [e, c] : other.terms_) {
        add_term(e.u, e.v, c);
    }
    return *this;
}

HodgePoly& HodgePoly::operator-=(const HodgePoly& other)
{
    for (const auto& [e, c] : other.terms_) {
        add_term(e.u, e.v, -c);
    }
    return *this;
}

HodgePoly operator*(const HodgePoly& a, const HodgePoly& b)
{
    HodgePoly r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            r.add_term(ea.u + eb.u, ea.v + eb.v, ca * cb);
        }
    }
    return r;
}

HodgePoly& HodgePoly::operator*=(const HodgePoly& other)
{
    *this = *this * other;
    return *this;
}

HodgePoly& HodgePoly::operator*=(const BigRational& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) {
        c *= scalar;
    }
    return *this;
}

HodgePoly HodgePoly::operator-() const
{
    HodgePoly r = *this;
    for (auto& [e, c] : r.terms_) {
        c = -c;
    }
    return r;
}

namespace {

std::string monomial_text(int i, int j)
{
    auto power = [](const char* var, int k) {
        std::string s = var;
        if (k != 1) {
            s += "^" + std::to_string(k);
        }
        return s;
    };
    if (i == j) {
        return i == 0 ? std::string{} : power("q", i);
    }
    std::string s;
    if (i > 0) {
        s = power("u", i);
    }
    if (j > 0) {
        if (!s.empty()) {
            s += "*";
        }
        s += power("v", j);
    }
    return s;
}

// Appends "c*m" (or "m" / "c") with the sign handled by the caller.
void append_term(std::string& out, bool first, const BigRational& coeff, const std::string& mono,
                 bool star)
{
    const bool negative = coeff < 0;
    const BigRational magnitude = negative ? BigRational(-coeff) : coeff;
    if (first) {
        if (negative) {
            out += "-";
        }
    } else {
        out += negative ? " - " : " + ";
    }
    if (mono.empty()) {
        out += magnitude.get_str();
        return;
    }
    if (magnitude != 1) {
        if (star) {
            out += magnitude.get_str() + "*";
        } else if (is_integer(magnitude)) {
            out += magnitude.get_str();
        } else {
            out += "(" + magnitude.get_str() + ")";
        }
    }
    out += mono;
}

} // namespace

std::string HodgePoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        append_term(out, first, c, monomial_text(e.u, e.v), true);
        first = false;
    }
    return out;
}

HodgePoly hp_adams(int k, const HodgePoly& a)
{
    if (k < 1) {
        throw PreconditionError("Adams operation needs k >= 1, got " + std::to_string(k));
    }
    HodgePoly r;
    for (const auto& [e, c] : a.terms()) {
        r.add_term(k * e.u, k * e.v, c);
    }
    return r;
}

HodgePoly hp_dual(int d, const HodgePoly& a)
{
    if (d < 0) {
        throw DualityDomainError("duality dimension must be nonnegative");
    }
    HodgePoly r;
    for (const auto& [e, c] : a.terms()) {
        if (e.u > d || e.v > d) {
            throw DualityDomainError("exponent (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                     ") exceeds duality dimension " + std::to_string(d));
        }
        r.add_term(d - e.u, d - e.v, c);
    }
    return r;
}

std::variant<QPoly, OffDiagonal> hp_to_q_poly(const HodgePoly& a)
{
    QPoly q;
    for (const auto& [e, c] : a.terms()) {
        if (e.u != e.v) {
            return OffDiagonal{e.u, e.v};
        }
        q.push_back(QTerm{e.u, c});
    }
    return q;
}

std::vector<BigRational> dense_q_coefficients(const QPoly& q)
{
    std::vector<BigRational> dense;
    if (!q.empty()) {
        dense.resize(static_cast<std::size_t>(q.back().degree) + 1);
        for (const auto& t : q) {
            dense[static_cast<std::size_t>(t.degree)] = t.coeff;
        }
    }
    return dense;
}

std::string render_q_display(const HodgePoly& a)
{
    const auto q = hp_to_q_poly(a);
    if (std::holds_alternative<OffDiagonal>(q)) {
        return a.to_string();
    }
    const auto& terms = std::get<QPoly>(q);
    if (terms.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        append_term(out, first, it->coeff, monomial_text(it->degree, it->degree), false);
        first = false;
    }
    return out;
}

} // namespace modserre
