#include "modserre/symfunction.hpp"

#include "modserre/errors.hpp"

namespace modserre {

SymFunction::SymFunction(const HodgePoly& constant)
{
    if (!constant.is_zero()) {
        terms_.emplace(Partition{}, constant);
    }
}

SymFunction SymFunction::monomial(const Partition& rho, const HodgePoly& coeff)
{
    SymFunction f;
    f.add_term(rho, coeff);
    return f;
}

SymFunction SymFunction::power_sum(int n)
{
    if (n < 1) {
        throw PreconditionError("power sum p_n needs n >= 1");
    }
    return monomial(Partition{n});
}

HodgePoly SymFunction::coeff(const Partition& rho) const
{
    const auto it = terms_.find(rho);
    return it == terms_.end() ? HodgePoly{} : it->second;
}

void SymFunction::add_term(const Partition& rho, const HodgePoly& coeff)
{
    if (coeff.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(rho, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

void SymFunction::add_scaled(const SymFunction& other, const HodgePoly& factor)
{
    if (factor.is_zero()) {
        return;
    }
    for (const auto& [rho, c] : other.terms_) {
        add_term(rho, c * factor);
    }
}

int SymFunction::max_weight() const noexcept
{
    // Keys are ordered by weight first.
    return terms_.empty() ? 0 : terms_.rbegin()->first.weight();
}

int SymFunction::min_weight() const noexcept { return terms_.empty() ? 0 : terms_.begin()->first.weight(); }

bool SymFunction::is_homogeneous(int n) const noexcept
{
    return terms_.empty() || (min_weight() == n && max_weight() == n);
}

SymFunction SymFunction::truncated(int max_weight) const
{
    SymFunction r;
    for (const auto& [rho, c] : terms_) {
        if (rho.weight() > max_weight) {
            break;
        }
        r.terms_.emplace_hint(r.terms_.end(), rho, c);
    }
    return r;
}

SymFunction SymFunction::homogeneous_part(int n) const
{
    SymFunction r;
    for (const auto& [rho, c] : terms_) {
        if (rho.weight() == n) {
            r.terms_.emplace_hint(r.terms_.end(), rho, c);
        }
    }
    return r;
}

SymFunction& SymFunction::operator+=(const SymFunction& other)
{
    for (const auto& [rho, c] : other.terms_) {
        add_term(rho, c);
    }
    return *this;
}

SymFunction& SymFunction::operator-=(const SymFunction& other)
{
    for (const auto& [rho, c] : other.terms_) {
        add_term(rho, -c);
    }
    return *this;
}

SymFunction& SymFunction::operator*=(const HodgePoly& scalar)
{
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    TermMap next;
    for (const auto& [rho, c] : terms_) {
        HodgePoly prod = c * scalar;
        if (!prod.is_zero()) {
            next.emplace_hint(next.end(), rho, std::move(prod));
        }
    }
    terms_ = std::move(next);
    return *this;
}

SymFunction& SymFunction::operator*=(const BigRational& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [rho, c] : terms_) {
        c *= scalar;
    }
    return *this;
}

SymFunction SymFunction::operator-() const
{
    SymFunction r = *this;
    r *= BigRational(-1);
    return r;
}

SymFunction multiply_capped(const SymFunction& a, const SymFunction& b, int max_weight)
{
    SymFunction r;
    for (const auto& [ra, ca] : a.terms()) {
        if (ra.weight() > max_weight) {
            break;
        }
        for (const auto& [rb, cb] : b.terms()) {
            if (ra.weight() + rb.weight() > max_weight) {
                break;
            }
            r.add_term(ra.merged(rb), ca * cb);
        }
    }
    return r;
}

SymFunction operator*(const SymFunction& a, const SymFunction& b)
{
    return multiply_capped(a, b, SymFunction::unbounded);
}

} // namespace modserre
