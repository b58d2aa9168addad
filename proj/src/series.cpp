#include "modserre/series.hpp"

#include "modserre/errors.hpp"
#include "modserre/kernels.hpp"

namespace modserre {

Truncation::Truncation(int lambda_max) : lambda_max_(lambda_max)
{
    if (lambda_max < 0) {
        throw PreconditionError("lambda_max must be nonnegative");
    }
    caps_.resize(static_cast<std::size_t>(lambda_max) + 1);
    for (int e = 1; e <= lambda_max; ++e) {
        caps_[static_cast<std::size_t>(e)] = 3 * e;
    }
    caps_[0] = caps_.back();
}

Truncation::Truncation(int lambda_max, std::vector<int> caps) : lambda_max_(lambda_max)
{
    if (lambda_max < 0) {
        throw PreconditionError("lambda_max must be nonnegative");
    }
    if (caps.size() != static_cast<std::size_t>(lambda_max)) {
        throw PreconditionError("weight caps must be given for e = 1..lambda_max");
    }
    caps_.assign(1, 0);
    for (std::size_t i = 0; i < caps.size(); ++i) {
        if (caps[i] < 0 || (i > 0 && caps[i] < caps[i - 1])) {
            throw PreconditionError("weight caps must be nonnegative and monotone");
        }
        caps_.push_back(caps[i]);
    }
    caps_[0] = caps_.back();
}

int Truncation::weight_cap(int e) const
{
    if (e < 0 || e > lambda_max_) {
        throw PreconditionError("lambda-exponent " + std::to_string(e) + " outside truncation");
    }
    return caps_[static_cast<std::size_t>(e)];
}

bool Truncation::admits(int e, int weight) const noexcept
{
    return e >= 0 && e <= lambda_max_ && weight <= caps_[static_cast<std::size_t>(e)];
}

SymSeries::SymSeries(const Truncation& trunc)
    : trunc_(trunc), layers_(static_cast<std::size_t>(trunc.lambda_max()) + 1)
{
}

SymSeries SymSeries::one(const Truncation& trunc) { return monomial(trunc, 0, Partition{}); }

SymSeries SymSeries::monomial(const Truncation& trunc, int lambda, const Partition& rho, const HodgePoly& coeff)
{
    SymSeries s(trunc);
    s.add_term(lambda, rho, coeff);
    return s;
}

SymSeries SymSeries::embed(const Truncation& trunc, const SymFunction& f, int lambda)
{
    SymSeries s(trunc);
    if (lambda >= 0 && lambda <= trunc.lambda_max()) {
        s.set_layer(lambda, f);
    }
    return s;
}

const SymFunction& SymSeries::layer(int e) const
{
    if (e < 0 || e > lambda_max()) {
        throw PreconditionError("lambda-exponent " + std::to_string(e) + " outside truncation");
    }
    return layers_[static_cast<std::size_t>(e)];
}

void SymSeries::set_layer(int e, SymFunction f)
{
    const int cap = trunc_.weight_cap(e);
    if (f.max_weight() > cap) {
        f = f.truncated(cap);
    }
    layers_[static_cast<std::size_t>(e)] = std::move(f);
}

void SymSeries::add_term(int e, const Partition& rho, const HodgePoly& coeff)
{
    if (trunc_.admits(e, rho.weight())) {
        layers_[static_cast<std::size_t>(e)].add_term(rho, coeff);
    }
}

HodgePoly SymSeries::coeff(int e, const Partition& rho) const
{
    if (e < 0 || e > lambda_max()) {
        return {};
    }
    return layers_[static_cast<std::size_t>(e)].coeff(rho);
}

std::size_t SymSeries::term_count() const noexcept
{
    std::size_t n = 0;
    for (const auto& l : layers_) {
        n += l.size();
    }
    return n;
}

bool SymSeries::is_zero() const noexcept { return term_count() == 0; }

std::vector<SymSeries::Term> SymSeries::terms() const
{
    std::vector<Term> out;
    out.reserve(term_count());
    for (std::size_t e = 0; e < layers_.size(); ++e) {
        for (const auto& [rho, c] : layers_[e].terms()) {
            out.push_back(Term{static_cast<int>(e), rho, c});
        }
    }
    return out;
}

void SymSeries::require_compatible(const SymSeries& other) const
{
    if (!(trunc_ == other.trunc_)) {
        throw PreconditionError("series truncations differ");
    }
}

SymSeries& SymSeries::operator+=(const SymSeries& other)
{
    require_compatible(other);
    for (std::size_t e = 0; e < layers_.size(); ++e) {
        layers_[e] += other.layers_[e];
    }
    return *this;
}

SymSeries& SymSeries::operator-=(const SymSeries& other)
{
    require_compatible(other);
    for (std::size_t e = 0; e < layers_.size(); ++e) {
        layers_[e] -= other.layers_[e];
    }
    return *this;
}

SymSeries& SymSeries::operator*=(const HodgePoly& scalar)
{
    for (auto& l : layers_) {
        l *= scalar;
    }
    return *this;
}

SymSeries& SymSeries::operator*=(const BigRational& scalar)
{
    for (auto& l : layers_) {
        l *= scalar;
    }
    return *this;
}

SymSeries operator*(const SymSeries& a, const SymSeries& b)
{
    a.require_compatible(b);
    SymSeries r(a.trunc_);
    r.layers_ = kernels::multiply_series(a.layers_, b.layers_, a.trunc_, kernels::default_exec());
    return r;
}

SymSeries SymSeries::operator-() const
{
    SymSeries r = *this;
    r *= BigRational(-1);
    return r;
}

SymSeries SymSeries::shifted(int e) const
{
    SymSeries r(trunc_);
    for (int src = 0; src + e <= lambda_max(); ++src) {
        if (src + e >= 0) {
            r.set_layer(src + e, layers_[static_cast<std::size_t>(src)]);
        }
    }
    return r;
}

SymFunction h_function(int n)
{
    if (n < 0) {
        throw PreconditionError("h_n needs n >= 0");
    }
    SymFunction h;
    for (const auto& rho : partitions_of(n)) {
        h.add_term(rho, HodgePoly(ratio(BigInt(1), z_factor(rho))));
    }
    return h;
}

SymSeries basis_p(int n, const Truncation& trunc) { return SymSeries::embed(trunc, SymFunction::power_sum(n)); }

SymSeries basis_h(int n, const Truncation& trunc)
{
    if (n < 1) {
        throw PreconditionError("basis element h_n needs n >= 1");
    }
    return SymSeries::embed(trunc, h_function(n));
}

SymFunction adams_function(int k, const SymFunction& f)
{
    if (k < 1) {
        throw PreconditionError("Adams operation needs k >= 1, got " + std::to_string(k));
    }
    SymFunction r;
    for (const auto& [rho, c] : f.terms()) {
        r.add_term(rho.scaled(k), hp_adams(k, c));
    }
    return r;
}

SymSeries adams_sf(int k, const SymSeries& f)
{
    if (k < 1) {
        throw PreconditionError("Adams operation needs k >= 1, got " + std::to_string(k));
    }
    SymSeries r(f.truncation());
    for (int e = 0; k * e <= f.lambda_max(); ++e) {
        const int cap = f.truncation().weight_cap(k * e);
        SymFunction image;
        for (const auto& [rho, c] : f.layer(e).terms()) {
            if (k * rho.weight() > cap) {
                break;
            }
            image.add_term(rho.scaled(k), hp_adams(k, c));
        }
        r.set_layer(k * e, std::move(image));
    }
    return r;
}

SymFunction partial_p(int k, const SymFunction& f)
{
    if (k < 1) {
        throw PreconditionError("partial derivative index must be >= 1");
    }
    SymFunction r;
    for (const auto& [rho, c] : f.terms()) {
        const int m = rho.multiplicity(k);
        if (m > 0) {
            r.add_term(rho.without(k), c * BigRational(m));
        }
    }
    return r;
}

SymSeries partial_p(int k, const SymSeries& f)
{
    SymSeries r(f.truncation());
    for (int e = 0; e <= f.lambda_max(); ++e) {
        r.set_layer(e, partial_p(k, f.layer(e)));
    }
    return r;
}

SymSeries component(const SymSeries& f, int e, int n)
{
    if (e < 0 || e > f.lambda_max()) {
        throw PreconditionError("component lambda-exponent outside truncation");
    }
    return SymSeries::embed(f.truncation(), f.layer(e).homogeneous_part(n), e);
}

HodgePoly rank_specialize(const SymSeries& f, int e, int n)
{
    if (n < 0) {
        return {};
    }
    const HodgePoly c = f.coeff(e, Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
    return c * BigRational(factorial(n));
}

} // namespace modserre
