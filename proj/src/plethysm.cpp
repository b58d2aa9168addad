#include "modserre/plethysm.hpp"

#include <algorithm>

#include "modserre/errors.hpp"
#include "modserre/kernels.hpp"

namespace modserre {

const char* to_string(DeltaMode mode) noexcept { return mode == DeltaMode::graded ? "graded" : "literal"; }

namespace {

// exp of a layer-0 element with zero constant term; nilpotent under the cap.
SymFunction layer_exp(const SymFunction& a, int cap)
{
    SymFunction total(HodgePoly(1));
    SymFunction power(HodgePoly(1));
    for (int m = 1; !a.is_zero(); ++m) {
        power = multiply_capped(power, a, cap) * ratio(1, m);
        if (power.is_zero()) {
            break;
        }
        total += power;
    }
    return total;
}

// log(1 + n) for a layer-0 element n with zero constant term.
SymFunction layer_log1p(const SymFunction& n, int cap)
{
    SymFunction total;
    SymFunction power(HodgePoly(1));
    for (int m = 1; !n.is_zero(); ++m) {
        power = multiply_capped(power, n, cap);
        if (power.is_zero()) {
            break;
        }
        total.add_scaled(power, HodgePoly(ratio(m % 2 == 1 ? 1 : -1, m)));
    }
    return total;
}

// 1 / (1 + n) for a layer-0 element n with zero constant term.
SymFunction layer_inverse1p(const SymFunction& n, int cap)
{
    SymFunction total(HodgePoly(1));
    SymFunction power(HodgePoly(1));
    for (int m = 1; !n.is_zero(); ++m) {
        power = -multiply_capped(power, n, cap);
        if (power.is_zero()) {
            break;
        }
        total += power;
    }
    return total;
}

SymFunction layer_product(const SymFunction& a, const SymFunction& b, int cap)
{
    return multiply_capped(a, b, cap);
}

} // namespace

// Both routines use the lambda-derivative identity G' = A' G for G = exp(A):
//   e G_e = sum_{j=1}^{e} j A_j G_{e-j},
// solved forwards for G (exp) or for A (log).
SymSeries ordinary_exp(const SymSeries& a)
{
    if (!a.constant_term().is_zero()) {
        throw PreconditionError("exp needs a series with zero constant term");
    }
    const Truncation& trunc = a.truncation();
    SymSeries g(trunc);
    g.set_layer(0, layer_exp(a.layer(0), trunc.weight_cap(0)));
    for (int e = 1; e <= trunc.lambda_max(); ++e) {
        const int cap = trunc.weight_cap(e);
        SymFunction acc;
        for (int j = 1; j <= e; ++j) {
            if (a.layer(j).is_zero()) {
                continue;
            }
            acc.add_scaled(layer_product(a.layer(j), g.layer(e - j), cap), HodgePoly(BigRational(j)));
        }
        g.set_layer(e, acc * ratio(1, e));
    }
    return g;
}

SymSeries ordinary_log(const SymSeries& g)
{
    if (!(g.constant_term() == HodgePoly(1))) {
        throw PreconditionError("log needs a series with constant term 1");
    }
    const Truncation& trunc = g.truncation();
    SymSeries a(trunc);
    SymFunction nilpotent0 = g.layer(0) - SymFunction(HodgePoly(1));
    a.set_layer(0, layer_log1p(nilpotent0, trunc.weight_cap(0)));
    const bool unit_base = nilpotent0.is_zero();
    for (int e = 1; e <= trunc.lambda_max(); ++e) {
        const int cap = trunc.weight_cap(e);
        SymFunction acc = g.layer(e) * BigRational(e);
        for (int j = 1; j < e; ++j) {
            if (a.layer(j).is_zero()) {
                continue;
            }
            acc.add_scaled(layer_product(a.layer(j), g.layer(e - j), cap), HodgePoly(BigRational(-j)));
        }
        acc *= ratio(1, e);
        if (!unit_base) {
            acc = layer_product(layer_inverse1p(nilpotent0, cap), acc, cap);
        }
        a.set_layer(e, std::move(acc));
    }
    return a;
}

namespace {

// Largest k for which psi_k can leave anything inside the truncation.
int adams_bound(const SymSeries& f)
{
    const Truncation& t = f.truncation();
    return std::max(t.lambda_max(), t.weight_cap(0));
}

} // namespace

SymSeries exp_pleth(const SymSeries& f)
{
    if (!f.constant_term().is_zero()) {
        throw PreconditionError("Exp needs a series with zero constant term");
    }
    SymSeries sum(f.truncation());
    for (int k = 1; k <= adams_bound(f); ++k) {
        sum += adams_sf(k, f) * ratio(1, k);
    }
    return ordinary_exp(sum);
}

SymSeries log_pleth(const SymSeries& g)
{
    if (!(g.constant_term() == HodgePoly(1))) {
        throw PreconditionError("Log needs a series with constant term exactly 1");
    }
    const SymSeries l = ordinary_log(g);
    SymSeries out(g.truncation());
    for (int k = 1; k <= adams_bound(g); ++k) {
        const int mu = mobius(k);
        if (mu != 0) {
            out += adams_sf(k, l) * ratio(mu, k);
        }
    }
    return out;
}

SymSeries delta_apply(const SymSeries& f, DeltaMode mode)
{
    const Truncation& trunc = f.truncation();
    const int lmax = trunc.lambda_max();
    auto layers = kernels::map_terms(
        f.layers(), static_cast<std::size_t>(lmax) + 1, kernels::default_exec(),
        [&](int e, const Partition& rho, const HodgePoly& c, std::vector<SymFunction>& out) {
            auto emit = [&](int k, const Partition& image, const BigRational& factor) {
                const int target = mode == DeltaMode::literal ? e + 2 * k : e;
                if (trunc.admits(target, image.weight())) {
                    out[static_cast<std::size_t>(target)].add_term(image, c * factor);
                }
            };
            const auto parts = rho.parts();
            for (std::size_t i = 0; i < parts.size();) {
                const int part = parts[i];
                std::size_t j = i;
                while (j < parts.size() && parts[j] == part) {
                    ++j;
                }
                const int m = static_cast<int>(j - i);
                // (k/2) d^2/dp_k^2 with k = part.
                if (m >= 2) {
                    emit(part, rho.without(part, 2), ratio(part * m * (m - 1), 2));
                }
                // d/dp_{2k} with 2k = part.
                if (part % 2 == 0) {
                    emit(part / 2, rho.without(part), BigRational(m));
                }
                i = j;
            }
        });
    SymSeries r(trunc);
    for (int e = 0; e <= lmax; ++e) {
        r.set_layer(e, std::move(layers[static_cast<std::size_t>(e)]));
    }
    return r;
}

SymSeries exp_delta(const SymSeries& f, DeltaMode mode, const BigRational& t)
{
    SymSeries total = f;
    SymSeries term = f;
    for (int m = 1;; ++m) {
        term = delta_apply(term, mode) * (t / m);
        if (term.is_zero()) {
            break;
        }
        total += term;
    }
    return total;
}

} // namespace modserre
