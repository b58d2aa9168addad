#include "modserre/schur.hpp"

#include <algorithm>
#include <bit>

#include "modserre/errors.hpp"
#include "modserre/kernels.hpp"

namespace modserre {

namespace {

// Beta-set form of a partition with l parts: beta_i = mu_i + (l - 1 - i),
// kept sorted descending. Removing a border strip of length r is moving a
// bead from b to b - r onto an empty position; its height is the number of
// beads jumped over.
std::int64_t mn_recurse(const std::vector<int>& beta, std::span<const int> cycles)
{
    if (cycles.empty()) {
        return 1;
    }
    const int r = cycles.front();
    std::int64_t total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int from = beta[i];
        const int to = from - r;
        if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) {
            continue;
        }
        int jumped = 0;
        for (int b : beta) {
            if (b > to && b < from) {
                ++jumped;
            }
        }
        std::vector<int> next = beta;
        next[i] = to;
        std::sort(next.begin(), next.end(), std::greater<>{});
        const std::int64_t sub = mn_recurse(next, cycles.subspan(1));
        total += (jumped % 2 == 0) ? sub : -sub;
    }
    return total;
}

} // namespace

std::int64_t character(const Partition& mu, const Partition& rho)
{
    if (mu.weight() != rho.weight()) {
        throw PreconditionError("character needs |mu| = |rho|, got " + mu.to_string() + " and " +
                                rho.to_string());
    }
    std::vector<int> beta;
    const auto l = static_cast<int>(mu.length());
    for (int i = 0; i < l; ++i) {
        beta.push_back(mu.parts()[static_cast<std::size_t>(i)] + (l - 1 - i));
    }
    return mn_recurse(beta, rho.parts());
}

SymFunction schur_function(const Partition& mu)
{
    const auto l = static_cast<int>(mu.length());
    if (l == 0) {
        return SymFunction(HodgePoly(1));
    }
    // Entry (row, col) of the Jacobi-Trudi matrix is h_{mu_row + col - row}.
    std::vector<SymFunction> h(static_cast<std::size_t>(mu.largest() + l));
    for (std::size_t k = 0; k < h.size(); ++k) {
        h[k] = h_function(static_cast<int>(k));
    }
    auto entry = [&](int row, int col) -> const SymFunction* {
        const int k = mu.parts()[static_cast<std::size_t>(row)] + col - row;
        return k < 0 ? nullptr : &h[static_cast<std::size_t>(k)];
    };
    // minors[mask] = determinant of the first popcount(mask) rows restricted
    // to the columns in mask, built by expansion along the last row.
    const std::size_t full = (std::size_t{1} << l) - 1;
    std::vector<SymFunction> minors(full + 1);
    minors[0] = SymFunction(HodgePoly(1));
    for (std::size_t mask = 1; mask <= full; ++mask) {
        const int row = std::popcount(mask) - 1;
        SymFunction det;
        int later_columns = 0;
        for (int col = l - 1; col >= 0; --col) {
            const std::size_t bit = std::size_t{1} << col;
            if (!(mask & bit)) {
                continue;
            }
            const SymFunction* e = entry(row, col);
            const SymFunction& minor = minors[mask ^ bit];
            if (e != nullptr && !minor.is_zero()) {
                SymFunction prod = (*e) * minor;
                if (later_columns % 2 == 1) {
                    det -= prod;
                } else {
                    det += prod;
                }
            }
            ++later_columns;
        }
        minors[mask] = std::move(det);
    }
    return minors[full];
}

SymFunction schur_function_mn(const Partition& mu)
{
    if (mu.weight() > schur_mn_max_weight) {
        throw PreconditionError("Murnaghan-Nakayama expansion limited to weight " +
                                std::to_string(schur_mn_max_weight));
    }
    SymFunction s;
    for (const auto& rho : partitions_of(mu.weight())) {
        const std::int64_t chi = character(mu, rho);
        if (chi != 0) {
            s.add_term(rho, HodgePoly(ratio(BigInt(static_cast<long>(chi)), z_factor(rho))));
        }
    }
    return s;
}

SymSeries schur_to_p(const Partition& mu, const Truncation& trunc)
{
    return SymSeries::embed(trunc, schur_function(mu));
}

SymSeries schur_to_p_mn(const Partition& mu, const Truncation& trunc)
{
    return SymSeries::embed(trunc, schur_function_mn(mu));
}

SchurForm to_schur(const SymFunction& f, int n)
{
    const auto shapes = partitions_of(n);
    const auto coeffs = kernels::schur_coefficients(f.homogeneous_part(n), shapes, kernels::default_exec());
    SchurForm out;
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        if (!coeffs[i].is_zero()) {
            out.emplace_back(shapes[i], coeffs[i]);
        }
    }
    return out;
}

SchurForm to_schur(const SymSeries& f, int e, int n)
{
    if (e < 0 || e > f.lambda_max()) {
        return {};
    }
    return to_schur(f.layer(e), n);
}

SymFunction from_schur(const SchurForm& form)
{
    SymFunction f;
    for (const auto& [mu, c] : form) {
        f.add_scaled(schur_function(mu), c);
    }
    return f;
}

HodgePoly schur_rank(const SchurForm& form)
{
    HodgePoly r;
    for (const auto& [mu, c] : form) {
        r += c * BigRational(hook_length_count(mu));
    }
    return r;
}

} // namespace modserre
