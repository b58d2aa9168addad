#include "modserre/kernels.hpp"

#include <atomic>

#include "modserre/schur.hpp"

namespace modserre::kernels {

namespace {

#if defined(_OPENMP)
std::atomic<Exec> global_exec{Exec::parallel};
#else
std::atomic<Exec> global_exec{Exec::serial};
#endif

} // namespace

Exec default_exec() noexcept { return global_exec.load(std::memory_order_relaxed); }

void set_default_exec(Exec exec) noexcept { global_exec.store(exec, std::memory_order_relaxed); }

int max_threads() noexcept
{
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace detail {

std::vector<TermRef> flatten(std::span<const SymFunction> layers)
{
    std::vector<TermRef> refs;
    for (std::size_t e = 0; e < layers.size(); ++e) {
        for (const auto& [rho, c] : layers[e].terms()) {
            refs.push_back(TermRef{static_cast<int>(e), &rho, &c});
        }
    }
    return refs;
}

void merge_into(std::vector<SymFunction>& total, std::vector<std::vector<SymFunction>>& partials)
{
    for (auto& part : partials) {
        for (std::size_t e = 0; e < total.size(); ++e) {
            if (total[e].is_zero()) {
                total[e] = std::move(part[e]);
            } else {
                total[e] += part[e];
            }
        }
    }
}

} // namespace detail

std::vector<SymFunction> multiply_series(std::span<const SymFunction> a, std::span<const SymFunction> b,
                                         const Truncation& trunc, Exec exec)
{
    const int lmax = trunc.lambda_max();
    return map_terms(a, static_cast<std::size_t>(lmax) + 1, exec,
                     [&](int ea, const Partition& ra, const HodgePoly& ca, std::vector<SymFunction>& out) {
                         for (int eb = 0; ea + eb <= lmax && static_cast<std::size_t>(eb) < b.size(); ++eb) {
                             const int cap = trunc.weight_cap(ea + eb);
                             auto& target = out[static_cast<std::size_t>(ea + eb)];
                             for (const auto& [rb, cb] : b[static_cast<std::size_t>(eb)].terms()) {
                                 if (ra.weight() + rb.weight() > cap) {
                                     break;
                                 }
                                 target.add_term(ra.merged(rb), ca * cb);
                             }
                         }
                     });
}

std::vector<HodgePoly> schur_coefficients(const SymFunction& f, std::span<const Partition> shapes, Exec exec)
{
    std::vector<HodgePoly> out(shapes.size());
    const auto count = static_cast<std::ptrdiff_t>(shapes.size());
    auto one = [&](std::ptrdiff_t i) {
        const Partition& mu = shapes[static_cast<std::size_t>(i)];
        HodgePoly acc;
        for (const auto& [rho, c] : f.terms()) {
            if (rho.weight() != mu.weight()) {
                continue;
            }
            const auto chi = character(mu, rho);
            if (chi != 0) {
                acc += c * BigRational(static_cast<long>(chi));
            }
        }
        out[static_cast<std::size_t>(i)] = std::move(acc);
    };
#if defined(_OPENMP)
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            one(i);
        }
        return out;
    }
#endif
    std::ignore = exec;
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        one(i);
    }
    return out;
}

std::vector<SymFunction> schur_expansions(std::span<const Partition> shapes, Exec exec)
{
    std::vector<SymFunction> out(shapes.size());
    const auto count = static_cast<std::ptrdiff_t>(shapes.size());
#if defined(_OPENMP)
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            out[static_cast<std::size_t>(i)] = schur_function(shapes[static_cast<std::size_t>(i)]);
        }
        return out;
    }
#endif
    std::ignore = exec;
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        out[static_cast<std::size_t>(i)] = schur_function(shapes[static_cast<std::size_t>(i)]);
    }
    return out;
}

} // namespace modserre::kernels
