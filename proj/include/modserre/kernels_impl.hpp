#pragma once

#include <tuple>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace modserre::kernels {

namespace detail {

struct TermRef {
    int lambda;
    const Partition* rho;
    const HodgePoly* coeff;
};

std::vector<TermRef> flatten(std::span<const SymFunction> layers);

void merge_into(std::vector<SymFunction>& total, std::vector<std::vector<SymFunction>>& partials);

} // namespace detail

template <typename TermMap>
std::vector<SymFunction> map_terms(std::span<const SymFunction> layers, std::size_t out_layers, Exec exec,
                                   TermMap&& map)
{
    const auto refs = detail::flatten(layers);
    std::vector<SymFunction> total(out_layers);
#if defined(_OPENMP)
    const auto count = static_cast<std::ptrdiff_t>(refs.size());
    if (exec == Exec::parallel && count > 1) {
        std::vector<std::vector<SymFunction>> partials(static_cast<std::size_t>(omp_get_max_threads()),
                                                      std::vector<SymFunction>(out_layers));
#pragma omp parallel
        {
            auto& mine = partials[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 8)
            for (std::ptrdiff_t i = 0; i < count; ++i) {
                const auto& t = refs[static_cast<std::size_t>(i)];
                map(t.lambda, *t.rho, *t.coeff, mine);
            }
        }
        detail::merge_into(total, partials);
        return total;
    }
#endif
    std::ignore = exec;
    for (const auto& t : refs) {
        map(t.lambda, *t.rho, *t.coeff, total);
    }
    return total;
}

} // namespace modserre::kernels
