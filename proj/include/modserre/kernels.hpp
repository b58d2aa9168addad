#pragma once

// Data-parallel inner loops of the engine. Every kernel has a serial
// reference path and an OpenMP path; both produce identical results because
// all arithmetic is exact and thread-local partial sums are merged in a fixed
// order.

#include <span>
#include <vector>

#include "modserre/series.hpp"

namespace modserre::kernels {

enum class Exec { serial, parallel };

// parallel when the library was built with OpenMP, serial otherwise.
Exec default_exec() noexcept;
void set_default_exec(Exec exec) noexcept;
int max_threads() noexcept;

// Layered series product: layer e of the result keeps weights up to
// trunc.weight_cap(e).
std::vector<SymFunction> multiply_series(std::span<const SymFunction> a, std::span<const SymFunction> b,
                                         const Truncation& trunc, Exec exec);

// Coefficient of s_mu in a homogeneous f, for each mu in shapes; computed as
// sum_rho chi^mu(rho) c_rho.
std::vector<HodgePoly> schur_coefficients(const SymFunction& f, std::span<const Partition> shapes, Exec exec);

// Jacobi-Trudi expansions of a batch of shapes.
std::vector<SymFunction> schur_expansions(std::span<const Partition> shapes, Exec exec);

// Applies a term-local linear map to every term of every layer and sums the
// images; `map(lambda, rho, coeff, out)` adds its image into `out`.
template <typename TermMap>
std::vector<SymFunction> map_terms(std::span<const SymFunction> layers, std::size_t out_layers, Exec exec,
                                   TermMap&& map);

} // namespace modserre::kernels

#include "modserre/kernels_impl.hpp"
