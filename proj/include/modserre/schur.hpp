#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "modserre/series.hpp"

namespace modserre {

// A degree-n symmetric function written in the Schur basis.
using SchurForm = std::vector<std::pair<Partition, HodgePoly>>;

// Irreducible character chi^mu evaluated on cycle type rho
// (Murnaghan-Nakayama). Throws PreconditionError if |mu| != |rho|.
std::int64_t character(const Partition& mu, const Partition& rho);

// s_mu in the power-sum basis by the Jacobi-Trudi determinant det(h_{mu_i+j-i}).
SymFunction schur_function(const Partition& mu);

// s_mu = sum_rho chi^mu(rho) p_rho / z_rho. Limited to |mu| <= 12.
SymFunction schur_function_mn(const Partition& mu);
inline constexpr int schur_mn_max_weight = 12;

SymSeries schur_to_p(const Partition& mu, const Truncation& trunc);
SymSeries schur_to_p_mn(const Partition& mu, const Truncation& trunc);

// Schur expansion of the weight-n part of f; zero coefficients omitted,
// shapes in partition order ([n] first).
SchurForm to_schur(const SymFunction& f, int n);
SchurForm to_schur(const SymSeries& f, int e, int n);

// Inverse of to_schur.
SymFunction from_schur(const SchurForm& form);

// Forgets the symmetric-group action: sum of dim(mu) * coefficient.
HodgePoly schur_rank(const SchurForm& form);

} // namespace modserre
