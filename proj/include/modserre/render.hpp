#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "modserre/pipeline.hpp"

namespace modserre {

// "s[2,2] * (q + 1) + s[4] * (1)"-style Schur listing with display-form coefficients.
std::string render_schur_text(const SchurForm& form);

// LaTeX in the usual table style, "(q + 1)s_{4} + q^{2}s_{31^2}": descending
// q-powers in front of each Schur function, repeated parts as exponents.
std::string latex_partition(const Partition& mu);
std::string latex_q_poly(const HodgePoly& p);
std::string render_schur_latex(const SchurForm& form);

std::string render_report_text(const SlotReport& report);
std::string render_report_latex(const SlotReport& report);
nlohmann::ordered_json report_json(const SlotReport& report);

// JSON value for an exact rational: an integer when it is one and fits in
// 64 bits, otherwise the canonical "a/b" string.
nlohmann::ordered_json rational_json(const BigRational& r);

// {"u^i v^j": "rational"} in canonical term order.
nlohmann::ordered_json hodge_json(const HodgePoly& p);

// [{"lambda": e, "p": [parts], "coeff": {...}}, ...] in canonical order.
nlohmann::ordered_json series_json(const SymSeries& s);

// "lambda^e * (c) * p[rho]" lines joined by " + ".
std::string render_series_text(const SymSeries& s);

} // namespace modserre
