#include "modserre/render.hpp"

#include <algorithm>
#include <limits>

namespace modserre {

std::string render_schur_text(const SchurForm& form)
{
    if (form.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < form.size(); ++i) {
        if (i > 0) {
            out += " + ";
        }
        out += "s" + form[i].first.to_string() + " * (" + render_q_display(form[i].second) + ")";
    }
    return out;
}

std::string latex_partition(const Partition& mu)
{
    const auto parts = mu.parts();
    const bool wide = mu.largest() >= 10;
    std::string out;
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) {
            ++j;
        }
        if (wide && i > 0) {
            out += ",";
        }
        out += std::to_string(parts[i]);
        if (j - i > 1) {
            out += "^" + std::to_string(j - i);
        }
        i = j;
    }
    return out;
}

std::string latex_q_poly(const HodgePoly& p)
{
    const auto q = hp_to_q_poly(p);
    if (std::holds_alternative<OffDiagonal>(q)) {
        std::string out;
        bool first = true;
        for (const auto& [e, c] : p.terms()) {
            if (!first) {
                out += c < 0 ? " - " : " + ";
            } else if (c < 0) {
                out += "-";
            }
            first = false;
            const BigRational mag = c < 0 ? BigRational(-c) : c;
            if (mag != 1 || (e.u == 0 && e.v == 0)) {
                out += is_integer(mag) ? mag.get_str() : "\\frac{" + mag.get_num().get_str() + "}{" +
                                                              mag.get_den().get_str() + "}";
            }
            if (e.u > 0) {
                out += "u^{" + std::to_string(e.u) + "}";
            }
            if (e.v > 0) {
                out += "v^{" + std::to_string(e.v) + "}";
            }
        }
        return out;
    }
    const auto& terms = std::get<QPoly>(q);
    if (terms.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const BigRational& c = it->coeff;
        if (!first) {
            out += c < 0 ? " - " : " + ";
        } else if (c < 0) {
            out += "-";
        }
        first = false;
        const BigRational mag = c < 0 ? BigRational(-c) : c;
        if (mag != 1 || it->degree == 0) {
            out += is_integer(mag)
                       ? mag.get_str()
                       : "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
        }
        if (it->degree == 1) {
            out += "q";
        } else if (it->degree > 1) {
            out += "q^{" + std::to_string(it->degree) + "}";
        }
    }
    return out;
}

std::string render_schur_latex(const SchurForm& form)
{
    if (form.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < form.size(); ++i) {
        HodgePoly c = form[i].second;
        // An all-negative coefficient is written with a leading minus sign.
        const bool negative =
            std::all_of(c.terms().begin(), c.terms().end(), [](const auto& t) { return t.second < 0; });
        if (negative) {
            c = -c;
        }
        if (i > 0) {
            out += negative ? " - " : " + ";
        } else if (negative) {
            out += "-";
        }
        const std::string atom = "s_{" + latex_partition(form[i].first) + "}";
        if (c == HodgePoly(1)) {
            out += atom;
        } else if (c.size() == 1) {
            out += latex_q_poly(c) + atom;
        } else {
            out += "(" + latex_q_poly(c) + ")" + atom;
        }
    }
    return out;
}

std::string render_report_text(const SlotReport& report)
{
    const Slot& s = report.slot;
    std::string out = "slot M[" + std::to_string(s.genus) + "," + std::to_string(s.points) +
                      "] closed  lambda=" + std::to_string(s.lambda()) + "  dim=" + std::to_string(s.dim()) + "\n";
    out += "schur: " + render_schur_text(report.equivariant) + "\n";
    out += "rank: " + render_q_display(report.rank) + "\n";
    if (const auto* q = std::get_if<QPoly>(&report.hodge)) {
        out += "hodge:";
        const auto dense = dense_q_coefficients(*q);
        for (std::size_t k = 0; k < dense.size(); ++k) {
            out += " h^{" + std::to_string(k) + "," + std::to_string(k) + "}=" + dense[k].get_str();
        }
        out += "\n";
    } else {
        const auto& off = std::get<OffDiagonal>(report.hodge);
        out += "hodge: off-diagonal term at (" + std::to_string(off.u) + "," + std::to_string(off.v) + ")\n";
    }
    out += std::string("duality: ") + (report.duality_ok ? "ok" : "FAILED") + "\n";
    return out;
}

std::string render_report_latex(const SlotReport& report)
{
    const Slot& s = report.slot;
    return "\\overline{\\mathcal{M}}_{" + std::to_string(s.genus) + "," + std::to_string(s.points) + "} & " +
           render_schur_latex(report.equivariant) + " & " + latex_q_poly(report.rank) + " \\\\";
}

nlohmann::ordered_json rational_json(const BigRational& r)
{
    if (is_integer(r) && r.get_num().fits_slong_p()) {
        return static_cast<std::int64_t>(r.get_num().get_si());
    }
    return r.get_str();
}

nlohmann::ordered_json hodge_json(const HodgePoly& p)
{
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (const auto& [e, c] : p.terms()) {
        obj["u^" + std::to_string(e.u) + " v^" + std::to_string(e.v)] = c.get_str();
    }
    return obj;
}

namespace {

nlohmann::ordered_json q_list(const HodgePoly& p, bool& diagonal)
{
    const auto q = hp_to_q_poly(p);
    if (std::holds_alternative<OffDiagonal>(q)) {
        diagonal = false;
        return nullptr;
    }
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : dense_q_coefficients(std::get<QPoly>(q))) {
        arr.push_back(rational_json(c));
    }
    return arr;
}

} // namespace

nlohmann::ordered_json report_json(const SlotReport& report)
{
    const Slot& s = report.slot;
    nlohmann::ordered_json j;
    j["g"] = s.genus;
    j["n"] = s.points;
    j["lambda"] = s.lambda();
    j["dim"] = s.dim();
    bool diagonal = true;
    nlohmann::ordered_json schur = nlohmann::ordered_json::array();
    for (const auto& [mu, c] : report.equivariant) {
        nlohmann::ordered_json entry;
        entry["partition"] = mu.part_vector();
        bool entry_diagonal = true;
        entry["coeff_q"] = q_list(c, entry_diagonal);
        if (!entry_diagonal) {
            entry["coeff"] = hodge_json(c);
            diagonal = false;
        }
        schur.push_back(std::move(entry));
    }
    j["schur"] = std::move(schur);
    bool rank_diagonal = true;
    j["rank_q"] = q_list(report.rank, rank_diagonal);
    if (!rank_diagonal) {
        j["rank"] = hodge_json(report.rank);
    }
    j["hodge_diagonal"] = diagonal && rank_diagonal;
    j["duality"] = report.duality_ok;
    return j;
}

nlohmann::ordered_json series_json(const SymSeries& s)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& t : s.terms()) {
        nlohmann::ordered_json entry;
        entry["lambda"] = t.lambda;
        entry["p"] = t.rho.part_vector();
        entry["coeff"] = hodge_json(t.coeff);
        arr.push_back(std::move(entry));
    }
    return arr;
}

std::string render_series_text(const SymSeries& s)
{
    const auto terms = s.terms();
    if (terms.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i > 0) {
            out += " + ";
        }
        out += "λ^" + std::to_string(terms[i].lambda) + " * (" + terms[i].coeff.to_string() + ") * p" +
               terms[i].rho.to_string();
    }
    return out;
}

} // namespace modserre
