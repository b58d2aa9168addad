// modserre: command-line front end.
//
// Exit codes: 0 ok, 2 usage, 3 parse error, 4 precondition failure,
// 5 verification failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "modserre/errors.hpp"
#include "modserre/expr.hpp"
#include "modserre/render.hpp"
#include "modserre/schur.hpp"
#include "modserre/table.hpp"
#include "modserre/verify.hpp"

namespace {

using namespace modserre;

enum ExitCode { ok = 0, usage = 2, parse = 3, precondition = 4, verification = 5 };

enum class Format { text, json, latex };

struct CliConfig {
    int genus = -1;
    int points = -1;
    std::string input_path;
    int truncation = 5;
    DeltaMode mode = DeltaMode::graded;
    Format format = Format::text;
    std::string withhold;
    std::string expression;
};

struct Dataset {
    ModuliTable table;
    std::string text;
};

Dataset load_dataset(const CliConfig& cfg)
{
    Dataset d;
    if (cfg.input_path.empty()) {
        d.text = std::string(embedded_dataset_text());
    } else {
        std::ifstream in(cfg.input_path, std::ios::binary);
        if (!in) {
            throw PreconditionError("cannot read dataset '" + cfg.input_path + "'");
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        d.text = ss.str();
    }
    d.table = parse_table(d.text);
    return d;
}

std::optional<Slot> parse_slot_pair(const std::string& text)
{
    if (text.empty()) {
        return std::nullopt;
    }
    const auto comma = text.find(',');
    try {
        if (comma == std::string::npos) {
            throw std::invalid_argument("missing comma");
        }
        std::size_t used = 0;
        const int g = std::stoi(text.substr(0, comma), &used);
        const int n = std::stoi(text.substr(comma + 1), &used);
        return Slot{g, n};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--withhold", "expected g,n, got '" + text + "'");
    }
}

Slot requested_slot(const CliConfig& cfg)
{
    const Slot slot{cfg.genus, cfg.points};
    if (cfg.genus < 0 || cfg.points < 0) {
        throw CLI::RequiredError("--g and --n");
    }
    if (!slot.stable()) {
        throw PreconditionError("slot " + slot.to_string() + " is not stable (need n >= 1 and 2g-2+n > 0)");
    }
    if (slot.lambda() > cfg.truncation) {
        throw PreconditionError("slot " + slot.to_string() + " needs --truncation >= " +
                                std::to_string(slot.lambda()));
    }
    return slot;
}

SymSeries psi_for(const CliConfig& cfg, const ModuliTable& table)
{
    return run_pipeline(table, PipelineConfig{cfg.truncation, cfg.mode, parse_slot_pair(cfg.withhold)});
}

bool report_ok(const SlotReport& r)
{
    return r.duality_ok && std::holds_alternative<QPoly>(r.hodge);
}

int run_compute(const CliConfig& cfg)
{
    const Slot slot = requested_slot(cfg);
    const Dataset data = load_dataset(cfg);
    const SlotReport report = make_slot_report(psi_for(cfg, data.table), slot);
    switch (cfg.format) {
    case Format::json: std::cout << report_json(report).dump(2) << "\n"; break;
    case Format::latex: std::cout << render_report_latex(report) << "\n"; break;
    case Format::text: std::cout << render_report_text(report); break;
    }
    // A withheld entry yields a partial sum, which need not satisfy duality.
    if (cfg.withhold.empty() && !report_ok(report)) {
        std::cerr << "verification failed for slot " << slot.to_string() << "\n";
        return verification;
    }
    return ok;
}

int run_table(const CliConfig& cfg)
{
    const Dataset data = load_dataset(cfg);
    const SymSeries psi = psi_for(cfg, data.table);
    bool all_ok = true;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    if (cfg.format == Format::latex) {
        std::cout << "\\begin{tabular}{|c|l|l|} \\hline\n";
    }
    for (const Slot& slot : stable_slots(cfg.truncation)) {
        const SlotReport report = make_slot_report(psi, slot);
        all_ok = all_ok && report_ok(report);
        switch (cfg.format) {
        case Format::json: arr.push_back(report_json(report)); break;
        case Format::latex: std::cout << render_report_latex(report) << "\n"; break;
        case Format::text:
            std::cout << "M[" << slot.genus << "," << slot.points << "]  lambda=" << slot.lambda()
                      << "  dim=" << slot.dim() << "  rank: " << render_q_display(report.rank)
                      << "  schur: " << render_schur_text(report.equivariant)
                      << "  duality: " << (report.duality_ok ? "ok" : "FAILED") << "\n";
            break;
        }
    }
    if (cfg.format == Format::json) {
        std::cout << arr.dump(2) << "\n";
    } else if (cfg.format == Format::latex) {
        std::cout << "\\hline\n\\end{tabular}\n";
    }
    if (cfg.withhold.empty() && !all_ok) {
        std::cerr << "verification failed for at least one slot\n";
        return verification;
    }
    return ok;
}

int run_verify(const CliConfig& cfg)
{
    const Dataset data = load_dataset(cfg);
    VerifyOptions opts;
    opts.table = data.table;
    opts.table_text = data.text;
    opts.mode = cfg.mode;
    opts.lambda_max = cfg.truncation;
    const auto results = run_acceptance(opts);
    if (cfg.format == Format::json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : results) {
            arr.push_back({{"id", r.id}, {"check", r.name}, {"passed", r.passed}, {"expected", r.expected},
                           {"actual", r.actual}});
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << "\n"
                      << "       expected: " << r.expected << "\n"
                      << "       actual:   " << r.actual << "\n";
        }
        const auto failed = std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; });
        std::cout << (results.size() - static_cast<std::size_t>(failed)) << "/" << results.size()
                  << " checks passed\n";
    }
    return all_passed(results) ? ok : verification;
}

int run_expr(const CliConfig& cfg)
{
    const Expr e = parse_expression(cfg.expression);
    const Truncation trunc(cfg.truncation);
    const SymFunction value = eval_function(e);
    if (cfg.format == Format::json) {
        std::cout << series_json(SymSeries::embed(trunc, value)).dump(2) << "\n";
        return ok;
    }
    std::cout << "parsed: " << to_string(e) << "\n";
    std::cout << "p-basis: " << render_series_text(SymSeries::embed(trunc, value)) << "\n";
    for (int w = value.min_weight(); w <= value.max_weight(); ++w) {
        const SymFunction part = value.homogeneous_part(w);
        if (part.is_zero()) {
            continue;
        }
        const SchurForm form = to_schur(part, w);
        if (cfg.format == Format::latex) {
            std::cout << "weight " << w << ": " << render_schur_latex(form) << "\n";
        } else {
            std::cout << "weight " << w << ": " << render_schur_text(form) << "\n";
        }
    }
    return ok;
}

int run_inputs(const CliConfig& cfg)
{
    const Slot slot{cfg.genus, cfg.points};
    if (cfg.genus < 0 || cfg.points < 0) {
        throw CLI::RequiredError("--g and --n");
    }
    const auto inputs = required_inputs(slot);
    if (cfg.format == Format::json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const Slot& s : inputs) {
            arr.push_back({{"g", s.genus}, {"n", s.points}});
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const Slot& s : inputs) {
            std::cout << "M[" << s.genus << "," << s.points << "]\n";
        }
    }
    return ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Equivariant Hodge polynomials of moduli of stable curves"};
    app.require_subcommand(1);
    CliConfig cfg;

    const std::map<std::string, DeltaMode> modes{{"graded", DeltaMode::graded}, {"literal", DeltaMode::literal}};
    const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"latex", Format::latex}};

    auto common = [&](CLI::App* sub) {
        sub->add_option("--input", cfg.input_path, "Dataset file overriding the embedded one");
        sub->add_option("--truncation", cfg.truncation, "Largest lambda-exponent kept")
            ->check(CLI::Range(0, 12));
        sub->add_option("--delta-mode", cfg.mode, "Gluing-operator grading")
            ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
        sub->add_option("--format", cfg.format, "Output format")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("--withhold", cfg.withhold, "Zero out the table entry g,n");
    };

    auto* compute = app.add_subcommand("compute", "Closed-moduli Serre polynomial of one slot");
    compute->add_option("--g", cfg.genus, "Genus")->required();
    compute->add_option("--n", cfg.points, "Number of marked points")->required();
    common(compute);

    auto* table = app.add_subcommand("table", "All slots with 0 < 2g-2+n <= truncation");
    common(table);

    auto* verify = app.add_subcommand("verify", "Run the acceptance checks");
    common(verify);

    auto* expr = app.add_subcommand("expr", "Evaluate an expression in the table language");
    expr->add_option("expression", cfg.expression, "Expression, e.g. \"q*s[4] - s[2,2]\"")->required();
    expr->add_option("--truncation", cfg.truncation, "Largest lambda-exponent kept")->check(CLI::Range(0, 12));
    expr->add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

    auto* inputs = app.add_subcommand("inputs", "Open-moduli inputs needed for a slot");
    inputs->add_option("--g", cfg.genus, "Genus")->required();
    inputs->add_option("--n", cfg.points, "Number of marked points")->required();
    inputs->add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (*compute) {
            return run_compute(cfg);
        }
        if (*table) {
            return run_table(cfg);
        }
        if (*verify) {
            return run_verify(cfg);
        }
        if (*expr) {
            return run_expr(cfg);
        }
        return run_inputs(cfg);
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const ParseError& e) {
        const std::string source = *expr ? "<expression>"
                                   : cfg.input_path.empty() ? "<embedded dataset>"
                                                            : cfg.input_path;
        std::cerr << source << ": parse error: " << e.what() << "\n";
        return parse;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return precondition;
    }
}
