#include "modserre/verify.hpp"

#include <algorithm>

#include "modserre/errors.hpp"
#include "modserre/render.hpp"
#include "modserre/table.hpp"

namespace modserre {

namespace reference {

HodgePoly q_poly(std::initializer_list<long> ascending)
{
    HodgePoly p;
    int k = 0;
    for (long c : ascending) {
        p += HodgePoly::q_power(k++, BigRational(c));
    }
    return p;
}

HodgePoly headline_rank() { return q_poly({1, 5, 16, 29, 29, 16, 5, 1}); }

HodgePoly boundary_rank() { return q_poly({0, 4, 16, 29, 29, 15, 3}); }

} // namespace reference

namespace {

CheckResult make(std::string id, std::string name, bool passed, std::string expected, std::string actual)
{
    return CheckResult{std::move(id), std::move(name), passed, std::move(expected), std::move(actual)};
}

std::string slot_name(const Slot& s)
{
    return "M[" + std::to_string(s.genus) + "," + std::to_string(s.points) + "]";
}

// Rank and Schur form of a slot, or an error string when the slot is out of range.
struct SlotValue {
    HodgePoly rank;
    SchurForm form;
    std::string error;
};

SlotValue read_slot(const SymSeries& psi, const Slot& slot)
{
    SlotValue v;
    try {
        v.form = serre_closed(psi, slot);
        v.rank = rank_specialize(psi, slot.lambda(), slot.points);
    } catch (const PreconditionError& e) {
        v.error = e.what();
    }
    return v;
}

CheckResult rank_check(const std::string& id, const SymSeries& psi, const Slot& slot, const HodgePoly& expected)
{
    const SlotValue v = read_slot(psi, slot);
    const std::string actual = v.error.empty() ? render_q_display(v.rank) : v.error;
    return make(id, "rank of closed " + slot_name(slot), v.error.empty() && v.rank == expected,
                render_q_display(expected), actual);
}

CheckResult schur_check(const std::string& id, const SymSeries& psi, const Slot& slot, const SchurForm& expected)
{
    const SlotValue v = read_slot(psi, slot);
    const std::string actual = v.error.empty() ? render_schur_text(v.form) : v.error;
    return make(id, "Schur form of closed " + slot_name(slot), v.error.empty() && v.form == expected,
                render_schur_text(expected), actual);
}

} // namespace

std::vector<CheckResult> check_headline(const VerifyOptions&, const SymSeries& psi)
{
    const Slot slot{3, 1};
    return {rank_check("A1", psi, slot, reference::headline_rank()),
            schur_check("A1", psi, slot, SchurForm{{Partition{1}, reference::headline_rank()}})};
}

std::vector<CheckResult> check_boundary_correction(const VerifyOptions& opts)
{
    const Slot slot{3, 1};
    PipelineConfig cfg{opts.lambda_max, opts.mode, slot};
    const SymSeries psi = run_pipeline(opts.table, cfg);
    auto r = rank_check("A2", psi, slot, reference::boundary_rank());
    r.name += " with the M[3,1] entry withheld";
    return {r};
}

std::vector<CheckResult> check_small_slots(const SymSeries& psi)
{
    using reference::q_poly;
    return {rank_check("A3", psi, {1, 1}, q_poly({1, 1})), rank_check("A3", psi, {0, 4}, q_poly({1, 1})),
            schur_check("A3", psi, {0, 4}, SchurForm{{Partition{4}, q_poly({1, 1})}}),
            rank_check("A3", psi, {0, 5}, q_poly({1, 5, 1})),
            rank_check("A3", psi, {0, 6}, q_poly({1, 16, 16, 1}))};
}

std::vector<CheckResult> check_functional_equation(const SymSeries& psi)
{
    std::vector<CheckResult> out;
    for (const Slot& slot : stable_slots(std::min(5, psi.lambda_max()))) {
        const SlotValue v = read_slot(psi, slot);
        std::string problem;
        if (!v.error.empty()) {
            problem = v.error;
        }
        for (const auto& [mu, c] : v.form) {
            if (!problem.empty()) {
                break;
            }
            const auto q = hp_to_q_poly(c);
            if (const auto* off = std::get_if<OffDiagonal>(&q)) {
                problem = "s" + mu.to_string() + " has off-diagonal term u^" + std::to_string(off->u) + "v^" +
                          std::to_string(off->v);
                break;
            }
            for (const auto& t : std::get<QPoly>(q)) {
                if (!is_integer(t.coeff) || t.coeff < 0) {
                    problem = "s" + mu.to_string() + " has coefficient " + t.coeff.get_str() + " at q^" +
                              std::to_string(t.degree);
                    break;
                }
            }
        }
        if (problem.empty() && !duality_check(v.form, slot.dim())) {
            problem = "duality with d = " + std::to_string(slot.dim()) + " fails";
        }
        out.push_back(make("A4", "functional equation, diagonality, integrality and positivity of closed " +
                                     slot_name(slot),
                           problem.empty(), "ok", problem.empty() ? "ok" : problem));
    }
    return out;
}

namespace {

std::vector<CheckResult> graded_gate(const VerifyOptions& opts, const SymSeries& graded_psi)
{
    VerifyOptions graded = opts;
    graded.mode = DeltaMode::graded;
    std::vector<CheckResult> all = check_headline(graded, graded_psi);
    for (auto&& part : {check_boundary_correction(graded), check_small_slots(graded_psi),
                        check_functional_equation(graded_psi)}) {
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

std::string count_failures(const std::vector<CheckResult>& results)
{
    const auto failed = std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; });
    return std::to_string(failed) + " of " + std::to_string(results.size()) + " checks fail";
}

std::vector<CheckResult> mode_discrimination(const SymSeries& literal_psi,
                                             const std::vector<CheckResult>& graded_results)
{
    const Slot slot{1, 1};
    const SlotValue v = read_slot(literal_psi, slot);
    const bool literal_fails = !v.error.empty() || !(v.rank == reference::q_poly({1, 1}));
    return {make("A5", "literal gluing operator misfiles the boundary of M[1,1]", literal_fails,
                 "rank differs from q + 1", v.error.empty() ? render_q_display(v.rank) : v.error),
            make("A5", "graded gluing operator passes A1-A4", all_passed(graded_results), "0 checks fail",
                 count_failures(graded_results))};
}

} // namespace

std::vector<CheckResult> check_mode_discrimination(const VerifyOptions& opts)
{
    const SymSeries graded = run_pipeline(opts.table, {opts.lambda_max, DeltaMode::graded, std::nullopt});
    const SymSeries literal = run_pipeline(opts.table, {opts.lambda_max, DeltaMode::literal, std::nullopt});
    return mode_discrimination(literal, graded_gate(opts, graded));
}

HodgePoly random_hodge(std::mt19937_64& rng, int max_degree, bool diagonal)
{
    std::uniform_int_distribution<int> count(1, 3);
    std::uniform_int_distribution<int> degree(0, max_degree);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    HodgePoly p;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        const int a = degree(rng);
        const int b = diagonal ? a : degree(rng);
        p.add_term(a, b, ratio(num(rng), den(rng)));
    }
    if (p.is_zero()) {
        p = HodgePoly(1);
    }
    return p;
}

namespace {

Partition random_partition(std::mt19937_64& rng, int weight)
{
    std::vector<int> parts;
    int left = weight;
    while (left > 0) {
        std::uniform_int_distribution<int> pick(1, left);
        const int p = pick(rng);
        parts.push_back(p);
        left -= p;
    }
    return Partition::from_unsorted(std::move(parts));
}

} // namespace

SymSeries random_series(std::mt19937_64& rng, const Truncation& trunc, int max_terms)
{
    SymSeries s(trunc);
    if (trunc.lambda_max() == 0) {
        return s;
    }
    std::uniform_int_distribution<int> count(1, max_terms);
    std::uniform_int_distribution<int> lambda(1, trunc.lambda_max());
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        const int e = lambda(rng);
        std::uniform_int_distribution<int> weight(0, std::min(trunc.weight_cap(e), 2 * e + 1));
        s.add_term(e, random_partition(rng, weight(rng)), random_hodge(rng, 2, i % 2 == 0));
    }
    return s;
}

std::vector<CheckResult> check_property_suites(const VerifyOptions& opts)
{
    std::vector<CheckResult> out;
    std::mt19937_64 rng(opts.seed);
    const int samples = opts.random_samples;

    int log_exp_bad = 0;
    int exp_hom_bad = 0;
    int adams_bad = 0;
    for (int i = 0; i < samples; ++i) {
        const Truncation trunc(1 + i % 4);
        const SymSeries f = random_series(rng, trunc, 3);
        const SymSeries g = random_series(rng, trunc, 3);
        if (!(log_pleth(exp_pleth(f)) == f)) {
            ++log_exp_bad;
        }
        if (!(exp_pleth(f + g) == exp_pleth(f) * exp_pleth(g))) {
            ++exp_hom_bad;
        }
        const int k = 2 + i % 2;
        if (!(adams_sf(k, f * g) == adams_sf(k, f) * adams_sf(k, g)) ||
            !(adams_sf(k, adams_sf(2, f)) == adams_sf(2 * k, f))) {
            ++adams_bad;
        }
    }
    const std::string n = std::to_string(samples) + " random series";
    out.push_back(make("A6", "Log(Exp(f)) = f", log_exp_bad == 0, "0 failures of " + n,
                       std::to_string(log_exp_bad) + " failures"));
    out.push_back(make("A6", "Exp(f+g) = Exp(f)Exp(g)", exp_hom_bad == 0, "0 failures of " + n,
                       std::to_string(exp_hom_bad) + " failures"));
    out.push_back(make("A6", "Adams operations are multiplicative and compose", adams_bad == 0,
                       "0 failures of " + n, std::to_string(adams_bad) + " failures"));

    int jt_bad = 0;
    int hook_bad = 0;
    int shapes = 0;
    for (int w = 0; w <= 7; ++w) {
        for (const auto& mu : partitions_of(w)) {
            ++shapes;
            const SymFunction jt = schur_function(mu);
            if (!(jt == schur_function_mn(mu))) {
                ++jt_bad;
            }
            const Truncation trunc(3);
            if (!(rank_specialize(SymSeries::embed(trunc, jt), 0, w) == HodgePoly(BigRational(hook_length_count(mu))))) {
                ++hook_bad;
            }
        }
    }
    out.push_back(make("A6", "Jacobi-Trudi agrees with Murnaghan-Nakayama for |mu| <= 7", jt_bad == 0,
                       "0 of " + std::to_string(shapes) + " shapes differ", std::to_string(jt_bad) + " differ"));
    out.push_back(make("A6", "rank of s_mu equals the hook-length count for |mu| <= 7", hook_bad == 0,
                       "0 of " + std::to_string(shapes) + " shapes differ", std::to_string(hook_bad) + " differ"));

    int newton_bad = 0;
    for (int m = 1; m <= 7; ++m) {
        SymFunction rhs;
        for (int k = 1; k <= m; ++k) {
            rhs += h_function(m - k) * SymFunction::power_sum(k);
        }
        if (!(h_function(m) * BigRational(m) == rhs)) {
            ++newton_bad;
        }
    }
    out.push_back(make("A6", "Newton identity n h_n = sum_k h_{n-k} p_k for n <= 7", newton_bad == 0, "0 failures",
                       std::to_string(newton_bad) + " failures"));
    return out;
}

std::vector<CheckResult> check_ingestion(const VerifyOptions& opts)
{
    std::vector<CheckResult> out;
    const std::string rendered = render_table(opts.table);
    std::string round_trip_problem;
    try {
        const ModuliTable reparsed = parse_table(rendered);
        if (!(reparsed == opts.table)) {
            round_trip_problem = "re-parsed table differs";
        } else if (render_table(reparsed) != rendered) {
            round_trip_problem = "re-rendered text differs";
        }
        if (!opts.table_text.empty() && round_trip_problem.empty() && !(parse_table(opts.table_text) == reparsed)) {
            round_trip_problem = "source text and rendered text disagree";
        }
    } catch (const Error& e) {
        round_trip_problem = e.what();
    }
    out.push_back(make("A7", "table round-trips through render and parse", round_trip_problem.empty(),
                       "identical", round_trip_problem.empty() ? "identical" : round_trip_problem));

    using reference::q_poly;
    const std::pair<Slot, HodgePoly> rows[] = {
        {{0, 4}, q_poly({-2, 1})}, {{1, 1}, q_poly({0, 1})}, {{2, 1}, q_poly({0, 0, 0, 1, 1})}};
    const Truncation trunc(5);
    for (const auto& [slot, expected] : rows) {
        const SymFunction* entry = opts.table.find(slot);
        HodgePoly rank;
        if (entry != nullptr) {
            rank = rank_specialize(SymSeries::embed(trunc, *entry), 0, slot.points);
        }
        out.push_back(make("A7", "rank of open " + slot_name(slot) + " row", entry != nullptr && rank == expected,
                           render_q_display(expected), entry != nullptr ? render_q_display(rank) : "missing row"));
    }
    return out;
}

std::vector<CheckResult> run_acceptance(const VerifyOptions& opts)
{
    auto pipeline = [&](DeltaMode mode) { return run_pipeline(opts.table, {opts.lambda_max, mode, std::nullopt}); };
    const SymSeries main = pipeline(opts.mode);

    std::vector<CheckResult> results = check_headline(opts, main);
    for (auto&& part : {check_boundary_correction(opts), check_small_slots(main), check_functional_equation(main)}) {
        results.insert(results.end(), part.begin(), part.end());
    }

    std::vector<CheckResult> graded_results;
    SymSeries literal(main.truncation());
    if (opts.mode == DeltaMode::graded) {
        graded_results = results;
        literal = pipeline(DeltaMode::literal);
    } else {
        graded_results = graded_gate(opts, pipeline(DeltaMode::graded));
        literal = main;
    }
    for (auto& r : mode_discrimination(literal, graded_results)) {
        results.push_back(std::move(r));
    }
    for (auto&& part : {check_property_suites(opts), check_ingestion(opts)}) {
        results.insert(results.end(), part.begin(), part.end());
    }
    return results;
}

bool all_passed(const std::vector<CheckResult>& results)
{
    return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

} // namespace modserre
