#include "modserre/pipeline.hpp"

#include <algorithm>

#include "modserre/errors.hpp"

namespace modserre {

std::string Slot::to_string() const { return "(" + std::to_string(genus) + "," + std::to_string(points) + ")"; }

void ModuliTable::set(const Slot& slot, SymFunction entry)
{
    if (!slot.stable()) {
        throw PreconditionError("slot " + slot.to_string() + " is not stable (need n >= 1 and 2g-2+n > 0)");
    }
    if (!entry.is_homogeneous(slot.points)) {
        throw PreconditionError("entry for slot " + slot.to_string() + " is not homogeneous of weight " +
                                std::to_string(slot.points));
    }
    entries_[slot] = std::move(entry);
}

void ModuliTable::withhold(const Slot& slot) { entries_.erase(slot); }

const SymFunction* ModuliTable::find(const Slot& slot) const
{
    const auto it = entries_.find(slot);
    return it == entries_.end() ? nullptr : &it->second;
}

SymSeries build_phi(const ModuliTable& table, const Truncation& trunc)
{
    SymSeries phi(trunc);
    for (const auto& [slot, entry] : table.entries()) {
        if (!slot.stable() || !entry.is_homogeneous(slot.points)) {
            throw PreconditionError("malformed table entry at slot " + slot.to_string());
        }
        const int e = slot.lambda();
        if (e > trunc.lambda_max()) {
            continue;
        }
        SymFunction layer = phi.layer(e);
        layer += entry;
        phi.set_layer(e, std::move(layer));
    }
    return phi;
}

SymSeries compute_psi(const SymSeries& phi, DeltaMode mode)
{
    return log_pleth(exp_delta(exp_pleth(phi), mode));
}

SchurForm serre_closed(const SymSeries& psi, const Slot& slot)
{
    if (!slot.stable()) {
        throw PreconditionError("slot " + slot.to_string() + " is not stable");
    }
    if (slot.lambda() > psi.lambda_max()) {
        throw PreconditionError("slot " + slot.to_string() + " needs truncation >= " +
                                std::to_string(slot.lambda()));
    }
    return to_schur(psi, slot.lambda(), slot.points);
}

std::vector<Slot> required_inputs(const Slot& slot)
{
    if (!slot.stable()) {
        throw PreconditionError("slot " + slot.to_string() + " is not stable");
    }
    std::vector<Slot> out;
    const int budget = 2 * slot.genus + slot.points;
    for (const Slot& s : stable_slots(slot.lambda())) {
        if (s.genus <= slot.genus && 2 * s.genus + s.points <= budget) {
            out.push_back(s);
        }
    }
    return out;
}

std::vector<Slot> stable_slots(int lambda_max)
{
    std::vector<Slot> out;
    for (int e = 1; e <= lambda_max; ++e) {
        for (int g = 0; 2 * g - 2 + 1 <= e; ++g) {
            const int n = e + 2 - 2 * g;
            if (n >= 1) {
                out.push_back(Slot{g, n});
            }
        }
    }
    return out;
}

bool duality_check(const SchurForm& form, int d)
{
    try {
        return std::all_of(form.begin(), form.end(), [d](const auto& entry) {
            return hp_dual(d, entry.second) == entry.second;
        });
    } catch (const DualityDomainError&) {
        return false;
    }
}

std::variant<QPoly, OffDiagonal> hodge_diagonal(const HodgePoly& rank) { return hp_to_q_poly(rank); }

SlotReport make_slot_report(const SymSeries& psi, const Slot& slot)
{
    SlotReport r;
    r.slot = slot;
    r.equivariant = serre_closed(psi, slot);
    r.rank = rank_specialize(psi, slot.lambda(), slot.points);
    r.hodge = hodge_diagonal(r.rank);
    r.duality_ok = duality_check(r.equivariant, slot.dim());
    return r;
}

SymSeries run_pipeline(const ModuliTable& table, const PipelineConfig& config)
{
    ModuliTable effective = table;
    if (config.withhold) {
        effective.withhold(*config.withhold);
    }
    const Truncation trunc(config.lambda_max);
    return compute_psi(build_phi(effective, trunc), config.mode);
}

} // namespace modserre
