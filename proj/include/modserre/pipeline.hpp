#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "modserre/plethysm.hpp"
#include "modserre/schur.hpp"

namespace modserre {

// A moduli slot (g, n): genus g with n marked points.
struct Slot {
    int genus = 0;
    int points = 0;

    // Grading exponent 2g - 2 + n.
    int lambda() const noexcept { return 2 * genus - 2 + points; }
    // Dimension 3g - 3 + n.
    int dim() const noexcept { return 3 * genus - 3 + points; }
    bool stable() const noexcept { return genus >= 0 && points >= 1 && lambda() > 0; }
    std::string to_string() const;

    friend auto operator<=>(const Slot&, const Slot&) = default;
};

// Equivariant Serre polynomials of the open moduli spaces, one degree-n
// symmetric function per slot.
class ModuliTable {
public:
    using EntryMap = std::map<Slot, SymFunction>;

    // Throws PreconditionError for unstable slots or non-homogeneous entries.
    void set(const Slot& slot, SymFunction entry);
    // Removes the slot; a missing entry contributes zero.
    void withhold(const Slot& slot);

    const EntryMap& entries() const noexcept { return entries_; }
    const SymFunction* find(const Slot& slot) const;
    bool contains(const Slot& slot) const { return entries_.count(slot) != 0; }
    std::size_t size() const noexcept { return entries_.size(); }

    friend bool operator==(const ModuliTable&, const ModuliTable&) = default;

private:
    EntryMap entries_;
};

// sum over entries of lambda^{2g-2+n} * entry; entries above lambda_max are ignored.
SymSeries build_phi(const ModuliTable& table, const Truncation& trunc);

// Log(exp(Delta) Exp(phi)).
SymSeries compute_psi(const SymSeries& phi, DeltaMode mode);

// Schur expansion of the (2g-2+n, n) component of psi. Throws
// PreconditionError when the slot is unstable or outside the truncation.
SchurForm serre_closed(const SymSeries& psi, const Slot& slot);

// All (h, m) with m >= 1, 2h-2+m > 0, h <= g, 2h+m <= 2g+n, ordered by the
// slot listing order.
std::vector<Slot> required_inputs(const Slot& slot);

// Stable slots with 0 < 2g-2+n <= lambda_max, ascending lambda then genus.
std::vector<Slot> stable_slots(int lambda_max);

// True iff every Schur coefficient c satisfies hp_dual(d, c) == c.
bool duality_check(const SchurForm& form, int d);

// Hodge numbers h^{k,k}, or the offending exponent.
std::variant<QPoly, OffDiagonal> hodge_diagonal(const HodgePoly& rank);

struct SlotReport {
    Slot slot;
    SchurForm equivariant;
    HodgePoly rank;
    std::variant<QPoly, OffDiagonal> hodge;
    bool duality_ok = false;
};

SlotReport make_slot_report(const SymSeries& psi, const Slot& slot);

struct PipelineConfig {
    int lambda_max = 5;
    DeltaMode mode = DeltaMode::graded;
    std::optional<Slot> withhold;
};

// Builds phi from the table (minus the withheld entry) and returns psi.
SymSeries run_pipeline(const ModuliTable& table, const PipelineConfig& config);

} // namespace modserre
