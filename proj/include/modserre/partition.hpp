#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "modserre/rational.hpp"

namespace modserre {

// Weakly decreasing sequence of positive integers. The empty partition is
// the unique partition of 0.
class Partition {
public:
    Partition() = default;
    // Throws PreconditionError unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    static Partition from_unsorted(std::vector<int> parts);

    std::span<const int> parts() const noexcept { return parts_; }
    const std::vector<int>& part_vector() const noexcept { return parts_; }
    int weight() const noexcept { return weight_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    int multiplicity(int part) const noexcept;

    // Multiset union of parts.
    Partition merged(const Partition& other) const;
    // Removes `count` copies of `part`; the caller guarantees they exist.
    Partition without(int part, int count = 1) const;
    // Each part multiplied by k.
    Partition scaled(int k) const;

    // "[2,2]", "[]" for the empty partition.
    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    // Canonical order: ascending weight, then reverse-lexicographic, so that
    // [n] precedes [n-1,1] precedes ... precedes [1,...,1].
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// "[3,1,1]" / "[]"; throws ParseError on malformed text or invalid order.
Partition parse_partition(std::string_view text);

// All partitions of n in reverse-lexicographic order ([n] first).
std::vector<Partition> partitions_of(int n);

// Centralizer order z = prod_i i^{m_i} m_i!.
BigInt z_factor(const Partition& rho);

Partition conjugate(const Partition& rho);

// Number-theoretic Moebius function, by trial division; k >= 1.
int mobius(int k);

// Number of standard Young tableaux of the shape, by the hook-length formula.
BigInt hook_length_count(const Partition& shape);

} // namespace modserre
