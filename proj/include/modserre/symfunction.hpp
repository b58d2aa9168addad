#pragma once

#include <limits>
#include <map>

#include "modserre/hodge_poly.hpp"
#include "modserre/partition.hpp"

namespace modserre {

// A finite symmetric function sum_rho c_rho p_rho in the power-sum basis,
// with Hodge-polynomial coefficients. No truncation; products can be capped
// explicitly by weight.
class SymFunction {
public:
    using TermMap = std::map<Partition, HodgePoly>;
    static constexpr int unbounded = std::numeric_limits<int>::max();

    SymFunction() = default;
    SymFunction(const HodgePoly& constant); // NOLINT(google-explicit-constructor)

    static SymFunction monomial(const Partition& rho, const HodgePoly& coeff = HodgePoly(1));
    static SymFunction power_sum(int n);

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    HodgePoly coeff(const Partition& rho) const;

    void add_term(const Partition& rho, const HodgePoly& coeff);
    void add_scaled(const SymFunction& other, const HodgePoly& factor);

    // Largest / smallest p-weight present; 0 for the zero function.
    int max_weight() const noexcept;
    int min_weight() const noexcept;
    bool is_homogeneous(int n) const noexcept;

    // Terms of weight <= max_weight.
    SymFunction truncated(int max_weight) const;
    // Terms of weight exactly n.
    SymFunction homogeneous_part(int n) const;

    SymFunction& operator+=(const SymFunction& other);
    SymFunction& operator-=(const SymFunction& other);
    SymFunction& operator*=(const HodgePoly& scalar);
    SymFunction& operator*=(const BigRational& scalar);

    friend SymFunction operator+(SymFunction a, const SymFunction& b) { return a += b; }
    friend SymFunction operator-(SymFunction a, const SymFunction& b) { return a -= b; }
    friend SymFunction operator*(SymFunction a, const HodgePoly& s) { return a *= s; }
    friend SymFunction operator*(SymFunction a, const BigRational& s) { return a *= s; }
    friend SymFunction operator*(const SymFunction& a, const SymFunction& b);
    SymFunction operator-() const;

    friend bool operator==(const SymFunction&, const SymFunction&) = default;

private:
    TermMap terms_;
};

// Product keeping only terms of weight <= max_weight.
SymFunction multiply_capped(const SymFunction& a, const SymFunction& b, int max_weight);

} // namespace modserre
