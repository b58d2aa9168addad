#pragma once

#include <vector>

#include "modserre/symfunction.hpp"

namespace modserre {

// Which (lambda-exponent, p-weight) pairs a series retains.
//
// Layers e = 1..lambda_max keep p-weight <= weight_cap(e), 3e by default: a
// disjoint union of stable pieces with total lambda-exponent e carries at
// most 3e marked points. Layer 0 holds input data (table rows, Schur
// functions) and keeps weights up to weight_cap(lambda_max); with
// lambda_max = 0 only constants survive.
class Truncation {
public:
    explicit Truncation(int lambda_max);
    // caps[e - 1] is the weight cap of layer e, for e = 1..lambda_max.
    Truncation(int lambda_max, std::vector<int> caps);

    int lambda_max() const noexcept { return lambda_max_; }
    int weight_cap(int e) const;
    bool admits(int e, int weight) const noexcept;

    friend bool operator==(const Truncation&, const Truncation&) = default;

private:
    int lambda_max_;
    std::vector<int> caps_; // indexed by e, caps_[0] is the layer-0 cap
};

// Truncated element of the completed symmetric functions with an auxiliary
// grading variable lambda: sum over (e, rho) of c * lambda^e * p_rho.
// Stored as one power-sum layer per lambda-exponent.
class SymSeries {
public:
    struct Term {
        int lambda;
        Partition rho;
        HodgePoly coeff;
    };

    explicit SymSeries(const Truncation& trunc);

    static SymSeries one(const Truncation& trunc);
    static SymSeries monomial(const Truncation& trunc, int lambda, const Partition& rho,
                              const HodgePoly& coeff = HodgePoly(1));
    // lambda^e * f, dropping whatever the truncation does not admit.
    static SymSeries embed(const Truncation& trunc, const SymFunction& f, int lambda = 0);

    const Truncation& truncation() const noexcept { return trunc_; }
    int lambda_max() const noexcept { return trunc_.lambda_max(); }

    const SymFunction& layer(int e) const;
    // Replaces layer e; terms outside the truncation are dropped.
    void set_layer(int e, SymFunction f);
    const std::vector<SymFunction>& layers() const noexcept { return layers_; }

    // Silently ignores (e, rho) outside the truncation.
    void add_term(int e, const Partition& rho, const HodgePoly& coeff);

    HodgePoly coeff(int e, const Partition& rho) const;
    HodgePoly constant_term() const { return coeff(0, Partition{}); }

    std::size_t term_count() const noexcept;
    bool is_zero() const noexcept;

    // Canonical order: lambda ascending, then the partition order.
    std::vector<Term> terms() const;

    SymSeries& operator+=(const SymSeries& other);
    SymSeries& operator-=(const SymSeries& other);
    SymSeries& operator*=(const HodgePoly& scalar);
    SymSeries& operator*=(const BigRational& scalar);

    friend SymSeries operator+(SymSeries a, const SymSeries& b) { return a += b; }
    friend SymSeries operator-(SymSeries a, const SymSeries& b) { return a -= b; }
    friend SymSeries operator*(SymSeries a, const HodgePoly& s) { return a *= s; }
    friend SymSeries operator*(SymSeries a, const BigRational& s) { return a *= s; }
    friend SymSeries operator*(const SymSeries& a, const SymSeries& b);
    SymSeries operator-() const;

    // lambda^e * (*this).
    SymSeries shifted(int e) const;

    friend bool operator==(const SymSeries&, const SymSeries&) = default;

private:
    void require_compatible(const SymSeries& other) const;

    Truncation trunc_;
    std::vector<SymFunction> layers_;
};

// Untruncated h_n = sum_{rho |- n} p_rho / z_rho; the coefficient of t^n in
// exp(sum_k p_k t^k / k).
SymFunction h_function(int n);

SymSeries basis_p(int n, const Truncation& trunc);
SymSeries basis_h(int n, const Truncation& trunc);

// p_rho -> p_{k rho}, lambda^e -> lambda^{ke}, coefficients via hp_adams.
SymSeries adams_sf(int k, const SymSeries& f);
SymFunction adams_function(int k, const SymFunction& f);

// d/dp_k.
SymSeries partial_p(int k, const SymSeries& f);
SymFunction partial_p(int k, const SymFunction& f);

// Terms with lambda-exponent e and p-weight n.
SymSeries component(const SymSeries& f, int e, int n);

// n! times the coefficient of p_1^n at lambda^e: the non-equivariant
// Serre polynomial of the representation with characteristic f.
HodgePoly rank_specialize(const SymSeries& f, int e, int n);

} // namespace modserre
