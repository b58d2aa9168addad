#include "modserre/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "modserre/errors.hpp"

namespace modserre {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) {
            throw PreconditionError("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw PreconditionError("partition parts must be weakly decreasing");
        }
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts)
{
    std::sort(parts.begin(), parts.end(), std::greater<>{});
    return Partition(std::move(parts));
}

int Partition::multiplicity(int part) const noexcept
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

Partition Partition::merged(const Partition& other) const
{
    Partition r;
    r.parts_.resize(parts_.size() + other.parts_.size());
    std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(), r.parts_.begin(),
               std::greater<>{});
    r.weight_ = weight_ + other.weight_;
    return r;
}

Partition Partition::without(int part, int count) const
{
    Partition r = *this;
    auto it = std::find(r.parts_.begin(), r.parts_.end(), part);
    r.parts_.erase(it, it + count);
    r.weight_ -= part * count;
    return r;
}

Partition Partition::scaled(int k) const
{
    Partition r = *this;
    for (int& p : r.parts_) {
        p *= k;
    }
    r.weight_ *= k;
    return r;
}

std::string Partition::to_string() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) {
            s += ",";
        }
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b)
{
    if (a.weight_ != b.weight_) {
        return a.weight_ <=> b.weight_;
    }
    // Reverse lexicographic: the lexicographically larger sequence comes first.
    return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(), a.parts_.begin(),
                                                  a.parts_.end());
}

Partition parse_partition(std::string_view text)
{
    auto fail = [&](const std::string& why) -> Partition {
        throw ParseError("invalid partition '" + std::string(text) + "': " + why, 0, 0);
    };
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
        return fail("expected brackets");
    }
    std::string_view body = text.substr(1, text.size() - 2);
    std::vector<int> parts;
    while (!body.empty()) {
        const auto comma = body.find(',');
        const auto item = body.substr(0, comma);
        if (item.empty() || item.size() > 6 ||
            !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            return fail("expected positive integers");
        }
        parts.push_back(std::stoi(std::string(item)));
        if (comma == std::string_view::npos) {
            break;
        }
        body.remove_prefix(comma + 1);
        if (body.empty()) {
            return fail("trailing comma");
        }
    }
    try {
        return Partition(std::move(parts));
    } catch (const PreconditionError& e) {
        return fail(e.what());
    }
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        partitions_rec(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n)
{
    if (n < 0) {
        throw PreconditionError("partitions_of needs n >= 0");
    }
    std::vector<Partition> out;
    std::vector<int> prefix;
    partitions_rec(n, n, prefix, out);
    return out;
}

BigInt z_factor(const Partition& rho)
{
    BigInt z = 1;
    const auto parts = rho.parts();
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) {
            ++j;
        }
        const int m = static_cast<int>(j - i);
        BigInt pk;
        mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(parts[i]), static_cast<unsigned long>(m));
        z *= pk * factorial(m);
        i = j;
    }
    return z;
}

Partition conjugate(const Partition& rho)
{
    std::vector<int> parts(static_cast<std::size_t>(rho.largest()), 0);
    for (int p : rho.parts()) {
        for (int c = 0; c < p; ++c) {
            ++parts[static_cast<std::size_t>(c)];
        }
    }
    return Partition(std::move(parts));
}

int mobius(int k)
{
    if (k < 1) {
        throw PreconditionError("mobius needs k >= 1");
    }
    int result = 1;
    for (int p = 2; p * p <= k; ++p) {
        if (k % p == 0) {
            k /= p;
            if (k % p == 0) {
                return 0;
            }
            result = -result;
        }
    }
    if (k > 1) {
        result = -result;
    }
    return result;
}

BigInt hook_length_count(const Partition& shape)
{
    const Partition transpose = conjugate(shape);
    BigInt hooks = 1;
    const auto rows = shape.parts();
    const auto cols = transpose.parts();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (int c = 0; c < rows[r]; ++c) {
            const int arm = rows[r] - c - 1;
            const int leg = cols[static_cast<std::size_t>(c)] - static_cast<int>(r) - 1;
            hooks *= arm + leg + 1;
        }
    }
    return factorial(shape.weight()) / hooks;
}

} // namespace modserre
