#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <iterator>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace hookid {

/// An integer partition: weakly decreasing, strictly positive parts.
/// The empty partition is the unique partition of 0.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }
    /// |λ|, the sum of the parts.
    [[nodiscard]] int weight() const noexcept { return weight_; }
    /// ℓ(λ), the number of parts.
    [[nodiscard]] int length() const noexcept { return static_cast<int>(parts_.size()); }
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
    /// λ_i with 1-based row index; rows past the end have length 0.
    [[nodiscard]] int row(int i) const noexcept;

    [[nodiscard]] Partition conjugate() const;

    /// Comma-separated parts, "" for the empty partition.
    [[nodiscard]] std::string to_string() const;
    /// Inverse of to_string; rejects malformed or increasing part lists.
    static Partition parse(std::string_view literal);

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Input range over the partitions of n in reverse-lexicographic order,
/// starting at (n) and ending at (1,...,1). For n = 0 it yields exactly ().
class PartitionRange {
public:
    explicit PartitionRange(int n);

    class iterator {
    public:
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        const Partition& operator*() const noexcept { return current_; }
        const Partition* operator->() const noexcept { return &current_; }
        iterator& operator++();
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& it, std::default_sentinel_t) noexcept { return it.done_; }

    private:
        friend class PartitionRange;
        explicit iterator(int n);
        Partition current_;
        bool done_ = true;
    };

    [[nodiscard]] iterator begin() const { return iterator(n_); }
    [[nodiscard]] std::default_sentinel_t end() const noexcept { return {}; }

private:
    int n_;
};

[[nodiscard]] inline PartitionRange enumerate_partitions(int n) { return PartitionRange(n); }
[[nodiscard]] std::vector<Partition> partitions_of(int n);

/// Multiset of hook lengths stored as hook length -> multiplicity.
class HookMultiset {
public:
    HookMultiset() = default;
    explicit HookMultiset(std::map<int, int> counts);

    void add(int hook, int multiplicity = 1);

    [[nodiscard]] const std::map<int, int>& counts() const& noexcept { return counts_; }
    // By value on temporaries, so `for (auto x : hook_lengths(p).counts())` is safe.
    [[nodiscard]] std::map<int, int> counts() && { return std::move(counts_); }
    [[nodiscard]] int multiplicity(int hook) const;
    [[nodiscard]] bool contains(int hook) const { return multiplicity(hook) > 0; }
    /// Total number of elements counted with multiplicity.
    [[nodiscard]] int total() const noexcept { return total_; }
    [[nodiscard]] bool empty() const noexcept { return total_ == 0; }
    /// Sorted, with repetitions.
    [[nodiscard]] std::vector<int> to_vector() const;

    /// Multiset sum.
    HookMultiset& operator+=(const HookMultiset& other);

    friend bool operator==(const HookMultiset&, const HookMultiset&) = default;

private:
    std::map<int, int> counts_;
    int total_ = 0;
};

HookMultiset make_hook_multiset(std::span<const int> hooks);

/// {h_v : v ∈ λ}, computed as λ_i - j + λ'_j - i + 1.
[[nodiscard]] HookMultiset hook_lengths(const Partition& p);
/// Sub-multiset of hook lengths divisible by t. Throws for t < 1.
[[nodiscard]] HookMultiset hook_lengths_mod_t(const Partition& p, int t);
/// True iff no hook length is divisible by t. Throws for t < 1.
[[nodiscard]] bool is_t_core(const Partition& p, int t);

/// Number of standard Young tableaux of shape p, n! / ∏ h_v.
[[nodiscard]] mpz_class syt_count(const Partition& p);
/// Number of t-cores of m, by enumeration.
[[nodiscard]] long count_t_cores(int m, int t);

[[nodiscard]] mpz_class factorial(int n);

}  // namespace hookid
