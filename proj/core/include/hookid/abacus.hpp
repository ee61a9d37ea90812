#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "hookid/partition.hpp"
#include "hookid/rational.hpp"

namespace hookid {

using Coord = std::int64_t;

/// Non-negative residue of a modulo t (t > 0).
[[nodiscard]] constexpr Coord floor_mod(Coord a, Coord t) noexcept {
    const Coord r = a % t;
    return r < 0 ? r + t : r;
}

[[nodiscard]] constexpr Coord floor_div(Coord a, Coord t) noexcept {
    return (a - floor_mod(a, t)) / t;
}

/// True iff `elements` contains -1..-t, every other element is positive and
/// not divisible by t, and each residue class is closed downward among the
/// positive integers.
[[nodiscard]] bool is_t_compact(const std::set<Coord>& elements, int t);

/// First-column hook lengths of a t-core together with -1, ..., -t.
class HSet {
public:
    /// Throws std::invalid_argument unless t is odd and the set is t-compact.
    HSet(std::set<Coord> elements, int t);

    [[nodiscard]] const std::set<Coord>& elements() const noexcept { return elements_; }
    [[nodiscard]] int t() const noexcept { return t_; }

    friend bool operator==(const HSet&, const HSet&) = default;

private:
    std::set<Coord> elements_;
    int t_;
};

/// Residue-indexed maxima of an H-set: u_0 = -t, u_i ≡ i (mod t), u_i > -t.
class UCoding {
public:
    UCoding(std::vector<Coord> values, int t);

    [[nodiscard]] const std::vector<Coord>& values() const noexcept { return values_; }
    [[nodiscard]] Coord operator[](std::size_t i) const { return values_.at(i); }
    [[nodiscard]] int t() const noexcept { return t_; }
    [[nodiscard]] Coord sum() const;

    friend bool operator==(const UCoding&, const UCoding&) = default;

private:
    std::vector<Coord> values_;
    int t_;
};

/// Zero-sum vector with v_i ≡ i (mod t), t odd.
class VCoding {
public:
    VCoding(std::vector<Coord> values, int t);

    [[nodiscard]] const std::vector<Coord>& values() const noexcept { return values_; }
    [[nodiscard]] Coord operator[](std::size_t i) const { return values_.at(i); }
    [[nodiscard]] int t() const noexcept { return t_; }

    friend bool operator==(const VCoding&, const VCoding&) = default;

private:
    std::vector<Coord> values_;
    int t_;
};

/// Zero-sum integer vector of length t.
class NCoding {
public:
    NCoding(std::vector<Coord> values, int t);

    [[nodiscard]] const std::vector<Coord>& values() const noexcept { return values_; }
    [[nodiscard]] Coord operator[](std::size_t i) const { return values_.at(i); }
    [[nodiscard]] int t() const noexcept { return t_; }

    friend bool operator==(const NCoding&, const NCoding&) = default;

private:
    std::vector<Coord> values_;
    int t_;
};

[[nodiscard]] HSet h_set(const Partition& p, int t);
[[nodiscard]] UCoding max_t(const HSet& a);
[[nodiscard]] UCoding u_coding(const Partition& p, int t);

[[nodiscard]] VCoding phi_v(const Partition& p, int t);
[[nodiscard]] Partition phi_v_inverse(const VCoding& v);

/// Garvan–Kim–Stanton coding read off the extended t-residue diagram.
/// Defined for every t >= 1.
[[nodiscard]] NCoding phi_n(const Partition& p, int t);
[[nodiscard]] Partition phi_n_inverse(const NCoding& n);

[[nodiscard]] VCoding phi_v_from_n(const NCoding& n);
[[nodiscard]] NCoding phi_n_from_v(const VCoding& v);

/// (Σ v_i²)/(2t) - (t²-1)/24. Throws std::domain_error unless it is a
/// non-negative integer.
[[nodiscard]] std::int64_t core_weight_from_v(const VCoding& v);
/// (t/2) Σ n_i² + Σ i n_i.
[[nodiscard]] std::int64_t core_weight_from_n(const NCoding& n);

/// (-1)^{t'} / (1! 2! ... (t-1)!), t = 2t'+1.
[[nodiscard]] Rational macdonald_constant(int t);
/// ∏_{i<j} (v_i - v_j).
[[nodiscard]] Integer vandermonde(const std::vector<Coord>& values);

/// ∏_{v∈λ} (1 - t²/h_v²) computed from the hook lengths of a t-core.
[[nodiscard]] Rational core_hook_product(const Partition& p, int t);
/// macdonald_constant(t) * vandermonde(v): the same product read off the V-coding.
[[nodiscard]] Rational core_hook_product_from_v(const VCoding& v);

/// Every V-coding with Σ v_i² <= bound, in lexicographic order.
[[nodiscard]] std::vector<VCoding> enumerate_v_codings(int t, Coord square_sum_bound);

/// λ with its leftmost column removed.
[[nodiscard]] Partition erase_first_column(const Partition& p);

/// Partition whose charge-free Maya diagram has the given runner maxima:
/// the set ∪_r {a ≡ r (mod t) : a <= tops[r]} equals {λ_i - i + c : i >= 1}
/// for some shift c.
[[nodiscard]] Partition partition_from_runner_tops(const std::vector<Coord>& tops, int t);

}  // namespace hookid
