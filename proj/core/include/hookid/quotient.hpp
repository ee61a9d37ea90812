#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hookid/partition.hpp"

namespace hookid {

/// Finite window over a bi-infinite 0/1 word that is 0 far to the left and
/// 1 far to the right. window()[k] is the letter at index offset() + k; the
/// dot sits between indices -1 and 0.
class BinaryWord {
public:
    BinaryWord() = default;
    /// Throws std::invalid_argument if any letter is not 0 or 1.
    BinaryWord(std::vector<std::uint8_t> window, std::int64_t offset);

    [[nodiscard]] const std::vector<std::uint8_t>& window() const noexcept { return window_; }
    [[nodiscard]] std::int64_t offset() const noexcept { return offset_; }
    /// Letter at absolute index i, including the implicit 0s and 1s.
    [[nodiscard]] int bit(std::int64_t i) const;

    /// Trimmed window (no leading 0, no trailing 1), moved so that the number
    /// of 1s left of the dot equals the number of 0s right of it.
    [[nodiscard]] BinaryWord canonical() const;
    [[nodiscard]] bool is_canonical() const;

    /// e.g. "...0001110.011010111..."
    [[nodiscard]] std::string to_string() const;

    /// Two representations are equal when they describe the same word up to shift.
    friend bool operator==(const BinaryWord& a, const BinaryWord& b);

private:
    std::vector<std::uint8_t> window_;
    std::int64_t offset_ = 0;
};

std::ostream& operator<<(std::ostream& os, const BinaryWord& w);

/// Horizontal edges read as 1, vertical edges as 0, walking the boundary from
/// bottom-left to top-right; returned in canonical form.
[[nodiscard]] BinaryWord encode_word(const Partition& p);
/// Inverse of encode_word; the offset is ignored.
[[nodiscard]] Partition decode_word(const BinaryWord& w);

/// {j - i : i < j, c_i = 1, c_j = 0}: the hook lengths read off the word.
[[nodiscard]] HookMultiset word_hook_lengths(const BinaryWord& w);

struct CoreQuotient {
    Partition core;
    std::vector<Partition> quotient;
    int t = 1;

    friend bool operator==(const CoreQuotient&, const CoreQuotient&) = default;
};

std::ostream& operator<<(std::ostream& os, const CoreQuotient& cq);

/// λ ↦ (μ; λ⁰, ..., λ^{t-1}): λ^k is decoded from the letters c_{it+k} of the
/// canonical word, μ from the same sections with every 10 sorted to 01.
[[nodiscard]] CoreQuotient decompose(const Partition& p, int t);
/// Inverse of decompose. Throws std::invalid_argument unless the core is a
/// t-core and there are exactly t quotient partitions.
[[nodiscard]] Partition compose(const CoreQuotient& cq);

}  // namespace hookid
