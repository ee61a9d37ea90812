#include "hookid/quotient.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "hookid/abacus.hpp"

namespace hookid {

namespace {

// Charge of a word about its dot: 1s left of it minus 0s right of it.
std::int64_t charge(const BinaryWord& w) {
    std::int64_t out = 0;
    for (std::size_t k = 0; k < w.window().size(); ++k) {
        const std::int64_t i = w.offset() + static_cast<std::int64_t>(k);
        if (i < 0 && w.window()[k] == 1) {
            ++out;
        } else if (i >= 0 && w.window()[k] == 0) {
            --out;
        }
    }
    return out;
}

// Letters c_{it+k} of w for every i, as a word with the section's dot at i = 0.
BinaryWord section(const BinaryWord& w, int t, int k) {
    const std::int64_t first = w.offset();
    const std::int64_t last = w.offset() + static_cast<std::int64_t>(w.window().size()) - 1;
    const std::int64_t lo = floor_div(first - k, t);
    const std::int64_t hi = floor_div(last - k, t) + 1;
    std::vector<std::uint8_t> letters;
    for (std::int64_t i = lo; i <= hi; ++i) {
        letters.push_back(static_cast<std::uint8_t>(w.bit(i * t + k)));
    }
    return BinaryWord(std::move(letters), lo);
}

// Interleave t sections back into one word: c_{it+k} = sections[k].bit(i).
BinaryWord interleave(const std::vector<BinaryWord>& sections) {
    const auto t = static_cast<std::int64_t>(sections.size());
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    for (std::int64_t k = 0; k < t; ++k) {
        const auto& s = sections[static_cast<std::size_t>(k)];
        lo = std::min(lo, s.offset() * t + k);
        hi = std::max(hi, (s.offset() + static_cast<std::int64_t>(s.window().size())) * t + k);
    }
    std::vector<std::uint8_t> letters;
    for (std::int64_t a = lo; a <= hi; ++a) {
        const std::int64_t k = floor_mod(a, t);
        const std::int64_t i = floor_div(a, t);
        letters.push_back(static_cast<std::uint8_t>(sections[static_cast<std::size_t>(k)].bit(i)));
    }
    return BinaryWord(std::move(letters), lo);
}

// The word that is 0 before index start and 1 from start on.
BinaryWord step_word(std::int64_t start) { return BinaryWord({}, start); }

// w moved so that letter j of the result is letter j + shift of w.
BinaryWord shifted(const BinaryWord& w, std::int64_t shift) {
    return BinaryWord(w.window(), w.offset() - shift);
}

}  // namespace

BinaryWord::BinaryWord(std::vector<std::uint8_t> window, std::int64_t offset)
    : window_(std::move(window)), offset_(offset) {
    for (auto letter : window_) {
        if (letter > 1) {
            throw std::invalid_argument("binary word letters must be 0 or 1");
        }
    }
}

int BinaryWord::bit(std::int64_t i) const {
    if (i < offset_) {
        return 0;
    }
    const std::int64_t k = i - offset_;
    if (k >= static_cast<std::int64_t>(window_.size())) {
        return 1;
    }
    return window_[static_cast<std::size_t>(k)];
}

BinaryWord BinaryWord::canonical() const {
    auto begin = std::find(window_.begin(), window_.end(), std::uint8_t{1});
    auto end = window_.end();
    while (end != begin && *(end - 1) == 1) {
        --end;
    }
    std::vector<std::uint8_t> trimmed(begin, end);
    // With the dot before letter d, (1s left) - (0s right) rises by one per
    // step from -#zeros, so the balance point is d = #zeros.
    const auto zeros = std::count(trimmed.begin(), trimmed.end(), std::uint8_t{0});
    return BinaryWord(std::move(trimmed), -static_cast<std::int64_t>(zeros));
}

bool BinaryWord::is_canonical() const {
    const BinaryWord c = canonical();
    return c.window_ == window_ && c.offset_ == offset_;
}

std::string BinaryWord::to_string() const {
    const std::int64_t lo = std::min<std::int64_t>(offset_, 0) - 3;
    const std::int64_t hi = std::max<std::int64_t>(offset_ + static_cast<std::int64_t>(window_.size()), 0) + 3;
    std::string out = "...";
    for (std::int64_t i = lo; i < hi; ++i) {
        if (i == 0) {
            out += '.';
        }
        out += static_cast<char>('0' + bit(i));
    }
    return out + "...";
}

bool operator==(const BinaryWord& a, const BinaryWord& b) {
    const BinaryWord ca = a.canonical();
    const BinaryWord cb = b.canonical();
    return ca.window_ == cb.window_;
}

std::ostream& operator<<(std::ostream& os, const BinaryWord& w) { return os << w.to_string(); }

BinaryWord encode_word(const Partition& p) {
    std::vector<std::uint8_t> letters;
    int previous = 0;
    for (int i = p.length(); i >= 1; --i) {
        letters.insert(letters.end(), static_cast<std::size_t>(p.row(i) - previous), std::uint8_t{1});
        letters.push_back(0);
        previous = p.row(i);
    }
    return BinaryWord(std::move(letters), -p.length());
}

Partition decode_word(const BinaryWord& w) {
    const BinaryWord c = w.canonical();
    std::vector<int> parts;
    int ones = 0;
    for (auto letter : c.window()) {
        if (letter == 1) {
            ++ones;
        } else if (ones > 0) {
            parts.push_back(ones);
        }
    }
    std::reverse(parts.begin(), parts.end());
    return Partition(std::move(parts));
}

HookMultiset word_hook_lengths(const BinaryWord& w) {
    const BinaryWord c = w.canonical();
    const auto& letters = c.window();
    HookMultiset out;
    for (std::size_t j = 0; j < letters.size(); ++j) {
        if (letters[j] != 0) {
            continue;
        }
        for (std::size_t i = 0; i < j; ++i) {
            if (letters[i] == 1) {
                out.add(static_cast<int>(j - i));
            }
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const CoreQuotient& cq) {
    os << "((" << cq.core.to_string() << ");";
    for (std::size_t k = 0; k < cq.quotient.size(); ++k) {
        os << (k == 0 ? " " : ", ") << '(' << cq.quotient[k].to_string() << ')';
    }
    return os << ')';
}

CoreQuotient decompose(const Partition& p, int t) {
    if (t < 1) {
        throw std::invalid_argument("t must be a positive integer");
    }
    const BinaryWord word = encode_word(p);
    CoreQuotient out;
    out.t = t;
    std::vector<BinaryWord> sorted;
    for (int k = 0; k < t; ++k) {
        const BinaryWord s = section(word, t, k);
        out.quotient.push_back(decode_word(s));
        // Sorting 10 -> 01 keeps the charge; a sorted word of charge q is
        // 0 before index -q and 1 from there on.
        sorted.push_back(step_word(-charge(s)));
    }
    out.core = decode_word(interleave(sorted));
    return out;
}

Partition compose(const CoreQuotient& cq) {
    const int t = cq.t;
    if (t < 1) {
        throw std::invalid_argument("t must be a positive integer");
    }
    if (cq.quotient.size() != static_cast<std::size_t>(t)) {
        throw std::invalid_argument("quotient must contain exactly t partitions");
    }
    if (!is_t_core(cq.core, t)) {
        throw std::invalid_argument("(" + cq.core.to_string() + ") is not a " + std::to_string(t) + "-core");
    }
    const BinaryWord core_word = encode_word(cq.core);
    std::vector<BinaryWord> sections;
    for (int k = 0; k < t; ++k) {
        const std::int64_t q = charge(section(core_word, t, k));
        // The canonical quotient word has charge 0; shift its dot to charge q.
        sections.push_back(shifted(encode_word(cq.quotient[static_cast<std::size_t>(k)]), q));
    }
    return decode_word(interleave(sections));
}

}  // namespace hookid
