#include "hookid/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace hookid {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::row(int i) const noexcept {
    if (i < 1 || i > length()) {
        return 0;
    }
    return parts_[static_cast<std::size_t>(i - 1)];
}

Partition Partition::conjugate() const {
    if (parts_.empty()) {
        return {};
    }
    std::vector<int> conj(static_cast<std::size_t>(parts_.front()), 0);
    for (int part : parts_) {
        for (int j = 0; j < part; ++j) {
            ++conj[static_cast<std::size_t>(j)];
        }
    }
    return Partition(std::move(conj));
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition Partition::parse(std::string_view literal) {
    std::vector<int> parts;
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    literal = trim(literal);
    if (literal.empty()) {
        return {};
    }
    while (true) {
        auto comma = literal.find(',');
        auto token = trim(literal.substr(0, comma));
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
            throw std::invalid_argument("malformed partition literal: '" + std::string(token) + "'");
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        literal.remove_prefix(comma + 1);
    }
    return Partition(std::move(parts));
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << '(' << p.to_string() << ')';
}

PartitionRange::PartitionRange(int n) : n_(n) {
    if (n < 0) {
        throw std::invalid_argument("cannot enumerate partitions of a negative integer");
    }
}

PartitionRange::iterator::iterator(int n) : done_(false) {
    if (n > 0) {
        current_ = Partition({n});
    }
}

PartitionRange::iterator& PartitionRange::iterator::operator++() {
    std::vector<int> parts = current_.parts();
    // Rightmost part larger than one.
    auto k = static_cast<std::ptrdiff_t>(parts.size()) - 1;
    int freed = 0;
    while (k >= 0 && parts[static_cast<std::size_t>(k)] == 1) {
        ++freed;
        --k;
    }
    if (k < 0) {
        done_ = true;
        return *this;
    }
    const int cap = --parts[static_cast<std::size_t>(k)];
    ++freed;
    parts.resize(static_cast<std::size_t>(k + 1));
    while (freed > 0) {
        const int next = std::min(cap, freed);
        parts.push_back(next);
        freed -= next;
    }
    current_ = Partition(std::move(parts));
    return *this;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    for (const auto& p : enumerate_partitions(n)) {
        out.push_back(p);
    }
    return out;
}

HookMultiset::HookMultiset(std::map<int, int> counts) {
    for (auto [hook, mult] : counts) {
        add(hook, mult);
    }
}

void HookMultiset::add(int hook, int multiplicity) {
    if (hook <= 0) {
        throw std::invalid_argument("hook lengths are positive");
    }
    if (multiplicity < 0) {
        throw std::invalid_argument("negative multiplicity");
    }
    if (multiplicity == 0) {
        return;
    }
    counts_[hook] += multiplicity;
    total_ += multiplicity;
}

int HookMultiset::multiplicity(int hook) const {
    auto it = counts_.find(hook);
    return it == counts_.end() ? 0 : it->second;
}

std::vector<int> HookMultiset::to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(total_));
    for (auto [hook, mult] : counts_) {
        out.insert(out.end(), static_cast<std::size_t>(mult), hook);
    }
    return out;
}

HookMultiset& HookMultiset::operator+=(const HookMultiset& other) {
    for (auto [hook, mult] : other.counts_) {
        add(hook, mult);
    }
    return *this;
}

HookMultiset make_hook_multiset(std::span<const int> hooks) {
    HookMultiset out;
    for (int h : hooks) {
        out.add(h);
    }
    return out;
}

HookMultiset hook_lengths(const Partition& p) {
    HookMultiset out;
    const Partition conj = p.conjugate();
    for (int i = 1; i <= p.length(); ++i) {
        const int row = p.row(i);
        for (int j = 1; j <= row; ++j) {
            out.add(row - j + conj.row(j) - i + 1);
        }
    }
    return out;
}

namespace {

void require_positive_t(int t) {
    if (t < 1) {
        throw std::invalid_argument("t must be a positive integer");
    }
}

}  // namespace

HookMultiset hook_lengths_mod_t(const Partition& p, int t) {
    require_positive_t(t);
    HookMultiset out;
    for (auto [hook, mult] : hook_lengths(p).counts()) {
        if (hook % t == 0) {
            out.add(hook, mult);
        }
    }
    return out;
}

bool is_t_core(const Partition& p, int t) {
    require_positive_t(t);
    const auto hooks = hook_lengths(p);
    return std::none_of(hooks.counts().begin(), hooks.counts().end(),
                        [t](const auto& entry) { return entry.first % t == 0; });
}

mpz_class factorial(int n) {
    if (n < 0) {
        throw std::invalid_argument("factorial of a negative integer");
    }
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

mpz_class syt_count(const Partition& p) {
    mpz_class denominator = 1;
    for (auto [hook, mult] : hook_lengths(p).counts()) {
        for (int k = 0; k < mult; ++k) {
            denominator *= hook;
        }
    }
    const mpz_class numerator = factorial(p.weight());
    if (!mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t())) {
        throw std::logic_error("hook product does not divide n!");
    }
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
    return out;
}

long count_t_cores(int m, int t) {
    require_positive_t(t);
    long count = 0;
    for (const auto& p : enumerate_partitions(m)) {
        if (is_t_core(p, t)) {
            ++count;
        }
    }
    return count;
}

}  // namespace hookid
