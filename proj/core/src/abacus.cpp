#include "hookid/abacus.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hookid {

namespace {

void require_positive_t(int t) {
    if (t < 1) {
        throw std::invalid_argument("t must be a positive integer, got " + std::to_string(t));
    }
}

void require_odd_t(int t) {
    require_positive_t(t);
    if (t % 2 == 0) {
        throw std::invalid_argument("t must be odd, got " + std::to_string(t));
    }
}

void require_core(const Partition& p, int t) {
    if (!is_t_core(p, t)) {
        throw std::invalid_argument("(" + p.to_string() + ") is not a " + std::to_string(t) + "-core");
    }
}

void require_length(const std::vector<Coord>& values, int t, const char* what) {
    if (values.size() != static_cast<std::size_t>(t)) {
        throw std::invalid_argument(std::string(what) + " must have exactly t = " + std::to_string(t) + " entries");
    }
}

Coord sum_of(const std::vector<Coord>& values) {
    return std::accumulate(values.begin(), values.end(), Coord{0});
}

}  // namespace

bool is_t_compact(const std::set<Coord>& elements, int t) {
    if (t < 1) {
        return false;
    }
    for (Coord a = -t; a <= -1; ++a) {
        if (!elements.contains(a)) {
            return false;
        }
    }
    for (Coord b : elements) {
        if (b < 0) {
            if (b < -t) {
                return false;
            }
            continue;
        }
        if (b == 0 || b % t == 0) {
            return false;
        }
        // Closure: b - t must be present whenever it is still positive.
        if (b - t >= 1 && !elements.contains(b - t)) {
            return false;
        }
    }
    return true;
}

HSet::HSet(std::set<Coord> elements, int t) : elements_(std::move(elements)), t_(t) {
    require_odd_t(t);
    if (!is_t_compact(elements_, t)) {
        throw std::invalid_argument("set is not " + std::to_string(t) + "-compact");
    }
}

UCoding::UCoding(std::vector<Coord> values, int t) : values_(std::move(values)), t_(t) {
    require_odd_t(t);
    require_length(values_, t, "U-coding");
    if (values_[0] != -t) {
        throw std::invalid_argument("U-coding must start with u_0 = -t");
    }
    for (int i = 1; i < t; ++i) {
        const Coord u = values_[static_cast<std::size_t>(i)];
        if (floor_mod(u, t) != i || u <= -t) {
            throw std::invalid_argument("U-coding entry u_" + std::to_string(i) + " = " + std::to_string(u) +
                                        " violates u_i ≡ i (mod t), u_i > -t");
        }
    }
    if (floor_mod(sum(), t) != 0) {
        throw std::invalid_argument("U-coding sum must be divisible by t");
    }
}

Coord UCoding::sum() const { return sum_of(values_); }

VCoding::VCoding(std::vector<Coord> values, int t) : values_(std::move(values)), t_(t) {
    require_odd_t(t);
    require_length(values_, t, "V-coding");
    for (int i = 0; i < t; ++i) {
        if (floor_mod(values_[static_cast<std::size_t>(i)], t) != i) {
            throw std::invalid_argument("V-coding entry v_" + std::to_string(i) + " is not ≡ " + std::to_string(i) +
                                        " (mod t)");
        }
    }
    if (sum_of(values_) != 0) {
        throw std::invalid_argument("V-coding entries must sum to zero");
    }
}

NCoding::NCoding(std::vector<Coord> values, int t) : values_(std::move(values)), t_(t) {
    require_positive_t(t);
    require_length(values_, t, "N-coding");
    if (sum_of(values_) != 0) {
        throw std::invalid_argument("N-coding entries must sum to zero");
    }
}

HSet h_set(const Partition& p, int t) {
    require_odd_t(t);
    require_core(p, t);
    std::set<Coord> elements;
    const int len = p.length();
    for (int i = 1; i <= len; ++i) {
        elements.insert(p.row(i) + len - i);
    }
    for (Coord a = -t; a <= -1; ++a) {
        elements.insert(a);
    }
    return HSet(std::move(elements), t);
}

UCoding max_t(const HSet& a) {
    const int t = a.t();
    std::vector<Coord> u(static_cast<std::size_t>(t), std::numeric_limits<Coord>::min());
    for (Coord x : a.elements()) {
        auto& slot = u[static_cast<std::size_t>(floor_mod(x, t))];
        slot = std::max(slot, x);
    }
    return UCoding(std::move(u), t);
}

UCoding u_coding(const Partition& p, int t) { return max_t(h_set(p, t)); }

VCoding phi_v(const Partition& p, int t) {
    const UCoding u = u_coding(p, t);
    const Coord shift = u.sum() / t;
    std::vector<Coord> v(static_cast<std::size_t>(t));
    for (Coord x : u.values()) {
        const Coord value = x - shift;
        v[static_cast<std::size_t>(floor_mod(value, t))] = value;
    }
    return VCoding(std::move(v), t);
}

NCoding phi_n(const Partition& p, int t) {
    require_positive_t(t);
    require_core(p, t);
    // Box (i, j) carries label (j - i) mod t and lies in region floor((j - i)/t) + 1.
    // The exposed box of row i sits in column λ_i (column 0 for empty rows);
    // rows ℓ+1..ℓ+t reach every label, and later rows only lower the region.
    std::vector<Coord> n(static_cast<std::size_t>(t), std::numeric_limits<Coord>::min());
    const int last_row = p.length() + t;
    for (int i = 1; i <= last_row; ++i) {
        const Coord diagonal = static_cast<Coord>(p.row(i)) - i;
        auto& slot = n[static_cast<std::size_t>(floor_mod(diagonal, t))];
        slot = std::max(slot, floor_div(diagonal, t) + 1);
    }
    return NCoding(std::move(n), t);
}

Partition partition_from_runner_tops(const std::vector<Coord>& tops, int t) {
    require_positive_t(t);
    require_length(tops, t, "runner tops");
    for (int r = 0; r < t; ++r) {
        if (floor_mod(tops[static_cast<std::size_t>(r)], t) != r) {
            throw std::invalid_argument("runner top " + std::to_string(r) + " has the wrong residue");
        }
    }
    // Every integer <= min top is occupied, so the Maya set is that half-line
    // plus finitely many beads above it.
    const Coord floor_top = *std::min_element(tops.begin(), tops.end());
    std::vector<Coord> beads;
    for (int r = 0; r < t; ++r) {
        for (Coord a = tops[static_cast<std::size_t>(r)]; a > floor_top; a -= t) {
            beads.push_back(a);
        }
    }
    std::sort(beads.begin(), beads.end(), std::greater<>());
    const Coord charge = floor_top + static_cast<Coord>(beads.size()) + 1;
    std::vector<int> parts;
    for (std::size_t k = 0; k < beads.size(); ++k) {
        const Coord part = beads[k] + static_cast<Coord>(k + 1) - charge;
        if (part > 0) {
            parts.push_back(static_cast<int>(part));
        }
    }
    return Partition(std::move(parts));
}

Partition phi_n_inverse(const NCoding& n) {
    const int t = n.t();
    std::vector<Coord> tops(static_cast<std::size_t>(t));
    for (int r = 0; r < t; ++r) {
        tops[static_cast<std::size_t>(r)] = t * n[static_cast<std::size_t>(r)] + r - t;
    }
    return partition_from_runner_tops(tops, t);
}

VCoding phi_v_from_n(const NCoding& n) {
    const int t = n.t();
    require_odd_t(t);
    const int half = (t - 1) / 2;
    std::vector<Coord> v(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) {
        const auto slot = static_cast<std::size_t>(i);
        if (i <= half) {
            v[slot] = t * n[static_cast<std::size_t>(i + half)] + i;
        } else {
            v[slot] = t * n[static_cast<std::size_t>(i - half - 1)] + i - t;
        }
    }
    return VCoding(std::move(v), t);
}

NCoding phi_n_from_v(const VCoding& v) {
    const int t = v.t();
    const int half = (t - 1) / 2;
    std::vector<Coord> n(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) {
        const Coord vi = v[static_cast<std::size_t>(i)];
        if (i <= half) {
            n[static_cast<std::size_t>(i + half)] = (vi - i) / t;
        } else {
            n[static_cast<std::size_t>(i - half - 1)] = (vi - i + t) / t;
        }
    }
    return NCoding(std::move(n), t);
}

Partition phi_v_inverse(const VCoding& v) { return phi_n_inverse(phi_n_from_v(v)); }

std::int64_t core_weight_from_v(const VCoding& v) {
    const int t = v.t();
    Integer squares = 0;
    for (Coord x : v.values()) {
        squares += Integer(x) * Integer(x);
    }
    const Rational weight = make_rational(squares, 2 * t) - make_rational(t * t - 1, 24);
    if (!is_integer(weight) || weight < 0) {
        throw std::domain_error("V-coding weight " + to_display_string(weight) + " is not a non-negative integer");
    }
    return weight.get_num().get_si();
}

std::int64_t core_weight_from_n(const NCoding& n) {
    const int t = n.t();
    Coord squares = 0;
    Coord linear = 0;
    for (int i = 0; i < t; ++i) {
        const Coord x = n[static_cast<std::size_t>(i)];
        squares += x * x;
        linear += i * x;
    }
    // Σ n_i = 0 forces Σ n_i² even, so the division is exact.
    return t * squares / 2 + linear;
}

Rational macdonald_constant(int t) {
    require_odd_t(t);
    Integer denominator = 1;
    for (int k = 1; k < t; ++k) {
        denominator *= factorial(k);
    }
    const int half = (t - 1) / 2;
    Rational out(half % 2 == 0 ? 1 : -1, 1);
    out /= denominator;
    return out;
}

Integer vandermonde(const std::vector<Coord>& values) {
    Integer out = 1;
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            out *= Integer(values[i]) - Integer(values[j]);
        }
    }
    return out;
}

Rational core_hook_product(const Partition& p, int t) {
    require_positive_t(t);
    require_core(p, t);
    Rational out = 1;
    const Integer t2 = Integer(t) * t;
    for (const auto& [h, count] : hook_lengths(p).counts()) {
        const Integer h2 = Integer(h) * h;
        const Rational factor = make_rational(h2 - t2, h2);
        for (int k = 0; k < count; ++k) {
            out *= factor;
        }
    }
    return out;
}

Rational core_hook_product_from_v(const VCoding& v) {
    return macdonald_constant(v.t()) * Rational(vandermonde(v.values()));
}

std::vector<VCoding> enumerate_v_codings(int t, Coord square_sum_bound) {
    require_odd_t(t);
    std::vector<VCoding> out;
    if (square_sum_bound < 0) {
        return out;
    }
    const auto radius = static_cast<Coord>(std::sqrt(static_cast<double>(square_sum_bound))) + 1;
    std::vector<Coord> current(static_cast<std::size_t>(t));
    // Choose v_0..v_{t-2}; the zero-sum condition fixes v_{t-1}, whose
    // residue is automatically t-1 for odd t.
    std::function<void(int, Coord, Coord)> descend = [&](int i, Coord partial_sum, Coord partial_squares) {
        if (i == t - 1) {
            const Coord last = -partial_sum;
            if (partial_squares + last * last <= square_sum_bound) {
                current[static_cast<std::size_t>(i)] = last;
                out.emplace_back(current, t);
            }
            return;
        }
        const Coord start = -radius + floor_mod(i + radius, t);
        for (Coord x = start; x <= radius; x += t) {
            if (partial_squares + x * x > square_sum_bound) {
                continue;
            }
            current[static_cast<std::size_t>(i)] = x;
            descend(i + 1, partial_sum + x, partial_squares + x * x);
        }
    };
    if (t == 1) {
        out.emplace_back(std::vector<Coord>{0}, 1);
        return out;
    }
    descend(0, 0, 0);
    return out;
}

Partition erase_first_column(const Partition& p) {
    std::vector<int> parts;
    for (int part : p.parts()) {
        if (part > 1) {
            parts.push_back(part - 1);
        }
    }
    return Partition(std::move(parts));
}

}  // namespace hookid
