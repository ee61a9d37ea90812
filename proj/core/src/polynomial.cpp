#include "hookid/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace hookid {

std::string_view var_name(Var v) noexcept {
    switch (v) {
        case Var::z: return "z";
        case Var::y: return "y";
        case Var::s: return "s";
        case Var::b: return "b";
    }
    return "?";
}

namespace {

constexpr std::size_t index_of(Var v) noexcept { return static_cast<std::size_t>(v); }

int total(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

}  // namespace

Polynomial::Polynomial(const Rational& constant) {
    add_term(Exponents{}, constant);
}

Polynomial::Polynomial(long constant) : Polynomial(Rational(constant)) {}

Polynomial Polynomial::variable(Var v) {
    Exponents e{};
    e[index_of(v)] = 1;
    return monomial(e, 1);
}

Polynomial Polynomial::monomial(const Exponents& exponents, const Rational& coefficient) {
    Polynomial out;
    out.add_term(exponents, coefficient);
    return out;
}

void Polynomial::add_term(const Exponents& exponents, const Rational& coefficient) {
    if (coefficient == 0) {
        return;
    }
    Rational c = coefficient;
    c.canonicalize();
    auto [it, inserted] = terms_.try_emplace(exponents, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

bool Polynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

Rational Polynomial::constant_term() const {
    auto it = terms_.find(Exponents{});
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::as_rational() const {
    if (!is_constant()) {
        throw std::domain_error("polynomial " + to_string() + " is not a constant");
    }
    return constant_term();
}

int Polynomial::degree(Var v) const {
    int out = -1;
    for (const auto& [e, c] : terms_) {
        out = std::max(out, static_cast<int>(e[index_of(v)]));
    }
    return out;
}

int Polynomial::total_degree() const {
    int out = -1;
    for (const auto& [e, c] : terms_) {
        out = std::max(out, total(e));
    }
    return out;
}

Polynomial Polynomial::coefficient(Var v, int k) const {
    Polynomial out;
    for (const auto& [e, c] : terms_) {
        if (e[index_of(v)] == k) {
            Exponents reduced = e;
            reduced[index_of(v)] = 0;
            out.add_term(reduced, c);
        }
    }
    return out;
}

Polynomial Polynomial::substitute(Var v, const Polynomial& value) const {
    const int deg = degree(v);
    if (deg <= 0) {
        return *this;
    }
    // Horner in v over coefficient polynomials.
    Polynomial out = coefficient(v, deg);
    for (int k = deg - 1; k >= 0; --k) {
        out = out * value + coefficient(v, k);
    }
    return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result(1L);
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1U) {
            result *= base;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            base *= base;
        }
    }
    return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) {
        add_term(e, c);
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) {
        add_term(e, -c);
    }
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) {
        c *= scalar;
    }
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    if (a.is_zero() || b.is_zero()) {
        return out;
    }
    // Constant fast path; most coefficients in rational identities are constants.
    if (b.is_constant()) {
        return a * b.constant_term();
    }
    if (a.is_constant()) {
        return b * a.constant_term();
    }
    Rational product;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e;
            for (std::size_t i = 0; i < kVarCount; ++i) {
                e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
            }
            product = ca * cb;
            out.add_term(e, product);
        }
    }
    return out;
}

Polynomial operator-(Polynomial a) {
    for (auto& [e, c] : a.terms_) {
        c = -c;
    }
    return a;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::vector<const TermMap::value_type*> ordered;
    ordered.reserve(terms_.size());
    for (const auto& term : terms_) {
        ordered.push_back(&term);
    }
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto* a, const auto* b) {
        const int ta = total(a->first);
        const int tb = total(b->first);
        if (ta != tb) {
            return ta > tb;
        }
        return a->first > b->first;
    });

    std::string out;
    bool first = true;
    for (const auto* term : ordered) {
        const auto& [e, c] = *term;
        const bool negative = c < 0;
        const Rational magnitude = abs(c);
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;

        std::string monomial;
        for (Var v : kAllVars) {
            const auto power = e[index_of(v)];
            if (power == 0) {
                continue;
            }
            if (!monomial.empty()) {
                monomial += '*';
            }
            monomial += var_name(v);
            if (power > 1) {
                monomial += '^' + std::to_string(power);
            }
        }
        if (monomial.empty()) {
            out += to_display_string(magnitude);
        } else if (magnitude == 1) {
            out += monomial;
        } else {
            out += to_display_string(magnitude) + "*" + monomial;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.to_string();
}

}  // namespace hookid
