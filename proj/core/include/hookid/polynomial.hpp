#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "hookid/rational.hpp"

namespace hookid {

/// The indeterminates that appear in coefficients of series identities.
enum class Var : std::uint8_t { z = 0, y = 1, s = 2, b = 3 };

inline constexpr std::size_t kVarCount = 4;
inline constexpr std::array<Var, kVarCount> kAllVars{Var::z, Var::y, Var::s, Var::b};

[[nodiscard]] std::string_view var_name(Var v) noexcept;

/// Exponent vector indexed by Var, in the order z, y, s, b.
using Exponents = std::array<std::uint16_t, kVarCount>;

/// Sparse multivariate polynomial over Q in the indeterminates z, y, s, b.
/// No zero coefficient is ever stored, so equality is term-map equality.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Rational>;

    Polynomial() = default;
    Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
    Polynomial(long constant);             // NOLINT(google-explicit-constructor)

    static Polynomial variable(Var v);
    static Polynomial monomial(const Exponents& exponents, const Rational& coefficient);

    [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const noexcept;
    [[nodiscard]] Rational constant_term() const;
    /// Requires is_constant(); throws std::domain_error otherwise.
    [[nodiscard]] Rational as_rational() const;

    /// Degree in v; -1 for the zero polynomial.
    [[nodiscard]] int degree(Var v) const;
    [[nodiscard]] int total_degree() const;
    /// Coefficient of v^k, a polynomial free of v.
    [[nodiscard]] Polynomial coefficient(Var v, int k) const;

    [[nodiscard]] Polynomial substitute(Var v, const Polynomial& value) const;
    [[nodiscard]] Polynomial evaluate(Var v, const Rational& value) const { return substitute(v, Polynomial(value)); }
    [[nodiscard]] Polynomial pow(unsigned exponent) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& scalar);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator-(Polynomial a);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Terms by descending total degree, e.g. "1/2*s^2 - 3/2*s".
    [[nodiscard]] std::string to_string() const;

private:
    void add_term(const Exponents& exponents, const Rational& coefficient);

    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace hookid
