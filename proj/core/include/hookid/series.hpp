#pragma once

#include <iosfwd>
#include <vector>

#include "hookid/polynomial.hpp"

namespace hookid {

/// Power series in x carried exactly through x^N, with Polynomial coefficients.
/// Binary operations require both operands to share the same N.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int degree);
    TruncatedSeries(int degree, std::vector<Polynomial> coefficients);

    static TruncatedSeries zero(int degree) { return TruncatedSeries(degree); }
    static TruncatedSeries one(int degree);
    /// c * x^power (zero if power > degree).
    static TruncatedSeries monomial(int degree, const Polynomial& c, int power);

    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] const Polynomial& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    Polynomial& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }
    [[nodiscard]] const std::vector<Polynomial>& coefficients() const noexcept { return coeffs_; }

    /// Apply a substitution to every coefficient.
    [[nodiscard]] TruncatedSeries substitute(Var v, const Polynomial& value) const;
    [[nodiscard]] TruncatedSeries evaluate(Var v, const Rational& value) const { return substitute(v, Polynomial(value)); }
    /// Coefficient of v^k in every x-coefficient.
    [[nodiscard]] TruncatedSeries coefficient_in(Var v, int k) const;
    /// Re-truncate to a smaller degree.
    [[nodiscard]] TruncatedSeries truncate(int degree) const;

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(const Polynomial& scalar);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(TruncatedSeries a, const Polynomial& c) { return a *= c; }
    friend TruncatedSeries operator*(const Polynomial& c, TruncatedSeries a) { return a *= c; }
    friend TruncatedSeries operator-(TruncatedSeries a);

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Polynomial> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& a);

/// Free-function spellings of the ring operations.
[[nodiscard]] TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
[[nodiscard]] TruncatedSeries subtract(const TruncatedSeries& a, const TruncatedSeries& b);
[[nodiscard]] TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);
[[nodiscard]] TruncatedSeries scale(const TruncatedSeries& a, const Polynomial& c);

/// Coefficient of x^n; throws std::out_of_range when n > N.
[[nodiscard]] Polynomial extract_coefficient(const TruncatedSeries& a, int n);

/// Σ a^j / j!; the constant term of a must be zero.
[[nodiscard]] TruncatedSeries exp_series(const TruncatedSeries& a);
/// log(a); the constant term of a must be 1.
[[nodiscard]] TruncatedSeries log_series(const TruncatedSeries& a);
/// 1/a; the constant term of a must be a nonzero rational.
[[nodiscard]] TruncatedSeries reciprocal(const TruncatedSeries& a);
/// a^e = exp(e log a) for a symbolic exponent e; the constant term of a must be 1.
[[nodiscard]] TruncatedSeries power(const TruncatedSeries& a, const Polynomial& exponent);
/// a^e by repeated multiplication (and a reciprocal for e < 0).
[[nodiscard]] TruncatedSeries power(const TruncatedSeries& a, long exponent);

/// a(b(x)); b must have zero constant term.
[[nodiscard]] TruncatedSeries compose(const TruncatedSeries& a, const TruncatedSeries& b);
/// Compositional inverse y(x) with a(y(x)) = x, by Lagrange inversion.
/// Requires a_0 = 0 and a_1 = ±1.
[[nodiscard]] TruncatedSeries revert(const TruncatedSeries& a);

/// a * (1 + c x^m), in place.
void multiply_binomial(TruncatedSeries& a, const Polynomial& c, int m);
/// a / (1 - c x^m), in place.
void divide_binomial(TruncatedSeries& a, const Polynomial& c, int m);

/// ∏_{k≥1} (1 - x^{step·k})^s through x^N, via exp(s Σ log(1 - x^{step·k})).
[[nodiscard]] TruncatedSeries euler_product_power(const Polynomial& s, int degree, int step = 1);
/// Same product for an integer exponent, by repeated binomial multiplication or division.
[[nodiscard]] TruncatedSeries euler_product_power_by_multiplication(long s, int degree, int step = 1);
/// Σ_{k≥1} log(1 - x^{step·k}) through x^N.
[[nodiscard]] TruncatedSeries euler_product_log(int degree, int step = 1);

}  // namespace hookid
