#include "hookid/series.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace hookid {

namespace {

std::size_t idx(int n) { return static_cast<std::size_t>(n); }

void require_same_degree(const TruncatedSeries& a, const TruncatedSeries& b, const char* op) {
    if (a.degree() != b.degree()) {
        throw std::invalid_argument(std::string(op) + ": truncation degrees differ (" +
                                    std::to_string(a.degree()) + " vs " + std::to_string(b.degree()) + ")");
    }
}

void require_zero_constant(const TruncatedSeries& a, const char* op) {
    if (!a[0].is_zero()) {
        throw std::domain_error(std::string(op) + ": constant term must be zero");
    }
}

void require_unit_constant(const TruncatedSeries& a, const char* op) {
    if (a[0] != Polynomial(1L)) {
        throw std::domain_error(std::string(op) + ": constant term must be 1");
    }
}

}  // namespace

TruncatedSeries::TruncatedSeries(int degree) {
    if (degree < 0) {
        throw std::invalid_argument("truncation degree must be non-negative");
    }
    coeffs_.resize(idx(degree) + 1);
}

TruncatedSeries::TruncatedSeries(int degree, std::vector<Polynomial> coefficients) : TruncatedSeries(degree) {
    if (coefficients.size() > coeffs_.size()) {
        throw std::invalid_argument("more coefficients than the truncation degree allows");
    }
    std::move(coefficients.begin(), coefficients.end(), coeffs_.begin());
}

TruncatedSeries TruncatedSeries::one(int degree) {
    return monomial(degree, Polynomial(1L), 0);
}

TruncatedSeries TruncatedSeries::monomial(int degree, const Polynomial& c, int power) {
    TruncatedSeries out(degree);
    if (power < 0) {
        throw std::invalid_argument("negative power of x");
    }
    if (power <= degree) {
        out[power] = c;
    }
    return out;
}

TruncatedSeries TruncatedSeries::substitute(Var v, const Polynomial& value) const {
    TruncatedSeries out(degree());
    for (int n = 0; n <= degree(); ++n) {
        out[n] = (*this)[n].substitute(v, value);
    }
    return out;
}

TruncatedSeries TruncatedSeries::coefficient_in(Var v, int k) const {
    TruncatedSeries out(degree());
    for (int n = 0; n <= degree(); ++n) {
        out[n] = (*this)[n].coefficient(v, k);
    }
    return out;
}

TruncatedSeries TruncatedSeries::truncate(int new_degree) const {
    if (new_degree > degree()) {
        throw std::invalid_argument("cannot extend a truncated series");
    }
    return TruncatedSeries(new_degree, {coeffs_.begin(), coeffs_.begin() + new_degree + 1});
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    require_same_degree(*this, rhs, "add");
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        coeffs_[n] += rhs.coeffs_[n];
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
    require_same_degree(*this, rhs, "subtract");
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        coeffs_[n] -= rhs.coeffs_[n];
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& rhs) {
    *this = *this * rhs;
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Polynomial& scalar) {
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_degree(a, b, "multiply");
    const int N = a.degree();
    TruncatedSeries out(N);
    for (int i = 0; i <= N; ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (int j = 0; i + j <= N; ++j) {
            if (!b[j].is_zero()) {
                out[i + j] += a[i] * b[j];
            }
        }
    }
    return out;
}

TruncatedSeries operator-(TruncatedSeries a) {
    for (auto& c : a.coeffs_) {
        c = -c;
    }
    return a;
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& a) {
    bool first = true;
    for (int n = 0; n <= a.degree(); ++n) {
        if (a[n].is_zero()) {
            continue;
        }
        if (!first) {
            os << " + ";
        }
        first = false;
        os << '(' << a[n] << ")*x^" << n;
    }
    if (first) {
        os << '0';
    }
    return os << " + O(x^" << a.degree() + 1 << ')';
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }
TruncatedSeries subtract(const TruncatedSeries& a, const TruncatedSeries& b) { return a - b; }
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }
TruncatedSeries scale(const TruncatedSeries& a, const Polynomial& c) { return a * c; }

Polynomial extract_coefficient(const TruncatedSeries& a, int n) {
    if (n < 0 || n > a.degree()) {
        throw std::out_of_range("coefficient x^" + std::to_string(n) + " is beyond truncation degree " +
                                std::to_string(a.degree()));
    }
    return a[n];
}

TruncatedSeries exp_series(const TruncatedSeries& a) {
    require_zero_constant(a, "exp_series");
    const int N = a.degree();
    TruncatedSeries out(N);
    out[0] = Polynomial(1L);
    // n e_n = Σ_{k=1}^{n} k a_k e_{n-k}, from E' = A'E.
    for (int n = 1; n <= N; ++n) {
        Polynomial acc;
        for (int k = 1; k <= n; ++k) {
            if (!a[k].is_zero() && !out[n - k].is_zero()) {
                acc += a[k] * out[n - k] * Rational(k);
            }
        }
        out[n] = acc * Rational(1, n);
    }
    return out;
}

TruncatedSeries log_series(const TruncatedSeries& a) {
    require_unit_constant(a, "log_series");
    const int N = a.degree();
    TruncatedSeries out(N);
    // n l_n = n a_n - Σ_{k=1}^{n-1} k l_k a_{n-k}, from A L' = A'.
    for (int n = 1; n <= N; ++n) {
        Polynomial acc = a[n] * Rational(n);
        for (int k = 1; k < n; ++k) {
            if (!out[k].is_zero() && !a[n - k].is_zero()) {
                acc -= out[k] * a[n - k] * Rational(k);
            }
        }
        out[n] = acc * Rational(1, n);
    }
    return out;
}

TruncatedSeries reciprocal(const TruncatedSeries& a) {
    if (!a[0].is_constant() || a[0].is_zero()) {
        throw std::domain_error("reciprocal: constant term must be a nonzero rational");
    }
    const Rational inv = 1 / a[0].constant_term();
    const int N = a.degree();
    TruncatedSeries out(N);
    out[0] = Polynomial(inv);
    for (int n = 1; n <= N; ++n) {
        Polynomial acc;
        for (int k = 1; k <= n; ++k) {
            if (!a[k].is_zero() && !out[n - k].is_zero()) {
                acc += a[k] * out[n - k];
            }
        }
        out[n] = acc * Rational(-inv);
    }
    return out;
}

TruncatedSeries power(const TruncatedSeries& a, const Polynomial& exponent) {
    require_unit_constant(a, "power");
    return exp_series(log_series(a) * exponent);
}

TruncatedSeries power(const TruncatedSeries& a, long exponent) {
    TruncatedSeries base = exponent < 0 ? reciprocal(a) : a;
    unsigned long remaining = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
    TruncatedSeries result = TruncatedSeries::one(a.degree());
    while (remaining > 0) {
        if (remaining & 1UL) {
            result *= base;
        }
        remaining >>= 1U;
        if (remaining > 0) {
            base *= base;
        }
    }
    return result;
}

TruncatedSeries compose(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_degree(a, b, "compose");
    require_zero_constant(b, "compose");
    const int N = a.degree();
    TruncatedSeries out = TruncatedSeries::monomial(N, a[N], 0);
    for (int n = N - 1; n >= 0; --n) {
        out = out * b;
        out[0] += a[n];
    }
    return out;
}

TruncatedSeries revert(const TruncatedSeries& a) {
    require_zero_constant(a, "revert");
    const int N = a.degree();
    TruncatedSeries out(N);
    if (N == 0) {
        return out;
    }
    if (a[1] != Polynomial(1L) && a[1] != Polynomial(-1L)) {
        throw std::domain_error("revert: linear coefficient must be 1 or -1");
    }
    // a = x / phi, so [x^n] y = (1/n) [x^{n-1}] phi^n.
    TruncatedSeries quotient(N - 1);
    for (int k = 0; k < N; ++k) {
        quotient[k] = a[k + 1];
    }
    const TruncatedSeries phi = reciprocal(quotient);
    TruncatedSeries phi_power = phi;
    for (int n = 1; n <= N; ++n) {
        out[n] = phi_power[n - 1] * Rational(1, n);
        if (n < N) {
            phi_power *= phi;
        }
    }
    return out;
}

void multiply_binomial(TruncatedSeries& a, const Polynomial& c, int m) {
    if (m < 1) {
        throw std::invalid_argument("binomial exponent must be positive");
    }
    for (int n = a.degree(); n >= m; --n) {
        if (!a[n - m].is_zero()) {
            a[n] += c * a[n - m];
        }
    }
}

void divide_binomial(TruncatedSeries& a, const Polynomial& c, int m) {
    if (m < 1) {
        throw std::invalid_argument("binomial exponent must be positive");
    }
    for (int n = m; n <= a.degree(); ++n) {
        if (!a[n - m].is_zero()) {
            a[n] += c * a[n - m];
        }
    }
}

TruncatedSeries euler_product_log(int degree, int step) {
    if (step < 1) {
        throw std::invalid_argument("step must be positive");
    }
    TruncatedSeries out(degree);
    // log(1 - x^m) = -Σ_j x^{mj} / j
    for (int m = step; m <= degree; m += step) {
        for (int j = 1; m * j <= degree; ++j) {
            out[m * j] -= Polynomial(Rational(1, j));
        }
    }
    return out;
}

TruncatedSeries euler_product_power(const Polynomial& s, int degree, int step) {
    return exp_series(euler_product_log(degree, step) * s);
}

TruncatedSeries euler_product_power_by_multiplication(long s, int degree, int step) {
    if (step < 1) {
        throw std::invalid_argument("step must be positive");
    }
    TruncatedSeries out = TruncatedSeries::one(degree);
    const long times = s < 0 ? -s : s;
    for (long rep = 0; rep < times; ++rep) {
        for (int m = step; m <= degree; m += step) {
            if (s > 0) {
                multiply_binomial(out, Polynomial(-1L), m);
            } else {
                divide_binomial(out, Polynomial(1L), m);
            }
        }
    }
    return out;
}

}  // namespace hookid
