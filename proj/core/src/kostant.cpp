#include <algorithm>
#include <stdexcept>

#include "hookid/identities.hpp"

namespace hookid {

namespace {

Polynomial signed_coefficient(const TruncatedSeries& euler_power, int k) {
    return k % 2 == 0 ? euler_power[k] : -euler_power[k];
}

void require_positive(int bound, const char* what) {
    if (bound < 1) {
        throw std::invalid_argument(std::string(what) + " must be at least 1");
    }
}

}  // namespace

Polynomial euler_power_coefficient(int k) {
    if (k < 0) {
        throw std::invalid_argument("coefficient index must be non-negative");
    }
    return euler_product_power(Polynomial::variable(Var::s), k)[k];
}

Polynomial kostant_weight(const Partition& p) {
    const Polynomial s = Polynomial::variable(Var::s);
    return hook_product(hook_lengths(p), [&](int h) {
        const Integer h2 = Integer(h) * h;
        return (s + Polynomial(Rational(1 - h2))) * make_rational(1, h2);
    });
}

Polynomial kostant_weight_sum(int k) {
    Polynomial total;
    for (const Partition& p : enumerate_partitions(k)) {
        total += kostant_weight(p);
    }
    return total;
}

IdentityReport verify_kostant_weights(int k_max) {
    const TruncatedSeries euler_power = euler_product_power(Polynomial::variable(Var::s), k_max);
    TruncatedSeries lhs(k_max);
    for (int k = 0; k <= k_max; ++k) {
        lhs[k] = signed_coefficient(euler_power, k);
    }
    return compare_sides("kostant-weights", {std::move(lhs), partition_sum(k_max, kostant_weight)});
}

std::vector<KostantSample> kostant_samples(int k_max) {
    require_positive(k_max, "k_max");
    const TruncatedSeries euler_power = euler_product_power(Polynomial::variable(Var::s), k_max);
    std::vector<KostantSample> out;
    for (int k = 1; k <= k_max; ++k) {
        KostantSample sample;
        sample.k = k;
        sample.s = Rational(k * k - 1);
        sample.signed_value = signed_coefficient(euler_power, k).evaluate(Var::s, sample.s).as_rational();
        bool first = true;
        for (const Partition& p : enumerate_partitions(k)) {
            const Rational w = kostant_weight(p).evaluate(Var::s, sample.s).as_rational();
            if (first || w < sample.min_weight) {
                sample.min_weight = w;
                first = false;
            }
        }
        out.push_back(std::move(sample));
    }
    return out;
}

namespace {

// First k at which the positivity claims fail, with the offending value.
std::optional<std::pair<int, Rational>> first_positivity_failure(int k_max) {
    if (euler_power_coefficient(3).evaluate(Var::s, Rational(8)).as_rational() != 0) {
        return std::make_pair(3, euler_power_coefficient(3).evaluate(Var::s, Rational(8)).as_rational());
    }
    if (k_max < 4) {
        return std::nullopt;
    }
    for (const KostantSample& sample : kostant_samples(k_max)) {
        if (sample.k < 4) {
            continue;
        }
        if (sample.signed_value <= 0 || sample.min_weight < 0) {
            return std::make_pair(sample.k, sample.signed_value);
        }
    }
    return std::nullopt;
}

}  // namespace

bool kostant_positivity(int k_max) { return !first_positivity_failure(k_max).has_value(); }

IdentityReport verify_kostant_positivity(int k_max) {
    IdentityReport report;
    report.identity = "kostant-positivity";
    report.degree = k_max;
    if (const auto failure = first_positivity_failure(k_max)) {
        report.verified = false;
        report.first_mismatch = Mismatch{failure->first, Polynomial(failure->second), Polynomial()};
    }
    return report;
}

TruncatedSeries euler_reversion_by_lagrange(int degree) {
    require_positive(degree, "reversion degree");
    const TruncatedSeries euler = euler_product_power_by_multiplication(1, degree);
    TruncatedSeries a(degree);
    for (int n = 1; n <= degree; ++n) {
        a[n] = euler[n - 1];
    }
    return revert(a);
}

TruncatedSeries euler_reversion_by_hooks(int degree) {
    require_positive(degree, "reversion degree");
    TruncatedSeries out(degree);
    for (int n = 1; n <= degree; ++n) {
        Rational total = 0;
        for (const Partition& p : enumerate_partitions(n - 1)) {
            Rational product = 1;
            for (const auto& [h, c] : hook_lengths(p).counts()) {
                const Rational factor = 1 + make_rational(n - 1, Integer(h) * h);
                for (int k = 0; k < c; ++k) {
                    product *= factor;
                }
            }
            total += product;
        }
        out[n] = Polynomial(Rational(total / n));
    }
    return out;
}

IdentityReport verify_euler_reversion(int degree) {
    IdentityReport report =
        compare_sides("euler-reversion", {euler_reversion_by_lagrange(degree), euler_reversion_by_hooks(degree)});
    if (!report.verified) {
        return report;
    }
    const TruncatedSeries y = euler_reversion_by_lagrange(degree);
    for (int n = 1; n <= degree; ++n) {
        const Rational c = y[n].as_rational();
        if (!is_integer(c) || c <= 0) {
            report.verified = false;
            report.first_mismatch = Mismatch{n, y[n], Polynomial(Rational(c.get_num() / c.get_den()))};
            break;
        }
    }
    return report;
}

IdentityReport verify_hook_integrality(int bound) {
    require_positive(bound, "integrality bound");
    IdentityReport report;
    report.identity = "hook-integrality";
    report.degree = bound;
    const Polynomial s = Polynomial::variable(Var::s);
    // Σ_{λ⊢n} ∏(1 + s/h²) once per n, then specialized.
    std::vector<Polynomial> hook_sums(static_cast<std::size_t>(bound) + 1);
    for (int n = 0; n <= bound; ++n) {
        for (const Partition& p : enumerate_partitions(n)) {
            hook_sums[static_cast<std::size_t>(n)] += hook_product(hook_lengths(p), [&](int h) {
                return Polynomial(1L) + s * make_rational(1, Integer(h) * h);
            });
        }
    }
    auto fail = [&](int n, Rational lhs, Rational rhs) {
        report.verified = false;
        report.first_mismatch = Mismatch{n, Polynomial(std::move(lhs)), Polynomial(std::move(rhs))};
    };
    std::vector<TruncatedSeries> powers;
    for (int k = 1; k <= bound; ++k) {
        powers.push_back(euler_product_power_by_multiplication(-k - 1, bound));
    }
    for (int n = 1; n <= bound && report.verified; ++n) {
        const Polynomial& sum = hook_sums[static_cast<std::size_t>(n)];
        for (int k = 1; k <= bound; ++k) {
            const Rational value = sum.evaluate(Var::s, Rational(k)).as_rational();
            const Rational expected = powers[static_cast<std::size_t>(k - 1)][n].as_rational();
            if (value != expected || !is_integer(value)) {
                fail(n, value, expected);
                break;
            }
        }
        if (!report.verified) {
            break;
        }
        const Rational scaled = sum.evaluate(Var::s, Rational(n)).as_rational() / (n + 1);
        if (!is_integer(scaled)) {
            fail(n, scaled, Rational(scaled.get_num() / scaled.get_den()));
        }
    }
    return report;
}

}  // namespace hookid
