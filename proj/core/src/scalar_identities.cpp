#include <stdexcept>

#include "hookid/identities.hpp"

namespace hookid {

namespace {

struct ScalarCheck {
    int size;
    Rational lhs;
    Rational rhs;
};

IdentityReport report_from(std::string identity, int bound, const std::vector<ScalarCheck>& checks) {
    IdentityReport report;
    report.identity = std::move(identity);
    report.degree = bound;
    for (const auto& check : checks) {
        if (check.lhs != check.rhs) {
            report.verified = false;
            report.first_mismatch = Mismatch{check.size, Polynomial(check.lhs), Polynomial(check.rhs)};
            break;
        }
    }
    return report;
}

void require_bound(int bound) {
    if (bound < 0) {
        throw std::invalid_argument("size bound must be non-negative");
    }
}

Rational inverse_hook_product(const HookMultiset& hooks) {
    Integer product = 1;
    for (const auto& [h, c] : hooks.counts()) {
        for (int k = 0; k < c; ++k) {
            product *= Integer(h) * h;
        }
    }
    return make_rational(1, product);
}

Integer power_of(int base, int exponent) {
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exponent));
    return out;
}

}  // namespace

IdentityReport verify_marked_hook(int n_max) {
    require_bound(n_max);
    std::vector<ScalarCheck> checks;
    for (int n = 0; n <= n_max; ++n) {
        Integer lhs = 0;
        for (const Partition& p : enumerate_partitions(n)) {
            Integer squares = 0;
            for (const auto& [h, c] : hook_lengths(p).counts()) {
                squares += Integer(h) * h * c;
            }
            const Integer f = syt_count(p);
            lhs += f * f * squares;
        }
        const Integer rhs = Integer(n) * (3 * n - 1) / 2 * factorial(n);
        checks.push_back({n, Rational(lhs), Rational(rhs)});
    }
    return report_from("marked-hook", n_max, checks);
}

IdentityReport verify_syt_square_sum(int n_max) {
    require_bound(n_max);
    std::vector<ScalarCheck> checks;
    for (int n = 0; n <= n_max; ++n) {
        Integer lhs = 0;
        for (const Partition& p : enumerate_partitions(n)) {
            const Integer f = syt_count(p);
            lhs += f * f;
        }
        checks.push_back({n, Rational(lhs), Rational(factorial(n))});
    }
    return report_from("syt-square-sum", n_max, checks);
}

Rational restricted_inverse_hook_sum(int n, int m, int t) {
    if (n < 0 || m < 0 || t < 1) {
        throw std::invalid_argument("restricted_inverse_hook_sum needs n, m >= 0 and t >= 1");
    }
    Rational total = 0;
    for (const Partition& p : enumerate_partitions(t * n + m)) {
        const HookMultiset hooks = hook_lengths_mod_t(p, t);
        if (hooks.total() == n) {
            total += inverse_hook_product(hooks);
        }
    }
    return total;
}

IdentityReport verify_tcore_inverse_hook(int size_max, int t) {
    require_bound(size_max);
    std::vector<ScalarCheck> checks;
    for (int n = 0; t * n <= size_max; ++n) {
        const Rational rhs = make_rational(1, power_of(t, n) * factorial(n));
        checks.push_back({t * n, restricted_inverse_hook_sum(n, 0, t), rhs});
    }
    return report_from(identity_label("tcore-inverse-hook", t), size_max, checks);
}

IdentityReport verify_tcore_inverse_hook_shifted(int size_max, int t) {
    require_bound(size_max);
    std::vector<ScalarCheck> checks;
    for (int size = 0; size <= size_max; ++size) {
        for (int n = 0; t * n <= size; ++n) {
            const int m = size - t * n;
            const Rational rhs = make_rational(count_t_cores(m, t), power_of(t, n) * factorial(n));
            checks.push_back({size, restricted_inverse_hook_sum(n, m, t), rhs});
        }
    }
    return report_from(identity_label("tcore-inverse-hook-shifted", t), size_max, checks);
}

IdentityReport verify_marked_tcore(int size_max, int t) {
    require_bound(size_max);
    std::vector<ScalarCheck> checks;
    for (int n = 1; t * n <= size_max; ++n) {
        Rational lhs = 0;
        for (const Partition& p : enumerate_partitions(t * n)) {
            const HookMultiset hooks = hook_lengths_mod_t(p, t);
            if (hooks.total() != n) {
                continue;
            }
            Integer squares = 0;
            for (const auto& [h, c] : hooks.counts()) {
                squares += Integer(h) * h * c;
            }
            lhs += inverse_hook_product(hooks) * Rational(squares);
        }
        // The t^{n-1} comes from the coefficient of (-z)^{n-1} in ∏_{H_t}(1 - tz/h²);
        // without it the closed form only holds for t = 1.
        const Rational rhs = make_rational(3 * n - 3 + 2 * t, 2 * power_of(t, n - 1) * factorial(n - 1));
        checks.push_back({t * n, lhs, rhs});
    }
    return report_from(identity_label("marked-tcore", t), size_max, checks);
}

bool verify_scalar_hook_sums(int n_max, int t) {
    const int size_max = t * n_max;
    return verify_marked_hook(n_max).verified && verify_syt_square_sum(n_max).verified &&
           verify_tcore_inverse_hook(size_max, t).verified && verify_tcore_inverse_hook_shifted(size_max, t).verified &&
           verify_marked_tcore(size_max, t).verified;
}

}  // namespace hookid
