#include "hookid/identities.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace hookid {

namespace {

Polynomial var(Var v) { return Polynomial::variable(v); }

Rational inverse_square(int h) { return make_rational(1, Integer(h) * h); }

void require_degree(int degree) {
    if (degree < 0) {
        throw std::invalid_argument("truncation degree must be non-negative");
    }
}

void require_t(int t) {
    if (t < 1) {
        throw std::invalid_argument("t must be a positive integer");
    }
}

TruncatedSeries integer_euler_power(long s, int degree, int step = 1) {
    return euler_product_power_by_multiplication(s, degree, step);
}

// Σ_k Σ_{j>=1} c_k x^{step·k·j} with c_k = weight(k).
TruncatedSeries lambert_series(int degree, int step, const std::function<Rational(int)>& weight) {
    TruncatedSeries out(degree);
    for (int k = 1; step * k <= degree; ++k) {
        const Rational c = weight(k);
        for (int e = step * k; e <= degree; e += step * k) {
            out[e] += Polynomial(c);
        }
    }
    return out;
}

}  // namespace

IdentityReport compare_sides(std::string identity, const IdentitySides& sides) {
    if (sides.lhs.degree() != sides.rhs.degree()) {
        throw std::invalid_argument("identity sides are truncated at different degrees");
    }
    IdentityReport report;
    report.identity = std::move(identity);
    report.degree = sides.lhs.degree();
    for (int n = 0; n <= report.degree; ++n) {
        if (sides.lhs[n] != sides.rhs[n]) {
            report.verified = false;
            report.first_mismatch = Mismatch{n, sides.lhs[n], sides.rhs[n]};
            break;
        }
    }
    return report;
}

TruncatedSeries partition_sum(int degree, const PartitionWeight& weight) {
    require_degree(degree);
    TruncatedSeries out(degree);
    for (int n = 0; n <= degree; ++n) {
        Polynomial total;
        for (const Partition& p : enumerate_partitions(n)) {
            total += weight(p);
        }
        out[n] = std::move(total);
    }
    return out;
}

Polynomial hook_product(const HookMultiset& hooks, const std::function<Polynomial(int)>& factor) {
    Polynomial out(1L);
    for (const auto& [h, count] : hooks.counts()) {
        out *= factor(h).pow(static_cast<unsigned>(count));
    }
    return out;
}

TruncatedSeries lhs_hook_sum(int degree, int t, HookWeight weight) {
    require_t(t);
    switch (weight) {
        case HookWeight::nekrasov_okounkov:
            return partition_sum(degree, [](const Partition& p) {
                return hook_product(hook_lengths(p),
                                    [](int h) { return Polynomial(1L) - var(Var::z) * inverse_square(h); });
            });
        case HookWeight::extension_ty:
            return partition_sum(degree, [t](const Partition& p) {
                return hook_product(hook_lengths_mod_t(p, t), [t](int h) {
                    return var(Var::y) - var(Var::y) * var(Var::z) * (Rational(t) * inverse_square(h));
                });
            });
        case HookWeight::hook_equals_t:
            return partition_sum(degree, [t](const Partition& p) {
                return var(Var::y).pow(static_cast<unsigned>(hook_lengths(p).multiplicity(t)));
            });
    }
    throw std::logic_error("unknown hook weight");
}

TruncatedSeries scaled_euler_log(int degree, int step, const Polynomial& c) {
    require_degree(degree);
    require_t(step);
    TruncatedSeries out(degree);
    // log(1 - c^k x^{step k}) = -Σ_j c^{kj} x^{step k j} / j
    for (int k = 1; step * k <= degree; ++k) {
        for (int j = 1; step * k * j <= degree; ++j) {
            out[step * k * j] -= c.pow(static_cast<unsigned>(k * j)) * Rational(1, j);
        }
    }
    return out;
}

TruncatedSeries partition_generating_function(int degree) { return integer_euler_power(-1, degree); }

IdentitySides nekrasov_okounkov_sides(int degree) {
    return {lhs_hook_sum(degree, 1, HookWeight::nekrasov_okounkov),
            euler_product_power(var(Var::z) - Polynomial(1L), degree)};
}

IdentitySides extension_ty_sides(int degree, int t) {
    TruncatedSeries rhs = integer_euler_power(t, degree, t) * partition_generating_function(degree);
    rhs *= exp_series(scaled_euler_log(degree, t, var(Var::y)) * (var(Var::z) - Polynomial(static_cast<long>(t))));
    return {lhs_hook_sum(degree, t, HookWeight::extension_ty), std::move(rhs)};
}

IdentitySides hook_t_count_sides(int degree, int t) {
    TruncatedSeries rhs = partition_generating_function(degree);
    const Polynomial c = var(Var::y) - Polynomial(1L);
    for (int k = 1; t * k <= degree; ++k) {
        for (int rep = 0; rep < t; ++rep) {
            multiply_binomial(rhs, c, t * k);
        }
    }
    return {lhs_hook_sum(degree, t, HookWeight::hook_equals_t), std::move(rhs)};
}

IdentitySides tcore_hook_product_sides(int degree, int t) {
    require_t(t);
    const Integer t2 = Integer(t) * t;
    TruncatedSeries lhs = partition_sum(degree, [&](const Partition& p) {
        return hook_product(hook_lengths(p), [&](int h) {
            return Polynomial(make_rational(Integer(h) * h - t2, Integer(h) * h));
        });
    });
    return {std::move(lhs), integer_euler_power(static_cast<long>(t) * t - 1, degree)};
}

IdentitySides tcore_count_sides(int degree, int t) {
    require_t(t);
    TruncatedSeries lhs =
        partition_sum(degree, [t](const Partition& p) { return Polynomial(is_t_core(p, t) ? 1L : 0L); });
    return {std::move(lhs), integer_euler_power(t, degree, t) * partition_generating_function(degree)};
}

IdentitySides doubled_hook_t_sides(int degree, int t) {
    require_t(t);
    TruncatedSeries lhs = partition_sum(degree, [t](const Partition& p) {
        return Polynomial(2L).pow(static_cast<unsigned>(hook_lengths(p).multiplicity(t)));
    });
    TruncatedSeries rhs = partition_generating_function(degree);
    for (int k = 1; t * k <= degree; ++k) {
        for (int rep = 0; rep < t; ++rep) {
            multiply_binomial(rhs, Polynomial(1L), t * k);
        }
    }
    return {std::move(lhs), std::move(rhs)};
}

IdentitySides pentagonal_hook_sides(int degree) {
    TruncatedSeries lhs = partition_sum(degree, [](const Partition& p) {
        return hook_product(hook_lengths(p), [](int h) { return Polynomial(1 - 2 * inverse_square(h)); });
    });
    return {std::move(lhs), integer_euler_power(1, degree)};
}

IdentitySides distinct_parts_hook_sides(int degree) {
    TruncatedSeries lhs = partition_sum(degree, [](const Partition& p) {
        return hook_product(hook_lengths_mod_t(p, 2), [](int h) { return Polynomial(1 - 2 * inverse_square(h)); });
    });
    TruncatedSeries rhs = TruncatedSeries::one(degree);
    for (int k = 1; k <= degree; ++k) {
        multiply_binomial(rhs, Polynomial(1L), k);
    }
    return {std::move(lhs), std::move(rhs)};
}

IdentitySides hook_t_marker_sides(int degree, int t) {
    require_t(t);
    TruncatedSeries lhs = partition_sum(degree, [t](const Partition& p) {
        return var(Var::y).pow(static_cast<unsigned>(hook_lengths_mod_t(p, t).total()));
    });
    TruncatedSeries rhs = integer_euler_power(t, degree, t) * partition_generating_function(degree);
    rhs *= exp_series(scaled_euler_log(degree, t, var(Var::y)) * Polynomial(static_cast<long>(-t)));
    return {std::move(lhs), std::move(rhs)};
}

IdentitySides signed_hook_t_sides(int degree, int t) {
    require_t(t);
    TruncatedSeries lhs = partition_sum(degree, [t](const Partition& p) {
        return Polynomial(hook_lengths_mod_t(p, t).total() % 2 == 0 ? 1L : -1L);
    });
    TruncatedSeries rhs = integer_euler_power(t, degree, 4 * t) * integer_euler_power(2L * t, degree, t);
    rhs = rhs * integer_euler_power(-3L * t, degree, 2 * t) * partition_generating_function(degree);
    return {std::move(lhs), std::move(rhs)};
}

IdentitySides tcore_interpolation_sides(int degree, int t) {
    require_t(t);
    TruncatedSeries lhs = partition_sum(degree, [t](const Partition& p) {
        return hook_product(hook_lengths_mod_t(p, t), [t](int h) {
            return Polynomial(1L) - var(Var::z) * (Rational(t) * inverse_square(h));
        });
    });
    TruncatedSeries rhs = euler_product_power(var(Var::z), degree, t) * partition_generating_function(degree);
    return {std::move(lhs), std::move(rhs)};
}

IdentitySides six_core_sides(int degree, int t) {
    require_t(t);
    if (36 % t != 0) {
        throw std::invalid_argument("t must divide 36");
    }
    TruncatedSeries lhs = partition_sum(degree, [t](const Partition& p) {
        return hook_product(hook_lengths_mod_t(p, t), [](int h) { return Polynomial(1 - 36 * inverse_square(h)); });
    });
    return {std::move(lhs), integer_euler_power(36 / t, degree, t) * partition_generating_function(degree)};
}

IdentitySides exponential_limit_sides(int degree, int t) {
    require_t(t);
    TruncatedSeries lhs = partition_sum(degree, [t](const Partition& p) {
        return hook_product(hook_lengths_mod_t(p, t),
                            [t](int h) { return var(Var::b) * (Rational(t) * inverse_square(h)); });
    });
    TruncatedSeries rhs = exp_series(TruncatedSeries::monomial(degree, var(Var::b), t));
    rhs = rhs * integer_euler_power(t, degree, t) * partition_generating_function(degree);
    return {std::move(lhs), std::move(rhs)};
}

IdentitySides inverse_square_sum_sides(int degree, int t) {
    require_t(t);
    TruncatedSeries lhs = partition_sum(degree, [t](const Partition& p) {
        Rational total = 0;
        for (const auto& [h, c] : hook_lengths_mod_t(p, t).counts()) {
            total += c * inverse_square(h);
        }
        return Polynomial(total);
    });
    TruncatedSeries lambert = lambert_series(degree, t, [](int k) { return make_rational(1, k); });
    TruncatedSeries rhs = partition_generating_function(degree) * lambert * Polynomial(make_rational(1, t));
    return {std::move(lhs), std::move(rhs)};
}

IdentitySides odd_inverse_square_sum_sides(int degree) {
    TruncatedSeries lhs = partition_sum(degree, [](const Partition& p) {
        Rational total = 0;
        for (const auto& [h, c] : hook_lengths(p).counts()) {
            if (h % 2 == 1) {
                total += c * inverse_square(h);
            }
        }
        return Polynomial(total);
    });
    // (x^{2k} + 2x^k)/(2k(1 - x^{2k})) = (1/2k) Σ_{j>=1} x^{2kj} + (1/k) Σ_{j>=0} x^{k(2j+1)}
    TruncatedSeries sum(degree);
    for (int k = 1; k <= degree; ++k) {
        for (int e = 2 * k; e <= degree; e += 2 * k) {
            sum[e] += Polynomial(make_rational(1, 2 * k));
        }
        for (int e = k; e <= degree; e += 2 * k) {
            sum[e] += Polynomial(make_rational(1, k));
        }
    }
    return {std::move(lhs), partition_generating_function(degree) * sum};
}

IdentitySides pentagonal_sides(int degree) {
    require_degree(degree);
    TruncatedSeries rhs(degree);
    for (long m = 0;; ++m) {
        const long lower = m * (3 * m + 1) / 2;  // exponent for m
        const long upper = m * (3 * m - 1) / 2;  // exponent for -m
        if (upper > degree && lower > degree) {
            break;
        }
        const long sign = m % 2 == 0 ? 1 : -1;
        if (lower <= degree) {
            rhs[static_cast<int>(lower)] += Polynomial(sign);
        }
        if (m > 0 && upper <= degree) {
            rhs[static_cast<int>(upper)] += Polynomial(sign);
        }
    }
    return {integer_euler_power(1, degree), std::move(rhs)};
}

IdentitySides triple_product_sides(int degree) {
    require_degree(degree);
    TruncatedSeries rhs(degree);
    for (long m = 0; m * (m + 1) / 2 <= degree; ++m) {
        rhs[static_cast<int>(m * (m + 1) / 2)] += Polynomial((m % 2 == 0 ? 1 : -1) * (2 * m + 1));
    }
    return {integer_euler_power(3, degree), std::move(rhs)};
}

IdentitySides euler_exp_sides(int degree) {
    require_degree(degree);
    TruncatedSeries lambert = lambert_series(degree, 1, [](int k) { return make_rational(1, k); });
    return {exp_series(lambert), partition_generating_function(degree)};
}

Coord macdonald_square_sum_bound(int degree, int t) {
    // Σ v_i²/(2t) - (t²-1)/24 <= N  ⇔  Σ v_i² <= 2tN + t(t²-1)/12.
    return 2 * static_cast<Coord>(t) * degree + static_cast<Coord>(t) * (static_cast<Coord>(t) * t - 1) / 12;
}

IdentitySides macdonald_sides(int degree, int t, std::optional<Coord> square_sum_bound) {
    require_degree(degree);
    if (t < 1 || t % 2 == 0) {
        throw std::invalid_argument("the Macdonald identity is checked for odd t only");
    }
    const Coord bound = square_sum_bound.value_or(macdonald_square_sum_bound(degree, t));
    const Rational c0 = macdonald_constant(t);
    TruncatedSeries rhs(degree);
    for (const VCoding& v : enumerate_v_codings(t, bound)) {
        const std::int64_t n = core_weight_from_v(v);
        if (n <= degree) {
            rhs[static_cast<int>(n)] += Polynomial(c0 * Rational(vandermonde(v.values())));
        }
    }
    return {integer_euler_power(static_cast<long>(t) * t - 1, degree), std::move(rhs)};
}

TruncatedSeries macdonald_core_sum(int degree, int t) {
    return partition_sum(degree, [t](const Partition& p) {
        return is_t_core(p, t) ? Polynomial(core_hook_product(p, t)) : Polynomial();
    });
}

IdentityReport verify_nekrasov_okounkov(int degree) {
    return compare_sides(identity_label("nekrasov-okounkov", std::nullopt), nekrasov_okounkov_sides(degree));
}

IdentityReport verify_extension_ty(int degree, int t) {
    return compare_sides(identity_label("extension-ty", t), extension_ty_sides(degree, t));
}

IdentityReport verify_hook_t_count(int degree, int t) {
    return compare_sides(identity_label("hook-t-count", t), hook_t_count_sides(degree, t));
}

IdentityReport verify_macdonald_odd(int degree, int t, std::optional<Coord> square_sum_bound) {
    const std::string label = identity_label("macdonald-odd", t);
    IdentitySides sides = macdonald_sides(degree, t, square_sum_bound);
    IdentityReport report = compare_sides(label, sides);
    const IdentityReport cores = compare_sides(label, {std::move(sides.rhs), macdonald_core_sum(degree, t)});
    if (!cores.verified &&
        (report.verified || cores.first_mismatch->degree < report.first_mismatch->degree)) {
        report = cores;
    }
    return report;
}

std::vector<IdentityReport> verify_corollaries(int degree) {
    std::vector<IdentityReport> out;
    for (const char* name : {"tcore-hook-product", "tcore-count", "doubled-hook-t", "pentagonal-hook",
                             "distinct-parts-hook", "hook-t-marker", "signed-hook-t", "tcore-interpolation",
                             "six-core", "exponential-limit", "inverse-square-sum", "odd-inverse-square-sum"}) {
        const IdentityFamily* family = find_identity(name);
        if (family->default_ts.empty()) {
            out.push_back(family->run(degree, 1));
        } else {
            for (int t : family->default_ts) {
                out.push_back(family->run(degree, t));
            }
        }
    }
    return out;
}

std::string identity_label(std::string_view name, std::optional<int> t) {
    std::string out(name);
    if (t) {
        out += "[t=" + std::to_string(*t) + "]";
    }
    return out;
}

namespace {

using SidesBuilder = IdentitySides (*)(int, int);

IdentityFamily series_family(std::string name, std::string summary, std::vector<int> ts, int default_degree,
                             bool multi, std::function<bool(int)> accepts, SidesBuilder build) {
    IdentityFamily f;
    f.name = std::move(name);
    f.summary = std::move(summary);
    f.default_ts = std::move(ts);
    f.accepts_t = std::move(accepts);
    f.default_degree = default_degree;
    f.multi_symbolic = multi;
    f.run = [name = f.name, build](int degree, int t) {
        return compare_sides(identity_label(name, t), build(degree, t));
    };
    return f;
}

IdentityFamily plain_family(std::string name, std::string summary, int default_degree,
                            std::function<IdentityReport(int)> run) {
    IdentityFamily f;
    f.name = std::move(name);
    f.summary = std::move(summary);
    f.accepts_t = [](int) { return false; };
    f.default_degree = default_degree;
    f.run = [run = std::move(run)](int degree, int) { return run(degree); };
    return f;
}

IdentityFamily scalar_family(std::string name, std::string summary, std::vector<int> ts, int default_degree,
                             IdentityReport (*run)(int, int)) {
    IdentityFamily f;
    f.name = std::move(name);
    f.summary = std::move(summary);
    f.default_ts = std::move(ts);
    f.accepts_t = [](int t) { return t >= 1; };
    f.default_degree = default_degree;
    f.run = run;
    return f;
}

bool positive(int t) { return t >= 1; }
bool odd(int t) { return t >= 1 && t % 2 == 1; }
bool divides_36(int t) { return t >= 1 && 36 % t == 0; }

std::vector<IdentityFamily> build_catalog() {
    constexpr int symbolic = 12;
    constexpr int rational = 25;
    std::vector<IdentityFamily> c;
    c.push_back(plain_family("nekrasov-okounkov", "Σ x^|λ| ∏(1 - z/h²) = ∏(1 - x^k)^(z-1)", symbolic,
                             verify_nekrasov_okounkov));
    c.push_back(series_family("extension-ty", "Σ x^|λ| ∏_{H_t}(y - tyz/h²) with y, z symbolic", {1, 2, 3}, 10,
                              true, positive, extension_ty_sides));
    c.push_back(series_family("hook-t-count", "Σ x^|λ| y^#{h = t} = ∏(1 + (y-1)x^{tk})^t/(1 - x^k)", {1, 2, 3},
                              symbolic, false, positive, hook_t_count_sides));
    c.push_back(series_family("tcore-hook-product", "Σ x^|λ| ∏(1 - t²/h²) = ∏(1 - x^k)^(t²-1)", {1, 2, 3, 5},
                              rational, false, positive, tcore_hook_product_sides));
    c.push_back(series_family("tcore-count", "Σ_{t-cores} x^|λ| = ∏(1 - x^{tk})^t/(1 - x^k)", {2, 3, 4, 5},
                              rational, false, positive, tcore_count_sides));
    c.push_back(series_family("doubled-hook-t", "Σ x^|λ| 2^#{h = t} = ∏(1 + x^{tk})^t/(1 - x^k)", {1, 2, 3},
                              rational, false, positive, doubled_hook_t_sides));
    c.push_back(plain_family("pentagonal-hook", "Σ x^|λ| ∏(1 - 2/h²) = ∏(1 - x^k)", rational, [](int degree) {
        return compare_sides("pentagonal-hook", pentagonal_hook_sides(degree));
    }));
    c.push_back(plain_family("distinct-parts-hook", "Σ x^|λ| ∏_{H_2}(1 - 2/h²) = ∏(1 + x^k)", rational,
                             [](int degree) {
                                 return compare_sides("distinct-parts-hook", distinct_parts_hook_sides(degree));
                             }));
    c.push_back(series_family("hook-t-marker", "Σ x^|λ| y^#H_t", {1, 2, 3}, symbolic, false, positive,
                              hook_t_marker_sides));
    c.push_back(series_family("signed-hook-t", "Σ x^|λ| (-1)^#H_t", {1, 2, 3}, rational, false, positive,
                              signed_hook_t_sides));
    c.push_back(series_family("tcore-interpolation", "Σ x^|λ| ∏_{H_t}(1 - tz/h²) = ∏(1 - x^{tk})^z/(1 - x^k)",
                              {1, 2, 3}, symbolic, false, positive, tcore_interpolation_sides));
    c.push_back(series_family("six-core", "Σ x^|λ| ∏_{H_t}(1 - 36/h²) = ∏(1 - x^{tk})^(36/t)/(1 - x^k)",
                              {1, 2, 3, 6}, symbolic, false, divides_36, six_core_sides));
    c.push_back(series_family("exponential-limit", "Σ x^|λ| ∏_{H_t} tb/h² = e^{bx^t} ∏(1 - x^{tk})^t/(1 - x^k)",
                              {1, 2, 3}, symbolic, false, positive, exponential_limit_sides));
    c.push_back(series_family("inverse-square-sum", "Σ x^|λ| Σ_{H_t} 1/h²", {1, 2, 3}, rational, false, positive,
                              inverse_square_sum_sides));
    c.push_back(plain_family("odd-inverse-square-sum", "Σ x^|λ| Σ_{h odd} 1/h²", rational, [](int degree) {
        return compare_sides("odd-inverse-square-sum", odd_inverse_square_sum_sides(degree));
    }));
    c.push_back(plain_family("pentagonal", "∏(1 - x^k) = Σ (-1)^m x^{m(3m+1)/2}", rational, [](int degree) {
        return compare_sides("pentagonal", pentagonal_sides(degree));
    }));
    c.push_back(plain_family("triple-product", "∏(1 - x^k)³ = Σ (-1)^m (2m+1) x^{m(m+1)/2}", rational,
                             [](int degree) { return compare_sides("triple-product", triple_product_sides(degree)); }));
    c.push_back(plain_family("euler-exp", "∏ 1/(1 - x^k) = exp(Σ x^k/(k(1 - x^k)))", rational,
                             [](int degree) { return compare_sides("euler-exp", euler_exp_sides(degree)); }));
    {
        IdentityFamily f;
        f.name = "macdonald-odd";
        f.summary = "∏(1 - x^k)^(t²-1) as a sum over V-codings, t odd";
        f.default_ts = {3, 5};
        f.accepts_t = odd;
        f.default_degree = symbolic;
        f.run = [](int degree, int t) { return verify_macdonald_odd(degree, t); };
        c.push_back(std::move(f));
    }
    c.push_back(plain_family("marked-hook", "Σ_{λ⊢n} f_λ² Σ h² = n(3n-1)/2 · n!", 9, verify_marked_hook));
    c.push_back(plain_family("syt-square-sum", "Σ_{λ⊢n} f_λ² = n!", 9, verify_syt_square_sum));
    c.push_back(scalar_family("tcore-inverse-hook", "Σ_{λ⊢tn, #H_t=n} ∏_{H_t} 1/h² = 1/(t^n n!)", {1, 2, 3},
                              symbolic, verify_tcore_inverse_hook));
    c.push_back(scalar_family("tcore-inverse-hook-shifted", "Σ_{λ⊢tn+m, #H_t=n} ∏_{H_t} 1/h² = c_t(m)/(t^n n!)",
                              {1, 2, 3}, symbolic, verify_tcore_inverse_hook_shifted));
    c.push_back(scalar_family("marked-tcore", "Σ_{λ⊢tn, #H_t=n} ∏_{H_t} 1/h² Σ_{H_t} h² = (3n-3+2t)/(2t^{n-1}(n-1)!)",
                              {1, 2, 3}, symbolic, verify_marked_tcore));
    c.push_back(plain_family("kostant-weights", "(-1)^k f_k(s) = Σ_{λ⊢k} ∏(s + 1 - h²)/h²", symbolic,
                             verify_kostant_weights));
    c.push_back(plain_family("kostant-positivity", "(-1)^k f_k(k²-1) > 0 for k >= 4, f_3(8) = 0", symbolic,
                             verify_kostant_positivity));
    c.push_back(plain_family("euler-reversion", "inverse of x ∏(1 - x^m) by Lagrange and by hook sums", symbolic,
                             verify_euler_reversion));
    c.push_back(plain_family("hook-integrality", "Σ_{λ⊢n} ∏(1 + k/h²) and (1/(n+1)) Σ_{λ⊢n} ∏(1 + n/h²) are integers",
                             symbolic, verify_hook_integrality));
    return c;
}

}  // namespace

const std::vector<IdentityFamily>& identity_catalog() {
    static const std::vector<IdentityFamily> catalog = build_catalog();
    return catalog;
}

const IdentityFamily* find_identity(std::string_view name) {
    for (const auto& f : identity_catalog()) {
        if (f.name == name) {
            return &f;
        }
    }
    return nullptr;
}

}  // namespace hookid
