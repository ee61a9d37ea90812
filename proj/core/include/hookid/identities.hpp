#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hookid/abacus.hpp"
#include "hookid/partition.hpp"
#include "hookid/polynomial.hpp"
#include "hookid/series.hpp"

namespace hookid {

struct Mismatch {
    int degree = 0;
    Polynomial lhs;
    Polynomial rhs;

    friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct IdentityReport {
    std::string identity;
    int degree = 0;
    bool verified = true;
    std::optional<Mismatch> first_mismatch;

    friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

/// Both sides of a series identity, truncated at the same degree.
struct IdentitySides {
    TruncatedSeries lhs;
    TruncatedSeries rhs;
};

/// Coefficientwise comparison; records the lowest degree where the sides differ.
[[nodiscard]] IdentityReport compare_sides(std::string identity, const IdentitySides& sides);

using PartitionWeight = std::function<Polynomial(const Partition&)>;

/// Σ_{|λ|<=N} w(λ) x^{|λ|} by enumerating every partition.
[[nodiscard]] TruncatedSeries partition_sum(int degree, const PartitionWeight& weight);

/// ∏_{h ∈ hooks} f(h), taking each distinct hook length once and raising to its multiplicity.
[[nodiscard]] Polynomial hook_product(const HookMultiset& hooks, const std::function<Polynomial(int)>& factor);

enum class HookWeight {
    /// ∏_{h∈H(λ)} (1 - z/h²)
    nekrasov_okounkov,
    /// ∏_{h∈H_t(λ)} (y - tyz/h²)
    extension_ty,
    /// y^{#{h∈H(λ) : h = t}}
    hook_equals_t,
};

[[nodiscard]] TruncatedSeries lhs_hook_sum(int degree, int t, HookWeight weight);

/// Σ_{k>=1} log(1 - c^k x^{step·k}).
[[nodiscard]] TruncatedSeries scaled_euler_log(int degree, int step, const Polynomial& c);
/// ∏_{k>=1} 1/(1 - x^k), the partition generating function.
[[nodiscard]] TruncatedSeries partition_generating_function(int degree);

// Series identities. Each builder returns the brute-force partition sum as
// lhs and the product side as rhs.
[[nodiscard]] IdentitySides nekrasov_okounkov_sides(int degree);
[[nodiscard]] IdentitySides extension_ty_sides(int degree, int t);
[[nodiscard]] IdentitySides hook_t_count_sides(int degree, int t);
/// Σ_λ ∏(1 - t²/h²) x^{|λ|} = ∏(1 - x^k)^{t²-1}; only t-cores contribute.
[[nodiscard]] IdentitySides tcore_hook_product_sides(int degree, int t);
/// Σ_{t-cores} x^{|λ|} = ∏(1 - x^{tk})^t / (1 - x^k).
[[nodiscard]] IdentitySides tcore_count_sides(int degree, int t);
/// Σ_λ 2^{#{h=t}} x^{|λ|} = ∏(1 + x^{tk})^t / (1 - x^k).
[[nodiscard]] IdentitySides doubled_hook_t_sides(int degree, int t);
/// Σ_λ ∏(1 - 2/h²) x^{|λ|} = ∏(1 - x^k).
[[nodiscard]] IdentitySides pentagonal_hook_sides(int degree);
/// Σ_λ ∏_{H_2}(1 - 2/h²) x^{|λ|} = ∏(1 + x^k).
[[nodiscard]] IdentitySides distinct_parts_hook_sides(int degree);
/// Σ_λ y^{#H_t(λ)} x^{|λ|}.
[[nodiscard]] IdentitySides hook_t_marker_sides(int degree, int t);
/// Σ_λ (-1)^{#H_t(λ)} x^{|λ|}.
[[nodiscard]] IdentitySides signed_hook_t_sides(int degree, int t);
/// Σ_λ ∏_{H_t}(1 - tz/h²) x^{|λ|} = ∏(1 - x^{tk})^z / (1 - x^k), z symbolic.
[[nodiscard]] IdentitySides tcore_interpolation_sides(int degree, int t);
/// The same identity at z = 36/t for t dividing 36: every contributing λ is a 6-core.
[[nodiscard]] IdentitySides six_core_sides(int degree, int t);
/// Σ_λ ∏_{H_t} tb/h² x^{|λ|} = e^{bx^t} ∏(1 - x^{tk})^t / (1 - x^k), b symbolic.
[[nodiscard]] IdentitySides exponential_limit_sides(int degree, int t);
/// Σ_λ Σ_{H_t} 1/h² x^{|λ|} = (1/t) ∏ 1/(1 - x^m) Σ_k x^{tk}/(k(1 - x^{tk})).
[[nodiscard]] IdentitySides inverse_square_sum_sides(int degree, int t);
/// Σ_λ Σ_{h odd} 1/h² x^{|λ|} = ∏ 1/(1 - x^m) Σ_k (x^{2k} + 2x^k)/(2k(1 - x^{2k})).
[[nodiscard]] IdentitySides odd_inverse_square_sum_sides(int degree);
/// ∏(1 - x^k) against Σ_{m∈Z} (-1)^m x^{m(3m+1)/2}.
[[nodiscard]] IdentitySides pentagonal_sides(int degree);
/// ∏(1 - x^k)³ against Σ_{m>=0} (-1)^m (2m+1) x^{m(m+1)/2}.
[[nodiscard]] IdentitySides triple_product_sides(int degree);
/// exp(Σ_k x^k/(k(1 - x^k))) against ∏ 1/(1 - x^k).
[[nodiscard]] IdentitySides euler_exp_sides(int degree);

/// Smallest Σ v_i² bound that reaches every V-coding of weight <= degree.
[[nodiscard]] Coord macdonald_square_sum_bound(int degree, int t);
/// ∏(1 - x^k)^{t²-1} as lhs; c_0 Σ_V ∏_{i<j}(v_i - v_j) x^{|V|} as rhs, where
/// |V| = Σv_i²/(2t) - (t²-1)/24 and the sum runs over V-codings with Σv_i² <= bound.
[[nodiscard]] IdentitySides macdonald_sides(int degree, int t, std::optional<Coord> square_sum_bound = std::nullopt);
/// Σ over t-cores of ∏(1 - t²/h²), the same series read off the hook lengths.
[[nodiscard]] TruncatedSeries macdonald_core_sum(int degree, int t);

[[nodiscard]] IdentityReport verify_nekrasov_okounkov(int degree);
[[nodiscard]] IdentityReport verify_extension_ty(int degree, int t);
[[nodiscard]] IdentityReport verify_hook_t_count(int degree, int t);
/// Also checks the V-coding sum against the t-core hook product sum.
[[nodiscard]] IdentityReport verify_macdonald_odd(int degree, int t, std::optional<Coord> square_sum_bound = std::nullopt);
/// One report per specialization of the two main identities.
[[nodiscard]] std::vector<IdentityReport> verify_corollaries(int degree);

// Scalar hook sums, checked for every admissible size up to a bound.

/// Σ_{λ⊢n} f_λ² Σ_{h} h² against n(3n-1)/2 · n!.
[[nodiscard]] IdentityReport verify_marked_hook(int n_max);
/// Σ_{λ⊢n} f_λ² against n!.
[[nodiscard]] IdentityReport verify_syt_square_sum(int n_max);
/// Σ_{λ⊢tn, #H_t=n} ∏_{H_t} 1/h² against 1/(t^n n!), for tn <= size_max.
[[nodiscard]] IdentityReport verify_tcore_inverse_hook(int size_max, int t);
/// Σ_{λ⊢tn+m, #H_t=n} ∏_{H_t} 1/h² against c_t(m)/(t^n n!), for tn+m <= size_max.
[[nodiscard]] IdentityReport verify_tcore_inverse_hook_shifted(int size_max, int t);
/// Σ_{λ⊢tn, #H_t=n} ∏_{H_t} 1/h² Σ_{H_t} h² against (3n-3+2t)/(2t^{n-1}(n-1)!), for tn <= size_max.
[[nodiscard]] IdentityReport verify_marked_tcore(int size_max, int t);
/// Σ_{λ⊢tn+m, #H_t=n} ∏_{H_t} 1/h².
[[nodiscard]] Rational restricted_inverse_hook_sum(int n, int m, int t);
/// All of the above for n (or tn) up to n_max.
[[nodiscard]] bool verify_scalar_hook_sums(int n_max, int t);

// Coefficients of powers of the Euler product.

/// f_k(s) = [x^k] ∏(1 - x^n)^s as a polynomial in s.
[[nodiscard]] Polynomial euler_power_coefficient(int k);
/// W(λ) = ∏_{v∈λ} (s + 1 - h_v²)/h_v².
[[nodiscard]] Polynomial kostant_weight(const Partition& p);
/// Σ_{λ⊢k} W(λ), which equals (-1)^k f_k(s).
[[nodiscard]] Polynomial kostant_weight_sum(int k);
/// (-1)^k f_k against Σ_{λ⊢k} W(λ) for k <= k_max.
[[nodiscard]] IdentityReport verify_kostant_weights(int k_max);

struct KostantSample {
    int k = 0;
    Rational s;
    Rational signed_value;  // (-1)^k f_k(s)
    Rational min_weight;    // min_{λ⊢k} W(λ) at s
};

/// (-1)^k f_k(s) and the smallest W(λ) at s = k² - 1 for 1 <= k <= k_max.
[[nodiscard]] std::vector<KostantSample> kostant_samples(int k_max);
/// (-1)^k f_k(k²-1) > 0 and every W(λ) >= 0 there for 4 <= k <= k_max, and f_3(8) = 0.
[[nodiscard]] bool kostant_positivity(int k_max);
/// Report form of kostant_positivity; a mismatch shows (-1)^k f_k(k²-1) against 0.
[[nodiscard]] IdentityReport verify_kostant_positivity(int k_max);

// Reversion of x ∏(1 - x^m).

/// y(x) with y ∏(1 - y^m) = x, by Lagrange inversion.
[[nodiscard]] TruncatedSeries euler_reversion_by_lagrange(int degree);
/// Σ_n x^n/n Σ_{λ⊢n-1} ∏(1 + (n-1)/h²).
[[nodiscard]] TruncatedSeries euler_reversion_by_hooks(int degree);
/// The two constructions agree and every coefficient is a positive integer.
[[nodiscard]] IdentityReport verify_euler_reversion(int degree);
/// Σ_{λ⊢n} ∏(1 + k/h²) = [x^n] ∏(1 - x^j)^{-k-1} and (1/(n+1)) Σ_{λ⊢n} ∏(1 + n/h²)
/// are integers, for 1 <= n, k <= bound.
[[nodiscard]] IdentityReport verify_hook_integrality(int bound);

/// A named identity family as run by the command-line tool.
struct IdentityFamily {
    std::string name;
    std::string summary;
    /// Empty when the identity has no t parameter.
    std::vector<int> default_ts;
    std::function<bool(int)> accepts_t;
    int default_degree = 12;
    /// True when coefficients carry more than one indeterminate.
    bool multi_symbolic = false;
    std::function<IdentityReport(int degree, int t)> run;
};

[[nodiscard]] const std::vector<IdentityFamily>& identity_catalog();
[[nodiscard]] const IdentityFamily* find_identity(std::string_view name);

/// "name" or "name[t=3]".
[[nodiscard]] std::string identity_label(std::string_view name, std::optional<int> t);

}  // namespace hookid
