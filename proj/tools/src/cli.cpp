#include "hookid_cli/cli.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "hookid/abacus.hpp"
#include "hookid/identities.hpp"
#include "hookid/quotient.hpp"
#include "hookid_cli/report_json.hpp"

namespace hookid::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { text, json };

const std::map<std::string, Format> kFormats{{"text", Format::text}, {"json", Format::json}};

// Bounds for the coeff subcommands; past these the enumeration takes minutes.
constexpr int kMaxEulerPowerIndex = 60;
constexpr int kMaxRevertDegree = 60;
constexpr int kMaxCoreSize = 50;

std::string paren(const Partition& p) { return "(" + p.to_string() + ")"; }

template <typename T>
std::string tuple_string(const std::vector<T>& values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += (i == 0 ? "" : ",") + std::to_string(values[i]);
    }
    return out + ")";
}

std::vector<int> descending(const HookMultiset& hooks) {
    std::vector<int> v = hooks.to_vector();
    std::reverse(v.begin(), v.end());
    return v;
}

std::string join(const std::vector<int>& values) {
    if (values.empty()) {
        return "none";
    }
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += (i == 0 ? "" : " ") + std::to_string(values[i]);
    }
    return out;
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// ---------------------------------------------------------------- verify

struct VerifyOptions {
    std::string id = "all";
    int degree = -1;
    bool degree_given = false;
    int t = 0;
    bool t_given = false;
    Format format = Format::text;
    int jobs = 1;
    bool allow_large = false;
};

struct Job {
    const IdentityFamily* family = nullptr;
    std::optional<int> t;
    int degree = 0;
};

std::vector<Job> plan_jobs(const VerifyOptions& o) {
    std::vector<const IdentityFamily*> families;
    if (o.id == "all") {
        for (const IdentityFamily& f : identity_catalog()) {
            families.push_back(&f);
        }
    } else if (const IdentityFamily* f = find_identity(o.id)) {
        families.push_back(f);
    } else {
        throw UsageError("unknown identity '" + o.id + "' (see `hookid list`)");
    }
    if (o.degree_given && o.degree < 0) {
        throw UsageError("--degree must be non-negative");
    }
    if (o.t_given && o.t < 1) {
        throw UsageError("--t must be a positive integer");
    }

    std::vector<Job> jobs;
    for (const IdentityFamily* f : families) {
        const int degree = o.degree_given ? o.degree : f->default_degree;
        if (f->multi_symbolic && degree > kMultiSymbolicCeiling && !o.allow_large) {
            throw UsageError(f->name + " at degree " + std::to_string(degree) + " exceeds the ceiling of " +
                             std::to_string(kMultiSymbolicCeiling) + "; pass --allow-large to run it anyway");
        }
        if (o.t_given) {
            if (!f->accepts_t(o.t)) {
                if (o.id == "all") {
                    continue;
                }
                throw UsageError(f->name + " does not accept t=" + std::to_string(o.t));
            }
            jobs.push_back({f, o.t, degree});
        } else if (f->default_ts.empty()) {
            jobs.push_back({f, std::nullopt, degree});
        } else {
            for (int t : f->default_ts) {
                jobs.push_back({f, t, degree});
            }
        }
    }
    if (jobs.empty()) {
        throw UsageError("no identity accepts t=" + std::to_string(o.t));
    }
    return jobs;
}

struct JobResult {
    IdentityReport report;
    std::exception_ptr error;
};

std::vector<JobResult> run_jobs(const std::vector<Job>& jobs, int workers) {
    std::vector<JobResult> results(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            try {
                results[i].report = jobs[i].family->run(jobs[i].degree, jobs[i].t.value_or(1));
            } catch (...) {
                results[i].error = std::current_exception();
            }
        }
    };
    const auto count = static_cast<std::size_t>(std::max(1, workers));
    if (count == 1) {
        worker();
        return results;
    }
    std::vector<std::thread> threads;
    for (std::size_t k = 0; k < std::min(count, jobs.size()); ++k) {
        threads.emplace_back(worker);
    }
    for (auto& th : threads) {
        th.join();
    }
    return results;
}

void print_report_text(std::ostream& out, const IdentityReport& r) {
    out << (r.verified ? "PASS  " : "FAIL  ") << r.identity << "  degree " << r.degree;
    if (r.first_mismatch) {
        out << "  first mismatch at x^" << r.first_mismatch->degree << ": lhs = " << r.first_mismatch->lhs
            << ", rhs = " << r.first_mismatch->rhs;
    }
    out << '\n';
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
    const std::vector<Job> jobs = plan_jobs(o);
    int workers = o.jobs;
    if (workers == 0) {
        workers = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
    }
    const std::vector<JobResult> results = run_jobs(jobs, workers);

    for (std::size_t i = 0; i < results.size(); ++i) {
        if (!results[i].error) {
            continue;
        }
        const std::string label = identity_label(jobs[i].family->name, jobs[i].t);
        try {
            std::rethrow_exception(results[i].error);
        } catch (const std::exception& e) {
            err << "error: " << label << ": " << e.what() << '\n';
            return kExitUsage;
        }
    }

    bool all_verified = true;
    json array = json::array();
    for (const JobResult& r : results) {
        all_verified = all_verified && r.report.verified;
        if (o.format == Format::json) {
            array.push_back(r.report);
        } else {
            print_report_text(out, r.report);
        }
    }
    if (o.format == Format::json) {
        print_json(out, array);
    } else {
        const auto passed = std::count_if(results.begin(), results.end(),
                                          [](const JobResult& r) { return r.report.verified; });
        out << passed << " of " << results.size() << " verified\n";
    }
    return all_verified ? kExitOk : kExitMismatch;
}

int cmd_list(Format format, std::ostream& out) {
    json array = json::array();
    for (const IdentityFamily& f : identity_catalog()) {
        if (format == Format::json) {
            array.push_back({{"identity", f.name},
                             {"summary", f.summary},
                             {"default_degree", f.default_degree},
                             {"default_t", f.default_ts},
                             {"multi_symbolic", f.multi_symbolic}});
            continue;
        }
        out << f.name;
        if (!f.default_ts.empty()) {
            out << "  t=" << tuple_string(f.default_ts);
        }
        out << "  degree " << f.default_degree << "\n    " << f.summary << '\n';
    }
    if (format == Format::json) {
        print_json(out, array);
    }
    return kExitOk;
}

// ---------------------------------------------------------------- inspect

struct InspectOptions {
    std::string partition;
    int t = 0;
    bool t_given = false;
    bool codings = false;
    Format format = Format::text;
};

int cmd_inspect(const InspectOptions& o, std::ostream& out) {
    Partition p;
    try {
        p = Partition::parse(o.partition);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (o.t_given && o.t < 1) {
        throw UsageError("--t must be a positive integer");
    }
    if (o.codings && !o.t_given) {
        throw UsageError("--codings needs --t");
    }

    json j;
    j["partition"] = p.to_string();
    j["size"] = p.weight();
    j["hooks"] = descending(hook_lengths(p));
    if (o.t_given) {
        const int t = o.t;
        const bool core = is_t_core(p, t);
        if (o.codings && !core) {
            throw UsageError("U/V/N-codings are defined for t-cores only; " + paren(p) + " is not a " +
                             std::to_string(t) + "-core");
        }
        j["t"] = t;
        j["hooks_t"] = descending(hook_lengths_mod_t(p, t));
        j["is_t_core"] = core;
        const CoreQuotient cq = decompose(p, t);
        j["core"] = cq.core.to_string();
        j["quotient"] = json::array();
        for (const Partition& q : cq.quotient) {
            j["quotient"].push_back(q.to_string());
        }
        j["n_coding"] = nullptr;
        j["h_set"] = nullptr;
        j["u_coding"] = nullptr;
        j["v_coding"] = nullptr;
        if (core) {
            j["n_coding"] = phi_n(p, t).values();
            if (t % 2 == 1) {
                const HSet h = h_set(p, t);
                j["h_set"] = std::vector<Coord>(h.elements().rbegin(), h.elements().rend());
                j["u_coding"] = u_coding(p, t).values();
                j["v_coding"] = phi_v(p, t).values();
            }
        }
    }

    if (o.format == Format::json) {
        print_json(out, j);
        return kExitOk;
    }
    out << "partition: " << paren(p) << '\n';
    out << "size: " << p.weight() << '\n';
    out << "hooks: " << join(j["hooks"].get<std::vector<int>>()) << '\n';
    if (!o.t_given) {
        return kExitOk;
    }
    out << "t: " << o.t << '\n';
    out << "hooks divisible by t: " << join(j["hooks_t"].get<std::vector<int>>()) << '\n';
    out << "t-core: " << (j["is_t_core"].get<bool>() ? "yes" : "no") << '\n';
    out << "core: (" << j["core"].get<std::string>() << ")\n";
    out << "quotient:";
    for (const auto& q : j["quotient"]) {
        out << " (" << q.get<std::string>() << ")";
    }
    out << '\n';
    if (!j["n_coding"].is_null()) {
        out << "N-coding: " << tuple_string(j["n_coding"].get<std::vector<Coord>>()) << '\n';
    }
    if (!j["h_set"].is_null()) {
        const auto h = j["h_set"].get<std::vector<Coord>>();
        std::string set = tuple_string(h);
        set.front() = '{';
        set.back() = '}';
        out << "H-set: " << set << '\n';
        out << "U-coding: " << tuple_string(j["u_coding"].get<std::vector<Coord>>()) << '\n';
        out << "V-coding: " << tuple_string(j["v_coding"].get<std::vector<Coord>>()) << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------- coeff

// Coefficients of a polynomial in s alone, lowest degree first.
std::vector<Rational> univariate_coefficients(const Polynomial& p) {
    std::vector<Rational> c(static_cast<std::size_t>(std::max(0, p.degree(Var::s) + 1)));
    for (const auto& [e, coefficient] : p.terms()) {
        c[e[static_cast<std::size_t>(Var::s)]] = coefficient;
    }
    return c;
}

Rational evaluate_univariate(const std::vector<Rational>& c, const Rational& x) {
    Rational acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

// c_lead · ∏(s - r) when every root is an integer, e.g. "1/24*s*(s - 1)*(s - 3)*(s - 14)".
std::optional<std::string> factor_over_integers(const Polynomial& p) {
    std::vector<Rational> c = univariate_coefficients(p);
    if (c.size() < 2) {
        return std::nullopt;
    }
    const Rational lead = c.back();
    // Cauchy bound on the absolute value of any root.
    Rational bound = 0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        bound = std::max<Rational>(bound, abs(c[i] / lead));
    }
    const long limit = mpz_class(bound.get_num() / bound.get_den()).get_si() + 1;

    std::vector<std::pair<long, int>> roots;
    for (long r = -limit; r <= limit && c.size() > 1; ++r) {
        int multiplicity = 0;
        while (c.size() > 1 && evaluate_univariate(c, Rational(r)) == 0) {
            // Synthetic division by (s - r).
            std::vector<Rational> q(c.size() - 1);
            Rational carry = 0;
            for (std::size_t i = c.size() - 1; i-- > 0;) {
                carry = c[i + 1] + carry * r;
                q[i] = carry;
            }
            c = std::move(q);
            ++multiplicity;
        }
        if (multiplicity > 0) {
            roots.emplace_back(r, multiplicity);
        }
    }
    if (c.size() != 1) {
        return std::nullopt;
    }

    std::string out;
    if (lead == -1) {
        out = "-";
    } else if (lead != 1) {
        out = to_display_string(lead) + "*";
    }
    bool first = true;
    for (const auto& [r, m] : roots) {
        std::string factor;
        if (r == 0) {
            factor = "s";
        } else {
            factor = "(s " + std::string(r > 0 ? "- " : "+ ") + std::to_string(r > 0 ? r : -r) + ")";
        }
        if (m > 1) {
            factor += "^" + std::to_string(m);
        }
        out += (first ? "" : "*") + factor;
        first = false;
    }
    return out;
}

struct CoeffOptions {
    int k = -1;
    std::string s;
    bool s_given = false;
    int degree = 7;
    int t = -1;
    int max = 10;
    Format format = Format::text;
};

int cmd_euler_power(const CoeffOptions& o, std::ostream& out) {
    if (o.k < 0 || o.k > kMaxEulerPowerIndex) {
        throw UsageError("--k must lie in 0.." + std::to_string(kMaxEulerPowerIndex));
    }
    const Polynomial f = euler_power_coefficient(o.k);
    const std::optional<std::string> factored = factor_over_integers(f);
    std::optional<Rational> value;
    if (o.s_given) {
        Rational s;
        try {
            s = parse_rational(o.s);
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
        value = f.evaluate(Var::s, s).constant_term();
    }
    if (o.format == Format::json) {
        json j{{"k", o.k}, {"polynomial", to_termlist(f)}, {"text", f.to_string()}};
        j["factored"] = factored ? json(*factored) : json(nullptr);
        if (value) {
            j["s"] = to_fraction_string(parse_rational(o.s));
            j["value"] = to_fraction_string(*value);
        }
        print_json(out, j);
        return kExitOk;
    }
    out << "f_" << o.k << "(s) = " << f << '\n';
    if (factored) {
        out << "factored: " << *factored << '\n';
    }
    if (value) {
        out << "f_" << o.k << "(" << to_display_string(parse_rational(o.s)) << ") = " << to_display_string(*value)
            << '\n';
    }
    return kExitOk;
}

int cmd_revert(const CoeffOptions& o, std::ostream& out) {
    if (o.degree < 1 || o.degree > kMaxRevertDegree) {
        throw UsageError("--degree must lie in 1.." + std::to_string(kMaxRevertDegree));
    }
    const TruncatedSeries y = euler_reversion_by_lagrange(o.degree);
    std::vector<std::string> coefficients;
    for (int n = 1; n <= o.degree; ++n) {
        coefficients.push_back(to_display_string(y[n].constant_term()));
    }
    if (o.format == Format::json) {
        json j{{"degree", o.degree}, {"coefficients", json::array()}};
        for (int n = 1; n <= o.degree; ++n) {
            j["coefficients"].push_back(to_fraction_string(y[n].constant_term()));
        }
        print_json(out, j);
        return kExitOk;
    }
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        out << (i == 0 ? "" : " ") << coefficients[i];
    }
    out << '\n';
    return kExitOk;
}

int cmd_tcores(const CoeffOptions& o, std::ostream& out) {
    if (o.t < 1) {
        throw UsageError("--t must be a positive integer");
    }
    if (o.max < 0 || o.max > kMaxCoreSize) {
        throw UsageError("--max must lie in 0.." + std::to_string(kMaxCoreSize));
    }
    std::vector<long> counts;
    for (int m = 0; m <= o.max; ++m) {
        counts.push_back(count_t_cores(m, o.t));
    }
    if (o.format == Format::json) {
        print_json(out, json{{"t", o.t}, {"max", o.max}, {"counts", counts}});
        return kExitOk;
    }
    for (std::size_t i = 0; i < counts.size(); ++i) {
        out << (i == 0 ? "" : " ") << counts[i];
    }
    out << '\n';
    return kExitOk;
}

void add_format(CLI::App* app, Format& format) {
    app->add_option("--format", format, "Output format: text or json")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of hook-length identities for integer partitions", "hookid"};
    app.require_subcommand(1);
    app.fallthrough(false);

    VerifyOptions verify;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Check identities coefficient by coefficient");
    verify_cmd->add_option("--id", verify.id, "Identity name, or 'all' (default)");
    verify_cmd->add_option("--degree,--n", verify.degree,
                           "Truncation degree or size bound (default: per identity, see `hookid list`)");
    verify_cmd->add_option("--t", verify.t, "Run only this t (default: each identity's standard list)");
    verify_cmd->add_option("--jobs", verify.jobs, "Worker threads; 0 means one per core")->check(CLI::NonNegativeNumber);
    verify_cmd->add_flag("--allow-large", verify.allow_large,
                         "Permit degrees above 40 for identities in several indeterminates");
    add_format(verify_cmd, verify.format);

    Format list_format = Format::text;
    CLI::App* list_cmd = app.add_subcommand("list", "List the identity names accepted by verify");
    add_format(list_cmd, list_format);

    InspectOptions inspect;
    CLI::App* inspect_cmd = app.add_subcommand("inspect", "Hooks, codings and core/quotient of one partition");
    inspect_cmd->add_option("--partition", inspect.partition, "Comma-separated weakly decreasing parts")->required();
    inspect_cmd->add_option("--t", inspect.t, "Modulus for H_t, codings and the core/quotient");
    inspect_cmd->add_flag("--codings", inspect.codings, "Fail unless the partition is a t-core");
    add_format(inspect_cmd, inspect.format);

    CoeffOptions coeff;
    CLI::App* coeff_cmd = app.add_subcommand("coeff", "Exact coefficient tables");
    coeff_cmd->require_subcommand(1);
    CLI::App* euler_cmd = coeff_cmd->add_subcommand("euler-power", "f_k(s) = [x^k] prod (1 - x^n)^s");
    euler_cmd->add_option("--k", coeff.k, "Coefficient index")->required();
    euler_cmd->add_option("--s", coeff.s, "Evaluate at this rational s");
    add_format(euler_cmd, coeff.format);
    CLI::App* revert_cmd = coeff_cmd->add_subcommand("revert", "Coefficients of the inverse of x prod (1 - x^m)");
    revert_cmd->add_option("--degree,--n", coeff.degree, "Number of coefficients (default 7)");
    add_format(revert_cmd, coeff.format);
    CLI::App* tcores_cmd = coeff_cmd->add_subcommand("tcores", "Number of t-cores of m for m = 0..max");
    tcores_cmd->add_option("--t", coeff.t, "Modulus")->required();
    tcores_cmd->add_option("--max,--n", coeff.max, "Largest m (default 10)");
    add_format(tcores_cmd, coeff.format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (verify_cmd->parsed()) {
            verify.degree_given = verify_cmd->count("--degree") > 0;
            verify.t_given = verify_cmd->count("--t") > 0;
            return cmd_verify(verify, out, err);
        }
        if (list_cmd->parsed()) {
            return cmd_list(list_format, out);
        }
        if (inspect_cmd->parsed()) {
            inspect.t_given = inspect_cmd->count("--t") > 0;
            return cmd_inspect(inspect, out);
        }
        coeff.s_given = euler_cmd->count("--s") > 0;
        if (euler_cmd->parsed()) {
            return cmd_euler_power(coeff, out);
        }
        if (revert_cmd->parsed()) {
            return cmd_revert(coeff, out);
        }
        if (tcores_cmd->parsed()) {
            return cmd_tcores(coeff, out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace hookid::cli
