#include "degbern/identities.hpp"

#include <future>

namespace degbern {

std::string_view verdict_name(Verdict v) {
    switch (v) {
    case Verdict::pass:
        return "pass";
    case Verdict::fail:
        return "fail";
    case Verdict::skipped:
        return "skipped";
    }
    return "?";
}

std::string IdentityCheck::param(std::string_view key) const {
    for (const auto& [k, v] : params) {
        if (k == key) {
            return v;
        }
    }
    return {};
}

std::string lambda_label(const Rational& lambda) { return lambda.to_string(); }

std::string lambda_label(const LambdaPoly& lambda) {
    return lambda == LambdaPoly::lambda() ? "symbolic" : lambda.to_string();
}

CheckRecorder::CheckRecorder(std::string name, std::vector<std::pair<std::string, std::string>> params) {
    check_.name = std::move(name);
    check_.params = std::move(params);
}

void CheckRecorder::skip(std::string reason) {
    if (check_.verdict == Verdict::pass) {
        check_.verdict = Verdict::skipped;
    }
    check_.notes.push_back(std::move(reason));
}

IdentityCheck check_limits(const SequenceTables<LambdaPoly>& t, long k_min, long k_max) {
    CheckRecorder rec("limits", detail::check_params(t));
    const std::size_t order = t.order();
    const auto n_max = static_cast<long>(order);
    const LambdaPoly& lambda = t.lambda();

    const auto b = bernoulli_numbers(order);
    const auto b_half = bernoulli_poly_values(Rational(1, 2), order);
    const auto carlitz_half = carlitz_values(lambda, LambdaPoly(Rational(1, 2)), order);
    for (std::size_t n = 0; n <= order; ++n) {
        const auto idx = detail::at_n(n);
        rec.expect_equal(at_lambda_zero(t.carlitz()[n]), b[n], "carlitz:" + idx);
        rec.expect_equal(at_lambda_zero(carlitz_half[n]), b_half[n], "carlitz(x=1/2):" + idx);
        rec.expect_equal(at_lambda_zero(t.poly_bernoulli(1)[n]), detail::sign<Rational>(n) * b[n],
                         "poly-bernoulli(k=1):" + idx);
    }

    const auto s1 = stirling1_falling(order);
    const auto s2 = stirling2_recurrence(order);
    for (long n = 0; n <= n_max; ++n) {
        for (long m = 0; m <= n; ++m) {
            const auto idx = "n=" + std::to_string(n) + ",m=" + std::to_string(m);
            rec.expect_equal(at_lambda_zero(t.deg_stirling1()(n, m)), s1(n, m), "deg-stirling1:" + idx);
            rec.expect_equal(at_lambda_zero(t.deg_stirling2()(n, m)), s2(n, m), "deg-stirling2:" + idx);
        }
    }

    const auto log_deg = deg_log_series(lambda, order);
    const auto log_classical = log1p_series<Rational>(order);
    const Rational x(2, 3);
    const auto exp_deg = deg_exp_series(LambdaPoly(x), lambda, order);
    const auto exp_classical = exp_series(x, order);
    for (std::size_t n = 0; n <= order; ++n) {
        const auto idx = "t^" + std::to_string(n);
        rec.expect_equal(at_lambda_zero(log_deg[n]), log_classical[n], "log:" + idx);
        rec.expect_equal(at_lambda_zero(exp_deg[n]), exp_classical[n], "exp(x=2/3):" + idx);
    }
    for (long k = k_min; k <= k_max; ++k) {
        const auto deg = deg_polylog_series(k, lambda, order);
        const auto classical = polylog_series<Rational>(k, order);
        for (std::size_t n = 0; n <= order; ++n) {
            rec.expect_equal(at_lambda_zero(deg[n]), classical[n],
                             "polylog(k=" + std::to_string(k) + "):x^" + std::to_string(n));
        }
    }
    return std::move(rec).finish();
}

IdentityCheck check_cor9(std::size_t order) {
    CheckRecorder rec("cor9", {{"order", std::to_string(order)}});
    const auto s2 = stirling2_gf(order);
    const auto s2_rec = stirling2_recurrence(order);
    const auto n_max = static_cast<long>(order);
    for (long n = 0; n <= n_max; ++n) {
        for (long m = 0; m <= n; ++m) {
            rec.expect_equal(s2(n, m), s2_rec(n, m),
                             "stirling2:n=" + std::to_string(n) + ",m=" + std::to_string(m));
        }
    }
    for (long n = 1; n <= n_max; ++n) {
        Rational acc;
        for (long m = 1; m <= n; ++m) {
            const Rational term = factorial(static_cast<unsigned>(m - 1)) * s2(n, m);
            acc += (n - m) % 2 == 0 ? term : -term;
        }
        rec.expect_equal(acc, Rational(n == 1 ? 1 : 0), "n=" + std::to_string(n));
    }
    return std::move(rec).finish();
}

IdentityCheck check_classical_bernoulli(std::size_t order) {
    CheckRecorder rec("classical_bernoulli", {{"order", std::to_string(order)}});
    const auto recurrence = bernoulli_numbers(order);
    const auto gf = bernoulli_gf_values(Rational(0), order);
    for (std::size_t n = 0; n <= order; ++n) {
        rec.expect_equal(recurrence[n], gf[n], detail::at_n(n));
    }
    return std::move(rec).finish();
}

template <CoefficientRing R>
std::vector<IdentityCheck> run_checks(const SequenceTables<R>& t, long k_min, long k_max,
                                      std::uint64_t composition_budget) {
    std::vector<IdentityCheck> out;
    out.push_back(check_lemma1(t));
    for (long k = k_min; k <= k_max; ++k) {
        out.push_back(check_eq14(t, k));
    }
    out.push_back(check_eq16(t));
    out.push_back(check_lemma2(t));
    out.push_back(check_eq40(t));
    out.push_back(check_deg_stirling2_paths(t));
    out.push_back(check_thm10(t));
    out.push_back(check_eq41(t));
    out.push_back(check_orthogonality(t));
    out.push_back(check_eq19(t));
    for (long k = k_min; k <= k_max; ++k) {
        out.push_back(check_eq22(t, k));
    }
    for (long k = std::max(k_min, 2L); k <= k_max; ++k) {
        out.push_back(check_thm3(t, k));
    }
    for (long k = k_min; k <= k_max; ++k) {
        out.push_back(check_thm4(t, k));
    }
    out.push_back(check_thm5(t));
    for (long k = std::max(k_min, 1L); k <= k_max; ++k) {
        out.push_back(check_thm6(t, k, composition_budget));
    }
    for (long k = k_min; k <= k_max; ++k) {
        out.push_back(check_thm7(t, k));
    }
    out.push_back(check_thm8(t));
    for (long k = k_min; k <= k_max; ++k) {
        out.push_back(check_thm11(t, k));
    }
    if constexpr (std::is_same_v<R, LambdaPoly>) {
        out.push_back(check_limits(t, k_min, k_max));
    }
    return out;
}

template std::vector<IdentityCheck> run_checks(const SequenceTables<Rational>&, long, long, std::uint64_t);
template std::vector<IdentityCheck> run_checks(const SequenceTables<LambdaPoly>&, long, long, std::uint64_t);

SuiteStatus SuiteReport::status() const {
    if (checks.empty()) {
        return SuiteStatus::nothing_run;
    }
    for (const auto& c : checks) {
        if (c.failed()) {
            return SuiteStatus::failed;
        }
    }
    return SuiteStatus::passed;
}

std::vector<const IdentityCheck*> SuiteReport::failures() const {
    std::vector<const IdentityCheck*> out;
    for (const auto& c : checks) {
        if (c.failed()) {
            out.push_back(&c);
        }
    }
    return out;
}

namespace {

template <CoefficientRing R>
std::vector<IdentityCheck> run_for_lambda(const SuiteConfig& config, const R& lambda) {
    SequenceTables<R> tables(lambda, config.order, config.k_min, config.k_max);
    if (config.fault) {
        tables.corrupt(config.fault->table, config.fault->n, config.fault->m);
    }
    return run_checks(tables, config.k_min, config.k_max, config.composition_budget);
}

} // namespace

SuiteReport run_suite(const SuiteConfig& config) {
    SuiteReport report;
    if (!config.symbolic && config.lambdas.empty()) {
        return report;
    }
    const auto policy = config.parallel ? std::launch::async : std::launch::deferred;
    std::vector<std::future<std::vector<IdentityCheck>>> passes;
    if (config.symbolic) {
        passes.push_back(std::async(policy, [&config] { return run_for_lambda(config, LambdaPoly::lambda()); }));
    }
    for (const Rational& lambda : config.lambdas) {
        passes.push_back(std::async(policy, [&config, lambda] { return run_for_lambda(config, lambda); }));
    }
    report.checks.push_back(check_classical_bernoulli(config.order));
    report.checks.push_back(check_cor9(config.order));
    for (auto& pass : passes) {
        auto checks = pass.get();
        report.checks.insert(report.checks.end(), std::make_move_iterator(checks.begin()),
                             std::make_move_iterator(checks.end()));
    }
    return report;
}

} // namespace degbern
