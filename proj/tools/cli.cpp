#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "degbern/identities.hpp"
#include "degbern/report.hpp"

namespace degbern::cli {

namespace {

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One emitted table row. Scalars are already rendered.
struct Row {
    std::string family;
    long n = 0;
    std::optional<long> k;
    std::optional<std::string> lambda;
    std::string value;
    std::string path;
};

std::string rows_to_csv(const std::vector<Row>& rows) {
    std::ostringstream os;
    os << "family,n,k,lambda,value,path\n";
    for (const auto& r : rows) {
        os << r.family << ',' << r.n << ',' << (r.k ? std::to_string(*r.k) : "") << ','
           << csv_field(r.lambda.value_or("")) << ',' << csv_field(r.value) << ',' << r.path << '\n';
    }
    return os.str();
}

nlohmann::ordered_json rows_to_json(const std::vector<Row>& rows) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["family"] = r.family;
        j["n"] = r.n;
        j["k"] = r.k ? nlohmann::ordered_json(*r.k) : nlohmann::ordered_json(nullptr);
        j["lambda"] = r.lambda ? nlohmann::ordered_json(*r.lambda) : nlohmann::ordered_json(nullptr);
        j["value"] = r.value;
        j["path"] = r.path;
        out.push_back(std::move(j));
    }
    return out;
}

Path choose_path(const CliConfig& cfg, std::initializer_list<Path> allowed) {
    if (cfg.path.empty()) {
        return *allowed.begin();
    }
    Path p{};
    try {
        p = parse_path(cfg.path);
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
    for (const Path a : allowed) {
        if (a == p) {
            return p;
        }
    }
    std::string names;
    for (const Path a : allowed) {
        names += (names.empty() ? "" : ", ") + std::string(path_name(a));
    }
    throw usage_error("path '" + cfg.path + "' is not available for family '" + cfg.family + "' (choose " +
                      names + ")");
}

template <CoefficientRing R>
R parse_in_ring(const std::string& text, const char* what) {
    try {
        return parse_element<R>(text);
    } catch (const std::exception& e) {
        throw usage_error(std::string("invalid ") + what + ": " + e.what());
    }
}

template <CoefficientRing R>
std::vector<Row> sequence_rows(Family family, const std::vector<R>& values, std::size_t n_max,
                               std::optional<long> k, const std::optional<std::string>& lambda, Path path) {
    std::vector<Row> rows;
    for (std::size_t n = 0; n <= n_max; ++n) {
        rows.push_back({std::string(family_name(family)), static_cast<long>(n), k, lambda, render(values[n]),
                        std::string(path_name(path))});
    }
    return rows;
}

template <CoefficientRing R>
std::vector<Row> triangle_rows(Family family, const Triangle<R>& t, const std::optional<std::string>& lambda,
                               Path path) {
    std::vector<Row> rows;
    const auto n_max = static_cast<long>(t.max_n());
    for (long n = 0; n <= n_max; ++n) {
        for (long k = 0; k <= n; ++k) {
            rows.push_back({std::string(family_name(family)), n, k, lambda, render(t(n, k)),
                            std::string(path_name(path))});
        }
    }
    return rows;
}

/// Families that depend on λ, computed in ring R.
template <CoefficientRing R>
std::vector<Row> degenerate_table(const CliConfig& cfg, Family family, const R& lambda, std::size_t n_max) {
    const std::optional<std::string> label = lambda_label(lambda);
    const R x = parse_in_ring<R>(cfg.x, "--x");
    switch (family) {
    case Family::carlitz: {
        const Path p = choose_path(cfg, {Path::generating_function});
        return sequence_rows(family, carlitz_values(lambda, x, n_max), n_max, std::nullopt, label, p);
    }
    case Family::poly_bernoulli: {
        if (!is_zero(x)) {
            const Path p = choose_path(cfg, {Path::generating_function, Path::finite_sum});
            const auto values = p == Path::generating_function
                                    ? poly_bernoulli_poly_gf(cfg.k, lambda, x, n_max)
                                    : poly_bernoulli_poly_sum(poly_bernoulli_gf(cfg.k, lambda, n_max), lambda, x);
            return sequence_rows(family, values, n_max, cfg.k, label, p);
        }
        const Path p = choose_path(cfg, {Path::generating_function, Path::explicit_sum, Path::iterated_integral});
        std::vector<R> values;
        if (p == Path::generating_function) {
            values = poly_bernoulli_gf(cfg.k, lambda, n_max);
        } else if (p == Path::explicit_sum) {
            values = poly_bernoulli_explicit(cfg.k, lambda, n_max);
        } else {
            if (cfg.k < 2) {
                throw usage_error("the iterated-integral path needs --k >= 2");
            }
            values = poly_bernoulli_iterated_integral(cfg.k, lambda, n_max);
        }
        return sequence_rows(family, values, n_max, cfg.k, label, p);
    }
    case Family::deg_stirling1: {
        const Path p = choose_path(cfg, {Path::generating_function, Path::recurrence, Path::linear_inversion});
        const auto t = p == Path::generating_function ? deg_stirling1_gf(lambda, n_max)
                       : p == Path::recurrence        ? deg_stirling1_recurrence(lambda, n_max)
                                                      : deg_stirling1_inversion(lambda, n_max);
        return triangle_rows(family, t, label, p);
    }
    case Family::deg_stirling2: {
        const Path p = choose_path(cfg, {Path::generating_function, Path::finite_sum});
        const auto t = p == Path::generating_function ? deg_stirling2_gf(lambda, n_max)
                                                      : deg_stirling2_sum(lambda, n_max);
        return triangle_rows(family, t, label, p);
    }
    case Family::deg_polylog_coeffs: {
        const Path p = choose_path(cfg, {Path::series_definition});
        const auto s = deg_polylog_series(cfg.k, lambda, n_max);
        return sequence_rows(family, std::vector<R>(s.coeffs().begin(), s.coeffs().end()), n_max, cfg.k, label,
                             p);
    }
    default:
        break;
    }
    throw usage_error("family '" + cfg.family + "' does not take a lambda");
}

std::vector<Row> classical_table(const CliConfig& cfg, Family family, std::size_t n_max) {
    switch (family) {
    case Family::bernoulli: {
        const Path p = choose_path(cfg, {Path::recurrence, Path::generating_function});
        const auto x = parse_in_ring<Rational>(cfg.x, "--x");
        const auto values = p == Path::recurrence ? bernoulli_poly_values(x, n_max) : bernoulli_gf_values(x, n_max);
        return sequence_rows(family, values, n_max, std::nullopt, std::nullopt, p);
    }
    case Family::stirling1: {
        const Path p = choose_path(cfg, {Path::generating_function, Path::falling_factorial_expansion});
        const auto t = p == Path::generating_function ? stirling1_gf(n_max) : stirling1_falling(n_max);
        return triangle_rows(family, t, std::nullopt, p);
    }
    case Family::stirling2: {
        const Path p = choose_path(cfg, {Path::generating_function, Path::recurrence});
        const auto t = p == Path::generating_function ? stirling2_gf(n_max) : stirling2_recurrence(n_max);
        return triangle_rows(family, t, std::nullopt, p);
    }
    default:
        break;
    }
    throw usage_error("family '" + cfg.family + "' needs a lambda");
}

bool is_classical(Family f) {
    return f == Family::bernoulli || f == Family::stirling1 || f == Family::stirling2;
}

Family family_or_usage(const std::string& name) {
    try {
        return parse_family(name);
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
}

std::size_t effective_n_max(const CliConfig& cfg) {
    if (!cfg.n_max) {
        return cfg.order;
    }
    if (*cfg.n_max < 0) {
        throw usage_error("--n-max must be nonnegative");
    }
    if (static_cast<std::size_t>(*cfg.n_max) > cfg.order) {
        throw usage_error("--n-max " + std::to_string(*cfg.n_max) + " exceeds the truncation order " +
                          std::to_string(cfg.order));
    }
    return static_cast<std::size_t>(*cfg.n_max);
}

void emit(const CliConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.output);
    if (!file) {
        throw usage_error("cannot open output file '" + cfg.output + "'");
    }
    file << text;
}

void emit_rows(const CliConfig& cfg, const std::vector<Row>& rows, std::ostream& out) {
    emit(cfg, cfg.format == Format::json ? rows_to_json(rows).dump(2) + "\n" : rows_to_csv(rows), out);
}

int cmd_table(const CliConfig& cfg, std::ostream& out) {
    const Family family = family_or_usage(cfg.family);
    const std::size_t n_max = effective_n_max(cfg);
    std::vector<Row> rows;
    if (is_classical(family)) {
        rows = classical_table(cfg, family, n_max);
    } else if (cfg.lambda == "symbolic") {
        rows = degenerate_table(cfg, family, LambdaPoly::lambda(), n_max);
    } else {
        rows = degenerate_table(cfg, family, parse_in_ring<Rational>(cfg.lambda, "--lambda"), n_max);
    }
    emit_rows(cfg, rows, out);
    return kExitOk;
}

std::pair<long, long> parse_k_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const long k = std::stol(text);
            return {k, k};
        }
        std::size_t used = 0;
        const long lo = std::stol(text.substr(0, dots), &used);
        const long hi = std::stol(text.substr(dots + 2));
        if (lo > hi || used != dots) {
            throw usage_error("bad --k-range '" + text + "'");
        }
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw usage_error("bad --k-range '" + text + "' (expected a..b)");
    }
}

Fault parse_fault(const std::string& text) {
    // table:n,m
    const auto colon = text.find(':');
    const auto comma = text.find(',', colon == std::string::npos ? 0 : colon);
    if (colon == std::string::npos || comma == std::string::npos) {
        throw usage_error("bad --inject-fault '" + text + "' (expected table:n,m)");
    }
    try {
        return {parse_table(text.substr(0, colon)), std::stol(text.substr(colon + 1, comma - colon - 1)),
                std::stol(text.substr(comma + 1))};
    } catch (const std::logic_error& e) {
        throw usage_error("bad --inject-fault '" + text + "': " + e.what());
    }
}

int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    SuiteConfig suite;
    suite.order = cfg.order;
    suite.k_min = cfg.k_min;
    suite.k_max = cfg.k_max;
    suite.composition_budget = cfg.budget;
    suite.parallel = !cfg.serial;
    suite.symbolic = false;
    std::stringstream list(cfg.lambda);
    for (std::string item; std::getline(list, item, ',');) {
        if (item == "symbolic") {
            suite.symbolic = true;
        } else if (!item.empty()) {
            suite.lambdas.push_back(parse_in_ring<Rational>(item, "--lambda"));
        }
    }
    if (!cfg.inject_fault.empty()) {
        suite.fault = parse_fault(cfg.inject_fault);
    }
    SuiteReport report;
    try {
        report = run_suite(suite);
    } catch (const std::out_of_range& e) {
        throw usage_error(std::string("fault target outside the tables: ") + e.what());
    }
    emit(cfg, cfg.format == Format::json ? to_json(report).dump(2) + "\n" : to_csv(report), out);
    const auto failures = report.failures();
    switch (report.status()) {
    case SuiteStatus::nothing_run:
        err << "nothing run: no lambda representation selected\n";
        return kExitOk;
    case SuiteStatus::passed:
        err << report.checks.size() << " checks passed\n";
        return kExitOk;
    case SuiteStatus::failed:
        break;
    }
    err << failures.size() << " of " << report.checks.size() << " checks failed\n";
    for (const auto* f : failures) {
        err << "  " << f->name;
        for (const auto& [k, v] : f->params) {
            err << ' ' << k << '=' << v;
        }
        err << ": at " << f->counterexample->indices << ": " << f->counterexample->lhs
            << " != " << f->counterexample->rhs << '\n';
    }
    return kExitFail;
}

struct LimitRow {
    std::string family;
    long n;
    std::optional<long> k;
    std::string degenerate;
    std::string classical;
    bool match;
};

template <typename Deg, typename Classical>
void append_limit_rows(std::vector<LimitRow>& rows, std::string_view family, std::optional<long> k,
                       const Deg& degenerate, const Classical& classical, std::size_t n_max) {
    for (std::size_t n = 0; n <= n_max; ++n) {
        const Rational d = at_lambda_zero(degenerate[n]);
        rows.push_back({std::string(family), static_cast<long>(n), k, d.to_string(), classical[n].to_string(),
                        d == classical[n]});
    }
}

void append_limit_triangle(std::vector<LimitRow>& rows, std::string_view family, const Triangle<LambdaPoly>& deg,
                           const Triangle<Rational>& classical) {
    const auto n_max = static_cast<long>(deg.max_n());
    for (long n = 0; n <= n_max; ++n) {
        for (long k = 0; k <= n; ++k) {
            const Rational d = at_lambda_zero(deg(n, k));
            rows.push_back({std::string(family), n, k, d.to_string(), classical(n, k).to_string(),
                            d == classical(n, k)});
        }
    }
}

int cmd_limit(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const std::size_t n_max = effective_n_max(cfg);
    std::vector<Family> families;
    if (cfg.family.empty()) {
        families = {Family::carlitz, Family::poly_bernoulli, Family::deg_stirling1, Family::deg_stirling2,
                    Family::deg_polylog_coeffs};
    } else {
        families = {family_or_usage(cfg.family)};
    }
    const LambdaPoly lambda = LambdaPoly::lambda();
    const Rational x = parse_in_ring<Rational>(cfg.x, "--x");
    std::vector<LimitRow> rows;
    for (const Family f : families) {
        const auto name = family_name(f);
        switch (f) {
        case Family::carlitz:
            append_limit_rows(rows, name, std::nullopt, carlitz_values(lambda, LambdaPoly(x), n_max),
                              bernoulli_poly_values(x, n_max), n_max);
            break;
        case Family::poly_bernoulli: {
            std::vector<Rational> classical;
            if (cfg.k == 1) {
                const auto b = bernoulli_numbers(n_max);
                for (std::size_t n = 0; n <= n_max; ++n) {
                    classical.push_back(n % 2 == 0 ? b[n] : -b[n]);
                }
            } else {
                classical = classical_poly_bernoulli(cfg.k, n_max);
            }
            append_limit_rows(rows, name, cfg.k, poly_bernoulli_gf(cfg.k, lambda, n_max), classical, n_max);
            break;
        }
        case Family::deg_stirling1:
            append_limit_triangle(rows, name, deg_stirling1_gf(lambda, n_max), stirling1_falling(n_max));
            break;
        case Family::deg_stirling2:
            append_limit_triangle(rows, name, deg_stirling2_gf(lambda, n_max), stirling2_recurrence(n_max));
            break;
        case Family::deg_polylog_coeffs:
            append_limit_rows(rows, name, cfg.k, deg_polylog_series(cfg.k, lambda, n_max).coeffs(),
                              polylog_series<Rational>(cfg.k, n_max).coeffs(), n_max);
            break;
        default:
            throw usage_error("family '" + cfg.family + "' has no lambda -> 0 limit");
        }
    }
    std::size_t mismatches = 0;
    std::string text;
    if (cfg.format == Format::json) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            arr.push_back({{"family", r.family},
                           {"n", r.n},
                           {"k", r.k ? nlohmann::ordered_json(*r.k) : nlohmann::ordered_json(nullptr)},
                           {"degenerate_at_0", r.degenerate},
                           {"classical", r.classical},
                           {"match", r.match}});
        }
        text = arr.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "family,n,k,degenerate_at_0,classical,match\n";
        for (const auto& r : rows) {
            os << r.family << ',' << r.n << ',' << (r.k ? std::to_string(*r.k) : "") << ',' << r.degenerate << ','
               << r.classical << ',' << (r.match ? "yes" : "MISMATCH") << '\n';
        }
        text = os.str();
    }
    for (const auto& r : rows) {
        mismatches += r.match ? 0 : 1;
    }
    emit(cfg, text, out);
    if (mismatches > 0) {
        err << mismatches << " limit mismatches\n";
        return kExitFail;
    }
    return kExitOk;
}

std::size_t default_order() {
    const char* env = std::getenv(kOrderEnv);
    if (env == nullptr || *env == '\0') {
        return 16;
    }
    try {
        std::size_t used = 0;
        const long v = std::stol(env, &used);
        if (v < 0 || env[used] != '\0') {
            throw std::invalid_argument(env);
        }
        return static_cast<std::size_t>(v);
    } catch (const std::logic_error&) {
        throw usage_error(std::string(kOrderEnv) + " is not a nonnegative integer: '" + env + "'");
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    std::string format = "csv";
    std::string k_range = "-2..4";
    std::optional<std::size_t> order;

    CLI::App app{"Exact degenerate Bernoulli, Stirling and polylogarithm tables with identity verification",
                 "degbern"};
    app.require_subcommand(1);

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--order", order, "Truncation order N (default $DEGBERN_ORDER or 16)");
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--output", cfg.output, "Write to this file instead of standard output");
    };

    auto* table = app.add_subcommand("table", "Emit an exact table of one family");
    table->add_option("--family", cfg.family, "Sequence family")->required();
    table->add_option("--k", cfg.k, "Polylogarithm order k");
    table->add_option("--lambda", cfg.lambda, "'symbolic' or a rational p/q");
    table->add_option("--x", cfg.x, "Polynomial argument x (ring element)");
    table->add_option("--n-max", cfg.n_max, "Largest index n (at most the order)");
    table->add_option("--path", cfg.path, "Computation path");
    add_common(table);

    auto* verify = app.add_subcommand("verify", "Run the identity suite");
    verify->add_option("--k-range", k_range, "Range of k as a..b");
    verify->add_option("--lambda", cfg.lambda, "Comma-separated list of 'symbolic' and rationals");
    verify->add_option("--budget", cfg.budget, "Largest composition count enumerated per index");
    verify->add_option("--inject-fault", cfg.inject_fault, "Corrupt table entry, as table:n,m");
    verify->add_flag("--serial", cfg.serial, "Run lambda passes sequentially");
    add_common(verify);

    auto* limit = app.add_subcommand("limit", "Compare lambda -> 0 values with classical counterparts");
    limit->add_option("--family", cfg.family, "Degenerate family (default: all)");
    limit->add_option("--k", cfg.k, "Polylogarithm order k");
    limit->add_option("--x", cfg.x, "Rational argument x for carlitz");
    limit->add_option("--n-max", cfg.n_max, "Largest index n (at most the order)");
    add_common(limit);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        const CLI::App* failing = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        err << "error: " << e.what() << "\n" << failing->help();
        return kExitUsage;
    }

    try {
        cfg.order = order ? *order : default_order();
        cfg.format = format == "json" ? Format::json : Format::csv;
        if (verify->parsed()) {
            std::tie(cfg.k_min, cfg.k_max) = parse_k_range(k_range);
            return cmd_verify(cfg, out, err);
        }
        if (limit->parsed()) {
            return cmd_limit(cfg, out, err);
        }
        return cmd_table(cfg, out);
    } catch (const usage_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace degbern::cli
