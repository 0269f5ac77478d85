// besovk: K-functionals and interpolation norms of Besov coefficient sequences.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "besovk/besovk.hpp"
#include "besovk/coeff_io.hpp"
#include "besovk/format.hpp"
#include "besovk/verify.hpp"

namespace {

using namespace besovk;

constexpr int kExitFail = 1;   // verify failure, numeric failure
constexpr int kExitUsage = 2;  // bad flags, unreadable or malformed input
constexpr int kExitBudget = 3; // oracle refused the instance

struct RunConfig {
    std::string input;
    std::string gen_kind;
    std::string gen_spec;
    std::uint64_t seed = 1;

    std::string s0 = "0", p0 = "2", q0 = "2", s1 = "1", p1 = "2", q1 = "2";
    std::string theta = "0.5", r = "1", xi = "1";

    std::optional<int> t_min_exp, t_max_exp, points_per_decade;
    std::string method = "formula";
    std::optional<std::size_t> budget;
    std::string out;
    std::string format;

    // verify
    std::string suite;
    int instances = 0;
    std::string corrupt_factor = "1";

    bool lorentz = false;
};

double number(const std::string& flag, const std::string& text) {
    double v;
    if (!parse_double(text, v)) throw UsageError("--" + flag + ": not a number: '" + text + "'");
    return v;
}

InterpQuery make_query(const RunConfig& c) {
    InterpQuery q{{number("s0", c.s0), number("p0", c.p0), number("q0", c.q0)},
                  {number("s1", c.s1), number("p1", c.p1), number("q1", c.q1)},
                  number("theta", c.theta),
                  number("r", c.r),
                  number("xi", c.xi)};
    q.validate();
    return q;
}

OracleBudget make_budget(const RunConfig& c) {
    OracleBudget b;
    if (c.budget) {
        b.max_total_coeffs = *c.budget;
        b.max_subsets = *c.budget < 63 ? (std::uint64_t{1} << *c.budget) : ~std::uint64_t{0};
    }
    return b;
}

/// "J,n,m0,m1,..." -> grid
GridSpec parse_grid_spec(const std::string& text) {
    std::vector<long long> v;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw UsageError("--spec: bad integer '" + tok + "'");
        }
    }
    if (v.size() < 3) throw UsageError("--spec: expected J,n,m0,...,m_{J-1}");
    const long long J = v[0], n = v[1];
    if (J < 1 || n < 1 || static_cast<long long>(v.size()) != J + 2)
        throw UsageError("--spec: J must be >= 1 and followed by n and exactly J layer sizes");
    std::vector<std::size_t> sizes;
    for (std::size_t i = 2; i < v.size(); ++i) {
        if (v[i] < 1) throw UsageError("--spec: layer sizes must be >= 1");
        sizes.push_back(static_cast<std::size_t>(v[i]));
    }
    return GridSpec(static_cast<int>(n), std::move(sizes));
}

CoeffField load_field(const RunConfig& c) {
    const bool from_file = !c.input.empty(), from_gen = !c.gen_kind.empty();
    if (from_file == from_gen) throw UsageError("exactly one of --input or --generate is required");
    if (from_file) return read_coeff_file(c.input);
    if (c.gen_spec.empty()) throw UsageError("--generate needs --spec J,n,m0,...");
    return generate(parse_grid_spec(c.gen_spec), c.gen_kind, c.seed);
}

void emit(const RunConfig& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream os(c.out, std::ios::binary);
    if (!os) throw DataError("cannot write '" + c.out + "'");
    os << text;
}

std::string fmt_choice(const RunConfig& c, const char* fallback) {
    const std::string f = c.format.empty() ? fallback : c.format;
    if (f != "csv" && f != "json") throw UsageError("--format must be csv or json");
    return f;
}

std::string json_number(double x) {
    // JSON has no infinity; such values are reported as null
    return std::isfinite(x) ? format_double(x) : "null";
}

int cmd_norm(const RunConfig& c) {
    const auto f = load_field(c);
    const auto q = make_query(c);
    const double b = besov_norm(f, q.idx0);
    std::optional<double> bl;
    if (c.lorentz) bl = besov_lorentz_norm(f, q.idx0.s, q.idx0.p, q.idx0.q, q.r);
    if (fmt_choice(c, "json") == "csv") {
        std::string s = bl ? "besov_norm,besov_lorentz_norm\n" : "besov_norm\n";
        s += format_double(b);
        if (bl) s += "," + format_double(*bl);
        emit(c, s + "\n");
    } else {
        std::string s = "{\"besov_norm\": " + json_number(b);
        if (bl) s += ", \"besov_lorentz_norm\": " + json_number(*bl);
        emit(c, s + "}\n");
    }
    return 0;
}

int cmd_kcurve(const RunConfig& c) {
    const auto f = load_field(c);
    const auto q = make_query(c);
    const auto grid = make_t_grid(c.t_min_exp.value_or(-20), c.t_max_exp.value_or(20), c.points_per_decade.value_or(2));
    const auto method = parse_method(c.method);
    const auto budget = make_budget(c);
    const KCurve curve =
        method == KMethod::Oracle ? oracle_curve(f, q, grid, q.xi, false, budget) : k_curve(f, q, grid, budget);
    std::string s;
    if (fmt_choice(c, "csv") == "csv") {
        s = "t,K,method\n";
        for (const auto& [t, k] : curve.samples) s += format_double(t) + "," + format_double(k) + "," + curve.method + "\n";
    } else {
        s = "{\"method\": \"" + curve.method + "\", \"samples\": [";
        for (std::size_t i = 0; i < curve.samples.size(); ++i)
            s += (i ? ", " : "") + std::string("{\"t\": ") + json_number(curve.samples[i].first) +
                 ", \"K\": " + json_number(curve.samples[i].second) + "}";
        s += "]}\n";
    }
    emit(c, s);
    return 0;
}

int cmd_interpnorm(const RunConfig& c) {
    const auto f = load_field(c);
    const auto q = make_query(c);
    QuadratureSpec quad;
    quad.t_min_exp = c.t_min_exp.value_or(quad.t_min_exp);
    quad.t_max_exp = c.t_max_exp.value_or(quad.t_max_exp);
    quad.points_per_decade = c.points_per_decade.value_or(quad.points_per_decade);
    const auto res = interp_norm(f, q, quad, parse_method(c.method), make_budget(c));
    if (fmt_choice(c, "json") == "csv") {
        emit(c, "value,t_min_exp,t_max_exp,lower_tail,upper_tail,method\n" + format_double(res.value) + "," +
                    std::to_string(res.t_min_exp) + "," + std::to_string(res.t_max_exp) + "," +
                    format_double(res.lower_tail) + "," + format_double(res.upper_tail) + "," + res.method + "\n");
    } else {
        emit(c, "{\"value\": " + json_number(res.value) + ", \"t_min_exp\": " + std::to_string(res.t_min_exp) +
                    ", \"t_max_exp\": " + std::to_string(res.t_max_exp) +
                    ", \"lower_tail\": " + json_number(res.lower_tail) +
                    ", \"upper_tail\": " + json_number(res.upper_tail) + ", \"method\": \"" + res.method + "\"}\n");
    }
    return 0;
}

int cmd_verify(const RunConfig& c) {
    SuiteOptions opt;
    opt.seed = c.seed;
    opt.instances = c.instances;
    opt.corrupt_factor = number("corrupt-factor", c.corrupt_factor);
    const auto rep = run_suite(c.suite, opt);
    emit(c, to_json(rep).dump(2) + "\n");
    return rep.passed() ? 0 : kExitFail;
}

int cmd_generate(const RunConfig& c) {
    if (c.gen_kind.empty() || c.gen_spec.empty()) throw UsageError("generate needs --generate KIND and --spec J,n,m0,...");
    emit(c, coeffs_to_json_text(load_field(c)));
    return 0;
}

void add_input(CLI::App* app, RunConfig& c) {
    app->add_option("--input", c.input, "coefficient file (JSON)");
    app->add_option("--generate", c.gen_kind, "uniform-random | lacunary | single-spike | geometric-decay");
    app->add_option("--spec", c.gen_spec, "grid for --generate: J,n,m0,m1,...");
    app->add_option("--seed", c.seed, "generator seed")->capture_default_str();
}

void add_indices(CLI::App* app, RunConfig& c) {
    app->add_option("--s0", c.s0)->capture_default_str();
    app->add_option("--p0", c.p0, "in (0, inf], 'inf' allowed")->capture_default_str();
    app->add_option("--q0", c.q0)->capture_default_str();
    app->add_option("--s1", c.s1)->capture_default_str();
    app->add_option("--p1", c.p1)->capture_default_str();
    app->add_option("--q1", c.q1)->capture_default_str();
    app->add_option("--theta", c.theta)->capture_default_str();
    app->add_option("--r", c.r)->capture_default_str();
    app->add_option("--xi", c.xi, "K_xi aggregation exponent")->capture_default_str();
}

void add_grid(CLI::App* app, RunConfig& c) {
    app->add_option("--t-min-exp", c.t_min_exp, "smallest t = 2^k (default -20)");
    app->add_option("--t-max-exp", c.t_max_exp, "largest t = 2^k (default 20)");
    app->add_option("--points-per-decade", c.points_per_decade, "samples per factor of 2");
    app->add_option("--method", c.method, "formula | oracle")->capture_default_str();
    app->add_option("--budget", c.budget, "oracle limit on total coefficients (default 20)");
}

void add_output(CLI::App* app, RunConfig& c) {
    app->add_option("--out", c.out, "write to FILE instead of stdout");
    app->add_option("--format", c.format, "csv | json");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"K-functionals and real-interpolation norms of Besov coefficient sequences"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* norm = app.add_subcommand("norm", "Besov sequence norm of a coefficient field (index 0)");
    add_input(norm, cfg);
    add_indices(norm, cfg);
    add_output(norm, cfg);
    norm->add_flag("--lorentz", cfg.lorentz, "also report the Besov-Lorentz norm with inner exponent r");

    auto* kcurve = app.add_subcommand("kcurve", "K(t) sampled on a dyadic grid");
    add_input(kcurve, cfg);
    add_indices(kcurve, cfg);
    add_grid(kcurve, cfg);
    add_output(kcurve, cfg);

    auto* interp = app.add_subcommand("interpnorm", "real-interpolation norm (theta, r)");
    add_input(interp, cfg);
    add_indices(interp, cfg);
    add_grid(interp, cfg);
    add_output(interp, cfg);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", cfg.suite, "axioms | vertex-band | p-equal | q-equal | general | identities | endpoints")
        ->required();
    verify->add_option("--seed", cfg.seed)->capture_default_str();
    verify->add_option("--instances", cfg.instances, "instances per check (default: suite default)");
    verify->add_option("--corrupt-factor", cfg.corrupt_factor,
                       "scale formula values before checking (negative-control runs)")
        ->capture_default_str();
    add_output(verify, cfg);

    auto* gen = app.add_subcommand("generate", "write a synthetic coefficient file");
    add_input(gen, cfg);
    add_output(gen, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*norm) return cmd_norm(cfg);
        if (*kcurve) return cmd_kcurve(cfg);
        if (*interp) return cmd_interpnorm(cfg);
        if (*verify) return cmd_verify(cfg);
        if (*gen) return cmd_generate(cfg);
    } catch (const BudgetError& e) {
        std::cerr << "besovk: refused: " << e.what() << "\n";
        return kExitBudget;
    } catch (const NumericError& e) {
        std::cerr << "besovk: numeric failure: " << e.what() << " (bracket " << format_double(e.bracket_lo()) << ", "
                  << format_double(e.bracket_hi()) << ")\n";
        return kExitFail;
    } catch (const std::exception& e) {
        std::cerr << "besovk: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
