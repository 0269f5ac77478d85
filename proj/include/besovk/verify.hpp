#ifndef BESOVK_VERIFY_HPP
#define BESOVK_VERIFY_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "besovk/besovk.hpp"
#include "besovk/format.hpp"

namespace besovk {

/// One named property, evaluated many times.
struct CheckResult {
    std::string name;
    std::string bound;        // human-readable acceptance rule
    std::size_t evaluations = 0;
    std::size_t failures = 0;
    double min_value = kInf;  // observed metric range (ratio or relative error)
    double max_value = -kInf;
    std::string first_failure;

    bool passed() const { return evaluations > 0 && failures == 0; }
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    int instances = 0;
    std::vector<CheckResult> checks;

    bool passed() const {
        return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed(); });
    }
};

struct SuiteOptions {
    std::uint64_t seed = 1;
    int instances = 0;  // 0: suite default
    /// Applied to every formula K value before it is checked; the identity except in
    /// negative-control runs.
    double corrupt_factor = 1.0;
};

inline nlohmann::json to_json(const SuiteReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) {
        nlohmann::json j{{"name", c.name},
                         {"passed", c.passed()},
                         {"bound", c.bound},
                         {"evaluations", c.evaluations},
                         {"failures", c.failures},
                         {"min", c.evaluations ? nlohmann::json(c.min_value) : nlohmann::json()},
                         {"max", c.evaluations ? nlohmann::json(c.max_value) : nlohmann::json()}};
        if (!c.first_failure.empty()) j["first_failure"] = c.first_failure;
        checks.push_back(std::move(j));
    }
    return {{"suite", r.suite}, {"passed", r.passed()}, {"seed", r.seed}, {"instances", r.instances},
            {"checks", std::move(checks)}};
}

namespace verify_detail {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit_double(g_); }
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(besovk::below(g_, n)); }
    template <class T>
    T pick(const std::vector<T>& v) { return v[below(v.size())]; }
    std::uint64_t next() { return g_(); }

private:
    std::mt19937_64 g_;
};

inline const std::vector<double> kPool{0.5, 1.0, 1.5, 2.0, kInf};
inline const std::vector<double> kConvexPool{1.0, 1.5, 2.0, kInf};

inline GridSpec random_grid(Rng& rng, std::size_t max_total, std::size_t max_layers, int n = 0) {
    const std::size_t J = 1 + rng.below(max_layers);
    std::vector<std::size_t> sizes(J, 1);
    std::size_t budget = max_total > J ? max_total - J : 0;
    const std::size_t extra = budget ? rng.below(budget + 1) : 0;
    for (std::size_t i = 0; i < extra; ++i) ++sizes[rng.below(J)];
    return GridSpec(n > 0 ? n : 1 + static_cast<int>(rng.below(2)), std::move(sizes));
}

inline CoeffField random_field(Rng& rng, const GridSpec& g) {
    static const std::vector<GenKind> kinds{GenKind::UniformRandom, GenKind::Lacunary, GenKind::GeometricDecay};
    return generate(g, rng.pick(kinds), rng.next());
}

inline double random_s(Rng& rng) {
    return std::round(rng.uniform(-2.0, 2.0) * 64.0) / 64.0;  // dyadic, so equal/unequal is exact
}

inline BesovIndex random_index(Rng& rng, const std::vector<double>& pool) {
    return {random_s(rng), rng.pick(pool), rng.pick(pool)};
}

inline double rel_err(double got, double want) {
    const double scale = std::max(std::abs(got), std::abs(want));
    return scale == 0.0 ? 0.0 : std::abs(got - want) / scale;
}

inline std::string describe(const CoeffField& f, const InterpQuery& q, double t) {
    auto num = [](double x) { return format_double(x); };
    std::string s = "n=" + std::to_string(f.n()) + " sizes=(";
    for (std::size_t j = 0; j < f.layers(); ++j) s += (j ? "," : "") + std::to_string(f.layer(j).size());
    s += ") idx0=(" + num(q.idx0.s) + "," + num(q.idx0.p) + "," + num(q.idx0.q) + ") idx1=(" + num(q.idx1.s) +
         "," + num(q.idx1.p) + "," + num(q.idx1.q) + ") t=" + num(t);
    return s;
}

class Recorder {
public:
    Recorder(std::string name, std::string bound) { r_.name = std::move(name); r_.bound = std::move(bound); }

    void record(bool ok, double metric, const std::string& context = {}) {
        ++r_.evaluations;
        if (std::isfinite(metric)) {
            r_.min_value = std::min(r_.min_value, metric);
            r_.max_value = std::max(r_.max_value, metric);
        }
        if (!ok && r_.failures++ == 0) r_.first_failure = context + " value=" + format_double(metric);
    }

    // relative error against tol
    void close(double got, double want, double tol, const std::string& context = {}) {
        const double e = rel_err(got, want);
        record(e <= tol, e, context);
    }

    // got <= bound (1 + tol)
    void at_most(double got, double bound, double tol, const std::string& context = {}) {
        const double slack = std::max(std::abs(bound), std::abs(got)) * tol;
        record(got <= bound + slack, got - bound, context);
    }

    void ratio_in(double ratio, double lo, double hi, const std::string& context = {}) {
        record(ratio >= lo && ratio <= hi, ratio, context);
    }

    CheckResult result() const { return r_; }

private:
    CheckResult r_;
};

inline std::vector<double> t_grid_step(int lo, int hi, int step) {
    std::vector<double> out;
    for (int e = lo; e <= hi; e += step) out.push_back(std::exp2(e));
    return out;
}

// c min(w0, t w1) for a single coefficient c at layer j
inline double single_coefficient_k(const CoeffField& f, const InterpQuery& q, double t) {
    for (std::size_t j = 0; j < f.layers(); ++j)
        for (double c : f.layer(j))
            if (c != 0.0) {
                const double jd = static_cast<double>(j);
                return c * std::min(std::exp2(jd * q.idx0.weight_exponent(f.n())),
                                    t * std::exp2(jd * q.idx1.weight_exponent(f.n())));
            }
    return 0.0;
}

inline int count(const SuiteOptions& o, int fallback) { return o.instances > 0 ? o.instances : fallback; }

}  // namespace verify_detail

/// Exact axioms of the vertex oracle.
inline SuiteReport verify_axioms(const SuiteOptions& opt = {}) {
    using namespace verify_detail;
    const int N = count(opt, 500);
    Rng rng(opt.seed);
    const auto ts = t_grid_step(-12, 12, 2);
    const double tol = 1e-9;
    Recorder comm("commutativity", "K(t;A0,A1) = t K(1/t;A1,A0), rel 1e-9");
    Recorder homog("homogeneity", "K(t,c f) = c K(t,f), rel 1e-9");
    Recorder mono("t-monotone", "K(t) nondecreasing, rel 1e-9");
    Recorder anti("k-over-t-antitone", "K(t)/t nonincreasing, rel 1e-9");
    Recorder coord("coordinatewise-monotone", "g <= f entrywise => K(g) <= K(f), rel 1e-9");
    Recorder sand("xi-sandwich", "K_inf <= K_xi <= K_1 <= 2^{1-1/xi} K_xi, xi in {1,2,inf}, rel 1e-9");

    for (int i = 0; i < N; ++i) {
        const auto g = random_grid(rng, 12, 4);
        const auto f = random_field(rng, g);
        InterpQuery q{random_index(rng, kPool), random_index(rng, kPool)};
        const double c = rng.uniform(0.1, 10.0);
        auto dom = f.data();
        for (auto& l : dom)
            for (double& v : l) v *= rng.uniform(0.0, 1.0);
        const CoeffField fg(g, dom);

        const VertexTable T(f, q.idx0, q.idx1), Ts(f, q.idx1, q.idx0), Tc(f.scaled(c), q.idx0, q.idx1),
            Tg(fg, q.idx0, q.idx1);
        double prev = 0.0, prev_ratio = kInf;
        for (double t : ts) {
            const auto ctx = describe(f, q, t);
            for (double xi : {1.0, 2.0, kInf}) comm.close(T.k(t, xi), t * Ts.k(1.0 / t, xi), tol, ctx);
            const double k = T.k(t);
            homog.close(Tc.k(t), c * k, tol, ctx);
            mono.at_most(prev, k, tol, ctx);
            anti.at_most(k / t, prev_ratio, tol, ctx);
            coord.at_most(Tg.k(t), k, tol, ctx);
            prev = k;
            prev_ratio = k / t;
            const double kinf = T.k(t, kInf);
            for (double xi : {1.0, 2.0, kInf}) {
                const double kx = T.k(t, xi);
                const double c2 = std::isinf(xi) ? 2.0 : std::exp2(1.0 - 1.0 / xi);
                sand.at_most(kinf, kx, tol, ctx);
                sand.at_most(kx, k, tol, ctx);
                sand.at_most(k, c2 * kx, tol, ctx);
            }
        }
    }
    return {"axioms", opt.seed, N, {comm.result(), homog.result(), mono.result(), anti.result(), coord.result(), sand.result()}};
}

/// Continuous cuboid minimum versus vertex minimum on convex couples.
inline SuiteReport verify_vertex_band(const SuiteOptions& opt = {}) {
    using namespace verify_detail;
    const int N = count(opt, 200);
    Rng rng(opt.seed);
    const auto ts = t_grid_step(-6, 6, 3);
    Recorder lower("cuboid-le-vertex", "k_cuboid <= k_vertex + 1e-9");
    Recorder upper("vertex-le-2cuboid", "k_vertex <= 2 k_cuboid + 1e-9");
    for (int i = 0; i < N; ++i) {
        const auto g = random_grid(rng, 12, 4);
        const auto f = random_field(rng, g);
        const InterpQuery q{random_index(rng, kConvexPool), random_index(rng, kConvexPool)};
        const VertexTable T(f, q.idx0, q.idx1);
        for (double t : ts) {
            const auto ctx = describe(f, q, t);
            const double kc = k_cuboid_continuous(f, q, t);
            const double kv = T.k(t);
            lower.record(kc <= kv + 1e-9, kc == 0.0 ? 1.0 : kv / kc, ctx);
            upper.record(kv <= 2.0 * kc + 1e-9, kc == 0.0 ? 1.0 : kv / kc, ctx);
        }
    }
    return {"vertex-band", opt.seed, N, {lower.result(), upper.result()}};
}

namespace verify_detail {

enum class PEqualCase { W, Holmstedt, Rearrangement };

inline InterpQuery random_p_equal(Rng& rng, PEqualCase c) {
    const double p = rng.pick(kPool);
    InterpQuery q{{random_s(rng), p, rng.pick(kPool)}, {0.0, p, 0.0}};
    q.idx1.s = q.idx0.s;
    if (c != PEqualCase::Rearrangement)
        while (q.idx1.s == q.idx0.s) q.idx1.s = random_s(rng);
    q.idx1.q = q.idx0.q;
    if (c != PEqualCase::W)
        while (q.idx1.q == q.idx0.q) q.idx1.q = rng.pick(kPool);
    return q;
}

inline void band_sweep(Recorder& rec, const CoeffField& f, const InterpQuery& q, const std::vector<double>& ts,
                       double lo, double hi, double xi, double corrupt) {
    const VertexTable T(f, q.idx0, q.idx1);
    for (double t : ts) {
        const double k = corrupt * k_dispatch(f, q, t).value;
        const double o = T.k(t, xi);
        rec.ratio_in(o == 0.0 ? (k == 0.0 ? 1.0 : kInf) : k / o, lo, hi, describe(f, q, t));
    }
}

}  // namespace verify_detail

/// p0 = p1 formulas against the vertex oracle, plus the exactly decoupled q = 1 case.
inline SuiteReport verify_p_equal(const SuiteOptions& opt = {}) {
    using namespace verify_detail;
    const int N = count(opt, 100);
    Rng rng(opt.seed);
    const auto ts = t_grid_step(-12, 12, 2);
    Recorder w("w-band", "formula/oracle in [1/8, 8]");
    Recorder h("holmstedt-band", "formula/oracle in [1/8, 8]");
    Recorder r("rearrangement-band", "formula/oracle in [1/8, 8]");
    Recorder exact("q1-decoupled-exact", "sum_j min(2^{j a}, t 2^{j b}) a_j, rel 1e-9");
    const std::pair<PEqualCase, Recorder*> cases[] = {
        {PEqualCase::W, &w}, {PEqualCase::Holmstedt, &h}, {PEqualCase::Rearrangement, &r}};
    for (auto [c, rec] : cases)
        for (int i = 0; i < N; ++i) {
            const auto g = random_grid(rng, 14, 6);
            const auto f = random_field(rng, g);
            band_sweep(*rec, f, random_p_equal(rng, c), ts, 0.125, 8.0, 1.0, opt.corrupt_factor);
        }
    for (int i = 0; i < N; ++i) {
        const auto g = random_grid(rng, 14, 6);
        const auto f = random_field(rng, g);
        auto q = random_p_equal(rng, PEqualCase::W);
        q.idx0.q = q.idx1.q = 1.0;
        const auto a = main_grid_reduce(f, q.idx0.p);
        const double wa = q.idx0.weight_exponent(g.n()), wb = q.idx1.weight_exponent(g.n());
        for (double t : ts) {
            double want = 0.0;
            for (std::size_t j = 0; j < a.size(); ++j) {
                const double jd = static_cast<double>(j);
                want += std::min(std::exp2(jd * wa), t * std::exp2(jd * wb)) * a[j];
            }
            exact.close(opt.corrupt_factor * k_dispatch(f, q, t).value, want, 1e-9, describe(f, q, t));
        }
    }
    return {"p-equal", opt.seed, N, {w.result(), h.result(), r.result(), exact.result()}};
}

/// q0 = q1, p0 != p1.
inline SuiteReport verify_q_equal(const SuiteOptions& opt = {}) {
    using namespace verify_detail;
    const int N = count(opt, 100);
    Rng rng(opt.seed);
    const auto ts = t_grid_step(-12, 12, 2);
    Recorder band("band", "formula/oracle in [1/8, 8]");
    Recorder single("single-coefficient", "c min(w0, t w1), rel 1e-9");
    auto draw = [&] {
        InterpQuery q{random_index(rng, kPool), random_index(rng, kPool)};
        while (q.idx1.p == q.idx0.p) q.idx1.p = rng.pick(kPool);
        q.idx1.q = q.idx0.q;
        return q;
    };
    for (int i = 0; i < N; ++i) {
        const auto g = random_grid(rng, 12, 4);
        const auto f = random_field(rng, g);
        band_sweep(band, f, draw(), ts, 0.125, 8.0, 1.0, opt.corrupt_factor);
    }
    for (int i = 0; i < N; ++i) {
        const auto g = random_grid(rng, 12, 6);
        const auto f = generate(g, GenKind::SingleSpike, rng.next()).scaled(rng.uniform(0.1, 10.0));
        const auto q = draw();
        for (double t : ts)
            single.close(opt.corrupt_factor * k_dispatch(f, q, t).value, single_coefficient_k(f, q, t), 1e-9,
                         describe(f, q, t));
    }
    return {"q-equal", opt.seed, N, {band.result(), single.result()}};
}

/// p0 != p1, q0 != q1: composed K_inf against vertex K_inf.
inline SuiteReport verify_general(const SuiteOptions& opt = {}) {
    using namespace verify_detail;
    const int N = count(opt, 50);
    Rng rng(opt.seed);
    const auto ts = t_grid_step(-20, 20, 2);
    const std::vector<double> ps{1.0, 2.0, kInf}, qs{0.5, 1.0, 2.0, 3.0};
    Recorder band("band", "composed/oracle K_inf in [1/16, 16]");
    Recorder spread("spread", "max/min of the ratio over t <= 16");
    Recorder single("single-coefficient", "c min(w0, t w1), rel 1e-6");
    auto draw = [&] {
        InterpQuery q{{random_s(rng), rng.pick(ps), rng.pick(qs)}, {random_s(rng), rng.pick(ps), rng.pick(qs)}};
        while (q.idx1.p == q.idx0.p) q.idx1.p = rng.pick(ps);
        while (q.idx1.q == q.idx0.q) q.idx1.q = rng.pick(qs);
        return q;
    };
    for (int i = 0; i < N; ++i) {
        const auto g = random_grid(rng, 10, 4);
        const auto f = random_field(rng, g);
        const auto q = draw();
        const VertexTable T(f, q.idx0, q.idx1);
        double lo = kInf, hi = 0.0;
        for (double t : ts) {
            const double k = opt.corrupt_factor * k_general(f, q, t);
            const double o = T.k(t, kInf);
            const double ratio = k / o;
            band.ratio_in(ratio, 1.0 / 16.0, 16.0, describe(f, q, t));
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        spread.record(hi / lo <= 16.0, hi / lo, describe(f, q, 0.0));
    }
    for (int i = 0; i < N; ++i) {
        const auto g = random_grid(rng, 10, 6);
        const auto f = generate(g, GenKind::SingleSpike, rng.next()).scaled(rng.uniform(0.1, 10.0));
        const auto q = draw();
        for (double t : ts)
            single.close(opt.corrupt_factor * k_general(f, q, t), single_coefficient_k(f, q, t), 1e-6,
                         describe(f, q, t));
    }
    return {"general", opt.seed, N, {band.result(), spread.result(), single.result()}};
}

/// Every formula path recovers the endpoint norms at t = 2^{+-40}.
inline SuiteReport verify_endpoints(const SuiteOptions& opt = {}) {
    using namespace verify_detail;
    const int N = count(opt, 100);
    Rng rng(opt.seed);
    const std::vector<double> qs_general{0.5, 1.0, 2.0, 3.0};
    const char* names[] = {"degenerate", "p-equal-w", "p-equal-holmstedt", "p-equal-rearrangement", "q-equal",
                           "general"};
    std::vector<Recorder> big, small;
    for (auto* nm : names) {
        big.emplace_back(std::string(nm) + "-large-t", "K(2^40) = ||f||_A0, rel 1e-6");
        small.emplace_back(std::string(nm) + "-small-t", "2^40 K(2^-40) = ||f||_A1, rel 1e-6");
    }
    for (int i = 0; i < N; ++i) {
        const int path = i % 6;
        const auto g = random_grid(rng, 12, 4, 1);
        const auto f = random_field(rng, g);
        InterpQuery q;
        switch (path) {
            case 0: q.idx0 = q.idx1 = random_index(rng, kPool); break;
            case 1: q = random_p_equal(rng, PEqualCase::W); break;
            case 2: q = random_p_equal(rng, PEqualCase::Holmstedt); break;
            case 3: q = random_p_equal(rng, PEqualCase::Rearrangement); break;
            case 4:
                q = {random_index(rng, kPool), random_index(rng, kPool)};
                while (q.idx1.p == q.idx0.p) q.idx1.p = rng.pick(kPool);
                q.idx1.q = q.idx0.q;
                break;
            default:
                q = {{random_s(rng), rng.pick(kPool), rng.pick(qs_general)},
                     {random_s(rng), rng.pick(kPool), rng.pick(qs_general)}};
                while (q.idx1.p == q.idx0.p) q.idx1.p = rng.pick(kPool);
                while (q.idx1.q == q.idx0.q) q.idx1.q = rng.pick(qs_general);
        }
        const double hi_t = std::exp2(40.0), lo_t = std::exp2(-40.0);
        big[path].close(opt.corrupt_factor * k_dispatch(f, q, hi_t).value, besov_norm(f, q.idx0), 1e-6,
                        describe(f, q, hi_t));
        small[path].close(opt.corrupt_factor * k_dispatch(f, q, lo_t).value / lo_t, besov_norm(f, q.idx1), 1e-6,
                          describe(f, q, lo_t));
    }
    SuiteReport rep{"endpoints", opt.seed, N, {}};
    for (std::size_t k = 0; k < big.size(); ++k) {
        rep.checks.push_back(big[k].result());
        rep.checks.push_back(small[k].result());
    }
    return rep;
}

/// Interpolation-norm identities.
inline SuiteReport verify_identities(const SuiteOptions& opt = {}) {
    using namespace verify_detail;
    const int N = count(opt, 100);
    Rng rng(opt.seed);
    Recorder closed("closed-form-4c", "single coefficient, unit weights, theta=1/2, r=1: 4c, rel 1e-4");
    Recorder closed_inf("closed-form-r-inf", "single coefficient, unit weights, r=inf: c, rel 1e-9");
    Recorder swap("oracle-theta-swap", "oracle norm (theta) = swapped couple (1-theta), rel 1e-6");

    // single coefficient at layer 0: every weight is 1 and the exact paths give
    // K(t) = c min(1, t) (the Holmstedt path is only equivalent, so it is not listed)
    const std::vector<InterpQuery> unit_queries{
        {{0.0, 2.0, 2.0}, {1.0, 2.0, 2.0}, 0.5, 1.0}, {{0.5, 1.0, 2.0}, {0.5, 1.0, 1.0}, 0.5, 1.0},
        {{0.0, 1.0, 2.0}, {0.0, 2.0, 2.0}, 0.5, 1.0}, {{0.0, 1.0, 1.0}, {1.0, 2.0, 2.0}, 0.5, 1.0},
        {{0.0, 2.0, 2.0}, {0.0, 2.0, 2.0}, 0.5, 1.0}, {{0.0, 0.5, 0.5}, {0.0, 0.5, 2.0}, 0.5, 1.0}};
    for (const auto& q0 : unit_queries) {
        const double c = rng.uniform(0.1, 10.0);
        const auto f = single_coefficient(GridSpec(1, {3, 2}), 0, 1, c);
        const auto ctx = describe(f, q0, 1.0);
        closed.close(opt.corrupt_factor * interp_norm(f, q0).value, 4.0 * c, 1e-4, ctx);
        auto qi = q0;
        qi.r = kInf;
        qi.theta = rng.uniform(0.1, 0.9);
        closed_inf.close(opt.corrupt_factor * interp_norm(f, qi).value, c, 1e-9, ctx);
    }

    struct Batch {
        const char* name;
        InterpQuery q;
    };
    const Batch batches[] = {
        {"besov-identity-w", {{0.0, 2.0, 2.0}, {1.0, 2.0, 2.0}, 0.5, 2.0}},
        {"besov-identity-holmstedt", {{-0.5, 1.5, 1.0}, {1.0, 1.5, 3.0}, 0.3, 1.0}},
        {"besov-identity-w-p1", {{1.0, 1.0, 1.0}, {-1.0, 1.0, 1.0}, 0.6, 1.5}},
    };
    std::vector<CheckResult> batch_checks;
    for (const auto& b : batches) {
        Recorder spread(b.name, "max/min ratio of interpolation norm to Besov norm over 100 fields <= 32");
        double lo = kInf, hi = 0.0;
        for (int i = 0; i < N; ++i) {
            const std::size_t J = 1 + rng.below(8);
            std::vector<std::size_t> sizes(J);
            for (auto& m : sizes) m = 1 + rng.below(16);
            const auto f = random_field(rng, GridSpec(1 + static_cast<int>(rng.below(2)), sizes));
            const auto rep = besov_identity_check(f, b.q);
            const double ratio = rep.ratio;
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        spread.record(hi / lo <= 32.0, hi / lo, b.name);
        batch_checks.push_back(spread.result());
    }

    for (int i = 0; i < std::max(1, N / 5); ++i) {
        const auto g = random_grid(rng, 8, 3);
        const auto f = random_field(rng, g);
        InterpQuery q{random_index(rng, kPool), random_index(rng, kPool), rng.uniform(0.1, 0.9), rng.pick(kPool)};
        const double a = interp_norm(f, q, {}, KMethod::Oracle).value;
        const double b = interp_norm(f, q.swapped(), {}, KMethod::Oracle).value;
        swap.close(a, b, 1e-6, describe(f, q, 1.0));
    }

    SuiteReport rep{"identities", opt.seed, N, {closed.result(), closed_inf.result()}};
    for (auto& c : batch_checks) rep.checks.push_back(c);
    rep.checks.push_back(swap.result());
    return rep;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"axioms", "vertex-band", "p-equal", "q-equal",
                                                "general", "identities", "endpoints"};
    return names;
}

inline SuiteReport run_suite(const std::string& name, const SuiteOptions& opt = {}) {
    if (name == "axioms") return verify_axioms(opt);
    if (name == "vertex-band") return verify_vertex_band(opt);
    if (name == "p-equal") return verify_p_equal(opt);
    if (name == "q-equal") return verify_q_equal(opt);
    if (name == "general") return verify_general(opt);
    if (name == "identities") return verify_identities(opt);
    if (name == "endpoints") return verify_endpoints(opt);
    throw UsageError("unknown verify suite '" + name + "'");
}

}  // namespace besovk

#endif  // BESOVK_VERIFY_HPP
