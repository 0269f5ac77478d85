#ifndef BESOVK_INTERP_HPP
#define BESOVK_INTERP_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <string>
#include <string_view>

#include "besovk/coeffs.hpp"
#include "besovk/errors.hpp"
#include "besovk/kfunc.hpp"
#include "besovk/norms.hpp"
#include "besovk/oracle.hpp"
#include "besovk/query.hpp"

namespace besovk {

/// Sampling window [2^t_min_exp, 2^t_max_exp], points_per_decade samples per factor 2.
struct QuadratureSpec {
    int points_per_decade = 8;
    int t_min_exp = -20;
    int t_max_exp = 20;
    double tail_rel_tol = 1e-6;
};

enum class KMethod { Formula, Oracle };

inline KMethod parse_method(std::string_view s) {
    if (s == "formula") return KMethod::Formula;
    if (s == "oracle") return KMethod::Oracle;
    throw UsageError("unknown method '" + std::string(s) + "' (expected formula or oracle)");
}

struct InterpResult {
    double value = 0.0;
    int t_min_exp = 0;  // final window after expansion
    int t_max_exp = 0;
    double lower_tail = 0.0;  // closed-form tail integrals of (t^-theta K)^r dt/t
    double upper_tail = 0.0;
    std::string method;
};

/// (int_0^inf (t^-theta K(t))^r dt/t)^{1/r} for a K curve given as a callable.
/// Composite Simpson in log t inside the window, refined adaptively where the
/// curve is rough; outside it K is taken as constant
/// (large t) or linear (small t), whose tails integrate in closed form. The window
/// grows by 10 binary exponents on whichever side still carries more than
/// tail_rel_tol of the total.
template <class KFn>
InterpResult interp_integral(KFn&& K, double theta, double r, const QuadratureSpec& quad, std::string method) {
    if (!(theta > 0.0 && theta < 1.0)) throw UsageError("interp: theta must lie in (0,1)");
    if (!(r > 0.0)) throw UsageError("interp: r must be positive");
    if (quad.points_per_decade < 1 || quad.t_min_exp >= quad.t_max_exp || !(quad.tail_rel_tol > 0.0))
        throw UsageError("interp: invalid quadrature window");
    constexpr int kLimit = 500;
    constexpr int kMaxDepth = 40;
    constexpr double kLeafRelTol = 1e-10;
    const int ppd = quad.points_per_decade;

    std::map<long, double> cache;  // k -> t_k^{-theta} K(t_k), t_k = 2^{k/ppd}
    auto sample = [&](long k) {
        auto it = cache.find(k);
        if (it != cache.end()) return it->second;
        const double lt = static_cast<double>(k) / ppd;
        const double v = std::exp2(-theta * lt) * K(std::exp2(lt));
        cache.emplace(k, v);
        return v;
    };

    int lo_exp = std::max(quad.t_min_exp, -kLimit), hi_exp = std::min(quad.t_max_exp, kLimit);
    InterpResult res;
    res.method = std::move(method);
    for (;;) {
        const long lo = static_cast<long>(lo_exp) * ppd, hi = static_cast<long>(hi_exp) * ppd;
        if (std::isinf(r)) {
            double best = 0.0;
            long arg = lo;
            for (long k = lo; k <= hi; ++k)
                if (sample(k) > best) {
                    best = sample(k);
                    arg = k;
                }
            const bool grow_lo = arg == lo && best > 0.0 && lo_exp > -kLimit;
            const bool grow_hi = arg == hi && best > 0.0 && hi_exp < kLimit;
            if (!grow_lo && !grow_hi) {
                res.value = best;
                break;
            }
            if (grow_lo) lo_exp = std::max(lo_exp - 10, -kLimit);
            if (grow_hi) hi_exp = std::min(hi_exp + 10, kLimit);
            continue;
        }

        auto F = [&](long k) { return std::pow(sample(k), r); };
        const double h = 1.0 / ppd;  // in log2 t
        const long n = hi - lo;
        double plain = 0.0;
        for (long i = 0; i < n; ++i) plain += 0.5 * h * (F(lo + i) + F(lo + i + 1));
        plain *= std::numbers::ln2;
        const double lower = F(lo) / ((1.0 - theta) * r);
        const double upper = F(hi) / (theta * r);
        const double rough_total = plain + lower + upper;
        const bool grow_lo = lower > quad.tail_rel_tol * rough_total;
        const bool grow_hi = upper > quad.tail_rel_tol * rough_total;
        if (grow_lo || grow_hi) {
            if ((grow_lo && lo_exp <= -kLimit) || (grow_hi && hi_exp >= kLimit))
                throw NumericError("interp: tails did not settle within 2^+-500", std::exp2(lo_exp), std::exp2(hi_exp));
            if (grow_lo) lo_exp = std::max(lo_exp - 10, -kLimit);
            if (grow_hi) hi_exp = std::min(hi_exp + 10, kLimit);
            continue;
        }

        // formula curves may jump (set-form splits), so Simpson panels whose halves
        // disagree are split until the discrepancy is negligible against the total
        auto G = [&](double u) { return std::pow(std::exp2(-theta * u) * K(std::exp2(u)), r); };
        const double leaf_tol = kLeafRelTol * rough_total;
        auto simpson = [](double a, double b, double fa, double fm, double fb) {
            return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
        };
        std::function<double(double, double, double, double, double, double, int)> adapt =
            [&](double a, double b, double fa, double fm, double fb, double whole, int depth) {
                const double m = 0.5 * (a + b);
                const double flm = G(0.5 * (a + m)), frm = G(0.5 * (m + b));
                const double left = simpson(a, m, fa, flm, fm), right = simpson(m, b, fm, frm, fb);
                const double diff = left + right - whole;
                if (depth >= kMaxDepth || std::abs(diff) * std::numbers::ln2 <= 15.0 * leaf_tol)
                    return left + right + diff / 15.0;
                return adapt(a, m, fa, flm, fm, left, depth + 1) + adapt(m, b, fm, frm, fb, right, depth + 1);
            };
        double body = 0.0;
        for (long i = 0; i + 1 < n; i += 2) {
            const double a = static_cast<double>(lo + i) * h, b = a + 2.0 * h;
            const double fa = F(lo + i), fm = F(lo + i + 1), fb = F(lo + i + 2);
            body += adapt(a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), 0);
        }
        if (n % 2) {
            const double a = static_cast<double>(hi - 1) * h, b = a + h;
            const double fa = F(hi - 1), fm = G(0.5 * (a + b)), fb = F(hi);
            body += adapt(a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), 0);
        }
        body *= std::numbers::ln2;
        res.value = std::pow(body + lower + upper, 1.0 / r);
        res.lower_tail = lower;
        res.upper_tail = upper;
        break;
    }
    res.t_min_exp = lo_exp;
    res.t_max_exp = hi_exp;
    return res;
}

/// ||f|| in (A0, A1)_{theta, r}, K from the formulas or from vertex enumeration.
inline InterpResult interp_norm(const CoeffField& f, const InterpQuery& q, const QuadratureSpec& quad = {},
                                KMethod method = KMethod::Formula, const OracleBudget& budget = {}) {
    q.validate();
    if (method == KMethod::Oracle || q.case_tag() == CaseTag::ORACLE_ONLY) {
        const VertexTable table(f, q.idx0, q.idx1, budget);
        return interp_integral([&](double t) { return table.k(t, q.xi); }, q.theta, q.r, quad, "oracle-vertex");
    }
    return interp_integral([&](double t) { return k_dispatch(f, q, t, budget).value; }, q.theta, q.r, quad,
                           method_name(q.case_tag()));
}

struct RatioReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
};

/// Interpolation norm between two smoothness levels of one p against the Besov norm
/// with s = (1-theta) s0 + theta s1, p, q = r.
inline RatioReport besov_identity_check(const CoeffField& f, const InterpQuery& q, const QuadratureSpec& quad = {}) {
    if (q.idx0.p != q.idx1.p || q.idx0.s == q.idx1.s)
        throw UsageError("besov_identity_check: requires p0 = p1 and s0 != s1");
    RatioReport rep;
    rep.lhs = interp_norm(f, q, quad, KMethod::Formula).value;
    rep.rhs = besov_norm(f, BesovIndex{(1.0 - q.theta) * q.idx0.s + q.theta * q.idx1.s, q.idx0.p, q.r});
    rep.ratio = rep.lhs / rep.rhs;
    return rep;
}

/// Couple of main-grid spaces built on the base couple (l^{s_a,1}, l^{s_b,1}).
struct ReiterationSpec {
    double s_a = 0.0;
    double s_b = 1.0;
    double theta0 = 0.25;
    double theta1 = 0.75;
    double q0 = 1.0;
    double q1 = 2.0;
    double eta = 0.5;
    double q = 1.0;
};

/// lhs: norm in (E0, E1)_{eta,q} with E_i = l^{sigma_i, q_i}, sigma_i = (1-theta_i) s_a + theta_i s_b
/// (the intermediate spaces of the base couple); rhs: norm in (l^{s_a,1}, l^{s_b,1})_{theta,q},
/// theta = (1-eta) theta0 + eta theta1, from its exact per-coordinate K.
inline RatioReport reiteration_check(const MainGridSeq& a, const ReiterationSpec& spec, const QuadratureSpec& quad = {}) {
    if (!(spec.s_a < spec.s_b) || !(spec.theta0 < spec.theta1))
        throw UsageError("reiteration_check: requires s_a < s_b and theta0 < theta1");
    const double sig0 = (1.0 - spec.theta0) * spec.s_a + spec.theta0 * spec.s_b;
    const double sig1 = (1.0 - spec.theta1) * spec.s_a + spec.theta1 * spec.s_b;
    auto k_mid = [&](double t) {
        if (spec.q0 == spec.q1) return k_maingrid_W(a, sig0, sig1, spec.q0, t);
        return k_holmstedt_weighted(a, sig0, spec.q0, sig1, spec.q1, t);
    };
    auto k_base = [&](double t) {
        double acc = 0.0;
        for (std::size_t j = 0; j < a.size(); ++j) {
            const double jd = static_cast<double>(j);
            acc += std::min(std::exp2(jd * spec.s_a), t * std::exp2(jd * spec.s_b)) * a[j];
        }
        return acc;
    };
    RatioReport rep;
    rep.lhs = interp_integral(k_mid, spec.eta, spec.q, quad, "reiteration-lhs").value;
    const double theta = (1.0 - spec.eta) * spec.theta0 + spec.eta * spec.theta1;
    rep.rhs = interp_integral(k_base, theta, spec.q, quad, "reiteration-rhs").value;
    rep.ratio = rep.lhs / rep.rhs;
    return rep;
}

}  // namespace besovk

#endif  // BESOVK_INTERP_HPP
