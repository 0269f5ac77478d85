#ifndef BESOVK_KFUNC_HPP
#define BESOVK_KFUNC_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "besovk/coeffs.hpp"
#include "besovk/errors.hpp"
#include "besovk/grid.hpp"
#include "besovk/norms.hpp"
#include "besovk/oracle.hpp"
#include "besovk/query.hpp"
#include "besovk/rearrange.hpp"
#include "besovk/solve.hpp"

namespace besovk {

namespace detail {

inline void require_positive_t(double t, const char* who) {
    if (!(t > 0.0) || std::isinf(t)) throw DomainError(std::string(who) + ": t must be positive and finite");
}

// Number of leading entries kept on the small-exponent side: floor(tau^alpha).
inline double split_count(double tau, double alpha) {
    return std::floor(std::exp2(alpha * std::log2(tau)));
}

/// K(tau, v, l^p0, l^p1) for p0 < p1 by the threshold classification: the
/// floor(tau^alpha) largest entries form the l^p0 part, alpha = 1/(1/p0 - 1/p1).
/// For p1 = inf there is no second term and the integral runs to tau^p0 exactly.
inline double layer_k_ordered(const Rearrangement& r, double p0, double p1, double tau) {
    if (std::isinf(p1)) {
        const double T = std::exp2(p0 * std::log2(tau));
        return std::pow(partial_power_integral(r, p0, T), 1.0 / p0);
    }
    const double alpha = 1.0 / (1.0 / p0 - 1.0 / p1);
    const double T = split_count(tau, alpha);
    const double head = std::pow(partial_power_integral(r, p0, T), 1.0 / p0);
    const double tail = std::pow(tail_power_integral(r, p1, T), 1.0 / p1);
    return head + tau * tail;
}

inline double layer_k(const Rearrangement& r, double p0, double p1, double tau) {
    if (p0 == p1) return std::min(1.0, tau) * lp_norm(r.sorted, p0);
    if (p0 < p1) return layer_k_ordered(r, p0, p1, tau);
    return tau * layer_k_ordered(r, p1, p0, 1.0 / tau);
}

}  // namespace detail

/// K(t, f_j, B0, B1) for the layer j part of f alone.
inline double k_layer(const CoeffField& f, const InterpQuery& q, std::size_t j, double t) {
    detail::require_positive_t(t, "k_layer");
    const double w0 = layer_weight(f.spec(), q.idx0, j);
    const double tau = t * std::exp2(static_cast<double>(j) * q.s_tilde(f.n()));
    return w0 * detail::layer_k(rearrangement(f.layer(j)), q.idx0.p, q.idx1.p, tau);
}

/// W(t) on the couple (l^{s_a,q}, l^{s_b,q}), s_a < s_b: layers with t 2^{j(s_b-s_a)} > 1
/// are charged to the first space, the rest to the second.
inline double k_maingrid_W(const MainGridSeq& a, double s_a, double s_b, double q, double t) {
    detail::require_positive_t(t, "k_maingrid_W");
    if (!(s_a < s_b)) throw UsageError("k_maingrid_W: requires s_a < s_b");
    const double lt = std::log2(t);
    std::vector<double> in, out;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const double jd = static_cast<double>(j);
        if (lt + jd * (s_b - s_a) > 0.0) in.push_back(std::exp2(jd * s_a) * a[j]);
        else out.push_back(std::exp2(jd * s_b) * a[j]);
    }
    return lp_norm(in, q) + t * lp_norm(out, q);
}

/// K(t, a, l^q0, l^q1) on the main grid through the rearrangement of a.
inline double k_rearr_mainq(const MainGridSeq& a, double q0, double q1, double t) {
    detail::require_positive_t(t, "k_rearr_mainq");
    if (q0 == q1) throw UsageError("k_rearr_mainq: requires q0 != q1");
    return detail::layer_k(rearrangement(a.values), q0, q1, t);
}

namespace detail {

// Inner parameters of the Holmstedt construction; near 1/2 keeps the equivalence
// constant moderate while the endpoint remainders decay like 2^{-4.5 q |log2 t|}.
inline constexpr double kHolmTheta0 = 0.45;
inline constexpr double kHolmTheta1 = 0.55;

}  // namespace detail

/// K(t, a, l^{s0,q0}, l^{s1,q1}) by Holmstedt's formula over the inner couple
/// (l^{a,q}, l^{b,q}) with s_i = (1 - theta_i) a + theta_i b. The inner functional is
/// the per-coordinate one, so both integrals reduce to closed forms per layer; each is
/// normalized so that the full integral returns the l^{s_i,q_i} norm exactly.
inline double k_holmstedt_weighted(const MainGridSeq& a, double s0, double q0, double s1, double q1, double t) {
    detail::require_positive_t(t, "k_holmstedt_weighted");
    if (s0 == s1 || q0 == q1) throw UsageError("k_holmstedt_weighted: requires s0 != s1 and q0 != q1");
    if (s0 > s1) return t * k_holmstedt_weighted(a, s1, q1, s0, q0, 1.0 / t);

    using detail::kHolmTheta0;
    using detail::kHolmTheta1;
    const double eta = kHolmTheta1 - kHolmTheta0;
    const double lt = std::log2(t);

    // d_j = log2 of (upper limit t^{1/eta}) / (breakpoint of layer j)
    auto d_of = [&](std::size_t j) { return (lt + static_cast<double>(j) * (s1 - s0)) / eta; };

    double lower = 0.0, upper = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] == 0.0) continue;
        const double jd = static_cast<double>(j);
        const double d = d_of(j);
        const double c0 = std::exp2(jd * s0) * a[j];
        const double c1 = std::exp2(jd * s1) * a[j];
        if (std::isinf(q0)) {
            lower = std::max(lower, c0 * std::min(1.0, std::exp2((1.0 - kHolmTheta0) * d)));
        } else {
            const double th = kHolmTheta0;
            const double phi = d <= 0.0 ? th * std::exp2((1.0 - th) * q0 * d)
                                        : th - (1.0 - th) * std::expm1(-th * q0 * d * std::numbers::ln2);
            lower += detail::pow_p(c0, q0) * phi;
        }
        if (std::isinf(q1)) {
            upper = std::max(upper, c1 * std::min(1.0, std::exp2(-kHolmTheta1 * d)));
        } else {
            const double th = kHolmTheta1;
            const double phi = d >= 0.0 ? (1.0 - th) * std::exp2(-th * q1 * d)
                                        : (1.0 - th) - th * std::expm1((1.0 - th) * q1 * d * std::numbers::ln2);
            upper += detail::pow_p(c1, q1) * phi;
        }
    }
    if (!std::isinf(q0)) lower = std::pow(lower, 1.0 / q0);
    if (!std::isinf(q1)) upper = std::pow(upper, 1.0 / q1);
    return lower + t * upper;
}

/// p0 = p1: everything reduces to the main-grid sequence of layer l^p norms.
inline double k_p_equal(const CoeffField& f, const InterpQuery& q, double t) {
    detail::require_positive_t(t, "k_p_equal");
    if (q.idx0.p != q.idx1.p) throw UsageError("k_p_equal: requires p0 = p1");
    if (q.idx0 == q.idx1) return std::min(1.0, t) * besov_norm(f, q.idx0);
    const int n = f.n();
    const auto a = main_grid_reduce(f, q.idx0.p);
    const double w0 = q.idx0.weight_exponent(n), w1 = q.idx1.weight_exponent(n);
    if (q.idx0.s == q.idx1.s) {
        MainGridSeq weighted = a;
        for (std::size_t j = 0; j < a.size(); ++j) weighted.values[j] *= std::exp2(static_cast<double>(j) * w0);
        return k_rearr_mainq(weighted, q.idx0.q, q.idx1.q, t);
    }
    if (q.idx0.q == q.idx1.q) {
        if (w0 < w1) return k_maingrid_W(a, w0, w1, q.idx0.q, t);
        return t * k_maingrid_W(a, w1, w0, q.idx0.q, 1.0 / t);
    }
    return k_holmstedt_weighted(a, w0, q.idx0.q, w1, q.idx1.q, t);
}

/// q0 = q1 = q, p0 != p1: l^q aggregate of the single-layer functionals.
inline double k_q_equal(const CoeffField& f, const InterpQuery& q, double t) {
    detail::require_positive_t(t, "k_q_equal");
    if (q.idx0.q != q.idx1.q) throw UsageError("k_q_equal: requires q0 = q1");
    if (q.idx0.p == q.idx1.p) throw UsageError("k_q_equal: requires p0 != p1");
    if (q.idx0.p > q.idx1.p) return t * k_q_equal(f, q.swapped(), 1.0 / t);
    std::vector<double> per_layer(f.layers());
    for (std::size_t j = 0; j < f.layers(); ++j) per_layer[j] = k_layer(f, q, j, t);
    return lp_norm(per_layer, q.idx0.q);
}

namespace detail {

/// Nested split family of one layer: for k = 0..m, side a holds the k entries that
/// belong in l^pa (largest ones when pa < pb, smallest otherwise), side b the rest.
struct SplitFamily {
    std::vector<double> a;  // ||side a||_pa
    std::vector<double> b;  // ||side b||_pb

    bool zero() const { return a.back() == 0.0 && b.front() == 0.0; }

    /// K_inf(tau, v, l^pa, l^pb) restricted to the family.
    double kinf(double tau) const {
        double best = kInf;
        for (std::size_t k = 0; k < a.size(); ++k) best = std::min(best, std::max(a[k], tau * b[k]));
        return best;
    }

    /// min_k max(||a_k||^qa, u ||b_k||^qb)
    double power_kinf(double u, double qa, double qb) const {
        double best = kInf;
        for (std::size_t k = 0; k < a.size(); ++k)
            best = std::min(best, std::max(std::pow(a[k], qa), u * std::pow(b[k], qb)));
        return best;
    }
};

inline SplitFamily split_family(std::span<const double> v, double pa, double pb) {
    auto sorted = rearrangement(v).sorted;
    if (pa > pb) std::reverse(sorted.begin(), sorted.end());
    const std::size_t m = sorted.size();
    SplitFamily fam;
    fam.a.assign(m + 1, 0.0);
    fam.b.assign(m + 1, 0.0);
    // prefix for side a, suffix for side b
    double acc = 0.0;
    for (std::size_t k = 1; k <= m; ++k) {
        const double x = sorted[k - 1];
        if (std::isinf(pa)) {
            acc = std::max(acc, x);
            fam.a[k] = acc;
        } else {
            acc += pow_p(x, pa);
            fam.a[k] = std::pow(acc, 1.0 / pa);
        }
    }
    acc = 0.0;
    for (std::size_t k = m; k-- > 0;) {
        const double x = sorted[k];
        if (std::isinf(pb)) {
            acc = std::max(acc, x);
            fam.b[k] = acc;
        } else {
            acc += pow_p(x, pb);
            fam.b[k] = std::pow(acc, 1.0 / pb);
        }
    }
    return fam;
}

// K_inf on (Y_a, Y_b) with ||.||_{Y} = ||.||_{l^p}^q: find the inner threshold tau with
// u = tau^qb K_inf(tau)^{qa - qb}, then return K_inf(tau)^qa.
inline double power_layer(const SplitFamily& fam, double qa, double qb, double u) {
    if (fam.zero()) return 0.0;
    const double lu = std::log2(u);
    auto g = [&](double tau) {
        return std::exp2(qb * std::log2(tau) + (qa - qb) * std::log2(fam.kinf(tau)));
    };
    // monotone in tau for either order of qa, qb: for qa < qb write it as
    // tau^qa (tau / K_inf(tau))^{qb - qa}
    const double tau = solve_monotone(g, u, std::exp2(lu / std::max(qa, qb)));
    return std::pow(fam.kinf(tau), qa);
}

}  // namespace detail

/// K_inf(s, b, Y0, Y1) with ||x||_{Y_i} = ||x||_{l^{p_i}}^{q_i}.
inline double k_power_layer(const WeightedLayer& b, double p0, double p1, double q0, double q1, double s) {
    if (!(s > 0.0) || std::isinf(s)) throw DomainError("k_power_layer: threshold must be positive and finite");
    if (q0 == q1 || std::isinf(q0) || std::isinf(q1) || !(q0 > 0.0) || !(q1 > 0.0))
        throw UsageError("k_power_layer: requires finite q0 != q1");
    return detail::power_layer(detail::split_family(b.values, p0, p1), q0, q1, s);
}

/// General case p0 != p1, q0 != q1 (both finite): K_inf through the power spaces
/// X_i = ||.||_{A_i}^{q_i}, which split into per-layer power spaces.
inline double k_general(const CoeffField& f, const InterpQuery& q, double t) {
    detail::require_positive_t(t, "k_general");
    const double q0 = q.idx0.q, q1 = q.idx1.q;
    if (q0 == q1 || std::isinf(q0) || std::isinf(q1)) throw UsageError("k_general: requires finite q0 != q1");
    if (q.idx0.p == q.idx1.p) throw UsageError("k_general: requires p0 != p1");
    if (q0 > q1) return t * k_general(f, q.swapped(), 1.0 / t);

    const double st = q.s_tilde(f.n());
    std::vector<detail::SplitFamily> fams;
    std::vector<double> scale;
    for (std::size_t j = 0; j < f.layers(); ++j) {
        auto fam = detail::split_family(weighted_layer(f, q, j).values, q.idx0.p, q.idx1.p);
        if (fam.zero()) continue;
        fams.push_back(std::move(fam));
        scale.push_back(std::exp2(static_cast<double>(j) * st * q1));
    }
    if (fams.empty()) return 0.0;

    auto kx = [&](double sigma) {
        double acc = 0.0;
        for (std::size_t i = 0; i < fams.size(); ++i) acc += detail::power_layer(fams[i], q0, q1, sigma * scale[i]);
        return acc;
    };
    // t = sigma^{1/q1} Kx(sigma)^{1/q0 - 1/q1}, increasing in sigma since q0 < q1
    const double e = 1.0 / q0 - 1.0 / q1;
    auto g = [&](double sigma) { return std::exp2(std::log2(sigma) / q1 + e * std::log2(kx(sigma))); };
    const double sigma = solve_monotone(g, t, std::pow(t, q1));
    return std::pow(kx(sigma), 1.0 / q0);
}

struct KValue {
    double value = 0.0;
    std::string method;
};

inline std::string method_name(CaseTag c) {
    switch (c) {
        case CaseTag::DEGENERATE: return "degenerate";
        case CaseTag::P_EQUAL_S_DIFF_Q_EQUAL: return "p-equal-w";
        case CaseTag::P_EQUAL_S_DIFF_Q_DIFF: return "p-equal-holmstedt";
        case CaseTag::P_EQUAL_S_EQUAL: return "p-equal-rearrangement";
        case CaseTag::Q_EQUAL_P_DIFF: return "q-equal";
        case CaseTag::GENERAL: return "general";
        case CaseTag::ORACLE_ONLY: return "oracle-vertex";
    }
    return "?";
}

/// Routes to the formula matching the couple. GENERAL returns K_inf; ORACLE_ONLY falls
/// back to vertex enumeration with the query's xi.
inline KValue k_dispatch(const CoeffField& f, const InterpQuery& q, double t, const OracleBudget& budget = {}) {
    detail::require_positive_t(t, "k_dispatch");
    q.validate();
    const CaseTag c = q.case_tag();
    KValue out{0.0, method_name(c)};
    switch (c) {
        case CaseTag::DEGENERATE: out.value = std::min(1.0, t) * besov_norm(f, q.idx0); break;
        case CaseTag::P_EQUAL_S_DIFF_Q_EQUAL:
        case CaseTag::P_EQUAL_S_DIFF_Q_DIFF:
        case CaseTag::P_EQUAL_S_EQUAL: out.value = k_p_equal(f, q, t); break;
        case CaseTag::Q_EQUAL_P_DIFF: out.value = k_q_equal(f, q, t); break;
        case CaseTag::GENERAL: out.value = k_general(f, q, t); break;
        case CaseTag::ORACLE_ONLY: out.value = k_vertex_exact(f, q, t, q.xi, budget); break;
    }
    return out;
}

inline KCurve k_curve(const CoeffField& f, const InterpQuery& q, const std::vector<double>& t_grid,
                      const OracleBudget& budget = {}) {
    for (std::size_t i = 1; i < t_grid.size(); ++i)
        if (!(t_grid[i] > t_grid[i - 1])) throw UsageError("k_curve: t grid must be strictly increasing");
    KCurve out;
    out.method = method_name(q.case_tag());
    if (q.case_tag() == CaseTag::ORACLE_ONLY) {
        const VertexTable table(f, q.idx0, q.idx1, budget);
        for (double t : t_grid) {
            detail::require_positive_t(t, "k_curve");
            out.samples.emplace_back(t, table.k(t, q.xi));
        }
        return out;
    }
    for (double t : t_grid) out.samples.emplace_back(t, k_dispatch(f, q, t, budget).value);
    return out;
}

}  // namespace besovk

#endif  // BESOVK_KFUNC_HPP
