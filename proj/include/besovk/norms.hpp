#ifndef BESOVK_NORMS_HPP
#define BESOVK_NORMS_HPP

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "besovk/coeffs.hpp"
#include "besovk/errors.hpp"
#include "besovk/grid.hpp"
#include "besovk/rearrange.hpp"

namespace besovk {

/// Per-layer values a_j on the main grid (typically layer l^p norms).
struct MainGridSeq {
    std::vector<double> values;

    std::size_t size() const noexcept { return values.size(); }
    double operator[](std::size_t j) const { return values[j]; }
};

/// Quasi-norm raised to a fixed power: ||x||_X = ||x||_base^exponent.
struct PowerSpaceSpec {
    BesovIndex base;
    double exponent = 1.0;
};

/// (sum v^p)^{1/p}, max for p = inf. Empty -> 0.
inline double lp_norm(std::span<const double> v, double p) {
    if (std::isinf(p)) {
        double m = 0.0;
        for (double x : v) m = std::max(m, x);
        return m;
    }
    double acc = 0.0;
    for (double x : v) acc += detail::pow_p(x, p);
    return p == 1.0 ? acc : std::pow(acc, 1.0 / p);
}

inline double lp_layer_norm(const CoeffField& f, std::size_t j, double p) {
    return lp_norm(f.layer(j), p);
}

inline MainGridSeq main_grid_reduce(const CoeffField& f, double p) {
    MainGridSeq a;
    a.values.reserve(f.layers());
    for (std::size_t j = 0; j < f.layers(); ++j) a.values.push_back(lp_layer_norm(f, j, p));
    return a;
}

/// (sum_j 2^{jsq} a_j^q)^{1/q}, sup_j 2^{js} a_j for q = inf.
inline double weighted_lq_norm(const MainGridSeq& a, double s, double q) {
    std::vector<double> w(a.values.size());
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = std::exp2(static_cast<double>(j) * s) * a.values[j];
    return lp_norm(w, q);
}

inline double besov_norm(const CoeffField& f, const BesovIndex& idx) {
    if (!idx.valid()) throw UsageError("besov_norm: invalid index");
    return weighted_lq_norm(main_grid_reduce(f, idx.p), idx.weight_exponent(f.n()), idx.q);
}

/// Discrete Lorentz l^{p,q}: the rearrangement integrated exactly cell by cell.
inline double lorentz_seq_norm(std::span<const double> v, double p, double q) {
    if (!(p > 0.0) || std::isinf(p) || !(q > 0.0)) throw UsageError("lorentz_seq_norm: need 0 < p < inf, q > 0");
    const auto r = rearrangement(v);
    if (std::isinf(q)) {
        double m = 0.0;
        for (std::size_t i = 0; i < r.size(); ++i)
            m = std::max(m, std::pow(static_cast<double>(i + 1), 1.0 / p) * r.sorted[i]);
        return m;
    }
    // (q/p) int_i^{i+1} tau^{q/p - 1} dtau = (i+1)^{q/p} - i^{q/p}
    const double e = q / p;
    double acc = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r.sorted[i] == 0.0) break;
        const double cell = std::pow(static_cast<double>(i + 1), e) - std::pow(static_cast<double>(i), e);
        acc += detail::pow_p(r.sorted[i], q) * cell;
    }
    return std::pow(acc, 1.0 / q);
}

/// Dyadic Besov-Lorentz quasi-norm with layer functions sum_g 2^{nj/2}|f_{j,g}| 1_{cube},
/// so |{f_j > 2^u}| = 2^{-nj} #{g : 2^{nj/2}|f_{j,g}| > 2^u}.
inline double besov_lorentz_norm(const CoeffField& f, double s, double p, double q, double r) {
    if (!(p > 0.0) || std::isinf(p) || !(q > 0.0) || !(r > 0.0))
        throw UsageError("besov_lorentz_norm: need 0 < p < inf and q, r > 0");
    const int n = f.n();
    std::vector<double> inner(f.layers(), 0.0);
    for (std::size_t j = 0; j < f.layers(); ++j) {
        const double scale = std::exp2(0.5 * n * static_cast<double>(j));
        const double measure = std::exp2(-static_cast<double>(n) * static_cast<double>(j));
        std::vector<double> v;
        for (double x : f.layer(j))
            if (x > 0.0) v.push_back(x * scale);
        if (v.empty()) continue;
        std::sort(v.begin(), v.end(), std::greater<>());
        const std::size_t total = v.size();

        int u = std::ilogb(v.front()) + 1;  // 2^u > max, so the count starts at 0
        double acc = 0.0;
        for (;; --u) {
            const double lev = std::ldexp(1.0, u);
            const auto cnt = static_cast<std::size_t>(
                std::lower_bound(v.begin(), v.end(), lev, std::greater<>()) - v.begin());
            if (cnt == 0) continue;
            const double mass = measure * static_cast<double>(cnt);
            if (std::isinf(r)) {
                acc = std::max(acc, lev * std::pow(mass, 1.0 / p));
                if (cnt == total) break;  // further terms only shrink
                continue;
            }
            if (cnt == total) {
                // geometric tail over u' <= u with constant count
                acc += std::pow(mass, r / p) * std::pow(lev, r) / (1.0 - std::exp2(-r));
                break;
            }
            acc += std::pow(lev, r) * std::pow(mass, r / p);
        }
        inner[j] = std::isinf(r) ? acc : std::pow(acc, 1.0 / r);
    }
    return weighted_lq_norm(MainGridSeq{inner}, s, q);
}

inline double power_space_norm(double x, const PowerSpaceSpec& spec) {
    if (!(spec.exponent > 0.0) || std::isinf(spec.exponent))
        throw UsageError("power_space_norm: exponent must be positive and finite");
    return std::pow(x, spec.exponent);
}

}  // namespace besovk

#endif  // BESOVK_NORMS_HPP
