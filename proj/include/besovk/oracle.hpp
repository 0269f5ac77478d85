#ifndef BESOVK_ORACLE_HPP
#define BESOVK_ORACLE_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "besovk/coeffs.hpp"
#include "besovk/errors.hpp"
#include "besovk/grid.hpp"
#include "besovk/norms.hpp"
#include "besovk/query.hpp"

namespace besovk {

struct OracleBudget {
    std::size_t max_total_coeffs = 20;
    std::uint64_t max_subsets = std::uint64_t{1} << 20;
    int coord_descent_iters = 500;
};

/// (a^xi + b^xi)^{1/xi}, max for xi = inf.
inline double xi_aggregate(double a, double b, double xi) {
    if (std::isinf(xi)) return std::max(a, b);
    if (xi == 1.0) return a + b;
    const double m = std::max(a, b);
    if (m == 0.0) return 0.0;
    const double r = std::min(a, b) / m;
    return m * std::pow(1.0 + std::pow(r, xi), 1.0 / xi);
}

namespace detail {

// Besov quasi-norm from per-layer power sums (p finite) or maxima (p = inf).
class LayerAccumulator {
public:
    LayerAccumulator(const CoeffField& f, const BesovIndex& idx) : idx_(idx) {
        for (std::size_t j = 0; j < f.layers(); ++j) w_.push_back(layer_weight(f.spec(), idx, j));
    }

    // l^p norm of (value(0), ..., value(m-1))
    template <class Get>
    double norm_of(std::size_t m, Get value) const {
        double acc = 0.0;
        if (std::isinf(idx_.p)) {
            for (std::size_t k = 0; k < m; ++k) acc = std::max(acc, value(k));
            return acc;
        }
        for (std::size_t k = 0; k < m; ++k) acc += pow_p(value(k), idx_.p);
        return idx_.p == 1.0 ? acc : std::pow(acc, 1.0 / idx_.p);
    }

    // layer l^p norm of the entries of v selected by `take`
    template <class Pred>
    double layer_norm(const std::vector<double>& v, Pred take) const {
        return norm_of(v.size(), [&](std::size_t k) { return take(k) ? v[k] : 0.0; });
    }

    double combine(const std::vector<double>& layer_norms) const {
        if (std::isinf(idx_.q)) {
            double m = 0.0;
            for (std::size_t j = 0; j < layer_norms.size(); ++j) m = std::max(m, w_[j] * layer_norms[j]);
            return m;
        }
        double acc = 0.0;
        for (std::size_t j = 0; j < layer_norms.size(); ++j) acc += pow_p(w_[j] * layer_norms[j], idx_.q);
        return idx_.q == 1.0 ? acc : std::pow(acc, 1.0 / idx_.q);
    }

    double weight(std::size_t j) const { return w_[j]; }
    const BesovIndex& index() const { return idx_; }

private:
    BesovIndex idx_;
    std::vector<double> w_;
};

inline void check_budget(const CoeffField& f, const OracleBudget& budget) {
    const std::size_t n = f.spec().total();
    if (n > budget.max_total_coeffs || n >= 64 || (std::uint64_t{1} << n) > budget.max_subsets)
        throw BudgetError("oracle: " + std::to_string(n) + " coefficients exceed the enumeration budget (" +
                          std::to_string(budget.max_total_coeffs) + " coefficients, " +
                          std::to_string(budget.max_subsets) + " subsets)");
}

}  // namespace detail

/// Every vertex split S (coefficients in S go to the A0 side) reduced to the
/// Pareto-minimal pairs (||f 1_S||_A0, ||f 1_{S^c}||_A1).
class VertexTable {
public:
    struct Vertex {
        double a;
        double b;
        std::uint64_t mask;  // bit i set: i-th coefficient (layer-major order) in S
    };

    VertexTable(const CoeffField& f, const BesovIndex& idx0, const BesovIndex& idx1,
                const OracleBudget& budget = {}) {
        detail::check_budget(f, budget);
        const std::size_t total = f.spec().total();
        std::vector<std::size_t> layer_of, offset_of(f.layers());
        for (std::size_t j = 0, off = 0; j < f.layers(); ++j) {
            offset_of[j] = off;
            for (std::size_t k = 0; k < f.layer(j).size(); ++k) layer_of.push_back(j);
            off += f.layer(j).size();
        }
        detail::LayerAccumulator acc0(f, idx0), acc1(f, idx1);
        std::vector<double> n0(f.layers()), n1(f.layers());
        std::uint64_t mask = 0;
        auto refresh = [&](std::size_t j) {
            const auto off = offset_of[j];
            auto in_s = [&](std::size_t k) { return ((mask >> (off + k)) & 1u) != 0; };
            n0[j] = acc0.layer_norm(f.layer(j), in_s);
            n1[j] = acc1.layer_norm(f.layer(j), [&](std::size_t k) { return !in_s(k); });
        };
        for (std::size_t j = 0; j < f.layers(); ++j) refresh(j);

        std::vector<Vertex> all;
        const std::uint64_t count = std::uint64_t{1} << total;
        all.reserve(static_cast<std::size_t>(count));
        all.push_back({acc0.combine(n0), acc1.combine(n1), 0});
        // Gray-code walk: one coordinate flips per step, only its layer is recomputed
        for (std::uint64_t i = 1; i < count; ++i) {
            const int bit = std::countr_zero(i);
            mask ^= std::uint64_t{1} << bit;
            refresh(layer_of[static_cast<std::size_t>(bit)]);
            all.push_back({acc0.combine(n0), acc1.combine(n1), mask});
        }
        std::sort(all.begin(), all.end(), [](const Vertex& x, const Vertex& y) {
            return x.a < y.a || (x.a == y.a && (x.b < y.b || (x.b == y.b && x.mask < y.mask)));
        });
        double best_b = kInf;
        for (const auto& v : all)
            if (v.b < best_b) {
                frontier_.push_back(v);
                best_b = v.b;
            }
    }

    double k(double t, double xi = 1.0) const { return value(frontier_[argmin(t, xi)], t, xi); }

    /// The minimizing vertex at (t, xi).
    const Vertex& best(double t, double xi = 1.0) const { return frontier_[argmin(t, xi)]; }

    const std::vector<Vertex>& frontier() const noexcept { return frontier_; }

private:
    static double value(const Vertex& v, double t, double xi) { return xi_aggregate(v.a, t * v.b, xi); }

    std::size_t argmin(double t, double xi) const {
        if (!(t > 0.0)) throw DomainError("oracle: t must be positive");
        std::size_t best = 0;
        double bv = value(frontier_[0], t, xi);
        for (std::size_t i = 1; i < frontier_.size(); ++i) {
            const double v = value(frontier_[i], t, xi);
            if (v < bv) {
                bv = v;
                best = i;
            }
        }
        return best;
    }

    std::vector<Vertex> frontier_;
};

inline double k_vertex_exact(const CoeffField& f, const InterpQuery& q, double t, double xi,
                             const OracleBudget& budget = {}) {
    if (!(t > 0.0)) throw DomainError("k_vertex_exact: t must be positive");
    if (!(xi > 0.0)) throw UsageError("k_vertex_exact: xi must be positive");
    return VertexTable(f, q.idx0, q.idx1, budget).k(t, xi);
}

inline double k_inf_vertex(const CoeffField& f, const InterpQuery& q, double t, const OracleBudget& budget = {}) {
    return k_vertex_exact(f, q, t, kInf, budget);
}

namespace detail {

inline bool convex_index(const BesovIndex& i) { return i.p >= 1.0 && i.q >= 1.0; }

// ||g||_A0 + t ||f - g||_A1 with cached per-layer norms, so one coordinate can be
// varied in O(m_j + J).
class CuboidObjective {
public:
    CuboidObjective(const CoeffField& f, const InterpQuery& q, double t)
        : f_(f), acc0_(f, q.idx0), acc1_(f, q.idx1), t_(t), n0_(f.layers()), n1_(f.layers()) {}

    void set(std::vector<std::vector<double>> g) {
        g_ = std::move(g);
        for (std::size_t j = 0; j < g_.size(); ++j) refresh(j);
    }

    double value() const { return acc0_.combine(n0_) + t_ * acc1_.combine(n1_); }

    // objective with g_{j,k} replaced by x
    double probe(std::size_t j, std::size_t k, double x) {
        const double keep = g_[j][k];
        const double a = n0_[j], b = n1_[j];
        g_[j][k] = x;
        refresh(j);
        const double v = value();
        g_[j][k] = keep;
        n0_[j] = a;
        n1_[j] = b;
        return v;
    }

    void assign(std::size_t j, std::size_t k, double x) {
        g_[j][k] = x;
        refresh(j);
    }

    double get(std::size_t j, std::size_t k) const { return g_[j][k]; }

private:
    void refresh(std::size_t j) {
        const auto& g = g_[j];
        const auto& f = f_.layer(j);
        n0_[j] = acc0_.norm_of(g.size(), [&](std::size_t k) { return g[k]; });
        n1_[j] = acc1_.norm_of(f.size(), [&](std::size_t k) { return std::max(0.0, f[k] - g[k]); });
    }

    const CoeffField& f_;
    LayerAccumulator acc0_, acc1_;
    double t_;
    std::vector<std::vector<double>> g_;
    std::vector<double> n0_, n1_;
};

template <class F>
double golden_min(F&& fn, double lo, double hi, double tol) {
    const double r = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = hi - r * (hi - lo), d = lo + r * (hi - lo);
    double fc = fn(c), fd = fn(d);
    while (hi - lo > tol) {
        if (fc <= fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - r * (hi - lo);
            fc = fn(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + r * (hi - lo);
            fd = fn(d);
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

/// Minimum of ||g||_A0 + t ||f - g||_A1 over the box 0 <= g <= f (convex indices only).
/// Cyclic coordinate descent with golden-section line search, started from g = 0, g = f
/// and the best vertex split.
inline double k_cuboid_continuous(const CoeffField& f, const InterpQuery& q, double t,
                                  const OracleBudget& budget = {}) {
    if (!(t > 0.0)) throw DomainError("k_cuboid_continuous: t must be positive");
    if (!detail::convex_index(q.idx0) || !detail::convex_index(q.idx1))
        throw UsageError("k_cuboid_continuous: requires p, q >= 1 on both sides");
    detail::check_budget(f, budget);

    const VertexTable table(f, q.idx0, q.idx1, budget);
    const auto vmask = table.best(t, 1.0).mask;
    auto zero = CoeffField::zeros(f.spec()).data();
    auto full = f.data();
    auto vert = zero;
    for (std::size_t j = 0, i = 0; j < f.layers(); ++j)
        for (std::size_t k = 0; k < f.layer(j).size(); ++k, ++i)
            if ((vmask >> i) & 1u) vert[j][k] = f.layer(j)[k];

    double best = kInf;
    detail::CuboidObjective obj(f, q, t);
    for (auto* start : {&zero, &full, &vert}) {
        obj.set(*start);
        double cur = obj.value();
        for (int sweep = 0; sweep < budget.coord_descent_iters; ++sweep) {
            const double before = cur;
            for (std::size_t j = 0; j < f.layers(); ++j) {
                for (std::size_t k = 0; k < f.layer(j).size(); ++k) {
                    const double hi = f.layer(j)[k];
                    if (hi == 0.0) continue;
                    auto fn = [&](double x) { return obj.probe(j, k, x); };
                    const double x = detail::golden_min(fn, 0.0, hi, 1e-10 * hi);
                    double bx = obj.get(j, k), bv = cur;
                    for (double cand : {x, 0.0, hi}) {
                        const double v = fn(cand);
                        if (v < bv) {
                            bv = v;
                            bx = cand;
                        }
                    }
                    if (bv < cur) {
                        obj.assign(j, k, bx);
                        cur = bv;
                    }
                }
            }
            if (before - cur <= 1e-14 * before) break;
        }
        best = std::min(best, cur);
    }
    return best;
}

/// Pointwise oracle over a t grid; `continuous` selects the cuboid minimizer.
inline KCurve oracle_curve(const CoeffField& f, const InterpQuery& q, const std::vector<double>& t_grid,
                           double xi = 1.0, bool continuous = false, const OracleBudget& budget = {}) {
    KCurve out;
    out.method = continuous ? "oracle-cuboid" : "oracle-vertex";
    if (continuous) {
        for (double t : t_grid) out.samples.emplace_back(t, k_cuboid_continuous(f, q, t, budget));
        return out;
    }
    const VertexTable table(f, q.idx0, q.idx1, budget);
    for (double t : t_grid) out.samples.emplace_back(t, table.k(t, xi));
    return out;
}

}  // namespace besovk

#endif  // BESOVK_ORACLE_HPP
