#ifndef BESOVK_SOLVE_HPP
#define BESOVK_SOLVE_HPP

#include <cmath>
#include <string>

#include "besovk/errors.hpp"

namespace besovk {

struct SolveOptions {
    double rel_tol = 1e-10;
    int max_bisections = 200;
    int max_doublings = 200;
};

/// Find t > 0 with g(t) = target for nondecreasing g on (0, inf).
/// Works on log2 t; the bracket [lo, hi] starts at [t0/2, 2 t0] and grows by doubling
/// its log-width. Returns the plateau midpoint when g is flat at the target.
template <class G>
double solve_monotone(G&& g, double target, double t0 = 1.0, SolveOptions opt = {}) {
    if (!(target >= 0.0) && !(target < 0.0)) throw NumericError("solve_monotone: NaN target");
    if (!(t0 > 0.0) || std::isinf(t0)) t0 = 1.0;
    const double tol = opt.rel_tol * std::abs(target);
    auto hit = [&](double v) { return std::abs(v - target) <= tol; };

    constexpr double kLogClamp = 1000.0;
    double mid = std::log2(t0);
    double lo = mid - 1.0, hi = mid + 1.0;
    double glo = g(std::exp2(lo)), ghi = g(std::exp2(hi));
    double step = 1.0;
    int grow = 0;
    while (glo > target) {
        if (hit(glo)) return std::exp2(lo);
        if (++grow > opt.max_doublings || lo <= -kLogClamp)
            throw NumericError("solve_monotone: target below range", std::exp2(lo), std::exp2(hi));
        hi = lo;
        ghi = glo;
        step *= 2.0;
        lo = std::max(lo - step, -kLogClamp);
        glo = g(std::exp2(lo));
    }
    while (ghi < target) {
        if (hit(ghi)) return std::exp2(hi);
        if (++grow > opt.max_doublings || hi >= kLogClamp)
            throw NumericError("solve_monotone: target above range", std::exp2(lo), std::exp2(hi));
        lo = hi;
        glo = ghi;
        step *= 2.0;
        hi = std::min(hi + step, kLogClamp);
        ghi = g(std::exp2(hi));
    }
    if (hit(glo)) return std::exp2(lo);
    if (hit(ghi)) return std::exp2(hi);

    for (int it = 0; it < opt.max_bisections; ++it) {
        const double m = 0.5 * (lo + hi);
        if (m <= lo || m >= hi) return std::exp2(m);  // bracket exhausted in floating point
        const double gm = g(std::exp2(m));
        if (hit(gm)) return std::exp2(m);
        if (gm < target) lo = m;
        else hi = m;
        if (hi - lo <= 1e-15 * std::max(1.0, std::abs(m))) return std::exp2(0.5 * (lo + hi));
    }
    throw NumericError("solve_monotone: no convergence after " + std::to_string(opt.max_bisections) +
                           " bisections",
                       std::exp2(lo), std::exp2(hi));
}

}  // namespace besovk

#endif  // BESOVK_SOLVE_HPP
