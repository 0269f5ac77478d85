#ifndef BESOVK_REARRANGE_HPP
#define BESOVK_REARRANGE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

namespace besovk {

/// Nonincreasing rearrangement f* of a finite vector, read as a step function on
/// unit intervals [i, i+1).
struct Rearrangement {
    std::vector<double> sorted;
    std::size_t source_len = 0;

    double operator[](std::size_t i) const { return i < sorted.size() ? sorted[i] : 0.0; }
    std::size_t size() const noexcept { return sorted.size(); }
};

struct ThresholdSplit {
    std::vector<std::size_t> big_set;
    std::vector<std::size_t> small_set;
    double boundary_fraction = 0.0;
};

/// #{i : v[i] > lambda}
inline std::size_t distribution_count(std::span<const double> v, double lambda) {
    return static_cast<std::size_t>(
        std::count_if(v.begin(), v.end(), [lambda](double x) { return x > lambda; }));
}

inline Rearrangement rearrangement(std::span<const double> v) {
    Rearrangement r{{v.begin(), v.end()}, v.size()};
    std::stable_sort(r.sorted.begin(), r.sorted.end(), std::greater<>());
    return r;
}

namespace detail {
inline double pow_p(double x, double p) {
    if (p == 1.0) return x;
    if (p == 2.0) return x * x;
    return std::pow(x, p);
}
}  // namespace detail

/// Integral of (f*)^p over [0, T].
inline double partial_power_integral(const Rearrangement& r, double p, double T) {
    if (!(T > 0.0)) return 0.0;
    const double fl = std::floor(T);
    const std::size_t whole = fl >= static_cast<double>(r.size()) ? r.size() : static_cast<std::size_t>(fl);
    double acc = 0.0;
    for (std::size_t i = 0; i < whole; ++i) acc += detail::pow_p(r.sorted[i], p);
    const double frac = T - fl;
    if (frac > 0.0 && whole < r.size()) acc += frac * detail::pow_p(r.sorted[whole], p);
    return acc;
}

/// Integral of (f*)^p over [T, infinity).
inline double tail_power_integral(const Rearrangement& r, double p, double T) {
    if (!(T > 0.0)) T = 0.0;
    const double fl = std::floor(T);
    if (fl >= static_cast<double>(r.size())) return 0.0;
    const std::size_t k = static_cast<std::size_t>(fl);
    double acc = (1.0 - (T - fl)) * detail::pow_p(r.sorted[k], p);
    for (std::size_t i = k + 1; i < r.size(); ++i) acc += detail::pow_p(r.sorted[i], p);
    return acc;
}

/// Top-floor(T) entries (ties by ascending index) versus the rest.
inline ThresholdSplit threshold_split(std::span<const double> v, double T) {
    std::vector<std::size_t> order(v.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
    const double t = T > 0.0 ? T : 0.0;
    const double fl = std::floor(t);
    const std::size_t k = fl >= static_cast<double>(v.size()) ? v.size() : static_cast<std::size_t>(fl);
    ThresholdSplit out;
    out.big_set.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
    out.small_set.assign(order.begin() + static_cast<std::ptrdiff_t>(k), order.end());
    std::sort(out.big_set.begin(), out.big_set.end());
    std::sort(out.small_set.begin(), out.small_set.end());
    out.boundary_fraction = t - fl;
    return out;
}

}  // namespace besovk

#endif  // BESOVK_REARRANGE_HPP
