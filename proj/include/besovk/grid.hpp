#ifndef BESOVK_GRID_HPP
#define BESOVK_GRID_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "besovk/errors.hpp"

namespace besovk {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// n / p with the convention n / inf = 0.
inline double ratio_over(double n, double p) { return std::isinf(p) ? 0.0 : n / p; }

/// Smoothness/integrability triple (s, p, q) of a Besov sequence space.
struct BesovIndex {
    double s = 0.0;
    double p = 2.0;
    double q = 2.0;

    /// Exponent of the layer weight 2^{j (s + n/2 - n/p)}.
    double weight_exponent(int n) const { return s + 0.5 * n - ratio_over(n, p); }

    bool valid() const { return p > 0.0 && q > 0.0 && std::isfinite(s); }

    friend bool operator==(const BesovIndex&, const BesovIndex&) = default;
};

/// Truncated non-homogeneous wavelet grid: layers j = 0..J-1 with m_j entries each.
class GridSpec {
public:
    GridSpec() = default;

    GridSpec(int n, std::vector<std::size_t> layer_sizes)
        : n_(n), sizes_(std::move(layer_sizes)) {
        if (n_ < 1) throw UsageError("GridSpec: dimension n must be >= 1");
        if (sizes_.empty()) throw UsageError("GridSpec: at least one layer required");
        for (auto m : sizes_)
            if (m == 0) throw UsageError("GridSpec: every layer size must be >= 1");
    }

    int n() const noexcept { return n_; }
    std::size_t layers() const noexcept { return sizes_.size(); }
    std::size_t layer_size(std::size_t j) const { return sizes_.at(j); }
    const std::vector<std::size_t>& layer_sizes() const noexcept { return sizes_; }

    std::size_t total() const {
        return std::accumulate(sizes_.begin(), sizes_.end(), std::size_t{0});
    }

    friend bool operator==(const GridSpec&, const GridSpec&) = default;

private:
    int n_ = 1;
    std::vector<std::size_t> sizes_{1};
};

/// 2^{j * weight_exponent}; throws IndexError for j outside the grid.
inline double layer_weight(const GridSpec& spec, const BesovIndex& idx, std::size_t j) {
    if (j >= spec.layers())
        throw IndexError("layer_weight: layer " + std::to_string(j) + " outside grid of " +
                         std::to_string(spec.layers()) + " layers");
    return std::exp2(static_cast<double>(j) * idx.weight_exponent(spec.n()));
}

inline bool validate_compat(const GridSpec& spec, std::span<const std::size_t> lengths) {
    const auto& sizes = spec.layer_sizes();
    return lengths.size() == sizes.size() && std::equal(sizes.begin(), sizes.end(), lengths.begin());
}

}  // namespace besovk

#endif  // BESOVK_GRID_HPP
