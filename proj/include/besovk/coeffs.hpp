#ifndef BESOVK_COEFFS_HPP
#define BESOVK_COEFFS_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "besovk/errors.hpp"
#include "besovk/grid.hpp"
#include "besovk/query.hpp"

namespace besovk {

/// Nonnegative coefficient magnitudes, one dense vector per layer.
class CoeffField {
public:
    CoeffField() = default;

    CoeffField(GridSpec spec, std::vector<std::vector<double>> layers)
        : spec_(std::move(spec)), layers_(std::move(layers)) {
        std::vector<std::size_t> lens;
        lens.reserve(layers_.size());
        for (const auto& l : layers_) lens.push_back(l.size());
        if (!validate_compat(spec_, lens))
            throw DataError("CoeffField: layer lengths do not match the grid");
        for (const auto& l : layers_)
            for (double v : l)
                if (!(v >= 0.0) || !std::isfinite(v))
                    throw DataError("CoeffField: entries must be finite and nonnegative");
    }

    /// All-zero field on the given grid.
    static CoeffField zeros(const GridSpec& spec) {
        std::vector<std::vector<double>> layers;
        for (auto m : spec.layer_sizes()) layers.emplace_back(m, 0.0);
        return CoeffField(spec, std::move(layers));
    }

    const GridSpec& spec() const noexcept { return spec_; }
    int n() const noexcept { return spec_.n(); }
    std::size_t layers() const noexcept { return layers_.size(); }
    const std::vector<double>& layer(std::size_t j) const {
        if (j >= layers_.size()) throw IndexError("CoeffField: layer out of range");
        return layers_[j];
    }
    const std::vector<std::vector<double>>& data() const noexcept { return layers_; }

    CoeffField scaled(double c) const {
        auto out = layers_;
        for (auto& l : out)
            for (double& v : l) v *= c;
        return CoeffField(spec_, std::move(out));
    }

    friend bool operator==(const CoeffField&, const CoeffField&) = default;

private:
    GridSpec spec_;
    std::vector<std::vector<double>> layers_{{0.0}};
};

/// b_{j,.} = 2^{j(s0 + n/2 - n/p0)} f_{j,.}
struct WeightedLayer {
    std::size_t j = 0;
    std::vector<double> values;
};

template <class T>
double magnitude(const T& x) {
    return std::abs(x);
}

/// Entrywise modulus of signed or complex data.
template <class T>
CoeffField abs_reduce(const GridSpec& spec, const std::vector<std::vector<T>>& raw) {
    std::vector<std::vector<double>> out;
    out.reserve(raw.size());
    for (const auto& layer : raw) {
        std::vector<double> m;
        m.reserve(layer.size());
        for (const auto& x : layer) {
            double a = magnitude(x);
            if (std::isnan(a)) throw DataError("abs_reduce: NaN entry");
            m.push_back(a);
        }
        out.push_back(std::move(m));
    }
    return CoeffField(spec, std::move(out));
}

inline CoeffField abs_reduce(const CoeffField& f) { return abs_reduce(f.spec(), f.data()); }

inline WeightedLayer weighted_layer(const CoeffField& f, const InterpQuery& q, std::size_t j) {
    const double w = layer_weight(f.spec(), q.idx0, j);
    WeightedLayer out{j, f.layer(j)};
    for (double& v : out.values) v *= w;
    return out;
}

enum class GenKind { UniformRandom, Lacunary, SingleSpike, GeometricDecay };

inline GenKind parse_gen_kind(std::string_view s) {
    if (s == "uniform-random") return GenKind::UniformRandom;
    if (s == "lacunary") return GenKind::Lacunary;
    if (s == "single-spike") return GenKind::SingleSpike;
    if (s == "geometric-decay") return GenKind::GeometricDecay;
    throw UsageError("unknown generator kind '" + std::string(s) + "'");
}

inline std::string_view to_string(GenKind k) {
    switch (k) {
        case GenKind::UniformRandom: return "uniform-random";
        case GenKind::Lacunary: return "lacunary";
        case GenKind::SingleSpike: return "single-spike";
        case GenKind::GeometricDecay: return "geometric-decay";
    }
    return "?";
}

// Distribution objects in <random> are implementation-defined; these two are not, so
// generated files are the same on every platform.
inline double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0,1)
}

inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) {
    // rejection sampling keeps it unbiased
    const std::uint64_t lim = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do x = rng();
    while (x >= lim);
    return x % n;
}

inline CoeffField generate(const GridSpec& spec, GenKind kind, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto f = CoeffField::zeros(spec);
    auto layers = f.data();
    switch (kind) {
        case GenKind::UniformRandom:
            for (auto& l : layers)
                for (double& v : l) v = 1.0 - unit_double(rng);
            break;
        case GenKind::Lacunary:
            for (auto& l : layers)
                for (double& v : l) v = std::ldexp(1.0, -4 * static_cast<int>(below(rng, 8)));
            break;
        case GenKind::GeometricDecay:
            for (std::size_t j = 0; j < layers.size(); ++j)
                for (double& v : layers[j])
                    v = std::ldexp(0.5 + 0.5 * (1.0 - unit_double(rng)), -static_cast<int>(j));
            break;
        case GenKind::SingleSpike: {
            std::uint64_t pos = below(rng, spec.total());
            for (auto& l : layers) {
                if (pos < l.size()) {
                    l[pos] = 1.0;
                    break;
                }
                pos -= l.size();
            }
            break;
        }
    }
    return CoeffField(spec, std::move(layers));
}

inline CoeffField generate(const GridSpec& spec, std::string_view kind, std::uint64_t seed) {
    return generate(spec, parse_gen_kind(kind), seed);
}

/// Field with a single coefficient c at (j, k).
inline CoeffField single_coefficient(const GridSpec& spec, std::size_t j, std::size_t k, double c) {
    auto layers = CoeffField::zeros(spec).data();
    layers.at(j).at(k) = c;
    return CoeffField(spec, std::move(layers));
}

}  // namespace besovk

#endif  // BESOVK_COEFFS_HPP
