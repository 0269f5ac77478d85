#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "besovk/norms.hpp"
#include "prop.hpp"

using namespace besovk;

TEST(LpLayerNorm, Examples) {
    const CoeffField f(GridSpec(1, {2}), {{3, 4}});
    EXPECT_DOUBLE_EQ(lp_layer_norm(f, 0, 2.0), 5.0);
    EXPECT_EQ(lp_layer_norm(f, 0, kInf), 4.0);
}

TEST(LpLayerNorm, RandomL1MatchesSum) {
    prop::forall(100, 1, [](prop::Gen& g) {
        const auto f = g.field(g.grid(20, 4));
        for (std::size_t j = 0; j < f.layers(); ++j) {
            double acc = 0.0;
            for (double v : f.layer(j)) acc += v;
            EXPECT_LT(prop::rel(lp_layer_norm(f, j, 1.0), acc), 1e-14);
        }
    });
}

TEST(BesovNorm, Examples) {
    EXPECT_EQ(besov_norm(single_coefficient(GridSpec(1, {1}), 0, 0, 1.0), {0, 2, 2}), 1.0);
    const CoeffField two(GridSpec(1, {1, 1}), {{1}, {1}});
    EXPECT_DOUBLE_EQ(besov_norm(two, {1, kInf, kInf}), std::pow(2.0, 1.5));
}

TEST(BesovNorm, MatchesNaiveDoubleLoop) {
    prop::forall(300, 2, [](prop::Gen& g) {
        const auto f = g.field(g.grid(30, 7));
        const auto idx = g.index();
        EXPECT_LT(prop::rel(besov_norm(f, idx), prop::naive_besov(f, idx)), 1e-12);
    });
}

TEST(BesovNorm, HomogeneousAndMonotone) {
    prop::forall(200, 3, [](prop::Gen& g) {
        const auto spec = g.grid(20, 5);
        const auto f = g.field(spec);
        const auto idx = g.index();
        const double c = g.uniform(0.0, 10.0);
        EXPECT_LT(prop::rel(besov_norm(f.scaled(c), idx), c * besov_norm(f, idx)), 1e-12);
        auto layers = f.data();
        for (auto& l : layers)
            for (auto& v : l) v *= g.uniform(0.0, 1.0);
        EXPECT_LE(besov_norm(CoeffField(spec, layers), idx), besov_norm(f, idx) * (1 + 1e-14));
    });
}

TEST(MainGridReduce, Examples) {
    const auto f = single_coefficient(GridSpec(1, {2, 3}), 1, 2, 1.0);
    EXPECT_EQ(main_grid_reduce(f, 2.0).values, (std::vector<double>{0.0, 1.0}));
    const CoeffField h(GridSpec(1, {2, 3}), {{0.5, 0.25}, {0.1, 0.9, 0.3}});
    EXPECT_EQ(main_grid_reduce(h, kInf).values, (std::vector<double>{0.5, 0.9}));
}

TEST(MainGridReduce, RandomEuclidean) {
    prop::forall(100, 4, [](prop::Gen& g) {
        const auto f = g.field(g.grid(20, 5));
        const auto a = main_grid_reduce(f, 2.0);
        for (std::size_t j = 0; j < f.layers(); ++j) {
            double acc = 0.0;
            for (double v : f.layer(j)) acc += v * v;
            EXPECT_LT(prop::rel(a[j], std::sqrt(acc)), 1e-14);
        }
    });
}

TEST(WeightedLqNorm, Examples) {
    EXPECT_EQ(weighted_lq_norm(MainGridSeq{{1, 0, 0}}, 1.7, 0.5), 1.0);
    EXPECT_DOUBLE_EQ(weighted_lq_norm(MainGridSeq{{1, 1}}, 1.0, 1.0), 3.0);
}

TEST(WeightedLqNorm, NaiveAndPlainLp) {
    prop::forall(100, 5, [](prop::Gen& g) {
        const MainGridSeq a{g.vec(static_cast<std::size_t>(g.integer(1, 10)))};
        const double s = g.smoothness(), q = g.exponent();
        double acc = 0.0;
        for (std::size_t j = 0; j < a.size(); ++j) {
            const double x = std::pow(2.0, j * s) * a[j];
            acc = std::isinf(q) ? std::max(acc, x) : acc + std::pow(x, q);
        }
        const double want = std::isinf(q) ? acc : std::pow(acc, 1.0 / q);
        EXPECT_LT(prop::rel(weighted_lq_norm(a, s, q), want), 1e-12);
        EXPECT_LT(prop::rel(weighted_lq_norm(a, 0.0, q), lp_norm(a.values, q)), 1e-14);
    });
}

TEST(LorentzSeqNorm, SingleEntryIsItself) {
    for (double p : {0.5, 1.0, 3.0})
        for (double q : {0.5, 2.0, kInf}) EXPECT_NEAR(lorentz_seq_norm(std::vector<double>{0.7}, p, q), 0.7, 1e-15);
}

TEST(LorentzSeqNorm, DiagonalIsLp) {
    prop::forall(100, 6, [](prop::Gen& g) {
        const auto v = g.vec(static_cast<std::size_t>(g.integer(1, 15)));
        const double p = g.uniform(0.3, 4.0);
        EXPECT_LT(prop::rel(lorentz_seq_norm(v, p, p), lp_norm(v, p)), 1e-12);
    });
}

TEST(LorentzSeqNorm, MatchesLogQuadrature) {
    prop::forall(30, 7, [](prop::Gen& g) {
        const auto v = g.vec(static_cast<std::size_t>(g.integer(1, 8)));
        const double p = g.uniform(0.5, 3.0), q = g.uniform(0.5, 3.0);
        const auto r = rearrangement(v);
        // (q/p) int (tau^{1/p} f*(tau))^q dtau/tau, midpoint rule in log tau over each cell
        double acc = (static_cast<double>(1) * std::pow(r[0], q));  // first cell is exact: (q/p)(p/q) = 1
        for (std::size_t i = 1; i < r.size(); ++i) {
            const int N = 4000;
            const double a = std::log(double(i)), b = std::log(double(i + 1)), h = (b - a) / N;
            double cell = 0.0;
            for (int k = 0; k < N; ++k) cell += std::exp((a + (k + 0.5) * h) * q / p) * h;
            acc += (q / p) * cell * std::pow(r[i], q);
        }
        EXPECT_LT(prop::rel(lorentz_seq_norm(v, p, q), std::pow(acc, 1.0 / q)), 1e-6);
    });
}

TEST(BesovLorentzNorm, ZeroField) {
    EXPECT_EQ(besov_lorentz_norm(CoeffField::zeros(GridSpec(1, {2, 2})), 0.5, 2, 2, 2), 0.0);
}

TEST(BesovLorentzNorm, SingleCoefficientSeries) {
    // c at layer j: level sets {2^{nj/2} c > 2^u} have measure 2^{-nj}; sum over u < log2(2^{nj/2} c)
    for (double c : {0.3, 1.0, 5.0, 0.0625}) {
        const int n = 2;
        const std::size_t j = 2;
        const double p = 1.5, q = 2.0, r = 1.0, s = 0.5;
        const auto f = single_coefficient(GridSpec(n, {1, 1, 3}), j, 1, c);
        const double peak = std::exp2(0.5 * n * j) * c, mass = std::exp2(-double(n) * j);
        double inner = 0.0;
        for (int u = 60; u >= -200; --u)
            if (std::exp2(u) < peak) inner += std::pow(std::exp2(u), r) * std::pow(mass, r / p);
        const double want = std::exp2(j * s) * std::pow(inner, 1.0 / r);
        EXPECT_LT(prop::rel(besov_lorentz_norm(f, s, p, q, r), want), 1e-12) << c;
    }
}

TEST(BesovLorentzNorm, RandomAgainstDirectDyadicSum) {
    prop::forall(50, 8, [](prop::Gen& g) {
        const auto f = g.field(g.grid(12, 4));
        const double s = g.smoothness(), p = g.uniform(0.5, 3.0), q = g.uniform(0.5, 3.0), r = g.uniform(0.5, 3.0);
        double outer = 0.0;
        for (std::size_t j = 0; j < f.layers(); ++j) {
            double inner = 0.0;
            for (int u = 40; u >= -400; --u) {
                std::size_t cnt = 0;
                for (double x : f.layer(j)) cnt += std::exp2(0.5 * f.n() * j) * x > std::exp2(u) ? 1 : 0;
                inner += std::pow(std::exp2(u), r) * std::pow(std::exp2(-double(f.n()) * j) * cnt, r / p);
            }
            outer += std::pow(std::exp2(j * s) * std::pow(inner, 1.0 / r), q);
        }
        EXPECT_LT(prop::rel(besov_lorentz_norm(f, s, p, q, r), std::pow(outer, 1.0 / q)), 1e-4);
    });
}

TEST(PowerSpaceNorm, Examples) {
    EXPECT_EQ(power_space_norm(1.0, {{}, 2.5}), 1.0);
    EXPECT_DOUBLE_EQ(power_space_norm(2.0, {{}, 3.0}), 8.0);
    EXPECT_THROW(power_space_norm(2.0, {{}, kInf}), UsageError);
}

TEST(PowerSpaceNorm, LogIdentity) {
    prop::forall(100, 9, [](prop::Gen& g) {
        const double x = g.uniform(0.01, 100.0), e = g.uniform(0.1, 5.0);
        EXPECT_LT(prop::rel(std::log(power_space_norm(x, {{}, e})), e * std::log(x)), 1e-12);
    });
}
