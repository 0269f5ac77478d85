#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "besovk/kfunc.hpp"
#include "prop.hpp"

using namespace besovk;

namespace {

InterpQuery query(BesovIndex a, BesovIndex b) {
    InterpQuery q;
    q.idx0 = a;
    q.idx1 = b;
    return q;
}

double vertex_value(const CoeffField& f, const InterpQuery& q, std::size_t j, double t, double c) {
    return c * std::min(layer_weight(f.spec(), q.idx0, j), t * layer_weight(f.spec(), q.idx1, j));
}

// Holmstedt integrals evaluated by brute force in u = log2(sigma) over the per-coordinate
// inner functional of (l^{a,q}, l^{b,q}); weights theta(1-theta)q normalize the full integrals.
double holmstedt_by_quadrature(const MainGridSeq& a, double s0, double q0, double s1, double q1, double t) {
    const double th0 = 0.45, th1 = 0.55, eta = th1 - th0;
    const double bma = (s1 - s0) / eta, lo_a = s0 - th0 * bma, hi_b = lo_a + bma;
    const double U = std::log2(t) / eta;
    auto inner = [&](double u, double q) {
        double acc = 0.0;
        for (std::size_t j = 0; j < a.size(); ++j) {
            const double jd = static_cast<double>(j);
            acc += std::pow(a[j] * std::min(std::exp2(jd * lo_a), std::exp2(u + jd * hi_b)), q);
        }
        return acc;
    };
    auto integrate = [&](double from, double to, double th, double q) {
        const int N = 400000;
        const double h = (to - from) / N;
        double acc = 0.0;
        for (int i = 0; i < N; ++i) {
            const double u = from + (i + 0.5) * h;
            acc += std::exp2(-th * q * u) * inner(u, q) * h * std::numbers::ln2;
        }
        return th * (1.0 - th) * q * acc;
    };
    const double lower = integrate(U - 400.0, U, th0, q0);
    const double upper = integrate(U, U + 400.0, th1, q1);
    return std::pow(lower, 1.0 / q0) + t * std::pow(upper, 1.0 / q1);
}

}  // namespace

TEST(KLayer, SingleCoefficientIsVertex) {
    prop::forall(200, 1, [](prop::Gen& g) {
        const auto spec = g.grid(10, 5);
        const std::size_t j = static_cast<std::size_t>(g.integer(0, static_cast<int>(spec.layers()) - 1));
        const double c = g.uniform(0.1, 3.0), t = std::exp2(g.uniform(-10, 10));
        const auto f = single_coefficient(spec, j, 0, c);
        const auto q = query(g.index(), g.index());
        EXPECT_LT(prop::rel(k_layer(f, q, j, t), vertex_value(f, q, j, t, c)), 1e-12);
    });
}

TEST(KLayer, ExampleTwoOne) {
    const CoeffField f(GridSpec(1, {2}), {{2, 1}});
    const auto q = query({0, 1, 1}, {0, kInf, 1});
    EXPECT_DOUBLE_EQ(k_layer(f, q, 0, 1.0), 2.0);
    EXPECT_DOUBLE_EQ(prop::brute_vertex(f, q, 1.0, 1.0), 2.0);
}

TEST(KLayer, LargeTRecoversFirstNorm) {
    prop::forall(100, 2, [](prop::Gen& g) {
        const auto f = g.field(g.grid(10, 3));
        const auto q = query(g.index(), g.index());
        const std::size_t j = f.layers() - 1;
        const double want = layer_weight(f.spec(), q.idx0, j) * lp_layer_norm(f, j, q.idx0.p);
        EXPECT_LT(prop::rel(k_layer(f, q, j, std::exp2(200.0)), want), 1e-12);
    });
}

TEST(KLayer, RejectsNonPositiveT) {
    const CoeffField f(GridSpec(1, {1}), {{1}});
    EXPECT_THROW(k_layer(f, query({0, 1, 1}, {0, 2, 1}), 0, 0.0), DomainError);
    EXPECT_THROW(k_layer(f, query({0, 1, 1}, {0, 2, 1}), 0, -1.0), DomainError);
}

TEST(KMainGridW, Examples) {
    EXPECT_DOUBLE_EQ(k_maingrid_W(MainGridSeq{{1, 1}}, 0, 1, 1, 1.0), 2.0);
    EXPECT_DOUBLE_EQ(k_maingrid_W(MainGridSeq{{1.5}}, 0, 1, 2, 4.0), 1.5);
    EXPECT_DOUBLE_EQ(k_maingrid_W(MainGridSeq{{1.5}}, 0, 1, 2, 0.25), 0.375);
    EXPECT_THROW(k_maingrid_W(MainGridSeq{{1}}, 1, 1, 1, 1.0), UsageError);
    EXPECT_THROW(k_maingrid_W(MainGridSeq{{1}}, 2, 1, 1, 1.0), UsageError);
}

TEST(KMainGridW, QOneMatchesDecoupledMinimum) {
    prop::forall(200, 3, [](prop::Gen& g) {
        const MainGridSeq a{g.vec(static_cast<std::size_t>(g.integer(1, 8)))};
        const double sa = g.smoothness(), sb = sa + g.uniform(0.1, 2.0), t = std::exp2(g.uniform(-12, 12));
        double want = 0.0;
        for (std::size_t j = 0; j < a.size(); ++j)
            want += std::min(std::exp2(j * sa), t * std::exp2(j * sb)) * a[j];
        EXPECT_LT(prop::rel(k_maingrid_W(a, sa, sb, 1.0, t), want), 1e-12);
    });
}

TEST(KMainGridW, Homogeneous) {
    prop::forall(100, 4, [](prop::Gen& g) {
        MainGridSeq a{g.vec(static_cast<std::size_t>(g.integer(1, 8)))};
        const double sa = g.smoothness(), sb = sa + 0.5, q = g.exponent(), t = std::exp2(g.uniform(-8, 8));
        const double c = g.uniform(0.1, 10.0);
        const double base = k_maingrid_W(a, sa, sb, q, t);
        for (auto& v : a.values) v *= c;
        EXPECT_LT(prop::rel(k_maingrid_W(a, sa, sb, q, t), c * base), 1e-12);
    });
}

TEST(KRearrMainQ, Examples) {
    EXPECT_DOUBLE_EQ(k_rearr_mainq(MainGridSeq{{2, 1}}, 1, kInf, 1.0), 2.0);
    for (double t : {0.1, 1.0, 7.0}) EXPECT_DOUBLE_EQ(k_rearr_mainq(MainGridSeq{{0.3}}, 0.5, 2, t), 0.3 * std::min(1.0, t));
    EXPECT_THROW(k_rearr_mainq(MainGridSeq{{1}}, 2, 2, 1.0), UsageError);
}

TEST(KRearrMainQ, Commutativity) {
    prop::forall(200, 5, [](prop::Gen& g) {
        const MainGridSeq a{g.vec(static_cast<std::size_t>(g.integer(1, 10)))};
        const double q0 = g.exponent();
        double q1 = g.exponent();
        if (q1 == q0) q1 = q0 == 2.0 ? 1.0 : 2.0;
        const double t = std::exp2(g.uniform(-10, 10));
        EXPECT_LT(prop::rel(k_rearr_mainq(a, q0, q1, t), t * k_rearr_mainq(a, q1, q0, 1.0 / t)), 1e-12);
    });
}

TEST(KHolmstedt, SingleSpikeMatchesQuadrature) {
    for (double q0 : {0.5, 1.0, 2.0})
        for (double q1 : {1.0, 3.0})
            for (double t : {0.01, 1.0, 50.0}) {
                if (q0 == q1) continue;
                for (std::size_t j : {0u, 2u}) {
                    MainGridSeq a{std::vector<double>(3, 0.0)};
                    a.values[j] = 0.8;
                    const double got = k_holmstedt_weighted(a, 0.25, q0, 1.0, q1, t);
                    const double want = holmstedt_by_quadrature(a, 0.25, q0, 1.0, q1, t);
                    EXPECT_LT(prop::rel(got, want), 1e-4) << q0 << " " << q1 << " " << t << " " << j;
                }
            }
}

TEST(KHolmstedt, RandomSequenceMatchesQuadrature) {
    prop::forall(10, 6, [](prop::Gen& g) {
        const MainGridSeq a{g.vec(static_cast<std::size_t>(g.integer(1, 5)))};
        const double q0 = g.pick<double>({0.5, 1.0, 2.0}), q1 = g.pick<double>({1.5, 3.0});
        const double s0 = g.smoothness(), s1 = s0 + g.uniform(0.25, 1.5), t = std::exp2(g.uniform(-6, 6));
        EXPECT_LT(prop::rel(k_holmstedt_weighted(a, s0, q0, s1, q1, t), holmstedt_by_quadrature(a, s0, q0, s1, q1, t)),
                  1e-4);
    });
}

TEST(KHolmstedt, EndpointsAndSwap) {
    prop::forall(100, 7, [](prop::Gen& g) {
        const MainGridSeq a{g.vec(static_cast<std::size_t>(g.integer(1, 6)))};
        const double q0 = g.exponent();
        double q1 = g.exponent();
        if (q1 == q0) q1 = q0 == 2.0 ? 1.0 : 2.0;
        double s0 = g.smoothness(), s1 = g.smoothness();
        if (s1 == s0) s1 = s0 + 0.5;
        const double big = std::exp2(40.0);
        EXPECT_LT(prop::rel(k_holmstedt_weighted(a, s0, q0, s1, q1, big), weighted_lq_norm(a, s0, q0)), 1e-6);
        EXPECT_LT(prop::rel(k_holmstedt_weighted(a, s0, q0, s1, q1, 1.0 / big) * big, weighted_lq_norm(a, s1, q1)), 1e-6);
        const double t = std::exp2(g.uniform(-8, 8));
        EXPECT_LT(prop::rel(k_holmstedt_weighted(a, s0, q0, s1, q1, t), t * k_holmstedt_weighted(a, s1, q1, s0, q0, 1 / t)),
                  1e-12);
    });
}

TEST(KHolmstedt, Degenerate) {
    EXPECT_THROW(k_holmstedt_weighted(MainGridSeq{{1}}, 0, 1, 0, 2, 1.0), UsageError);
    EXPECT_THROW(k_holmstedt_weighted(MainGridSeq{{1}}, 0, 1, 1, 1, 1.0), UsageError);
}

TEST(KPEqual, DegenerateAndWrongCase) {
    const CoeffField f(GridSpec(1, {2, 1}), {{0.5, 1}, {2}});
    const auto q = query({0.5, 2, 2}, {0.5, 2, 2});
    for (double t : {0.25, 1.0, 3.0}) EXPECT_DOUBLE_EQ(k_p_equal(f, q, t), std::min(1.0, t) * besov_norm(f, q.idx0));
    EXPECT_THROW(k_p_equal(f, query({0, 1, 1}, {0, 2, 1}), 1.0), UsageError);
}

TEST(KPEqual, SingleSpikeExactForWAndRearrangement) {
    prop::forall(200, 8, [](prop::Gen& g) {
        const auto spec = g.grid(8, 5);
        const std::size_t j = static_cast<std::size_t>(g.integer(0, static_cast<int>(spec.layers()) - 1));
        const double c = g.uniform(0.1, 3.0), t = std::exp2(g.uniform(-10, 10)), p = g.exponent();
        const auto f = single_coefficient(spec, j, 0, c);
        BesovIndex a{g.smoothness(), p, g.exponent()}, b{g.smoothness(), p, a.q};
        if (g.coin()) b = {a.s, p, a.q == 2.0 ? 1.0 : 2.0};
        const auto q = query(a, b);
        EXPECT_LT(prop::rel(k_p_equal(f, q, t), vertex_value(f, q, j, t, c)), 1e-12);
    });
}

TEST(KQEqual, SingleSpikeAndCommutativity) {
    prop::forall(200, 9, [](prop::Gen& g) {
        const auto spec = g.grid(8, 5);
        const double c = g.uniform(0.1, 3.0), t = std::exp2(g.uniform(-10, 10)), qq = g.exponent();
        const std::size_t j = static_cast<std::size_t>(g.integer(0, static_cast<int>(spec.layers()) - 1));
        BesovIndex a{g.smoothness(), g.exponent(), qq}, b{g.smoothness(), g.exponent(), qq};
        if (a.p == b.p) b.p = a.p == 2.0 ? 1.0 : 2.0;
        const auto q = query(a, b);
        const auto spike = single_coefficient(spec, j, 0, c);
        EXPECT_LT(prop::rel(k_q_equal(spike, q, t), k_layer(spike, q, j, t)), 1e-12);
        const auto f = g.field(spec);
        EXPECT_LT(prop::rel(k_q_equal(f, q, t), t * k_q_equal(f, q.swapped(), 1.0 / t)), 1e-12);
    });
}

TEST(KQEqual, TwoLayersQOneIsSum) {
    const CoeffField f(GridSpec(1, {2, 2}), {{0.5, 0.2}, {0.7, 0.1}});
    const auto q = query({0.25, 1, 1}, {1, 2, 1});
    for (double t : {0.1, 1.0, 10.0})
        EXPECT_LT(prop::rel(k_q_equal(f, q, t), k_layer(f, q, 0, t) + k_layer(f, q, 1, t)), 1e-14);
    EXPECT_THROW(k_q_equal(f, query({0, 1, 1}, {0, 2, 2}), 1.0), UsageError);
}

TEST(KPowerLayer, SingleCoefficientClosedForm) {
    for (double c : {0.3, 1.0, 2.5})
        for (double s : {1e-6, 0.01, 1.0, 30.0, 1e5}) {
            const WeightedLayer b{0, {0.0, c, 0.0}};
            for (auto [q0, q1] : {std::pair{1.0, 2.0}, std::pair{3.0, 0.5}}) {
                const double want = std::min(std::pow(c, q0), s * std::pow(c, q1));
                EXPECT_LT(prop::rel(k_power_layer(b, 1.0, kInf, q0, q1, s), want), 1e-6) << c << " " << s;
            }
        }
}

TEST(KPowerLayer, ZeroLayerAndErrors) {
    const WeightedLayer z{0, {0.0, 0.0}};
    for (double s : {1e-3, 1.0, 1e3}) EXPECT_EQ(k_power_layer(z, 1, 2, 1, 2, s), 0.0);
    EXPECT_THROW(k_power_layer(z, 1, 2, 1, 1, 1.0), UsageError);
    EXPECT_THROW(k_power_layer(z, 1, 2, 1, 2, 0.0), DomainError);
}

TEST(KPowerLayer, MonotoneAndMatchesFamilyMinimax) {
    prop::forall(50, 10, [](prop::Gen& g) {
        const WeightedLayer b{0, g.vec(static_cast<std::size_t>(g.integer(1, 8)), 0.01, 2.0)};
        double p0 = g.exponent(), p1 = g.exponent();
        if (p0 == p1) p1 = p0 == 2.0 ? 1.0 : 2.0;
        const double q0 = g.pick<double>({0.5, 1.0, 2.0}), q1 = g.pick<double>({1.5, 3.0});
        const auto fam = detail::split_family(b.values, p0, p1);
        double prev = 0.0;
        for (int i = 0; i < 50; ++i) {
            const double s = std::exp2(-20.0 + 40.0 * i / 49.0);
            const double v = k_power_layer(b, p0, p1, q0, q1, s);
            EXPECT_GE(v, prev * (1 - 1e-9));
            EXPECT_LT(prop::rel(v, fam.power_kinf(s, q0, q1)), 1e-8);
            prev = v;
        }
    });
}

TEST(KGeneral, SingleCoefficientCollapses) {
    prop::forall(100, 11, [](prop::Gen& g) {
        const auto spec = g.grid(8, 5);
        const std::size_t j = static_cast<std::size_t>(g.integer(0, static_cast<int>(spec.layers()) - 1));
        const double c = g.uniform(0.1, 3.0), t = std::exp2(g.uniform(-15, 15));
        BesovIndex a{g.smoothness(), g.exponent(), g.pick<double>({0.5, 1.0, 2.0})};
        BesovIndex b{g.smoothness(), g.exponent(), g.pick<double>({1.5, 3.0})};
        if (a.p == b.p) b.p = a.p == 2.0 ? 1.0 : 2.0;
        const auto f = single_coefficient(spec, j, 0, c);
        const auto q = g.coin() ? query(a, b) : query(b, a);
        EXPECT_LT(prop::rel(k_general(f, q, t), vertex_value(f, q, j, t, c)), 1e-6);
    });
}

TEST(KGeneral, HomogeneousAndCommutative) {
    prop::forall(30, 12, [](prop::Gen& g) {
        const auto f = g.field(g.grid(10, 4));
        const auto q = query({g.smoothness(), 1.0, 0.5}, {g.smoothness(), 2.0, 2.0});
        const double t = std::exp2(g.uniform(-10, 10)), c = g.uniform(0.1, 10.0);
        EXPECT_LT(prop::rel(k_general(f.scaled(c), q, t), c * k_general(f, q, t)), 1e-6);
        EXPECT_LT(prop::rel(k_general(f, q, t), t * k_general(f, q.swapped(), 1.0 / t)), 1e-9);
    });
}

TEST(KGeneral, WrongCase) {
    const CoeffField f(GridSpec(1, {1}), {{1}});
    EXPECT_THROW(k_general(f, query({0, 1, 1}, {0, 2, 1}), 1.0), UsageError);
    EXPECT_THROW(k_general(f, query({0, 1, 1}, {0, 2, kInf}), 1.0), UsageError);
}

TEST(KDispatch, TagsAndDegenerate) {
    const CoeffField f(GridSpec(1, {2, 1}), {{0.5, 1}, {2}});
    EXPECT_EQ(k_dispatch(f, query({0, 2, 2}, {1, 2, 2}), 1.0).method, "p-equal-w");
    EXPECT_EQ(k_dispatch(f, query({0, 2, 1}, {1, 2, 2}), 1.0).method, "p-equal-holmstedt");
    EXPECT_EQ(k_dispatch(f, query({0, 2, 1}, {0, 2, 2}), 1.0).method, "p-equal-rearrangement");
    EXPECT_EQ(k_dispatch(f, query({0, 1, 2}, {0, 2, 2}), 1.0).method, "q-equal");
    EXPECT_EQ(k_dispatch(f, query({0, 1, 1}, {0, 2, 2}), 1.0).method, "general");
    EXPECT_EQ(k_dispatch(f, query({0, 1, 1}, {0, 2, kInf}), 1.0).method, "oracle-vertex");
    const auto d = k_dispatch(f, query({0.5, 1, 2}, {0.5, 1, 2}), 0.3);
    EXPECT_EQ(d.method, "degenerate");
    EXPECT_DOUBLE_EQ(d.value, 0.3 * besov_norm(f, {0.5, 1, 2}));
}

// The formulas are equivalent to K rather than equal, so only the identities that hold
// for each formula exactly are asserted here; the order axioms belong to the oracle.
TEST(KDispatch, SwapAndScalingOnEveryPath) {
    prop::forall(300, 13, [](prop::Gen& g) {
        const auto f = g.field(g.grid(8, 4));
        const auto q = query(g.index(), g.index());
        const double t = std::exp2(g.uniform(-8, 8)), c = g.uniform(0.1, 10.0);
        const double k = k_dispatch(f, q, t).value;
        EXPECT_LT(prop::rel(k, t * k_dispatch(f, q.swapped(), 1.0 / t).value), 1e-9) << to_string(q.case_tag());
        EXPECT_LT(prop::rel(k_dispatch(f.scaled(c), q, t).value, c * k), 1e-9) << to_string(q.case_tag());
    });
}

TEST(KDispatch, MonotoneWherePathIsExact) {
    // l^p0 against l^inf on one layer is the exact integral form, so it is nondecreasing
    // with K/t nonincreasing
    prop::forall(100, 15, [](prop::Gen& g) {
        const auto f = g.field(GridSpec(1, {static_cast<std::size_t>(g.integer(1, 10))}));
        const auto q = query({0, g.pick<double>({0.5, 1.0, 2.0}), 1}, {0, kInf, 1});
        double prev = 0.0, prev_ratio = kInf;
        for (double t : make_t_grid(-8, 8, 4)) {
            const double k = k_dispatch(f, q, t).value;
            EXPECT_GE(k, prev * (1 - 1e-12));
            EXPECT_LE(k / t, prev_ratio * (1 + 1e-12));
            prev = k;
            prev_ratio = k / t;
        }
    });
}

TEST(KCurve, SingletonAndDegenerate) {
    const CoeffField f(GridSpec(1, {2}), {{0.5, 1}});
    const auto one = k_curve(f, query({0, 1, 1}, {0, 2, 1}), {1.0});
    ASSERT_EQ(one.samples.size(), 1u);
    EXPECT_EQ(one.method, "q-equal");
    const auto q = query({0, 2, 2}, {0, 2, 2});
    const auto curve = k_curve(f, q, make_t_grid(-4, 4, 2));
    EXPECT_EQ(curve.samples.size(), 17u);
    for (auto [t, k] : curve.samples) EXPECT_DOUBLE_EQ(k, std::min(1.0, t) * besov_norm(f, q.idx0));
    EXPECT_THROW(k_curve(f, q, {2.0, 1.0}), UsageError);
}

TEST(KCurve, OracleCurveIsConcaveShaped) {
    prop::forall(30, 14, [](prop::Gen& g) {
        const auto f = g.field(g.grid(8, 3));
        const auto q = query({g.smoothness(), 1.0, 1.0}, {g.smoothness(), 2.0, kInf});
        const auto curve = k_curve(f, q, make_t_grid(-10, 10, 2));
        EXPECT_EQ(curve.method, "oracle-vertex");
        for (std::size_t i = 1; i < curve.samples.size(); ++i) {
            auto [t0, k0] = curve.samples[i - 1];
            auto [t1, k1] = curve.samples[i];
            EXPECT_GE(k1, k0 * (1 - 1e-12));
            EXPECT_LE(k1 / t1, k0 / t0 * (1 + 1e-12));
        }
    });
}
