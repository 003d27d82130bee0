#include <gtest/gtest.h>

#include <cmath>

#include "renyi/errors.hpp"
#include "renyi/measures.hpp"
#include "renyi/parallel.hpp"

using namespace renyi;

TEST(Divergence, KnownValues)
{
    const measure a{0.3, 0.7};
    EXPECT_NEAR(renyi_divergence(0.7, a, a), 0.0, 1e-15);
    EXPECT_NEAR(renyi_divergence(0.5, measure{1, 0}, measure{0.5, 0.5}), std::log(2.0), 1e-15);
    EXPECT_NEAR(renyi_divergence(1.0, measure{0.5, 0.5}, measure{0.25, 0.75}), 0.5 * std::log(4.0 / 3.0), 1e-15);
}

TEST(Divergence, AbsoluteContinuityFailure)
{
    EXPECT_EQ(renyi_divergence(1.0, measure{0.5, 0.5}, measure{1.0, 0.0}), infinity);
    EXPECT_EQ(renyi_divergence(2.0, measure{0.5, 0.5}, measure{1.0, 0.0}), infinity);
    EXPECT_EQ(renyi_divergence(0.5, measure{1.0, 0.0}, measure{0.0, 1.0}), infinity);
    EXPECT_TRUE(std::isfinite(renyi_divergence(0.5, measure{0.5, 0.5}, measure{1.0, 0.0})));
}

TEST(Divergence, RejectsBadInput)
{
    EXPECT_THROW(renyi_divergence(0.0, measure{1.0}, measure{1.0}), precondition_error);
    EXPECT_THROW(renyi_divergence(0.5, measure{1.0, 0.0}, measure{1.0}), precondition_error);
    EXPECT_THROW(renyi_divergence(0.5, measure{-0.1, 1.1}, measure{0.5, 0.5}), precondition_error);
}

TEST(BinaryDivergence, KnownValues)
{
    EXPECT_DOUBLE_EQ(binary_divergence(0.9, 0.4, 0.4), 0.0);
    EXPECT_NEAR(binary_divergence(1.0, 1.0, 0.5), std::log(2.0), 1e-15);
    EXPECT_NEAR(binary_divergence(0.5, 0.0, 0.5), std::log(2.0), 1e-15);
}

TEST(Tilt, KnownValues)
{
    const measure same = tilted_measure(0.5, measure{0.2, 0.8}, measure{0.2, 0.8});
    EXPECT_NEAR(same[0], 0.2, 1e-15);
    const measure corner = tilted_measure(0.5, measure{1, 0}, measure{0.5, 0.5});
    EXPECT_NEAR(corner[0], 1.0, 1e-15);
    EXPECT_EQ(corner[1], 0.0);
    const measure t = tilted_measure(0.5, measure{0.9, 0.1}, measure{0.5, 0.5});
    EXPECT_NEAR(t[0], 0.75, 1e-14);
    EXPECT_NEAR(t[1], 0.25, 1e-14);
}

TEST(TotalVariation, KnownValues)
{
    EXPECT_EQ(total_variation(measure{0.5, 0.5}, measure{0.5, 0.5}), 0.0);
    EXPECT_EQ(total_variation(measure{1, 0}, measure{0, 1}), 2.0);
    EXPECT_NEAR(total_variation(measure{0.7, 0.3}, measure{0.4, 0.6}), 0.6, 1e-15);
}

TEST(DivergenceProperty, KlScalesWithMass)
{
    // D_1 of a unit-mass w against c q shifts by -ln c.
    rng g = substream(3, 0);
    for (int i = 0; i < 200; ++i) {
        const measure w = dirichlet(g, 4);
        measure q = dirichlet(g, 4);
        const double base = renyi_divergence(1.0, w, q);
        for (double& x : q) x *= 2.5;
        EXPECT_NEAR(renyi_divergence(1.0, w, q), base - std::log(2.5), 1e-12);
    }
}

TEST(DivergenceProperty, NondecreasingInOrder)
{
    rng g = substream(3, 1);
    for (int i = 0; i < 2000; ++i) {
        const measure w = dirichlet(g, 5, 0.5);
        const measure q = dirichlet(g, 5, 0.5);
        double prev = 0.0;
        for (double a : {0.05, 0.2, 0.5, 0.8, 1.0, 1.3, 2.0, 5.0}) {
            const double d = renyi_divergence(a, w, q);
            EXPECT_GE(d, prev - 1e-12);
            prev = d;
        }
    }
}

TEST(DivergenceProperty, TiltedIdentity)
{
    rng g = substream(3, 2);
    for (int i = 0; i < 2000; ++i) {
        const measure w = dirichlet(g, 4);
        const measure q = dirichlet(g, 4);
        const double a = std::uniform_real_distribution<double>(0.01, 0.99)(g);
        const measure t = tilted_measure(a, w, q);
        const double lhs = (1.0 - a) * renyi_divergence(a, w, q);
        const double rhs = a * renyi_divergence(1.0, t, w) + (1.0 - a) * renyi_divergence(1.0, t, q);
        EXPECT_NEAR(lhs, rhs, 1e-10 * std::max(1.0, std::abs(lhs)));
    }
}

TEST(Classify, ExactComparisonWithOne)
{
    EXPECT_EQ(classify_order(1.0), order_class::one);
    EXPECT_EQ(classify_order(std::nextafter(1.0, 0.0)), order_class::sub_one);
    EXPECT_EQ(classify_order(std::nextafter(1.0, 2.0)), order_class::super_one);
    EXPECT_THROW(classify_order(0.0), precondition_error);
}

TEST(Substreams, Reproducible)
{
    rng a = substream(11, 4);
    rng b = substream(11, 4);
    rng c = substream(11, 5);
    const auto x = a();
    EXPECT_EQ(x, b());
    EXPECT_NE(x, c());
}
