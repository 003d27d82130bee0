#include <gtest/gtest.h>

#include <cmath>

#include "renyi/exponents.hpp"
#include "renyi/parallel.hpp"

using namespace renyi;

namespace {

channel random_channel(rng& g, std::size_t nx, std::size_t ny)
{
    std::vector<measure> rows;
    for (std::size_t x = 0; x < nx; ++x) rows.push_back(dirichlet(g, ny));
    return channel::from_rows(rows);
}

}  // namespace

TEST(SpherePacking, ZeroAtCapacity)
{
    const exponent_curve curve(binary_symmetric(0.1));
    const sp_result s = sphere_packing_exponent(curve.capacity(1.0), curve);
    EXPECT_NEAR(s.value, 0.0, 1e-9);
    EXPECT_EQ(s.regime, sp_regime::at_capacity);
}

TEST(SpherePacking, MatchesDenseGrid)
{
    const exponent_curve curve(binary_symmetric(0.1), 1e-12);
    const double rate = curve.capacity(0.5);
    double best = 0.0;
    for (int i = 0; i < 5000; ++i) {
        const double a = 0.5 + 1e-4 * i;
        best = std::max(best, (1.0 - a) / a * (curve.capacity(a) - rate));
    }
    const sp_result s = sphere_packing_exponent(rate, curve);
    EXPECT_EQ(s.regime, sp_regime::below_capacity);
    EXPECT_NEAR(s.value, best, 1e-6);
    EXPECT_GE(s.value, best - 1e-12);
}

TEST(SpherePacking, InfiniteBelowZeroPlusCapacity)
{
    const channel w = channel::from_rows({{1.0, 0.0}, {0.5, 0.5}});
    const exponent_curve curve(w);
    const zero_plus_bracket z = zero_plus_capacity(curve);
    if (z.lower > 1e-6) {
        const sp_result s = sphere_packing_exponent(0.5 * z.lower, curve);
        EXPECT_EQ(s.value, infinity);
        EXPECT_EQ(s.regime, sp_regime::infinite);
    }
}

TEST(AveragedSpherePacking, ZeroChannelAndBracket)
{
    EXPECT_NEAR(average_sp_exponent(0.1, 0.2, binary_symmetric(0.5)).value, 0.0, 1e-12);
    const exponent_curve curve(binary_symmetric(0.1), 1e-12);
    const double rate = curve.capacity(0.5);
    const double esp = sphere_packing_exponent(rate, curve).value;
    const double v = average_sp_exponent(0.05, rate, curve).value;
    EXPECT_GE(v, esp - 1e-9);
    EXPECT_LE(v, esp + (0.05 / 0.95) * rate / 0.25);
}

TEST(Haroutunian, ZeroAboveCapacity)
{
    const channel w = binary_symmetric(0.2);
    const exponent_curve curve(w);
    EXPECT_NEAR(haroutunian_exponent(curve.capacity(1.0) + 0.01, w).value, 0.0, 1e-9);
}

TEST(Haroutunian, StrictlyAboveSpherePackingOnExample)
{
    const channel w = haroutunian_example();
    const exponent_curve curve(w, 1e-12);
    const double rate = curve.capacity(0.5);
    const haroutunian_result h = haroutunian_exponent(rate, w);
    EXPECT_TRUE(h.certified);
    EXPECT_GE(h.value - sphere_packing_exponent(rate, curve).value, 1e-3);
}

TEST(OrderForRate, Inversion)
{
    const exponent_curve curve(binary_symmetric(0.1), 1e-12);
    EXPECT_NEAR(order_for_rate(curve, curve.capacity(0.5)), 0.5, 1e-6);
    const double phi = order_for_rate(curve, 0.3);
    EXPECT_NEAR(curve.capacity(phi), 0.3, 1e-8);
    const double near_one = order_for_rate(curve, curve.capacity(1.0) - 1e-9);
    EXPECT_GT(near_one, 0.99);
    EXPECT_NEAR(curve.capacity(near_one), curve.capacity(1.0) - 1e-9, 1e-8);
}

TEST(ExponentProperty, ConvexAndMonotoneInRate)
{
    for (std::size_t i = 0; i < 5; ++i) {
        rng g = substream(21, i);
        const exponent_curve curve(random_channel(g, 3, 3));
        const double c1 = curve.capacity(1.0);
        const double lo = curve.capacity(0.2);
        for (int k = 0; k < 4; ++k) {
            std::uniform_real_distribution<double> u(lo, c1);
            const double a = u(g);
            const double b = u(g);
            const double ea = sphere_packing_exponent(a, curve).value;
            const double eb = sphere_packing_exponent(b, curve).value;
            const double em = sphere_packing_exponent(0.5 * (a + b), curve).value;
            EXPECT_LE(em, 0.5 * (ea + eb) + 1e-6);
        }
        double prev = infinity;
        for (int k = 0; k <= 10; ++k) {
            const double e = sphere_packing_exponent(lo + (c1 - lo) * k / 10.0, curve).value;
            EXPECT_LE(e, prev + 1e-9);
            prev = e;
        }
        // Above C_1 the exponent grows with the rate.
        prev = 0.0;
        for (double f : {1.0, 1.1, 1.2, 1.4}) {
            const double e = sphere_packing_exponent(c1 * f, curve).value;
            EXPECT_GE(e, prev - 1e-9);
            prev = e;
        }
    }
}

TEST(ExponentProperty, HaroutunianDominates)
{
    for (std::size_t i = 0; i < 4; ++i) {
        rng g = substream(21, 50 + i);
        const channel w = random_channel(g, 2, 2);
        const exponent_curve curve(w, 1e-12);
        for (double a : {0.4, 0.7}) {
            const double rate = curve.capacity(a);
            EXPECT_GE(haroutunian_exponent(rate, w).value, sphere_packing_exponent(rate, curve).value - 1e-6);
        }
    }
}
