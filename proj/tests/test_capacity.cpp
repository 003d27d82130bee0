#include <gtest/gtest.h>

#include <cmath>

#include "renyi/capacity.hpp"
#include "renyi/errors.hpp"
#include "renyi/oracle.hpp"
#include "renyi/parallel.hpp"

using namespace renyi;

namespace {

double binary_entropy(double p) { return -p * std::log(p) - (1 - p) * std::log(1 - p); }

channel random_channel(rng& g, std::size_t nx, std::size_t ny)
{
    std::vector<measure> rows;
    for (std::size_t x = 0; x < nx; ++x) rows.push_back(dirichlet(g, ny));
    return channel::from_rows(rows);
}

}  // namespace

TEST(Capacity, KnownValues)
{
    for (double a : {0.3, 1.0, 2.5}) {
        const capacity_solution s = renyi_capacity(a, binary_symmetric(0.5));
        EXPECT_NEAR(s.value, 0.0, 1e-12);
        EXPECT_NEAR(s.center[0], 0.5, 1e-12);
    }
    const capacity_solution n = renyi_capacity(0.5, binary_symmetric(0.0));
    EXPECT_NEAR(n.value, std::log(2.0), 1e-9);
    EXPECT_NEAR(n.prior[0], 0.5, 1e-6);
    EXPECT_NEAR(n.center[0], 0.5, 1e-6);
    const capacity_solution b = renyi_capacity(1.0, binary_symmetric(0.1));
    EXPECT_NEAR(b.value, std::log(2.0) - binary_entropy(0.1), 1e-9);
    EXPECT_LE(b.duality_gap, 1e-9);
}

TEST(Capacity, ZeroChannelReportsExactZero)
{
    const capacity_solution s = renyi_capacity(0.5, binary_symmetric(0.5));
    EXPECT_EQ(s.value, 0.0);
    EXPECT_EQ(s.duality_gap, 0.0);
}

TEST(Radius, KnownValues)
{
    const channel same = channel::from_rows({{0.3, 0.7}, {0.3, 0.7}});
    EXPECT_NEAR(renyi_radius(0.7, same, measure{0.3, 0.7}), 0.0, 1e-15);
    const double r = renyi_radius(0.5, binary_symmetric(0.1), measure{0.5, 0.5});
    EXPECT_NEAR(r, -2.0 * std::log(std::sqrt(0.45) + std::sqrt(0.05)), 1e-14);
    EXPECT_NEAR(r, renyi_capacity(0.5, binary_symmetric(0.1)).value, 1e-9);
    EXPECT_EQ(renyi_radius(1.0, binary_symmetric(0.1), measure{1.0, 0.0}), infinity);
}

TEST(Curve, ConstantCurves)
{
    const exponent_curve zero(binary_symmetric(0.5));
    const exponent_curve noiseless(binary_symmetric(0.0));
    for (double a : order_grid(8, 4)) {
        EXPECT_NEAR(zero.capacity(a), 0.0, 1e-12);
        EXPECT_NEAR(noiseless.capacity(a), std::log(2.0), 1e-8);
    }
    EXPECT_TRUE(capacity_curve(exponent_curve(binary_symmetric(0.1)), order_grid(32, 8)).violations.empty());
}

TEST(AveragedCenter, SymmetricChannel)
{
    for (double eps : {0.05, 0.3, 0.9}) {
        const averaged_center c = average_center(0.5, eps, binary_symmetric(0.1));
        EXPECT_NEAR(c.center[0], 0.5, 1e-9);
        double total = 0.0;
        for (double w : c.node_weights) total += w;
        EXPECT_NEAR(total, 1.0, 1e-12);
    }
}

TEST(AveragedCapacity, BracketAndRefinement)
{
    const channel w = binary_symmetric(0.1);
    EXPECT_NEAR(average_capacity(0.5, 0.1, binary_symmetric(0.5)), 0.0, 1e-12);
    const double c = renyi_capacity(0.5, w).value;
    const double v = average_capacity(0.5, 0.1, w);
    EXPECT_GE(v, c - 1e-9);
    EXPECT_LE(v, c + (1.0 / 9.0) * c / 0.25);
    double prev = infinity;
    for (double eps : {0.2, 0.1, 0.05}) {
        const double a = average_capacity(0.5, eps, w);
        EXPECT_LT(a, prev);
        EXPECT_GE(a, c - 1e-9);
        prev = a;
    }
}

TEST(Certificate, Slack)
{
    const channel w = binary_symmetric(0.1);
    const capacity_solution s = renyi_capacity(0.5, w);
    EXPECT_NEAR(ehb_certificate(0.5, w, s.center).slack, 0.0, 1e-8);
    EXPECT_GE(ehb_certificate(0.5, w, measure{0.8, 0.2}).slack, 0.0);
    const channel same = channel::from_rows({{0.3, 0.7}, {0.3, 0.7}});
    EXPECT_NEAR(ehb_certificate(1.5, same, measure{0.6, 0.4}).slack, 0.0, 1e-12);
}

TEST(CapacityProperty, MinimaxGapOnRandomChannels)
{
    for (std::size_t i = 0; i < 25; ++i) {
        rng g = substream(9, i);
        const channel w = random_channel(g, 2 + i % 4, 2 + (i / 4) % 4);
        for (double a : {0.3, 0.5, 0.9, 1.0, 1.5, 3.0}) EXPECT_LE(renyi_capacity(a, w, 1e-8).duality_gap, 1e-8);
    }
}

TEST(CapacityProperty, LatticeNeverBeatsSolver)
{
    for (std::size_t i = 0; i < 6; ++i) {
        rng g = substream(9, 100 + i);
        const channel w = random_channel(g, 3, 3);
        for (double a : {0.5, 1.0, 2.0})
            EXPECT_LE(grid_capacity(a, w, 1.0 / 64.0), renyi_capacity(a, w).value + 1e-6);
    }
}

TEST(CapacityProperty, CenterContinuity)
{
    for (std::size_t i = 0; i < 20; ++i) {
        rng g = substream(9, 200 + i);
        const channel w = random_channel(g, 3, 3);
        const exponent_curve curve(w);
        const capacity_solution lo = renyi_capacity(0.4, w);
        for (double b : {0.5, 0.7, 1.0}) {
            const capacity_solution hi = renyi_capacity(b, w);
            EXPECT_LE(renyi_divergence(0.4, lo.center, hi.center), hi.value - lo.value + 1e-8);
        }
    }
}

TEST(CapacityProperty, Additivity)
{
    for (std::size_t i = 0; i < 8; ++i) {
        rng g = substream(9, 300 + i);
        const channel w = random_channel(g, 2, 3);
        const channel v = random_channel(g, 3, 2);
        for (double a : {0.5, 1.0, 2.0}) {
            const double sum = renyi_capacity(a, w).value + renyi_capacity(a, v).value;
            EXPECT_NEAR(renyi_capacity(a, product_channel({w, v})).value, sum, 2e-7);
        }
    }
}

TEST(Quadrature, GaussLegendreIntegratesPolynomials)
{
    std::vector<double> x, w;
    gauss_legendre(8, 0.0, 2.0, x, w);
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * std::pow(x[i], 7);
    EXPECT_NEAR(s, std::pow(2.0, 8) / 8.0, 1e-12);
}
