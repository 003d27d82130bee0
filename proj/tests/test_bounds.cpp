#include <gtest/gtest.h>

#include <cmath>

#include "renyi/bounds.hpp"
#include "renyi/errors.hpp"
#include "renyi/oracle.hpp"
#include "renyi/parallel.hpp"

using namespace renyi;

namespace {

const bound_report& find(const std::vector<bound_report>& v, const std::string& lemma)
{
    for (const auto& r : v)
        if (r.lemma == lemma) return r;
    throw std::runtime_error("missing " + lemma);
}

channel random_channel(rng& g, std::size_t nx, std::size_t ny)
{
    std::vector<measure> rows;
    for (std::size_t x = 0; x < nx; ++x) rows.push_back(dirichlet(g, ny));
    return channel::from_rows(rows);
}

}  // namespace

TEST(Gallager, VacuousOnZeroCapacity)
{
    const auto reps = gallager_inner(code_params{2, 1, 1}, 0.5, measure{0.3, 0.7}, binary_symmetric(0.5));
    EXPECT_NEAR(find(reps, "gallager").value, 1.0, 1e-12);
}

TEST(Gallager, ExponentForm)
{
    const channel w = binary_symmetric(0.1);
    const measure u{0.5, 0.5};
    const double info = renyi_information(0.5, u, w);
    // M = 4: the exponent -(I - ln 3) is positive, so the bound is clipped to 1.
    EXPECT_GT(-(info - std::log(3.0)), 0.0);
    EXPECT_EQ(find(gallager_inner(code_params{4, 1, 1}, 0.5, u, w), "gallager").value, 1.0);
    EXPECT_NEAR(find(gallager_inner(code_params{2, 1, 1}, 0.5, u, w), "gallager").log_value, -info, 1e-12);
}

TEST(Gallager, BinomialRelaxation)
{
    EXPECT_NEAR(log_binomial(10, 2), std::log(45.0), 1e-13);
    EXPECT_NEAR(log_binomial(10, 3), std::log(120.0), 1e-13);
    EXPECT_LE(0.5 * log_binomial(10, 2), std::log(10.0 / 2.0) + 1.0);
    const auto reps = gallager_inner(code_params{11, 2, 1}, 0.5, measure{0.5, 0.5}, binary_symmetric(0.1));
    EXPECT_NEAR(find(reps, "gallager").constants.at("binomial_term"), 0.5 * std::log(45.0), 1e-12);
    EXPECT_LE(find(reps, "gallager").log_value, find(reps, "gallager-stirling").log_value);
}

TEST(Arimoto, KnownValues)
{
    const auto noiseless = arimoto_outer(code_params{2, 1, 1}, binary_symmetric(0.0), std::nullopt, {0.5, 1.0});
    for (const auto& r : noiseless) EXPECT_NEAR(r.value, 0.0, 1e-6);

    const channel w = binary_symmetric(0.1);
    const auto reps = arimoto_outer(code_params{8, 1, 1}, w, std::nullopt, {2.0});
    const double c2 = renyi_capacity(2.0, w).value;
    EXPECT_NEAR(find(reps, "augustin").value, -std::expm1(0.5 * (c2 - std::log(8.0))), 1e-9);

    double prev = 0.0;
    for (double m : {8.0, 16.0, 32.0}) {
        const double v = find(arimoto_outer(code_params{m, 1, 1}, w, std::nullopt, {2.0}), "augustin").value;
        EXPECT_GT(v, prev);
        prev = v;
    }
}

TEST(Arimoto, BinaryDivergenceInversion)
{
    const double x = invert_binary_divergence(0.5, 0.75, 0.1);
    EXPECT_NEAR(binary_divergence(0.5, x, 0.75), 0.1, 1e-8);
    EXPECT_EQ(invert_binary_divergence(0.5, 0.75, 10.0), 0.0);
}

TEST(SpbProduct, Gamma)
{
    EXPECT_NEAR(spb_gamma({1.0}, 3.0, 0.5), 18.0 * std::cbrt(3.0), 1e-12);
    EXPECT_NEAR(spb_gamma({1.0}, 3.0, 0.5), 25.9604923, 1e-6);
}

TEST(SpbProduct, ZeroCapacityAndThreshold)
{
    const std::vector<channel> dead(3, binary_symmetric(0.5));
    const auto reps = spb_product(code_params{1e40, 1, 3}, dead, 0.5, 0.25, 3.0);
    EXPECT_NEAR(find(reps, "spb-product").constants.at("averaged_sp_exponent"), 0.0, 1e-12);

    const std::vector<channel> bsc(12, binary_symmetric(0.1));
    const auto low = spb_product(code_params{16, 1, 12}, bsc, 0.5, 0.25, 3.0);
    for (const auto& r : low) EXPECT_FALSE(r.hypothesis_satisfied) << r.lemma;
}

TEST(SpbSpecial, VariantHypotheses)
{
    const std::vector<channel> bsc{binary_symmetric(0.1), binary_symmetric(0.2), binary_symmetric(0.05)};
    const code_params c{1e6, 1, 3};
    EXPECT_EQ(spb_special_cases(c, bsc, 0.5, 3.0, spb_variant::constant_center).constants.at("center_spread") <= 1e-9,
              true);
    EXPECT_LE(spb_special_cases(c, bsc, 0.5, 3.0, spb_variant::monotone_center).constants.at("domination_excess"),
              1e-9);
    rng g = substream(31, 0);
    const std::vector<channel> generic{random_channel(g, 3, 3), random_channel(g, 3, 3), random_channel(g, 3, 3)};
    const bound_report r = spb_special_cases(c, generic, 0.5, 3.0, spb_variant::constant_center);
    EXPECT_FALSE(r.hypothesis_satisfied);
    EXPECT_GT(r.constants.at("center_spread"), 1e-6);
}

TEST(Constants, Taylor)
{
    const double slope = taylor_gap_bound(1.0 + 1e-6, 1.5, 2.0) / 1e-6;
    EXPECT_NEAR(taylor_gap_bound(1.0 + 2e-6, 1.5, 2.0) / 2e-6, slope, 1e-5 * slope);
    const double e2 = std::exp(2.0);
    const double expected = 0.2 / e2 * (1.0 + std::exp(0.2) * std::pow(2.0 * std::exp(0.4) / 0.8, 2.0));
    EXPECT_NEAR(taylor_gap_bound(1.1, 1.5, 2.0), expected, 1e-13);
    EXPECT_NEAR(taylor_gap_bound(1.3, 2.0, 0.0), 0.6 / e2, 1e-15);
}

TEST(Constants, MomentAndFloor)
{
    EXPECT_NEAR(moment_bound_rhs(0.5, 3.0, 0.0), 12.0 * std::cbrt(3.0), 1e-12);
    EXPECT_EQ(small_deviation_floor(1), 0.5);
    EXPECT_EQ(small_deviation_floor(4), 0.25);
}

TEST(ConstantsProperty, MomentOracle)
{
    rng g = substream(31, 1);
    for (int i = 0; i < 300; ++i) {
        const measure w = dirichlet(g, 4);
        const measure q = dirichlet(g, 4);
        const double a = std::uniform_real_distribution<double>(0.05, 0.95)(g);
        const double k = std::uniform_real_distribution<double>(0.5, 6.0)(g);
        const double lhs = std::pow(exact_tilted_moment(a, w, q, k), 1.0 / k);
        EXPECT_LE(lhs, moment_bound_rhs(a, k, renyi_divergence(a, w, q)) + 1e-12);
    }
    EXPECT_EQ(exact_tilted_moment(0.5, measure{0.4, 0.6}, measure{0.4, 0.6}, 2.0), 0.0);
}

TEST(ConstantsProperty, TaylorOracle)
{
    rng g = substream(31, 2);
    for (int i = 0; i < 300; ++i) {
        const measure w = dirichlet(g, 3);
        const measure q = dirichlet(g, 3);
        const double lambda = std::uniform_real_distribution<double>(1.2, 4.0)(g);
        const double beta = std::uniform_real_distribution<double>(1.0001, lambda)(g);
        const double gamma = renyi_divergence(lambda, w, q);
        const double gap = renyi_divergence(beta, w, q) - renyi_divergence(1.0, w, q);
        EXPECT_LE(gap, taylor_gap_bound(beta, lambda, gamma) + 1e-12);
    }
}

TEST(Tradeoff, RejectsZeroCapacity)
{
    EXPECT_THROW(tradeoff_channel(binary_symmetric(0.5), 0.1, 0.05), precondition_error);
}

TEST(Tradeoff, CertifiedOnBsc)
{
    const channel w = binary_symmetric(0.1);
    const auxiliary_channel a = tradeoff_channel(w, exponent_curve(w, 1e-12).capacity(0.5), 0.05);
    EXPECT_TRUE(a.certified);
    for (std::size_t x = 0; x < 2; ++x) {
        EXPECT_LE(a.rate_terms[x], a.rate_cap);
        EXPECT_LE(a.exponent_terms[x], a.exponent_cap);
    }
    for (const auto& k : a.capacity_checks) EXPECT_LE(k.capacity, k.cap);
}

TEST(Feedback, SubblockPlan)
{
    const subblock_plan p = make_subblock_plan(10, 3);
    EXPECT_EQ(p.lengths, (std::vector<std::size_t>{4, 3, 3}));
    EXPECT_EQ(p.ends, (std::vector<std::size_t>{4, 7, 10}));
    EXPECT_THROW(make_subblock_plan(3, 4), precondition_error);
}

TEST(Feedback, Pipeline)
{
    EXPECT_THROW(spb_feedback(code_params{4, 1, 4}, binary_symmetric(0.5), 2, 0.02, 0.3, 0.6), precondition_error);
    EXPECT_THROW(spb_feedback(code_params{4, 1, 4}, binary_symmetric(0.1), 4, 0.02, 0.3, 0.6), precondition_error);
    const bound_report r = spb_feedback(code_params::from_rate(30.0, 64), binary_symmetric(0.1), 8, 0.02, 0.3, 0.6);
    for (const char* k : {"theta", "rate_lower", "capacity_alpha1", "sp_exponent", "ell_1", "t_8"})
        EXPECT_TRUE(r.constants.count(k)) << k;
    EXPECT_EQ(r.constants.at("t_8"), 64.0);
    // floor(64/8) C_{1/2} is below 2 for a binary channel.
    EXPECT_FALSE(r.hypothesis_satisfied);
}

TEST(BoundsProperty, OuterBelowExactError)
{
    const channel w = binary_symmetric(0.15);
    for (std::size_t n : {2, 3}) {
        const std::vector<channel> parts(n, w);
        const channel pw = product_channel(parts);
        for (double m : {2.0, 4.0}) {
            const code_params c{m, 1, n};
            const auto outer = arimoto_outer(c, pw, std::nullopt, {0.5, 1.0, 2.0});
            rng g = substream(31, 10 * n + std::size_t(m));
            for (int t = 0; t < 50; ++t) {
                codebook code{n, {}};
                for (std::size_t k = 0; k < std::size_t(m); ++k) {
                    std::vector<std::size_t> word(n);
                    for (auto& x : word) x = g() % 2;
                    code.words.push_back(word);
                }
                const double pe = exact_error_probability(code, w, 1);
                for (const auto& r : outer)
                    if (r.hypothesis_satisfied) EXPECT_LE(r.value, pe + 1e-12) << r.lemma;
            }
        }
    }
}
