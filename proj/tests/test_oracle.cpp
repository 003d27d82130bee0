#include <gtest/gtest.h>

#include <cmath>

#include "renyi/bounds.hpp"
#include "renyi/errors.hpp"
#include "renyi/oracle.hpp"

using namespace renyi;

TEST(ExactError, SmallCodes)
{
    EXPECT_EQ(exact_error_probability(codebook{1, {{0}, {1}}}, binary_symmetric(0.0), 1), 0.0);
    EXPECT_NEAR(exact_error_probability(codebook{1, {{0}, {1}}}, binary_symmetric(0.1), 1), 0.1, 1e-15);
    EXPECT_NEAR(exact_error_probability(codebook{1, {{0}, {0}}}, binary_symmetric(0.1), 1), 0.5, 1e-15);
    EXPECT_NEAR(exact_error_probability(codebook{2, {{0, 0}, {1, 1}, {0, 1}}}, binary_symmetric(0.5), 2), 1.0 / 3.0,
                1e-15);
}

TEST(ExactError, FeedbackReducesToCode)
{
    const std::vector<channel> parts(3, binary_symmetric(0.1));
    const codebook code{3, {{0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}}};
    EXPECT_NEAR(feedback_error_probability(strategy_from_code(code, parts), parts, 1),
                exact_error_probability(code, parts, 1), 1e-15);
}

TEST(ExactError, FeedbackFlipRule)
{
    // Send m, then m xor y1; checked against a direct 16-term enumeration.
    const double p = 0.2;
    const std::vector<channel> parts(2, binary_symmetric(p));
    feedback_strategy s{2, 2, {{0, 1}, {0, 1, 1, 0}}};
    auto w = [p](int x, int y) { return x == y ? 1.0 - p : p; };
    double correct = 0.0;
    for (int y1 = 0; y1 < 2; ++y1)
        for (int y2 = 0; y2 < 2; ++y2) {
            double like[2];
            for (int m = 0; m < 2; ++m) like[m] = w(m, y1) * w(m ^ y1, y2);
            const int decoded = like[1] > like[0] ? 1 : 0;
            correct += 0.5 * like[decoded];
        }
    EXPECT_NEAR(feedback_error_probability(s, parts, 1), 1.0 - correct, 1e-15);
}

TEST(ExactError, ZeroCapacityIsOneMinusListFraction)
{
    const std::vector<channel> parts(2, binary_symmetric(0.5));
    const codebook code{2, {{0, 0}, {1, 1}, {0, 1}, {1, 0}}};
    EXPECT_NEAR(exact_error_probability(code, parts, 1), 0.75, 1e-15);
    EXPECT_NEAR(exact_error_probability(code, parts, 3), 0.25, 1e-15);
}

TEST(ExactError, CapEnforced)
{
    const std::vector<channel> parts(10, binary_symmetric(0.1));
    codebook code{10, {std::vector<std::size_t>(10, 0), std::vector<std::size_t>(10, 1)}};
    EXPECT_THROW(exact_error_probability(code, parts, 1, 100), cap_exceeded);
}

TEST(CodeSearch, ReproducibleAndSound)
{
    const channel w = binary_symmetric(0.1);
    const code_params c{4, 1, 4};
    const measure u{0.5, 0.5};
    const code_search_result a = random_code_search(c, w, u, 1, 99);
    const code_search_result b = random_code_search(c, w, u, 1, 99);
    EXPECT_EQ(a.best.words, b.best.words);

    const code_search_result best = random_code_search(c, w, u, 10000, 3);
    const channel pw = product_channel(std::vector<channel>(4, w));
    const measure prior(16, 1.0 / 16.0);
    double inner = 1.0;
    for (double alpha : {0.5, 0.6, 0.7, 0.8, 0.9}) inner = std::min(inner, gallager_inner(c, alpha, prior, pw).front().value);
    EXPECT_LE(best.error, inner);

    EXPECT_NEAR(random_code_search(code_params{4, 1, 2}, binary_symmetric(0.5), u, 20, 1).error, 0.75, 1e-15);
}

TEST(CodeSearch, Exhaustive)
{
    const code_search_result r = exhaustive_code_search(code_params{2, 1, 3}, binary_symmetric(0.1));
    // Repetition code: error when two or more of three bits flip.
    EXPECT_NEAR(r.error, 3 * 0.01 * 0.9 + 0.001, 1e-15);
}

TEST(GridCapacity, KnownValues)
{
    EXPECT_NEAR(grid_capacity(0.7, binary_symmetric(0.5), 1.0 / 64.0), 0.0, 1e-15);
    EXPECT_NEAR(grid_capacity(1.0, binary_symmetric(0.0), 1.0 / 64.0), std::log(2.0), 1e-4);
}

TEST(TiltedMoment, TwoOutcomeVariance)
{
    const measure w{0.9, 0.1};
    const measure q{0.5, 0.5};
    const double l0 = std::log(0.9 / 0.5);
    const double l1 = std::log(0.1 / 0.5);
    const double mean = 0.75 * l0 + 0.25 * l1;
    const double var = 0.75 * (l0 - mean) * (l0 - mean) + 0.25 * (l1 - mean) * (l1 - mean);
    EXPECT_NEAR(exact_tilted_moment(0.5, w, q, 2.0), var, 1e-14);
    EXPECT_EQ(exact_tilted_moment(0.5, w, w, 3.0), 0.0);
}

TEST(SmallDeviation, KnownValues)
{
    const finite_variable coin{{-1.0, 0.5}, {1.0, 0.5}};
    const small_deviation one = exact_small_deviation({coin}, 3.0);
    EXPECT_NEAR(one.moment, 1.0, 1e-15);
    EXPECT_EQ(one.probability, 1.0);
    const small_deviation six = exact_small_deviation(std::vector<finite_variable>(6, coin), 3.0);
    EXPECT_NEAR(six.probability, 0.96875, 1e-15);
    EXPECT_GE(six.probability, 1.0 / (2.0 * std::sqrt(6.0)));
    const finite_variable zero{{0.0, 1.0}};
    EXPECT_EQ(exact_small_deviation(std::vector<finite_variable>(3, zero), 3.0).probability, 1.0);
}

TEST(CodeSearch, IndependentOfWorkerCount)
{
    const code_params c{8, 1, 4};
    const measure u{0.5, 0.5};
    set_workers(1);
    const code_search_result one = random_code_search(c, binary_symmetric(0.1), u, 500, 17);
    set_workers(4);
    const code_search_result four = random_code_search(c, binary_symmetric(0.1), u, 500, 17);
    set_workers(1);
    EXPECT_EQ(one.best.words, four.best.words);
    EXPECT_EQ(one.error, four.error);
    EXPECT_EQ(one.trial, four.trial);
}
