#pragma once

// Brute-force ground truth for small instances: exact error probabilities of
// explicit codes and feedback strategies under maximum likelihood list
// decoding, random and exhaustive code searches, lattice capacities, and
// exact expectations behind the moment and small-deviation inequalities.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "renyi/bounds.hpp"
#include "renyi/channels.hpp"
#include "renyi/parallel.hpp"

namespace renyi {

inline constexpr std::size_t default_enumeration_cap = 10'000'000;

// Message m (0-based) is sent as the letter sequence words[m], one letter per
// channel use.
struct codebook {
    std::size_t n = 1;
    std::vector<std::vector<std::size_t>> words;

    std::size_t messages() const { return words.size(); }
};

// maps[t][m * P_t + prefix] is the letter sent at time t for message m after
// observing the outputs y_1..y_{t-1}, encoded little-endian with the first
// output fastest; P_t is the number of such prefixes.
struct feedback_strategy {
    std::size_t n = 1;
    std::size_t m = 2;
    std::vector<std::vector<std::size_t>> maps;
};

// Average error probability of the code on W_1 x ... x W_n. The decoder lists
// the L messages of greatest likelihood, ties going to lower indices.
double exact_error_probability(const codebook& code, const std::vector<channel>& parts, std::size_t l,
                               std::size_t cap = default_enumeration_cap);
double exact_error_probability(const codebook& code, const channel& w, std::size_t l,
                               std::size_t cap = default_enumeration_cap);

double feedback_error_probability(const feedback_strategy& s, const std::vector<channel>& parts, std::size_t l,
                                  std::size_t cap = default_enumeration_cap);

// Output distribution on Y_1 x ... x Y_n induced by message m.
measure feedback_output_measure(const feedback_strategy& s, std::size_t message, const std::vector<channel>& parts,
                                std::size_t cap = default_enumeration_cap);

// The strategy that sends the code's letters regardless of feedback.
feedback_strategy strategy_from_code(const codebook& code, const std::vector<channel>& parts);

// Every letter drawn uniformly at random.
feedback_strategy random_feedback_strategy(std::size_t m, const std::vector<channel>& parts, rng& g);

struct code_search_result {
    codebook best;
    double error = 1.0;
    std::size_t trial = 0;  // index of the trial that produced best
};

// Codewords drawn i.i.d. letter by letter from the prior on the inputs of w,
// trial t using substream(seed, t); the code with the smallest exact error
// probability is returned, ties going to the lower trial.
code_search_result random_code_search(const code_params& c, const channel& w, std::span<const double> prior,
                                      std::size_t trials, std::uint64_t seed,
                                      std::size_t cap = default_enumeration_cap);

// All codes with M = 2 over n <= 3 uses of a binary-input channel.
code_search_result exhaustive_code_search(const code_params& c, const channel& w);

// Largest I_alpha over the simplex lattice with the given step, followed by
// one pass of pairwise mass transfers at finer steps. Needs at most 4 inputs.
double grid_capacity(double alpha, const channel& w, double step);

// E over the tilted measure of |ln(dw/dq) - E ln(dw/dq)|^k.
double exact_tilted_moment(double alpha, std::span<const double> w, std::span<const double> q, double k);

// A finite-support random variable: (value, probability) pairs.
using finite_variable = std::vector<std::pair<double, double>>;

struct small_deviation {
    double probability = 0.0;  // P(|sum| < 3 m_k); 1 when m_k = 0
    double moment = 0.0;       // m_k = (sum_t E|z_t|^k)^{1/k}
    double floor = 0.0;        // 1 / (2 sqrt(n))
};

small_deviation exact_small_deviation(const std::vector<finite_variable>& vars, double k,
                                      std::size_t cap = default_enumeration_cap);

// -ln sum_y (sum_x p(x) W(y|x)^{1/(1+rho)})^{1+rho}, for rho > -1.
double gallager_e0(double rho, std::span<const double> p, const channel& w);

}  // namespace renyi
