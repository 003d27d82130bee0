#pragma once

// Finite channels, Rényi information and mean, and product channels.

#include <cstddef>
#include <span>
#include <vector>

#include "renyi/measures.hpp"

namespace renyi {

// Row-stochastic matrix stored row-major; row x is the output measure W(x).
class channel {
public:
    channel() = default;
    channel(std::size_t inputs, std::size_t outputs, std::vector<double> entries);
    static channel from_rows(const std::vector<measure>& rows);

    std::size_t inputs() const { return inputs_; }
    std::size_t outputs() const { return outputs_; }
    std::span<const double> row(std::size_t x) const { return {entries_.data() + x * outputs_, outputs_}; }
    double operator()(std::size_t x, std::size_t y) const { return entries_[x * outputs_ + y]; }
    const std::vector<double>& entries() const { return entries_; }
    std::vector<measure> rows() const;

private:
    std::size_t inputs_ = 0;
    std::size_t outputs_ = 0;
    std::vector<double> entries_;
};

channel binary_symmetric(double p);
channel binary_erasure(double e);
// [[0.5, 0.5], [0, 1]]: a binary channel whose Haroutunian exponent exceeds
// its sphere packing exponent.
channel haroutunian_example();

// Throws unless p is a probability measure over the channel's inputs.
void check_input_distribution(std::span<const double> p, const channel& w);

// I_alpha(P;W) = alpha/(alpha-1) ln sum_y [sum_x P(x) W(y|x)^alpha]^{1/alpha};
// mutual information at alpha = 1.
double renyi_information(double alpha, std::span<const double> p, const channel& w);

// q_{alpha,P} proportional to [sum_x P(x) W(y|x)^alpha]^{1/alpha}.
measure renyi_mean(double alpha, std::span<const double> p, const channel& w);

// D_alpha(P (x) W || P (x) Q) by direct summation over input/output pairs.
double joint_divergence(double alpha, std::span<const double> p, const channel& w, std::span<const double> q);

struct sibson_terms {
    double lhs = 0.0;          // D_alpha(P (x) W || P (x) Q)
    double information = 0.0;  // D_alpha(P (x) W || P (x) q_{alpha,P})
    double mean_gap = 0.0;     // D_alpha(q_{alpha,P} || Q)
};

sibson_terms sibson_decomposition(double alpha, std::span<const double> p, const channel& w, std::span<const double> q);

inline constexpr std::size_t default_product_cap = 1'000'000;

// Input and output indices are mixed-radix little-endian: the first
// component is the fastest-varying digit.
channel product_channel(const std::vector<channel>& parts, std::size_t cap = default_product_cap);

// Digits of a little-endian mixed-radix index.
std::vector<std::size_t> mixed_radix_digits(std::size_t index, std::span<const std::size_t> radices);

}  // namespace renyi
