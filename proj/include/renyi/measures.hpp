#pragma once

// Finite measures on a finite outcome set and the Rényi divergence family.
//
// All quantities are in nats. +infinity is represented by the IEEE value
// std::numeric_limits<double>::infinity(); finite results are never clipped.

#include <limits>
#include <span>
#include <vector>

namespace renyi {

using measure = std::vector<double>;

inline constexpr double infinity = std::numeric_limits<double>::infinity();

enum class order_class { sub_one, one, super_one };

// Classification of a positive order; the comparison with 1 is exact.
order_class classify_order(double alpha);

// Throws unless every weight is finite and nonnegative and one is positive.
void check_finite_measure(std::span<const double> w);

// Copy of w scaled to unit mass.
measure normalized(std::span<const double> w);

// True if the weights sum to one within 1e-12.
bool is_probability(std::span<const double> w);

// D_alpha(w||q). For alpha != 1: ln(sum w^a q^(1-a)) / (a-1) on the common
// support, evaluated with a max-shifted log-sum-exp. For alpha == 1:
// sum w ln(w/q). Returns +infinity on absolute-continuity failure.
double renyi_divergence(double alpha, std::span<const double> w, std::span<const double> q);

// d_alpha(a||b), the divergence between (a, 1-a) and (b, 1-b).
double binary_divergence(double alpha, double a, double b);

// Normalized geometric mixture e^{(1-a) D_a(w||q)} w^a q^(1-a).
// Requires alpha in (0,1) and probability measures with overlapping supports.
measure tilted_measure(double alpha, std::span<const double> w, std::span<const double> q);

// sum |w_i - q_i|.
double total_variation(std::span<const double> w, std::span<const double> q);

}  // namespace renyi
