#pragma once

// Poisson channels on (0,T] with intensities in [A,B]: closed-form Rényi
// capacities of the five input families and their sphere packing bounds.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "renyi/bounds.hpp"
#include "renyi/capacity.hpp"

namespace renyi {

enum class poisson_variant { mean_cost, at_most, at_least, unconstrained, profile };

std::string to_string(poisson_variant v);
poisson_variant parse_poisson_variant(const std::string& s);  // mean|atmost|atleast|free|profile

struct poisson_spec {
    double duration = 1.0;  // T
    double floor = 0.0;     // A, the dark current
    double ceiling = 1.0;   // B
    poisson_variant variant = poisson_variant::unconstrained;
    double cost = 0.0;      // x, for the three cost variants
    // Piecewise-constant g: (t_end, level) with increasing t_end, the last equal to T.
    std::vector<std::pair<double, double>> profile;

    void validate() const;
};

// F_alpha(a, b, x): the per-unit-time capacity at mean intensity x, with
// 0^alpha = 0 and 0 ln 0 = 0 when a = 0.
double poisson_F(double alpha, double a, double b, double x);

// x_alpha(a, b), the mean intensity maximizing F_alpha(a, b, .); always in (a, b).
double poisson_optimal_cost(double alpha, double a, double b);

double poisson_capacity(double alpha, const poisson_spec& s);

// The capacity curve of the channel, for the exponent machinery.
exponent_curve poisson_curve(const poisson_spec& s, double alpha_max = default_alpha_max);

// P_e >= [16 e^{2 + 1.05/phi} ((B-A)T)^26]^{-1/phi} e^{-E_sp(ln(M/L))} under
// C_1 >= ln(M/L) >= C_phi + 1.75/(phi(1-phi)) + 12.2 ln((B-A)T)/(1-phi).
// Requires T >= 21/(B-A) and phi in [1/(T(B-A)), 1).
bound_report poisson_spb(const code_params& c, const poisson_spec& s, double phi);

// 3 (3n)^{1/kappa} (((B-A)T/n) v kappa).
double poisson_gamma(const poisson_spec& s, std::size_t n, double kappa);

// The parametric forms with free (n, eps, kappa): primary and alternate rate.
std::vector<bound_report> poisson_spb_parametric(const code_params& c, const poisson_spec& s, double phi,
                                                 std::size_t n, double eps, double kappa);

// Inner approximation of the bounded channel: k slots of length T/k, input
// intensity A or B per slot, and only "no arrival" / "some arrival" observed
// in each slot. Returns one slot; the whole channel is its k-fold product.
channel poisson_slot_channel(const poisson_spec& s, std::size_t k);

// k C_alpha(slot channel), nondecreasing in k along doublings and below the
// closed form of the bounded channel.
double poisson_discretized_capacity(double alpha, const poisson_spec& s, std::size_t k);

}  // namespace renyi
