#pragma once

// Sphere packing, average sphere packing and Haroutunian exponents, and the
// inversion rate -> order on the capacity curve.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "renyi/capacity.hpp"

namespace renyi {

// Which branch of the case table of E_sp(R) the rate falls into. For finite
// channels and the Poisson closed forms every capacity is finite, so the
// order beyond which capacities blow up is always infinite.
enum class sp_regime {
    infinite,          // R below the C_{0+} bracket
    zero_plus,         // R inside the C_{0+} bracket: sup over (0,1), flagged
    below_capacity,    // R = C_phi, phi in (0,1): sup over [phi,1)
    at_capacity,       // R = C_1: value 0
    above_capacity,    // R = C_phi, phi in (1, alpha_max]: sup over [1,phi]
    beyond_order_cap,  // R > C_{alpha_max}: capped search plus a tail bound
};

std::string to_string(sp_regime r);

struct sp_result {
    double rate = 0.0;
    double value = 0.0;                     // +inf in the infinite regime
    std::optional<double> maximizing_order; // none when the sup is not attained
    sp_regime regime = sp_regime::at_capacity;
    // Upper bound on the supremum over orders above alpha_max,
    // (R - C_{alpha_max})^+; only binding in the beyond_order_cap regime.
    double tail_bound = 0.0;
    double upper = 0.0;   // max(value, tail_bound)
    std::string caveat;   // empty unless the result carries a qualification
};

inline constexpr std::size_t default_sp_nodes = 64;

// E_sp(R) = sup_{alpha > 0} (1-alpha)/alpha (C_alpha - R). The objective is
// sampled on a grid, every discrete local maximum is refined by Brent's
// method, and the grid ends are refined toward 0 and 1.
sp_result sphere_packing_exponent(double rate, const exponent_curve& curve, std::size_t nodes = default_sp_nodes);

// sup_{alpha in (0,1)} (1-alpha)/alpha (C^eps_alpha - R) on the averaged capacities.
sp_result average_sp_exponent(double eps, double rate, const exponent_curve& curve,
                              std::size_t nodes = default_sp_nodes, double tol = 1e-9);
sp_result average_sp_exponent(double eps, double rate, const channel& w, double tol = 1e-9);

struct haroutunian_options {
    double tol = 1e-7;               // certified optimality gap
    std::size_t cap = 4;             // max inputs and outputs
    std::size_t max_iterations = 50000;
    std::size_t restarts = 4;        // local-search certificate starts
    std::uint64_t seed = 0x4a40;
    std::optional<measure> start;    // warm start for the output measure
};

struct haroutunian_result {
    double rate = 0.0;
    double value = 0.0;          // best objective found, an upper bound
    double lower_bound = 0.0;    // from the cutting-plane certificate
    measure output;              // minimizing output measure Q
    std::vector<measure> test_channel;  // rows V(x) attaining the inner minima
    double local_value = 0.0;    // best value of the random-restart local search
    bool certified = false;      // gap <= tol and the local search found nothing better
    std::size_t iterations = 0;
};

// E_h(R) = min over channels V with C_1(V) <= R of max_x D_1(V(x) || W(x)),
// computed in the equivalent form min_Q max_x min{D_1(v || W(x)) : D_1(v || Q) <= R}
// by the ellipsoid method over output measures Q.
haroutunian_result haroutunian_exponent(double rate, const channel& w, const haroutunian_options& opt = {});

// phi with |C_phi - rate| <= tol by bisection on (1e-3, 1).
double order_for_rate(const exponent_curve& curve, double rate, double tol = 1e-8);

}  // namespace renyi
