#pragma once

// Rényi capacity, radius and center with minimax certificates, and the
// averaged centers and capacities obtained by integrating over an order window.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "renyi/channels.hpp"

namespace renyi {

struct capacity_options {
    double tol = 1e-10;                 // target duality gap
    std::size_t max_iterations = 20000; // per start
    std::size_t restarts = 5;           // Dirichlet starts in the fallback
    std::uint64_t seed = 0x5eed;        // fallback seed
};

struct capacity_solution {
    double order = 0.0;
    double value = 0.0;        // dual value R_alpha(W || center), an upper bound
    double primal = 0.0;       // I_alpha(prior; W), a lower bound
    measure center;
    measure prior;
    double duality_gap = 0.0;  // value - primal
    std::size_t iterations = 0;
    bool converged = false;
    bool used_fallback = false;
};

// max_x D_alpha(W(x) || q).
double renyi_radius(double alpha, const channel& w, std::span<const double> q);

// sup_P I_alpha(P;W) by a damped fixed-point iteration on the prior with the
// radius of the current Rényi mean as the certificate. Throws solver_error if
// the gap stays above tol after the multi-start fallback.
capacity_solution renyi_capacity(double alpha, const channel& w, const capacity_options& opt = {});
capacity_solution renyi_capacity(double alpha, const channel& w, double tol);

struct ehb_result {
    double capacity = 0.0;
    double center_divergence = 0.0;  // D_alpha(q_{alpha,W} || q)
    double radius = 0.0;             // R_alpha(W || q)
    double slack = 0.0;              // radius - capacity - center_divergence
};

ehb_result ehb_certificate(double alpha, const channel& w, std::span<const double> q, double tol = 1e-10);

// ---------------------------------------------------------------------------
// Capacity curves

struct curve_point {
    double order = 0.0;
    double value = 0.0;
    double gap = 0.0;
};

inline constexpr double default_alpha_max = 8.0;

// Memoized map order -> capacity. Copies share the cache. Backed either by
// the finite-channel solver or by an arbitrary evaluator (closed forms, sums
// over product components).
class exponent_curve {
public:
    using evaluator = std::function<curve_point(double)>;

    exponent_curve(const channel& w, double tol = 1e-10, double alpha_max = default_alpha_max);
    exponent_curve(evaluator f, double tol, double alpha_max, std::string label);

    curve_point at(double alpha) const;
    double capacity(double alpha) const { return at(alpha).value; }
    std::vector<curve_point> sample(std::span<const double> orders) const;

    double tol() const { return tol_; }
    double alpha_max() const { return alpha_max_; }
    const std::string& label() const { return label_; }
    // Non-null when the curve comes from a finite channel.
    const channel* source() const { return source_.get(); }

    // Sum of curves: capacity of a product channel by additivity.
    static exponent_curve sum(const std::vector<exponent_curve>& parts);
    // n copies of one curve.
    exponent_curve scaled(double n) const;

private:
    struct cache;
    evaluator f_;
    double tol_;
    double alpha_max_;
    std::string label_;
    std::shared_ptr<const channel> source_;
    std::shared_ptr<cache> cache_;
};

struct curve_report {
    std::vector<curve_point> points;
    std::vector<std::string> violations;  // monotonicity and sandwich failures
};

// Evaluates the curve on the given orders and reports violations of:
// C_alpha nondecreasing; (1-alpha)/alpha C_alpha nonincreasing on (0,1); the
// sandwich (a^(1-a))/(1-a) C_{1/2} <= C_a <= (a v (1-a))/(1-a) C_{1/2}.
curve_report capacity_curve(const exponent_curve& curve, std::span<const double> orders);

// n orders evenly spaced in (0, 1) followed by m orders in (1, alpha_max].
std::vector<double> order_grid(std::size_t n_below_one, std::size_t n_above_one = 0,
                               double alpha_max = default_alpha_max);

struct zero_plus_bracket {
    double lower = 0.0;
    double upper = 0.0;
    double estimate = 0.0;  // Richardson extrapolation toward zero
};

// C_{0+} estimated from the curve at 1e-3 and 5e-4. `upper` is rigorous by
// monotonicity; `lower` is an estimate, never asserted as a bound.
zero_plus_bracket zero_plus_capacity(const exponent_curve& curve);

// ---------------------------------------------------------------------------
// Averaged centers and capacities

struct averaged_center {
    double order = 0.0;
    double width = 0.0;
    measure center;
    std::vector<double> node_orders;
    std::vector<double> node_weights;  // sum to one
};

inline constexpr std::size_t default_quadrature_nodes = 16;

// (1/eps) integral of q_{beta,W} over beta in (alpha - eps alpha, alpha + eps (1 - alpha)),
// by composite Gauss-Legendre on the two halves split at alpha. The node count
// doubles until the center moves by less than tol in total variation.
averaged_center average_center(double alpha, double eps, const channel& w,
                               std::size_t nodes = default_quadrature_nodes, double tol = 1e-9);

// (1/eps) integral of [1 v alpha(1-beta)/((1-alpha)beta)] C_beta over the same window.
double average_capacity(double alpha, double eps, const exponent_curve& curve,
                        std::size_t nodes = default_quadrature_nodes, double tol = 1e-9);
double average_capacity(double alpha, double eps, const channel& w, double tol = 1e-9);

// Gauss-Legendre nodes and weights mapped to [a, b]; weights sum to b - a.
void gauss_legendre(std::size_t n, double a, double b, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace renyi
