#pragma once

// Finite-blocklength bounds on the average error probability of (M,L) list
// codes: Gallager's inner bound, Arimoto's and Augustin's outer bounds, the
// sphere packing bounds for product channels with and without feedback, and
// the constants they are assembled from.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "renyi/capacity.hpp"
#include "renyi/exponents.hpp"

namespace renyi {

// M messages decoded to lists of size L over n channel uses. M and L are
// integers held in doubles so that astronomically large codes can be
// described; they are exact up to 2^53.
struct code_params {
    double m = 2.0;
    double l = 1.0;
    std::size_t n = 1;

    double rate() const;  // ln(M/L) in nats
    void validate() const;
    // The code with L = 1 whose M is the largest integer with ln M <= total_rate.
    static code_params from_rate(double total_rate, std::size_t n);
};

enum class bound_direction { inner, outer };  // upper / lower bound on P_e

struct bound_report {
    std::string lemma;
    bound_direction direction = bound_direction::outer;
    double value = 0.0;      // probability in [0,1]
    double log_value = 0.0;  // ln value (may be -inf)
    bool hypothesis_satisfied = false;
    std::map<std::string, double> constants;
    std::vector<std::string> notes;
};

// Stores exp(log_value) clipped to [0,1] together with log_value.
void set_log_value(bound_report& r, double log_value);

// ln binom(n, k): exact integer arithmetic for n < 64, lgamma above.
double log_binomial(double n, double k);

// ---------------------------------------------------------------------------
// Inner bound

// Reports, in order: the bound with the exact binomial term, its relaxation
// (1/L) ln binom(M-1,L) <= ln((M-1)/L) + 1, and the optimized form
// P_e <= e^{-E_sp(ln(eM/L))}, which needs ln(eM/L) in [C_{1/(1+L)}, C_1).
std::vector<bound_report> gallager_inner(const code_params& c, double alpha, std::span<const double> p,
                                         const channel& w);

// ---------------------------------------------------------------------------
// Outer bounds without auxiliary channels

// Smallest x in [0, b] with d_alpha(x || b) <= info, by bisection; d_alpha is
// the binary divergence, decreasing in x on [0, b].
double invert_binary_divergence(double alpha, double b, double info);

// One report per order from d_alpha(P_e || 1 - L/M) <= I_alpha(P;W); with no
// P the capacity replaces I_alpha(P;W) and the bound covers every code. When
// ln(M/L) >= C_1 also the forms 1 - e^{-E_sp(ln(M/L))} and, for each order
// above one, 1 - e^{(alpha-1)/alpha (C_alpha - ln(M/L))}.
std::vector<bound_report> arimoto_outer(const code_params& c, const channel& w, std::optional<measure> p,
                                        const std::vector<double>& orders);

// ---------------------------------------------------------------------------
// Sphere packing bounds for product channels

// (3 3^{1/k} / scale) (sum_t (C_{1/2}(W_t) v k)^k)^{1/k}; scale is 1 - eps for
// the averaged bound and 1 for the special cases.
double spb_gamma(const std::vector<double>& half_capacities, double kappa, double scale = 1.0);

// Primary and alternate-rate forms, plus the stationary closed form (with
// kappa = ln n and eps = 1/n) when all parts coincide and n >= 10.
std::vector<bound_report> spb_product(const code_params& c, const std::vector<channel>& parts, double phi,
                                      double eps, double kappa);

enum class spb_variant { monotone_center, constant_center, fixed_density };
std::string to_string(spb_variant v);

// The sharper bounds for product channels whose Rényi centers move
// monotonically, stay fixed, or additionally share one divergence law per
// row. The variant's hypothesis is verified on an order grid in [phi, 1);
// the report is binding only when it passes.
bound_report spb_special_cases(const code_params& c, const std::vector<channel>& parts, double phi, double kappa,
                               spb_variant variant);

// ---------------------------------------------------------------------------
// Constants

// 2(b-1)/e^2 [1 + e^{(b-1)g} (g e^t / (2t))^2], t = ((l-b)g/2) ^ 1; the second
// term vanishes at g = 0, where D_l <= 0 forces equal measures.
double taylor_gap_bound(double beta, double lambda, double gamma);

// 3^{1/k} (((1-a) d) v k) / (a (1-a)).
double moment_bound_rhs(double alpha, double k, double d);

// 1 / (2 sqrt(n)).
double small_deviation_floor(std::size_t n);

inline constexpr double berry_esseen_constant = 0.5600;

// ---------------------------------------------------------------------------
// Auxiliary channel of the feedback bound

struct capacity_cap_check {
    double order = 0.0;     // beta in (1, (1+eta)/(2 eta))
    double capacity = 0.0;  // C_beta(V)
    double cap = 0.0;       // the right-hand side it must not exceed
};

struct auxiliary_channel {
    channel base;
    double rate = 0.0;
    double eps = 0.0;
    double phi = 0.0;             // C_phi = rate
    double eta = 0.0;             // (1-eta)/eta C_eta = E_sp(rate)
    double sp_exponent = 0.0;     // E_sp(rate)
    double half_capacity = 0.0;   // C_{1/2}
    double target = 0.0;          // C^eps_phi, the averaged capacity at phi
    std::vector<double> orders;   // f_eps(x) in [phi, eta]
    std::vector<int> cases;       // construction case (1, 2 or 3) per input
    std::vector<measure> centers; // averaged center at f_eps(x)
    channel realized;             // V(x) = tilt of W(x) toward its center

    std::vector<double> rate_terms;      // D_1(V(x) || center)
    std::vector<double> exponent_terms;  // D_1(V(x) || W(x))
    double rate_cap = 0.0;               // rate + 2 eps C_{1/2} / (phi (1-phi)^2)
    double exponent_cap = 0.0;           // E_sp + 2 eps C_{1/2} / (phi^2 (1-eta))
    std::vector<capacity_cap_check> capacity_checks;
    bool certified = false;
};

// Builds V input by input by the three-case construction: keep phi when the
// tilt at phi already meets C^eps_phi, take eta when the tilt at eta stays
// below it, and otherwise bisect for the order where it is met.
auxiliary_channel tradeoff_channel(const channel& w, double rate, double eps, std::size_t capacity_orders = 4);

// ---------------------------------------------------------------------------
// Feedback

struct subblock_plan {
    std::vector<std::size_t> lengths;  // l_i
    std::vector<std::size_t> ends;     // t_i = l_1 + ... + l_i
};

// kappa subblocks: ceil(n/kappa) for the first n - floor(n/kappa) kappa, floor(n/kappa) after.
subblock_plan make_subblock_plan(std::size_t n, std::size_t kappa);

// theta in (0,1) with (1-theta)/theta C_theta = e, by bisection on [lo, 1).
double order_for_exponent(const exponent_curve& curve, double e, double lo);

bound_report spb_feedback(const code_params& c, const channel& w, std::size_t kappa, double eps, double alpha0,
                          double alpha1);

// The variant for non-stationary sequences W_1..W_n with stationarity
// defect gamma; the defect is measured on an order grid over [alpha0, theta]
// and compared with gamma.
bound_report spb_feedback_gamma(const code_params& c, const std::vector<channel>& parts, std::size_t kappa,
                                double eps, double alpha0, double alpha1, double gamma);

struct stationarity_fit {
    std::vector<std::size_t> window_lengths;
    std::vector<double> constants;  // smallest K per window length
    double worst = 0.0;             // max over window lengths
};

// For each window length l >= 2, the smallest K with
// |C_alpha(W_[t, t+l-1]) - l rho(alpha)| <= K ln l over all windows and the
// sampled orders, where rho(alpha) is estimated by C_alpha(W_[1,N]) / N.
stationarity_fit assumption_check(const std::vector<channel>& sequence, const std::vector<double>& orders);

}  // namespace renyi
