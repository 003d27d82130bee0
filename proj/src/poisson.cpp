#include "renyi/poisson.hpp"

#include <algorithm>
#include <cmath>

#include "renyi/errors.hpp"
#include "renyi/exponents.hpp"

namespace renyi {

namespace {

// w^alpha with 0^alpha = 0.
double power(double w, double alpha) { return w == 0.0 ? 0.0 : std::pow(w, alpha); }

// w ln(w / x) with 0 ln 0 = 0.
double entropy_term(double w, double x) { return w == 0.0 ? 0.0 : w * std::log(w / x); }

double level_capacity(double alpha, double a, double level)
{
    if (level <= a) return 0.0;
    return poisson_F(alpha, a, level, poisson_optimal_cost(alpha, a, level));
}

}  // namespace

std::string to_string(poisson_variant v)
{
    switch (v) {
    case poisson_variant::mean_cost: return "mean";
    case poisson_variant::at_most: return "atmost";
    case poisson_variant::at_least: return "atleast";
    case poisson_variant::unconstrained: return "free";
    case poisson_variant::profile: return "profile";
    }
    return "unknown";
}

poisson_variant parse_poisson_variant(const std::string& s)
{
    for (auto v : {poisson_variant::mean_cost, poisson_variant::at_most, poisson_variant::at_least,
                   poisson_variant::unconstrained, poisson_variant::profile})
        if (s == to_string(v)) return v;
    throw precondition_error("unknown Poisson variant '" + s + "'");
}

void poisson_spec::validate() const
{
    require(std::isfinite(duration) && duration > 0.0, "duration T must be positive");
    require(std::isfinite(floor) && floor >= 0.0, "floor A must be nonnegative");
    require(std::isfinite(ceiling) && ceiling > floor, "ceiling B must be finite and exceed A");
    switch (variant) {
    case poisson_variant::mean_cost:
    case poisson_variant::at_most:
    case poisson_variant::at_least:
        require(cost >= floor && cost <= ceiling, "cost x must lie in [A, B]");
        break;
    case poisson_variant::profile: {
        require(!profile.empty(), "profile needs at least one segment");
        double prev = 0.0;
        for (const auto& [t, g] : profile) {
            require(t > prev, "profile breakpoints must increase");
            require(g >= floor && g <= ceiling, "profile levels must lie in [A, B]");
            prev = t;
        }
        require(std::abs(prev - duration) <= 1e-12 * duration, "the last breakpoint must equal T");
        break;
    }
    case poisson_variant::unconstrained: break;
    }
}

double poisson_F(double alpha, double a, double b, double x)
{
    require(alpha > 0.0 && std::isfinite(alpha), "order must be a positive real");
    require(a >= 0.0 && a < b && x >= a && x <= b, "needs 0 <= a <= x <= b and a < b");
    // A cost at either end pins the intensity: no information.
    if (x == a || x == b) return 0.0;
    const double wb = (x - a) / (b - a);
    const double wa = (b - x) / (b - a);
    if (alpha == 1.0) return entropy_term(b, x) * wb + entropy_term(a, x) * wa;
    const double mean = std::pow(wb * power(b, alpha) + wa * power(a, alpha), 1.0 / alpha);
    return alpha / (alpha - 1.0) * (mean - x);
}

double poisson_optimal_cost(double alpha, double a, double b)
{
    require(alpha > 0.0 && std::isfinite(alpha), "order must be a positive real");
    require(a >= 0.0 && a < b, "needs 0 <= a < b");
    if (alpha == 1.0) {
        const double la = a == 0.0 ? 0.0 : a * std::log(a);
        return std::exp(-1.0 + (b * std::log(b) - la) / (b - a));
    }
    const double ba = power(b, alpha);
    const double aa = power(a, alpha);
    const double lead = std::exp((alpha * std::log(alpha) + std::log(b - a) - std::log(ba - aa)) / (1.0 - alpha));
    return lead + (a * ba - b * aa) / (ba - aa);
}

double poisson_capacity(double alpha, const poisson_spec& s)
{
    s.validate();
    const double a = s.floor;
    const double b = s.ceiling;
    switch (s.variant) {
    case poisson_variant::mean_cost: return poisson_F(alpha, a, b, s.cost) * s.duration;
    case poisson_variant::at_most:
        return poisson_F(alpha, a, b, std::min(s.cost, poisson_optimal_cost(alpha, a, b))) * s.duration;
    case poisson_variant::at_least:
        return poisson_F(alpha, a, b, std::max(s.cost, poisson_optimal_cost(alpha, a, b))) * s.duration;
    case poisson_variant::unconstrained: return level_capacity(alpha, a, b) * s.duration;
    case poisson_variant::profile: {
        double total = 0.0;
        double prev = 0.0;
        for (const auto& [t, g] : s.profile) {
            total += (t - prev) * level_capacity(alpha, a, g);
            prev = t;
        }
        return total;
    }
    }
    return 0.0;
}

exponent_curve poisson_curve(const poisson_spec& s, double alpha_max)
{
    s.validate();
    auto f = [s](double alpha) { return curve_point{alpha, poisson_capacity(alpha, s), 0.0}; };
    return exponent_curve(f, 1e-13, alpha_max, "poisson-" + to_string(s.variant));
}

double poisson_gamma(const poisson_spec& s, std::size_t n, double kappa)
{
    s.validate();
    require(n >= 1, "n must be positive");
    require(kappa >= 3.0, "kappa must be at least 3");
    const double span = (s.ceiling - s.floor) * s.duration;
    return 3.0 * std::pow(3.0 * double(n), 1.0 / kappa) * std::max(span / double(n), kappa);
}

bound_report poisson_spb(const code_params& c, const poisson_spec& s, double phi)
{
    c.validate();
    s.validate();
    const double span = (s.ceiling - s.floor) * s.duration;
    if (!(span >= 21.0)) throw precondition_error("needs T >= 21/(B-A)");
    if (!(phi >= 1.0 / span && phi < 1.0)) throw precondition_error("phi must lie in [1/(T(B-A)), 1)");

    const exponent_curve curve = poisson_curve(s);
    const double rate = c.rate();
    const double c_phi = curve.capacity(phi);
    const double c_one = curve.capacity(1.0);
    const double lower = c_phi + 1.75 / (phi * (1.0 - phi)) + 12.2 * std::log(span) / (1.0 - phi);

    bound_report r;
    r.lemma = "poisson-spb";
    r.direction = bound_direction::outer;
    r.hypothesis_satisfied = rate <= c_one && rate >= lower;
    if (!r.hypothesis_satisfied) r.notes.push_back("ln(M/L) outside [rate_lower, C_1]: non-binding");
    const sp_result sp = sphere_packing_exponent(rate, curve);
    const double log_pre = -(std::log(16.0) + 2.0 + 1.05 / phi + 26.0 * std::log(span)) / phi;
    r.constants = {{"phi", phi}, {"span", span}, {"rate", rate}, {"rate_lower", lower}, {"capacity_phi", c_phi},
                   {"capacity_one", c_one}, {"sp_exponent", sp.value}, {"log_prefactor", log_pre}};
    set_log_value(r, log_pre - sp.value);
    return r;
}

std::vector<bound_report> poisson_spb_parametric(const code_params& c, const poisson_spec& s, double phi,
                                                 std::size_t n, double eps, double kappa)
{
    c.validate();
    s.validate();
    require(phi > 0.0 && phi < 1.0, "phi must lie in (0,1)");
    require(n >= 1, "n must be positive");
    require(eps > 0.0 && eps < double(n) / double(n + 1), "eps must lie in (0, n/(n+1))");
    const double gamma = poisson_gamma(s, n, kappa);
    const exponent_curve curve = poisson_curve(s);
    const double rate = c.rate();
    const double dn = double(n);
    const double avg_cap = average_capacity(phi, eps, curve);
    const double threshold = std::log(16.0) + 0.5 * std::log(dn) + avg_cap + gamma / (1.0 - phi);
    const bool hyp = rate > threshold;
    const double log_pre = std::log(eps) - 2.0 * gamma - std::log(16.0) - 1.5 * std::log(dn);

    std::vector<bound_report> out;
    bound_report r;
    r.direction = bound_direction::outer;
    r.hypothesis_satisfied = hyp;
    r.constants = {{"gamma", gamma}, {"n", dn}, {"eps", eps}, {"kappa", kappa}, {"phi", phi},
                   {"averaged_capacity", avg_cap}, {"rate", rate}, {"rate_threshold", threshold}};
    if (!hyp) r.notes.push_back("ln(M/L) at or below the rate threshold: non-binding");

    r.lemma = "poisson-spb-parametric";
    const sp_result sp = average_sp_exponent(eps, rate, curve);
    r.constants["averaged_sp_exponent"] = sp.value;
    set_log_value(r, (log_pre - 2.0) / phi - sp.value);
    out.push_back(r);

    r.lemma = "poisson-spb-parametric-alt";
    const double shifted = rate - 2.0 * gamma - std::log(16.0 * std::exp(2.0) * std::pow(dn, 1.5) / eps);
    r.constants["shifted_rate"] = shifted;
    if (shifted < 0.0) {
        r.notes.push_back("shifted rate is negative: the averaged exponent is +inf");
        set_log_value(r, -infinity);
    } else {
        const sp_result alt = average_sp_exponent(eps, shifted, curve);
        r.constants["averaged_sp_exponent"] = alt.value;
        set_log_value(r, log_pre - alt.value);
    }
    out.push_back(r);
    return out;
}

channel poisson_slot_channel(const poisson_spec& s, std::size_t k)
{
    s.validate();
    require(k >= 1, "slot count must be positive");
    const double dt = s.duration / double(k);
    const double silent_a = std::exp(-s.floor * dt);
    const double silent_b = std::exp(-s.ceiling * dt);
    return channel(2, 2, {silent_a, -std::expm1(-s.floor * dt), silent_b, -std::expm1(-s.ceiling * dt)});
}

double poisson_discretized_capacity(double alpha, const poisson_spec& s, std::size_t k)
{
    return double(k) * renyi_capacity(alpha, poisson_slot_channel(s, k), 1e-12).value;
}

}  // namespace renyi
