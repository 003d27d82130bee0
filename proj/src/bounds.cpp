#include "renyi/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "renyi/errors.hpp"
#include "renyi/parallel.hpp"

namespace renyi {

namespace {

constexpr double e_squared = 7.38905609893065;

bool is_integer(double x) { return std::isfinite(x) && x == std::floor(x); }

// Bisection on a predicate that is true at lo and false at hi; returns the
// last point where it held.
template <class Pred>
double bisect_last_true(double lo, double hi, Pred holds)
{
    for (int it = 0; it < 200 && hi - lo > 1e-12 * std::max(1.0, std::abs(hi)); ++it) {
        const double mid = 0.5 * (lo + hi);
        (holds(mid) ? lo : hi) = mid;
    }
    return lo;
}

// Channels of a sequence grouped by equality, with one capacity curve per
// distinct channel and the curve of the whole product.
struct part_curves {
    std::vector<channel> distinct;
    std::vector<exponent_curve> curves;
    std::vector<std::size_t> index;  // part -> distinct
    std::vector<std::size_t> counts;
    std::optional<exponent_curve> total;

    explicit part_curves(const std::vector<channel>& parts)
    {
        require(!parts.empty(), "at least one component channel is needed");
        for (const auto& p : parts) {
            std::size_t k = 0;
            while (k < distinct.size() &&
                   !(distinct[k].inputs() == p.inputs() && distinct[k].outputs() == p.outputs() &&
                     distinct[k].entries() == p.entries()))
                ++k;
            if (k == distinct.size()) {
                distinct.push_back(p);
                curves.emplace_back(p);
                counts.push_back(0);
            }
            ++counts[k];
            index.push_back(k);
        }
        std::vector<exponent_curve> scaled;
        for (std::size_t k = 0; k < curves.size(); ++k) scaled.push_back(curves[k].scaled(double(counts[k])));
        total = scaled.size() == 1 ? scaled.front() : exponent_curve::sum(scaled);
    }

    double at(std::size_t part, double alpha) const { return curves[index[part]].capacity(alpha); }
    std::vector<double> half_capacities() const
    {
        std::vector<double> h;
        for (std::size_t t = 0; t < index.size(); ++t) h.push_back(at(t, 0.5));
        return h;
    }
    bool stationary() const { return distinct.size() == 1; }
};

void put_plan(bound_report& r, const subblock_plan& plan)
{
    for (std::size_t i = 0; i < plan.lengths.size(); ++i) {
        r.constants["ell_" + std::to_string(i + 1)] = double(plan.lengths[i]);
        r.constants["t_" + std::to_string(i + 1)] = double(plan.ends[i]);
    }
}

void set_value(bound_report& r, double v)
{
    r.value = std::clamp(v, 0.0, 1.0);
    r.log_value = std::log(r.value);
}

}  // namespace

double code_params::rate() const { return std::log(m) - std::log(l); }

void code_params::validate() const
{
    require(is_integer(m) && is_integer(l) && l >= 1.0 && l < m, "code needs integers 1 <= L < M");
    require(n >= 1, "blocklength must be positive");
}

code_params code_params::from_rate(double total_rate, std::size_t n)
{
    require(std::isfinite(total_rate) && total_rate > 0.0, "rate must be positive");
    code_params c;
    c.m = std::max(2.0, std::floor(std::exp(total_rate) * (1.0 + 1e-15)));
    c.l = 1.0;
    c.n = n;
    return c;
}

void set_log_value(bound_report& r, double log_value)
{
    r.log_value = std::min(log_value, 0.0);
    r.value = std::exp(r.log_value);
}

double log_binomial(double n, double k)
{
    require(is_integer(n) && is_integer(k) && n >= 0.0 && k >= 0.0 && k <= n, "binomial needs integers 0 <= k <= n");
    if (n < 64.0) {
        const auto nn = static_cast<unsigned>(n);
        auto kk = static_cast<unsigned>(k);
        kk = std::min(kk, nn - kk);
        unsigned __int128 c = 1;
        for (unsigned i = 0; i < kk; ++i) c = c * (nn - i) / (i + 1);
        return std::log(static_cast<double>(c));
    }
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// ---------------------------------------------------------------------------

std::vector<bound_report> gallager_inner(const code_params& c, double alpha, std::span<const double> p,
                                         const channel& w)
{
    c.validate();
    require(alpha >= 1.0 / (1.0 + c.l) && alpha < 1.0, "order must lie in [1/(1+L), 1)");
    check_input_distribution(p, w);

    const double info = renyi_information(alpha, p, w);
    const double factor = (alpha - 1.0) / alpha;
    const double exact = log_binomial(c.m - 1.0, c.l) / c.l;
    const double relaxed = std::log((c.m - 1.0) / c.l) + 1.0;

    std::vector<bound_report> out;
    bound_report r;
    r.lemma = "gallager";
    r.direction = bound_direction::inner;
    r.hypothesis_satisfied = true;
    r.constants = {{"alpha", alpha}, {"information", info}, {"binomial_term", exact}};
    set_log_value(r, factor * (info - exact));
    out.push_back(r);

    r.lemma = "gallager-stirling";
    r.constants["binomial_term"] = relaxed;
    set_log_value(r, factor * (info - relaxed));
    out.push_back(r);

    const exponent_curve curve(w);
    const double rate_e = 1.0 + c.rate();
    const double lo = curve.capacity(1.0 / (1.0 + c.l));
    const double hi = curve.capacity(1.0);
    const sp_result sp = sphere_packing_exponent(rate_e, curve);
    bound_report s;
    s.lemma = "gallager-sp";
    s.direction = bound_direction::inner;
    s.hypothesis_satisfied = rate_e >= lo && rate_e < hi;
    s.constants = {{"rate", rate_e}, {"sp_exponent", sp.value}, {"capacity_low", lo}, {"capacity_one", hi}};
    if (!s.hypothesis_satisfied) s.notes.push_back("ln(eM/L) outside [C_{1/(1+L)}, C_1): non-binding");
    set_log_value(s, -sp.value);
    out.push_back(s);
    return out;
}

// ---------------------------------------------------------------------------

double invert_binary_divergence(double alpha, double b, double info)
{
    require(b >= 0.0 && b <= 1.0, "second argument must lie in [0,1]");
    require(info >= 0.0, "information must be nonnegative");
    if (binary_divergence(alpha, 0.0, b) <= info) return 0.0;
    double lo = 0.0;
    double hi = b;
    for (int it = 0; it < 200 && hi - lo > 1e-10 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (binary_divergence(alpha, mid, b) > info ? lo : hi) = mid;
    }
    return lo;
}

std::vector<bound_report> arimoto_outer(const code_params& c, const channel& w, std::optional<measure> p,
                                        const std::vector<double>& orders)
{
    c.validate();
    if (p) check_input_distribution(*p, w);
    const double rate = c.rate();
    const double b = 1.0 - c.l / c.m;
    const exponent_curve curve(w);

    std::vector<bound_report> out;
    for (double alpha : orders) {
        classify_order(alpha);
        const double info = p ? renyi_information(alpha, *p, w) : curve.capacity(alpha);
        bound_report r;
        r.lemma = "arimoto";
        r.direction = bound_direction::outer;
        r.hypothesis_satisfied = true;
        r.constants = {{"alpha", alpha}, {"information", info}, {"b", b}};
        if (!p) r.notes.push_back("capacity in place of I_alpha(P;W): valid for every code");
        set_value(r, invert_binary_divergence(alpha, b, info));
        out.push_back(r);
    }

    const double c1 = curve.capacity(1.0);
    if (rate >= c1) {
        const sp_result sp = sphere_packing_exponent(rate, curve);
        bound_report r;
        r.lemma = "arimoto-sp";
        r.direction = bound_direction::outer;
        r.hypothesis_satisfied = true;
        r.constants = {{"rate", rate}, {"sp_exponent", sp.value}, {"capacity_one", c1}};
        if (!sp.caveat.empty()) r.notes.push_back(sp.caveat);
        set_value(r, -std::expm1(-sp.value));
        out.push_back(r);
        for (double alpha : orders) {
            if (alpha <= 1.0) continue;
            const double ca = curve.capacity(alpha);
            bound_report a;
            a.lemma = "augustin";
            a.direction = bound_direction::outer;
            a.hypothesis_satisfied = rate > c1;
            a.constants = {{"alpha", alpha}, {"capacity", ca}, {"rate", rate}};
            set_value(a, -std::expm1((alpha - 1.0) / alpha * (ca - rate)));
            out.push_back(a);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

double spb_gamma(const std::vector<double>& half_capacities, double kappa, double scale)
{
    require(kappa >= 3.0, "kappa must be at least 3");
    require(scale > 0.0, "scale must be positive");
    double top = -infinity;
    std::vector<double> t;
    for (double c : half_capacities) {
        t.push_back(kappa * std::log(std::max(c, kappa)));
        top = std::max(top, t.back());
    }
    double s = 0.0;
    for (double v : t) s += std::exp(v - top);
    const double norm = std::exp((top + std::log(s)) / kappa);
    return 3.0 * std::pow(3.0, 1.0 / kappa) / scale * norm;
}

std::vector<bound_report> spb_product(const code_params& c, const std::vector<channel>& parts, double phi,
                                      double eps, double kappa)
{
    c.validate();
    const std::size_t n = parts.size();
    require(c.n == n, "blocklength must equal the number of component channels");
    require(phi > 0.0 && phi < 1.0, "phi must lie in (0,1)");
    require(eps > 0.0 && eps < double(n) / double(n + 1), "eps must lie in (0, n/(n+1))");
    require(kappa >= 3.0, "kappa must be at least 3");

    const part_curves pc(parts);
    const exponent_curve& total = *pc.total;
    const double rate = c.rate();
    const double dn = double(n);
    const double gamma = spb_gamma(pc.half_capacities(), kappa, 1.0 - eps);
    const double avg_cap = average_capacity(phi, eps, total);
    const double threshold = std::log(16.0) + 0.5 * std::log(dn) + avg_cap + gamma / (1.0 - phi);
    const bool hyp = rate > threshold;

    std::vector<bound_report> out;
    auto base = [&](const std::string& tag) {
        bound_report r;
        r.lemma = tag;
        r.direction = bound_direction::outer;
        r.hypothesis_satisfied = hyp;
        r.constants = {{"gamma", gamma}, {"eps", eps}, {"kappa", kappa}, {"phi", phi},
                       {"averaged_capacity", avg_cap}, {"rate", rate}, {"rate_threshold", threshold}};
        if (!hyp) r.notes.push_back("ln(M/L) at or below the rate threshold: non-binding");
        return r;
    };

    const double log_pre = std::log(eps) - 2.0 * gamma - std::log(16.0) - 1.5 * std::log(dn);
    {
        bound_report r = base("spb-product");
        const sp_result sp = average_sp_exponent(eps, rate, total);
        r.constants["averaged_sp_exponent"] = sp.value;
        set_log_value(r, (log_pre - 2.0) / phi - sp.value);
        out.push_back(r);
    }
    {
        bound_report r = base("spb-product-alt");
        const double shifted = rate - 2.0 * gamma - std::log(16.0 * e_squared * std::pow(dn, 1.5) / eps);
        r.constants["shifted_rate"] = shifted;
        if (shifted < 0.0) {
            r.notes.push_back("shifted rate is negative: the averaged exponent is +inf");
            set_log_value(r, -infinity);
        } else {
            const sp_result sp = average_sp_exponent(eps, shifted, total);
            r.constants["averaged_sp_exponent"] = sp.value;
            set_log_value(r, log_pre - sp.value);
        }
        out.push_back(r);
    }
    if (pc.stationary() && n >= 10) {
        const exponent_curve& one = pc.curves.front();
        const double r1 = rate / dn;
        const double c_phi = one.capacity(phi);
        const double c_half = one.capacity(0.5);
        const double c_one = one.capacity(1.0);
        const double lower = std::log(16.0 * std::sqrt(dn)) / dn + c_phi +
                             (c_phi + 13.2 * phi * std::max(c_half, std::log(dn))) / ((dn - 1.0) * phi * (1.0 - phi));
        bound_report r;
        r.lemma = "spb-product-stationary";
        r.direction = bound_direction::outer;
        r.hypothesis_satisfied = phi > 1.0 / dn && r1 <= c_one && r1 >= lower;
        r.constants = {{"kappa", std::log(dn)}, {"eps", 1.0 / dn}, {"phi", phi},
                       {"rate_per_use", r1}, {"rate_lower", lower}, {"capacity_one", c_one}};
        if (!r.hypothesis_satisfied) r.notes.push_back("per-use rate outside the admissible interval: non-binding");
        const sp_result sp = sphere_packing_exponent(r1, one);
        r.constants["sp_exponent"] = sp.value;
        const double inner = -rate / ((dn - 1.0) * phi) - std::log(16.0) - 2.0 - 29.0 * std::max(std::log(dn), c_half);
        set_log_value(r, inner / phi - dn * sp.value);
        out.push_back(r);
    }
    return out;
}

std::string to_string(spb_variant v)
{
    switch (v) {
    case spb_variant::monotone_center: return "monotone-center";
    case spb_variant::constant_center: return "constant-center";
    case spb_variant::fixed_density: return "fixed-density";
    }
    return "unknown";
}

namespace {

// q(dW(x)_ac/dq <= t) as a step function: sorted (ratio, cumulative mass).
std::vector<std::pair<double, double>> divergence_law(std::span<const double> row, const measure& q)
{
    std::vector<std::pair<double, double>> pts;
    for (std::size_t y = 0; y < q.size(); ++y)
        if (q[y] > 0.0) pts.emplace_back(row[y] / q[y], q[y]);
    std::sort(pts.begin(), pts.end());
    double acc = 0.0;
    for (auto& p : pts) {
        acc += p.second;
        p.second = acc;
    }
    return pts;
}

double law_at(const std::vector<std::pair<double, double>>& law, double t)
{
    double v = 0.0;
    for (const auto& p : law)
        if (p.first <= t * (1.0 + 1e-12) + 1e-300) v = p.second;
    return v;
}

}  // namespace

bound_report spb_special_cases(const code_params& c, const std::vector<channel>& parts, double phi, double kappa,
                               spb_variant variant)
{
    c.validate();
    const std::size_t n = parts.size();
    require(c.n == n, "blocklength must equal the number of component channels");
    require(phi > 0.0 && phi < 1.0, "phi must lie in (0,1)");

    const part_curves pc(parts);
    const exponent_curve& total = *pc.total;
    const double rate = c.rate();
    const double dn = double(n);
    const double gamma = spb_gamma(pc.half_capacities(), kappa, 1.0);
    const double c_phi = total.capacity(phi);
    const double threshold = std::log(16.0) + 0.5 * std::log(dn) + c_phi + gamma / (1.0 - phi);

    bound_report r;
    r.lemma = "spb-" + to_string(variant);
    r.direction = bound_direction::outer;
    r.constants = {{"gamma", gamma}, {"kappa", kappa}, {"phi", phi}, {"rate", rate}, {"rate_threshold", threshold}};
    bool hyp = rate > threshold;
    if (!hyp) r.notes.push_back("ln(M/L) at or below the rate threshold");

    constexpr std::size_t grid_size = 16;
    std::vector<double> grid;
    const double start = variant == spb_variant::fixed_density ? 0.0 : phi;
    for (std::size_t i = 0; i < grid_size; ++i) {
        const double a = start + (1.0 - start) * double(i) / double(grid_size);
        if (a > 0.0) grid.push_back(a);
    }
    if (variant == spb_variant::fixed_density) grid.insert(grid.begin(), (1.0 - start) / (2.0 * grid_size));

    // Centers of each distinct component at each grid order.
    std::vector<std::vector<capacity_solution>> sol(pc.distinct.size(), std::vector<capacity_solution>(grid.size()));
    parallel_for(pc.distinct.size() * grid.size(), [&](std::size_t k) {
        const std::size_t d = k / grid.size();
        const std::size_t i = k % grid.size();
        sol[d][i] = renyi_capacity(grid[i], pc.distinct[d], 1e-12);
    });

    bool variant_ok = true;
    double worst = 0.0;
    if (variant == spb_variant::monotone_center) {
        const double c1 = total.capacity(1.0);
        r.constants["capacity_one"] = c1;
        if (c1 < phi * phi / 2.0) {
            variant_ok = false;
            r.notes.push_back("C_1 below phi^2/2");
        }
        // The domination is separable over components: the worst output of
        // the product is the product of the worst outputs.
        for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
            const double a = grid[i];
            const double b = grid[i + 1];
            double excess = 0.0;
            for (std::size_t t = 0; t < n; ++t) {
                const std::size_t d = pc.index[t];
                const capacity_solution& sa = sol[d][i];
                const capacity_solution& sb = sol[d][i + 1];
                double m = -infinity;
                for (std::size_t y = 0; y < sa.center.size(); ++y) {
                    const double la = (a - 1.0) / a * sa.value + std::log(sa.center[y]);
                    const double lb = (b - 1.0) / b * sb.value + std::log(sb.center[y]);
                    if (sa.center[y] == 0.0) continue;
                    m = std::max(m, sb.center[y] == 0.0 ? infinity : la - lb);
                }
                excess += m;
            }
            worst = std::max(worst, excess);
        }
        if (worst > 1e-9) {
            variant_ok = false;
            r.notes.push_back("monotone-center domination fails on the order grid");
        }
        const double shifted = rate - std::log(95.0) - 0.5 * std::log(dn) - std::log(c1) + 2.0 * std::log(phi) - 2.0 * gamma;
        r.constants["shifted_rate"] = shifted;
        r.constants["domination_excess"] = worst;
        const double log_pre = 2.0 * std::log(phi) - 2.0 * gamma - std::log(32.0) - 0.5 * std::log(dn) - std::log(c1);
        if (shifted < 0.0 || !(c1 > 0.0)) {
            set_log_value(r, -infinity);
            r.notes.push_back("shifted rate is negative");
        } else {
            const sp_result sp = sphere_packing_exponent(shifted, total);
            r.constants["sp_exponent"] = sp.value;
            set_log_value(r, log_pre - sp.value);
        }
    } else {
        for (std::size_t d = 0; d < pc.distinct.size(); ++d)
            for (std::size_t i = 1; i < grid.size(); ++i)
                worst = std::max(worst, total_variation(sol[d][i].center, sol[d][0].center));
        r.constants["center_spread"] = worst;
        if (worst > 1e-9) {
            variant_ok = false;
            r.notes.push_back("Rényi centers move with the order");
        }
        if (variant == spb_variant::fixed_density) {
            double gap = 0.0;
            for (std::size_t d = 0; d < pc.distinct.size(); ++d) {
                const channel& w = pc.distinct[d];
                const measure& q = sol[d][grid.size() / 2].center;
                const auto ref = divergence_law(w.row(0), q);
                for (std::size_t x = 1; x < w.inputs(); ++x) {
                    const auto law = divergence_law(w.row(x), q);
                    for (const auto& p : law) gap = std::max(gap, std::abs(p.second - law_at(ref, p.first)));
                    for (const auto& p : ref) gap = std::max(gap, std::abs(p.second - law_at(law, p.first)));
                }
            }
            r.constants["law_gap"] = gap;
            if (gap > 1e-9) {
                variant_ok = false;
                r.notes.push_back("rows do not share one divergence law");
            }
            r.notes.push_back("hypothesis grid-verified");
        }
        const double shifted = rate - std::log(20.0) - 0.5 * std::log(dn) - 2.0 * gamma;
        r.constants["shifted_rate"] = shifted;
        const double log_pre = -2.0 * gamma - std::log(16.0) - 0.5 * std::log(dn);
        if (shifted < 0.0) {
            set_log_value(r, -infinity);
            r.notes.push_back("shifted rate is negative");
        } else {
            const sp_result sp = sphere_packing_exponent(shifted, total);
            r.constants["sp_exponent"] = sp.value;
            set_log_value(r, log_pre - sp.value);
        }
    }
    r.hypothesis_satisfied = hyp && variant_ok;
    return r;
}

// ---------------------------------------------------------------------------

double taylor_gap_bound(double beta, double lambda, double gamma)
{
    require(beta > 1.0 && lambda > beta, "orders must satisfy 1 < beta < lambda");
    require(gamma >= 0.0 && std::isfinite(gamma), "gamma must be a nonnegative real");
    const double lead = 2.0 * (beta - 1.0) / e_squared;
    if (gamma == 0.0) return lead;
    const double tau = std::min((lambda - beta) * gamma / 2.0, 1.0);
    const double ratio = gamma * std::exp(tau) / (2.0 * tau);
    return lead * (1.0 + std::exp((beta - 1.0) * gamma) * ratio * ratio);
}

double moment_bound_rhs(double alpha, double k, double d)
{
    require(alpha > 0.0 && alpha < 1.0, "order must lie in (0,1)");
    require(k > 0.0, "moment order must be positive");
    require(d >= 0.0, "divergence must be nonnegative");
    return std::pow(3.0, 1.0 / k) * std::max((1.0 - alpha) * d, k) / (alpha * (1.0 - alpha));
}

double small_deviation_floor(std::size_t n)
{
    require(n >= 1, "n must be positive");
    return 0.5 / std::sqrt(double(n));
}

// ---------------------------------------------------------------------------

double order_for_exponent(const exponent_curve& curve, double e, double lo)
{
    require(lo > 0.0 && lo < 1.0, "lower order must lie in (0,1)");
    auto g = [&](double a) { return (1.0 - a) / a * curve.capacity(a); };
    if (!(g(lo) >= e)) throw precondition_error("(1-a)/a C_a stays below the target exponent on [lo, 1)");
    if (e <= 0.0) return 1.0;
    return bisect_last_true(lo, 1.0, [&](double a) { return g(a) >= e; });
}

auxiliary_channel tradeoff_channel(const channel& w, double rate, double eps, std::size_t capacity_orders)
{
    const exponent_curve curve(w, 1e-12);
    const zero_plus_bracket zp = zero_plus_capacity(curve);
    const double c1 = curve.capacity(1.0);
    if (!(rate > zp.upper && rate < c1))
        throw precondition_error("rate must lie strictly between the C_{0+} bracket and C_1");

    auxiliary_channel a;
    a.base = w;
    a.rate = rate;
    a.eps = eps;
    a.phi = order_for_rate(curve, rate, 1e-10);
    require(eps > 0.0 && eps < a.phi / 2.0, "eps must lie in (0, phi/2)");
    a.sp_exponent = sphere_packing_exponent(rate, curve).value;
    a.eta = order_for_exponent(curve, a.sp_exponent, a.phi);
    a.half_capacity = curve.capacity(0.5);
    a.target = average_capacity(a.phi, eps, curve);

    std::mutex lock;
    std::map<double, measure> centers;
    auto center_at = [&](double alpha) {
        {
            std::lock_guard<std::mutex> g(lock);
            auto it = centers.find(alpha);
            if (it != centers.end()) return it->second;
        }
        measure q = average_center(alpha, eps, w).center;
        std::lock_guard<std::mutex> g(lock);
        centers.emplace(alpha, q);
        return q;
    };
    auto tilt_gap = [&](std::size_t x, double alpha) {
        const measure q = center_at(alpha);
        const measure v = tilted_measure(alpha, w.row(x), q);
        return renyi_divergence(1.0, v, q);
    };

    const std::size_t nx = w.inputs();
    a.orders.assign(nx, a.phi);
    a.cases.assign(nx, 0);
    for (std::size_t x = 0; x < nx; ++x) {
        const double at_eta = tilt_gap(x, a.eta);
        const double at_phi = tilt_gap(x, a.phi);
        if (at_eta <= a.target) {
            a.orders[x] = a.eta;
            a.cases[x] = 2;
        } else if (at_phi >= a.target) {
            a.orders[x] = a.phi;
            a.cases[x] = 1;
        } else {
            a.orders[x] = bisect_last_true(a.phi, a.eta, [&](double al) { return tilt_gap(x, al) <= a.target; });
            a.cases[x] = 3;
        }
    }

    std::vector<measure> rows(nx);
    a.centers.resize(nx);
    a.rate_terms.resize(nx);
    a.exponent_terms.resize(nx);
    for (std::size_t x = 0; x < nx; ++x) {
        a.centers[x] = center_at(a.orders[x]);
        rows[x] = tilted_measure(a.orders[x], w.row(x), a.centers[x]);
        a.rate_terms[x] = renyi_divergence(1.0, rows[x], a.centers[x]);
        a.exponent_terms[x] = renyi_divergence(1.0, rows[x], w.row(x));
    }
    a.realized = channel::from_rows(rows);

    const double ch = a.half_capacity;
    a.rate_cap = rate + 2.0 * eps * ch / (a.phi * (1.0 - a.phi) * (1.0 - a.phi));
    a.exponent_cap = a.sp_exponent + 2.0 * eps * ch / (a.phi * a.phi * (1.0 - a.eta));
    bool ok = true;
    for (std::size_t x = 0; x < nx; ++x)
        ok = ok && a.rate_terms[x] <= a.rate_cap && a.exponent_terms[x] <= a.exponent_cap;

    const double beta_max = (1.0 + a.eta) / (2.0 * a.eta);
    a.capacity_checks.resize(capacity_orders);
    parallel_for(capacity_orders, [&](std::size_t j) {
        const double beta = 1.0 + (beta_max - 1.0) * double(j + 1) / double(capacity_orders + 1);
        const double growth = (beta - 1.0) * std::exp((beta - 1.0) * 2.0 * ch / (1.0 - a.eta)) *
                              std::pow(std::max(4.0, 2.0 * ch) / (1.0 - a.eta), 2.0);
        capacity_cap_check k;
        k.order = beta;
        k.capacity = renyi_capacity(beta, a.realized, 1e-10).value;
        k.cap = a.rate_cap + std::log(1.0 / eps) + growth;
        a.capacity_checks[j] = k;
    });
    for (const auto& k : a.capacity_checks) ok = ok && k.capacity <= k.cap;
    a.certified = ok;
    return a;
}

// ---------------------------------------------------------------------------

subblock_plan make_subblock_plan(std::size_t n, std::size_t kappa)
{
    require(kappa >= 1 && kappa <= n, "subblock count must lie in [1, n]");
    subblock_plan p;
    const std::size_t base = n / kappa;
    const std::size_t extra = n - base * kappa;
    std::size_t end = 0;
    for (std::size_t i = 0; i < kappa; ++i) {
        const std::size_t len = base + (i < extra ? 1 : 0);
        end += len;
        p.lengths.push_back(len);
        p.ends.push_back(end);
    }
    return p;
}

namespace {

struct feedback_orders {
    double theta = 0.0;
    double c_half = 0.0;
    double c_alpha0 = 0.0;
    double c_alpha1 = 0.0;
};

feedback_orders check_feedback_orders(const exponent_curve& curve, double eps, double alpha0, double alpha1)
{
    require(alpha0 > 0.0 && alpha0 < alpha1 && alpha1 < 1.0, "orders must satisfy 0 < alpha0 < alpha1 < 1");
    require(eps > 0.0 && eps < alpha0 / 2.0, "eps must lie in (0, alpha0/2)");
    const zero_plus_bracket zp = zero_plus_capacity(curve);
    const double c1 = curve.capacity(1.0);
    if (!(zp.upper < c1 - 1e-9))
        throw precondition_error("C_{0+} equals C_1: no admissible order interval");
    feedback_orders o;
    o.c_half = curve.capacity(0.5);
    o.c_alpha0 = curve.capacity(alpha0);
    o.c_alpha1 = curve.capacity(alpha1);
    const double e = sphere_packing_exponent(o.c_alpha1, curve).value;
    o.theta = order_for_exponent(curve, e, alpha1);
    require(o.theta > alpha1 && o.theta < 1.0, "theta must exceed alpha1");
    return o;
}

}  // namespace

bound_report spb_feedback(const code_params& c, const channel& w, std::size_t kappa, double eps, double alpha0,
                          double alpha1)
{
    c.validate();
    const std::size_t n = c.n;
    require(kappa >= 1 && kappa < n, "kappa must be a positive integer below n");
    const exponent_curve curve(w);
    const feedback_orders o = check_feedback_orders(curve, eps, alpha0, alpha1);
    const double dn = double(n);
    const double dk = double(kappa);
    const double th = o.theta;
    const double r1 = c.rate() / dn;
    const double cbrt = std::cbrt(dk);

    bound_report r;
    r.lemma = "spb-feedback";
    r.direction = bound_direction::outer;
    const double lower = o.c_alpha0 + o.c_half / (1.0 - th) * (2.0 * eps / (alpha0 * (1.0 - th)) + 14.0 / cbrt) +
                         dk / dn * std::log(1.0 / eps);
    const bool blocks_ok = double(n / kappa) * o.c_half >= 2.0;
    const bool rate_ok = r1 <= o.c_alpha1 && r1 >= lower;
    r.hypothesis_satisfied = blocks_ok && rate_ok;
    if (!blocks_ok) r.notes.push_back("floor(n/kappa) C_{1/2} < 2");
    if (!rate_ok) r.notes.push_back("per-use rate outside [rate_lower, C_alpha1]");
    r.constants = {{"kappa", dk}, {"eps", eps}, {"alpha0", alpha0}, {"alpha1", alpha1}, {"theta", th},
                   {"capacity_half", o.c_half}, {"rate_per_use", r1}, {"rate_lower", lower},
                   {"capacity_alpha1", o.c_alpha1}};
    put_plan(r, make_subblock_plan(n, kappa));

    const sp_result sp = sphere_packing_exponent(r1, curve);
    r.constants["sp_exponent"] = sp.value;
    const double penalty = o.c_half / (alpha0 * (1.0 - th)) * (6.0 * eps / (alpha0 * (1.0 - th)) + 15.0 / cbrt) -
                           dk * std::log(eps) / (dn * alpha0);
    set_log_value(r, std::log(0.25) - dn * (sp.value + penalty));
    return r;
}

bound_report spb_feedback_gamma(const code_params& c, const std::vector<channel>& parts, std::size_t kappa,
                                double eps, double alpha0, double alpha1, double gamma)
{
    c.validate();
    const std::size_t n = parts.size();
    require(c.n == n, "blocklength must equal the number of component channels");
    require(kappa >= 1 && kappa < n, "kappa must be a positive integer below n");
    require(gamma >= 0.0, "gamma must be nonnegative");
    const part_curves pc(parts);
    const exponent_curve& total = *pc.total;
    const feedback_orders o = check_feedback_orders(total, eps, alpha0, alpha1);
    const double th = o.theta;
    const double dk = double(kappa);
    const double rate = c.rate();

    // Window deviations on an order grid over [alpha0, theta].
    constexpr std::size_t grid_size = 12;
    double defect = 0.0;
    for (std::size_t g = 0; g <= grid_size; ++g) {
        const double a = alpha0 + (th - alpha0) * double(g) / double(grid_size);
        std::vector<double> caps(n);
        for (std::size_t t = 0; t < n; ++t) caps[t] = pc.at(t, a);
        const double whole = total.capacity(a);
        for (std::size_t len : {n / kappa, (n + kappa - 1) / kappa}) {
            for (std::size_t t = 0; t + len <= n; ++t) {
                const double s = std::accumulate(caps.begin() + std::ptrdiff_t(t), caps.begin() + std::ptrdiff_t(t + len), 0.0);
                defect = std::max(defect, s - double(len) / double(n) * whole);
            }
        }
    }

    bound_report r;
    r.lemma = "spb-feedback-gamma";
    r.direction = bound_direction::outer;
    const double cbrt = std::cbrt(dk);
    const double lower = o.c_alpha0 + o.c_half / (alpha0 * (1.0 - th) * (1.0 - th)) * (2.0 * eps + 14.0 / cbrt) +
                         dk * (gamma - std::log(eps));
    const bool blocks_ok = double(n / kappa) * o.c_half / double(n) + gamma >= 2.0;
    const bool defect_ok = defect <= gamma;
    const bool rate_ok = rate <= o.c_alpha1 && rate >= lower;
    r.hypothesis_satisfied = blocks_ok && defect_ok && rate_ok;
    if (!blocks_ok) r.notes.push_back("floor(n/kappa) C_{1/2}/n + gamma < 2");
    if (!defect_ok) r.notes.push_back("window deviation exceeds gamma on the order grid");
    if (!rate_ok) r.notes.push_back("ln(M/L) outside [rate_lower, C_alpha1]");
    r.notes.push_back("window deviation grid-verified");
    r.constants = {{"kappa", dk}, {"eps", eps}, {"alpha0", alpha0}, {"alpha1", alpha1}, {"theta", th},
                   {"gamma", gamma}, {"defect", defect}, {"capacity_half", o.c_half}, {"rate", rate},
                   {"rate_lower", lower}, {"capacity_alpha1", o.c_alpha1}};
    put_plan(r, make_subblock_plan(n, kappa));

    const sp_result sp = sphere_packing_exponent(rate, total);
    r.constants["sp_exponent"] = sp.value;
    const double log_value = std::log(0.25) - sp.value -
                             (o.c_half + dk * gamma) / (alpha0 * alpha0 * (1.0 - th) * (1.0 - th)) * (6.0 * eps + 15.0 / cbrt) -
                             dk * (3.0 * gamma - std::log(eps)) / alpha0;
    set_log_value(r, log_value);
    return r;
}

stationarity_fit assumption_check(const std::vector<channel>& sequence, const std::vector<double>& orders)
{
    require(sequence.size() >= 2, "the sequence needs at least two channels");
    require(!orders.empty(), "at least one order is needed");
    for (double a : orders) require(a > 0.0 && a < 1.0, "orders must lie in (0,1)");
    const part_curves pc(sequence);
    const std::size_t n = sequence.size();

    std::vector<std::vector<double>> caps(orders.size(), std::vector<double>(n));
    std::vector<double> rho(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
        for (std::size_t t = 0; t < n; ++t) caps[i][t] = pc.at(t, orders[i]);
        rho[i] = std::accumulate(caps[i].begin(), caps[i].end(), 0.0) / double(n);
    }
    stationarity_fit fit;
    for (std::size_t len = 2; len <= n; ++len) {
        double dev = 0.0;
        for (std::size_t i = 0; i < orders.size(); ++i)
            for (std::size_t t = 0; t + len <= n; ++t) {
                const double s = std::accumulate(caps[i].begin() + std::ptrdiff_t(t),
                                                 caps[i].begin() + std::ptrdiff_t(t + len), 0.0);
                dev = std::max(dev, std::abs(s - double(len) * rho[i]));
            }
        fit.window_lengths.push_back(len);
        fit.constants.push_back(dev / std::log(double(len)));
        fit.worst = std::max(fit.worst, fit.constants.back());
    }
    return fit;
}

}  // namespace renyi
