#include "suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <random>

#include "renyi/bounds.hpp"
#include "renyi/capacity.hpp"
#include "renyi/errors.hpp"
#include "renyi/oracle.hpp"
#include "renyi/parallel.hpp"

namespace renyi::suites {

namespace {

double uniform(rng& g, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(g); }

std::size_t pick(rng& g, std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(g); }

double log_uniform(rng& g, double lo, double hi) { return std::exp(uniform(g, std::log(lo), std::log(hi))); }

// Dirichlet draw with a random concentration; with zeros allowed each
// coordinate is dropped with probability 0.15, keeping at least one.
measure random_measure(rng& g, std::size_t k, bool zeros)
{
    static constexpr double conc[] = {0.2, 1.0, 5.0};
    measure p = dirichlet(g, k, conc[pick(g, 0, 2)]);
    if (zeros) {
        for (auto& v : p)
            if (uniform(g, 0.0, 1.0) < 0.15) v = 0.0;
        if (std::all_of(p.begin(), p.end(), [](double v) { return v == 0.0; })) p[pick(g, 0, k - 1)] = 1.0;
        p = normalized(p);
    }
    return p;
}

channel random_channel(rng& g, std::size_t nx, std::size_t ny)
{
    std::vector<measure> rows(nx);
    for (auto& r : rows) r = random_measure(g, ny, false);
    return channel::from_rows(rows);
}

// rhs - lhs with inf - inf read as equality.
double slack(double rhs, double lhs)
{
    if (std::isinf(rhs) && std::isinf(lhs) && rhs == lhs) return 0.0;
    return rhs - lhs;
}

using instance_fn = std::function<double(rng&, std::size_t)>;

suite_result run_instances(const std::string& name, std::size_t instances, std::uint64_t seed, double tol,
                           const instance_fn& f)
{
    std::vector<double> s(instances);
    parallel_for(instances, [&](std::size_t i) {
        rng g = substream(seed, i);
        s[i] = f(g, i);
    });
    suite_result r;
    r.name = name;
    r.instances = instances;
    r.tolerance = tol;
    r.worst_slack = std::numeric_limits<double>::infinity();
    for (double v : s) {
        r.worst_slack = std::min(r.worst_slack, v);
        if (!(v >= -tol)) ++r.violations;
    }
    r.passed = r.violations == 0;
    return r;
}

// ---------------------------------------------------------------------------

suite_result pinsker(std::size_t n, std::uint64_t seed)
{
    return run_instances("pinsker", n, seed, 1e-10, [](rng& g, std::size_t) {
        const std::size_t k = pick(g, 2, 6);
        const measure w = random_measure(g, k, true);
        const measure q = random_measure(g, k, true);
        const double a = log_uniform(g, 0.01, 10.0);
        const double tv = total_variation(w, q);
        return slack(renyi_divergence(a, w, q), std::min(1.0, a) / 2.0 * tv * tv);
    });
}

suite_result shiryaev(std::size_t n, std::uint64_t seed)
{
    return run_instances("shiryaev", n, seed, 1e-10, [](rng& g, std::size_t) {
        const std::size_t k = pick(g, 2, 6);
        const measure w = random_measure(g, k, true);
        const measure q = random_measure(g, k, true);
        // 2 - |w - q| = 2 sum min(w, q), exactly zero on disjoint supports.
        double overlap = 0.0;
        for (std::size_t y = 0; y < k; ++y) overlap += std::min(w[y], q[y]);
        const double rhs = overlap == 0.0 ? infinity : -2.0 * std::log(overlap);
        return slack(rhs, renyi_divergence(0.5, w, q));
    });
}

suite_result dpi(std::size_t n, std::uint64_t seed)
{
    return run_instances("dpi", n, seed, 1e-10, [](rng& g, std::size_t) {
        const std::size_t k = pick(g, 2, 8);
        const measure w = random_measure(g, k, true);
        const measure q = random_measure(g, k, true);
        const double a = log_uniform(g, 0.01, 10.0);
        const std::size_t bins = pick(g, 1, k);
        measure wb(bins, 0.0);
        measure qb(bins, 0.0);
        for (std::size_t y = 0; y < k; ++y) {
            const std::size_t b = pick(g, 0, bins - 1);
            wb[b] += w[y];
            qb[b] += q[y];
        }
        return slack(renyi_divergence(a, w, q), renyi_divergence(a, wb, qb));
    });
}

suite_result order(std::size_t n, std::uint64_t seed)
{
    return run_instances("order", n, seed, 1e-10, [](rng& g, std::size_t) {
        const std::size_t k = pick(g, 2, 6);
        const measure w = random_measure(g, k, true);
        const measure q = random_measure(g, k, true);
        double a1 = log_uniform(g, 0.01, 10.0);
        double a2 = log_uniform(g, 0.01, 10.0);
        if (a1 > a2) std::swap(a1, a2);
        if (pick(g, 0, 3) == 0) a2 = 1.0 > a1 ? 1.0 : a2;
        return slack(renyi_divergence(a2, w, q), renyi_divergence(a1, w, q));
    });
}

suite_result convexity(std::size_t n, std::uint64_t seed)
{
    return run_instances("convexity", n, seed, 1e-10, [](rng& g, std::size_t) {
        const std::size_t k = pick(g, 2, 6);
        const measure w = random_measure(g, k, true);
        const measure q1 = random_measure(g, k, true);
        const measure q0 = random_measure(g, k, true);
        const double a = log_uniform(g, 0.01, 10.0);
        const double b = uniform(g, 0.0, 1.0);
        measure mix(k);
        for (std::size_t y = 0; y < k; ++y) mix[y] = b * q1[y] + (1.0 - b) * q0[y];
        const double d1 = renyi_divergence(a, w, q1);
        const double d0 = renyi_divergence(a, w, q0);
        const double rhs = (b > 0.0 ? b * d1 : 0.0) + (b < 1.0 ? (1.0 - b) * d0 : 0.0);
        return slack(rhs, renyi_divergence(a, w, mix));
    });
}

suite_result tilt(std::size_t n, std::uint64_t seed)
{
    return run_instances("tilt", n, seed, 1e-10, [](rng& g, std::size_t) {
        const std::size_t k = pick(g, 2, 6);
        const measure w = random_measure(g, k, false);
        const measure q = random_measure(g, k, true);
        const double a = uniform(g, 0.01, 0.99);
        const measure v = tilted_measure(a, w, q);
        const double lhs = (1.0 - a) * renyi_divergence(a, w, q);
        const double rhs = a * renyi_divergence(1.0, v, w) + (1.0 - a) * renyi_divergence(1.0, v, q);
        return -std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
    });
}

suite_result ehb(std::size_t n, std::uint64_t seed)
{
    static constexpr double orders[] = {0.3, 0.5, 0.9, 1.0, 1.5, 3.0};
    return run_instances("ehb", n, seed, 1e-8, [](rng& g, std::size_t) {
        const channel w = random_channel(g, pick(g, 2, 4), pick(g, 2, 4));
        const double a = orders[pick(g, 0, 5)];
        const measure q = random_measure(g, w.outputs(), false);
        return ehb_certificate(a, w, q, 1e-11).slack;
    });
}

suite_result taylor(std::size_t n, std::uint64_t seed)
{
    return run_instances("taylor", n, seed, 1e-12, [](rng& g, std::size_t) {
        const std::size_t k = pick(g, 2, 6);
        const measure w = random_measure(g, k, true);
        const measure q = random_measure(g, k, false);
        const double lambda = uniform(g, 1.05, 6.0);
        const double gamma = renyi_divergence(lambda, w, q) * (pick(g, 0, 1) ? 1.0 : uniform(g, 1.0, 3.0));
        const double beta = uniform(g, 1.0 + 1e-3, lambda - 1e-3);
        const double gap = renyi_divergence(beta, w, q) - renyi_divergence(1.0, w, q);
        return std::min(gap, taylor_gap_bound(beta, lambda, gamma) - gap);
    });
}

suite_result moment(std::size_t n, std::uint64_t seed)
{
    return run_instances("moment", n, seed, 1e-12, [](rng& g, std::size_t) {
        const std::size_t k = pick(g, 2, 6);
        const measure w = random_measure(g, k, true);
        measure q = random_measure(g, k, true);
        if (renyi_divergence(0.5, w, q) == infinity) q = random_measure(g, k, false);
        const double a = uniform(g, 0.01, 0.99);
        const double m = log_uniform(g, 0.2, 8.0);
        const double lhs = std::pow(exact_tilted_moment(a, w, q, m), 1.0 / m);
        return moment_bound_rhs(a, m, renyi_divergence(a, w, q)) - lhs;
    });
}

// Zero-mean finite variables from three families: scaled signs, centered
// Bernoulli, and three-point laws.
finite_variable random_variable(rng& g, std::size_t family)
{
    switch (family) {
    case 0: {
        const double a = log_uniform(g, 0.1, 10.0);
        return {{-a, 0.5}, {a, 0.5}};
    }
    case 1: {
        const double p = uniform(g, 0.01, 0.99);
        return {{1.0 - p, p}, {-p, 1.0 - p}};
    }
    default: {
        const double a = -log_uniform(g, 0.1, 5.0);
        const double b = log_uniform(g, 0.1, 5.0);
        double c = uniform(g, a, b);
        const double pc = uniform(g, 0.0, 0.8);
        double pb = (-(1.0 - pc) * a - pc * c) / (b - a);
        if (pb < 0.0 || pb > 1.0 - pc) {
            c = 0.0;
            pb = -(1.0 - pc) * a / (b - a);
        }
        const double pa = 1.0 - pc - pb;
        // Shift the middle atom so the mean is zero to rounding.
        if (pc > 0.0) c = -(pa * a + pb * b) / pc;
        return {{a, pa}, {c, pc}, {b, pb}};
    }
    }
}

suite_result berry(std::size_t n, std::uint64_t seed)
{
    return run_instances("berry", n, seed, 0.0, [](rng& g, std::size_t i) {
        const std::size_t family = i % 3;
        const std::size_t count = 1 + (i / 3) % 10;
        std::vector<finite_variable> vars;
        for (std::size_t t = 0; t < count; ++t) vars.push_back(random_variable(g, family));
        const double k = pick(g, 0, 1) ? 3.0 : uniform(g, 3.0, 8.0);
        const small_deviation d = exact_small_deviation(vars, k);
        return d.probability - d.floor;
    });
}

constexpr double additivity_orders[] = {0.5, 1.0, 2.0};

suite_result additivity(std::size_t n, std::uint64_t seed)
{
    return run_instances("additivity", n, seed, 2e-7, [](rng& g, std::size_t) {
        const channel w = random_channel(g, pick(g, 2, 3), pick(g, 2, 3));
        const channel v = random_channel(g, pick(g, 2, 3), pick(g, 2, 3));
        const channel wv = product_channel({w, v});
        double worst = infinity;
        for (double a : additivity_orders) {
            const double d = renyi_capacity(a, wv, 1e-12).value - renyi_capacity(a, w, 1e-12).value -
                             renyi_capacity(a, v, 1e-12).value;
            worst = std::min(worst, -std::abs(d));
        }
        return worst;
    });
}

// Product of the component centers against the radius of the product channel.
suite_result product_center(std::size_t n, std::uint64_t seed)
{
    return run_instances("product_center", n, seed, 1e-8, [](rng& g, std::size_t) {
        const channel w = random_channel(g, pick(g, 2, 3), pick(g, 2, 3));
        const channel v = random_channel(g, pick(g, 2, 3), pick(g, 2, 3));
        const channel wv = product_channel({w, v});
        double worst = infinity;
        for (double a : additivity_orders) {
            const capacity_solution sw = renyi_capacity(a, w, 1e-12);
            const capacity_solution sv = renyi_capacity(a, v, 1e-12);
            measure q(wv.outputs());
            for (std::size_t y = 0; y < q.size(); ++y) q[y] = sw.center[y % w.outputs()] * sv.center[y / w.outputs()];
            worst = std::min(worst, sw.value + sv.value - renyi_radius(a, wv, q));
        }
        return worst;
    });
}

// D_alpha of the output law of a deterministic feedback strategy against the
// product of the component centers, which may not exceed the sum of the
// component capacities; 100 random strategies per channel pair.
suite_result feedback_cap(std::size_t n, std::uint64_t seed)
{
    return run_instances("feedback_cap", n, seed, 1e-8, [](rng& g, std::size_t) {
        const std::vector<channel> parts{random_channel(g, 2, pick(g, 2, 3)), random_channel(g, 2, pick(g, 2, 3))};
        double worst = infinity;
        for (double a : additivity_orders) {
            const capacity_solution s1 = renyi_capacity(a, parts[0], 1e-12);
            const capacity_solution s2 = renyi_capacity(a, parts[1], 1e-12);
            const std::size_t y1 = parts[0].outputs();
            measure q(y1 * parts[1].outputs());
            for (std::size_t y = 0; y < q.size(); ++y) q[y] = s1.center[y % y1] * s2.center[y / y1];
            const double cap = s1.value + s2.value;
            for (int s = 0; s < 100; ++s) {
                const feedback_strategy f = random_feedback_strategy(1, parts, g);
                worst = std::min(worst, cap - renyi_divergence(a, feedback_output_measure(f, 0, parts), q));
            }
        }
        return worst;
    });
}

// ---------------------------------------------------------------------------

double best_binding_outer(const std::vector<bound_report>& reports, std::size_t& binding)
{
    double v = 0.0;
    for (const auto& r : reports)
        if (r.direction == bound_direction::outer && r.hypothesis_satisfied) {
            ++binding;
            v = std::max(v, r.value);
        }
    return v;
}

suite_result sandwich(std::size_t n, std::uint64_t seed)
{
    suite_result r;
    r.name = "sandwich";
    r.instances = n;
    r.tolerance = 0.0;
    r.worst_slack = infinity;
    const channel w = binary_symmetric(0.1);
    const measure uniform_prior{0.5, 0.5};
    std::size_t config = 0;
    std::size_t binding = 0;
    for (std::size_t len : {3, 4, 5})
        for (double m : {4.0, 8.0}) {
            const code_params c{m, 1.0, len};
            const std::vector<channel> parts(len, w);
            const channel pw = product_channel(parts);
            const code_search_result best = random_code_search(c, w, uniform_prior, n, seed + config++);

            std::vector<bound_report> outer =
                arimoto_outer(c, pw, std::nullopt, {0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 4.0});
            for (double phi : {0.3, 0.5, 0.7}) {
                auto s = spb_product(c, parts, phi, 0.25, 3.0);
                outer.insert(outer.end(), s.begin(), s.end());
            }
            const double lower = best_binding_outer(outer, binding);

            const measure prior(pw.inputs(), 1.0 / double(pw.inputs()));
            double inner = 1.0;
            for (int i = 0; i < 40; ++i) {
                const double a = 0.5 + 0.5 * double(i) / 40.0;
                inner = std::min(inner, gallager_inner(c, a, prior, pw).front().value);
            }
            r.worst_slack = std::min({r.worst_slack, best.error - lower, inner - best.error});
            if (best.error < lower || best.error > inner) ++r.violations;
            char buf[160];
            std::snprintf(buf, sizeof buf, "n=%zu M=%g: outer %.6g <= best code %.6g <= inner %.6g", len, m, lower,
                          best.error, inner);
            r.notes.push_back(buf);
        }
    r.notes.push_back("binding outer reports: " + std::to_string(binding));
    r.passed = r.violations == 0;
    return r;
}

suite_result feedback(std::size_t n, std::uint64_t seed)
{
    suite_result r;
    r.name = "feedback";
    r.instances = n;
    r.tolerance = 0.0;
    r.worst_slack = infinity;
    std::size_t config = 0;
    std::size_t binding_spb = 0;
    std::size_t binding = 0;
    rng chooser = substream(seed, 1u << 20);
    const std::vector<channel> channels{binary_symmetric(0.1), random_channel(chooser, 2, 2)};
    for (const channel& w : channels)
        for (std::size_t len : {2, 3, 4})
            for (double m : {2.0, 4.0}) {
                const code_params c{m, 1.0, len};
                const std::vector<channel> parts(len, w);
                std::vector<double> errors(n);
                const std::uint64_t s = seed + config++;
                parallel_for(n, [&](std::size_t i) {
                    rng g = substream(s, i);
                    errors[i] = feedback_error_probability(random_feedback_strategy(std::size_t(m), parts, g), parts, 1);
                });
                const double best = *std::min_element(errors.begin(), errors.end());

                // Arimoto's bound holds with feedback since the capacity of
                // the feedback channel is the sum of the component capacities.
                std::vector<bound_report> outer =
                    arimoto_outer(c, product_channel(parts), std::nullopt, {0.5, 1.0, 2.0});
                double lower = best_binding_outer(outer, binding);
                for (std::size_t kappa = 1; kappa < len; ++kappa) {
                    try {
                        const bound_report f = spb_feedback(c, w, kappa, 0.1, 0.3, 0.6);
                        if (f.hypothesis_satisfied) {
                            ++binding_spb;
                            lower = std::max(lower, f.value);
                        }
                    } catch (const precondition_error&) {
                    }
                }
                r.worst_slack = std::min(r.worst_slack, best - lower);
                if (best < lower) ++r.violations;
            }
    r.notes.push_back("binding spb_feedback reports: " + std::to_string(binding_spb));
    r.notes.push_back("binding Arimoto reports: " + std::to_string(binding));
    r.passed = r.violations == 0;
    return r;
}

const std::map<std::string, std::pair<std::size_t, suite_result (*)(std::size_t, std::uint64_t)>>& table()
{
    static const std::map<std::string, std::pair<std::size_t, suite_result (*)(std::size_t, std::uint64_t)>> t{
        {"pinsker", {10000, pinsker}},   {"shiryaev", {10000, shiryaev}},  {"dpi", {10000, dpi}},
        {"order", {10000, order}},       {"convexity", {10000, convexity}}, {"tilt", {10000, tilt}},
        {"ehb", {200, ehb}},             {"taylor", {1000, taylor}},       {"moment", {1000, moment}},
        {"berry", {300, berry}},         {"additivity", {20, additivity}}, {"product_center", {20, product_center}},
        {"feedback_cap", {20, feedback_cap}}, {"sandwich", {10000, sandwich}},
        {"feedback", {1000, feedback}},
    };
    return t;
}

}  // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"pinsker", "shiryaev", "dpi",   "order",      "convexity",
                                                "tilt",    "ehb",      "taylor", "moment",    "berry",
                                                "additivity", "product_center", "feedback_cap", "sandwich", "feedback"};
    return names;
}

std::size_t default_instances(const std::string& name)
{
    auto it = table().find(name);
    if (it == table().end()) throw precondition_error("unknown suite '" + name + "'");
    return it->second.first;
}

suite_result run_suite(const std::string& name, std::size_t instances, std::uint64_t seed)
{
    auto it = table().find(name);
    if (it == table().end()) throw precondition_error("unknown suite '" + name + "'");
    require(instances >= 1, "a suite needs at least one instance");
    const auto start = std::chrono::steady_clock::now();
    suite_result r = it->second.second(instances, seed);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace renyi::suites
