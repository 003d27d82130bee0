#include "renyi/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include <Eigen/Dense>
#include <boost/math/tools/minima.hpp>

#include "renyi/errors.hpp"
#include "renyi/parallel.hpp"

namespace renyi {

std::string to_string(sp_regime r)
{
    switch (r) {
    case sp_regime::infinite: return "infinite";
    case sp_regime::zero_plus: return "zero_plus";
    case sp_regime::below_capacity: return "below_capacity";
    case sp_regime::at_capacity: return "at_capacity";
    case sp_regime::above_capacity: return "above_capacity";
    case sp_regime::beyond_order_cap: return "beyond_order_cap";
    }
    return "unknown";
}

namespace {

struct sup_point {
    double value = -infinity;
    double order = 0.0;
};

// Maximizes f over [lo, hi] given its values on an increasing grid inside.
// Every discrete local maximum (including the ends) is refined by Brent's
// method on the bracket formed by its grid neighbours.
sup_point bracketed_sup(const std::function<double(double)>& f, const std::vector<double>& grid,
                        const std::vector<double>& values, double lo, double hi)
{
    sup_point best;
    const std::size_t n = grid.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (values[i] > best.value) best = {values[i], grid[i]};
        const bool left = i == 0 || values[i] >= values[i - 1];
        const bool right = i + 1 == n || values[i] >= values[i + 1];
        if (!left || !right) continue;
        const double a = i == 0 ? lo : grid[i - 1];
        const double b = i + 1 == n ? hi : grid[i + 1];
        if (!(b > a)) continue;
        std::uintmax_t iters = 200;
        const auto r = boost::math::tools::brent_find_minima([&](double x) { return -f(x); }, a, b, 40, iters);
        if (-r.second > best.value) best = {-r.second, r.first};
    }
    return best;
}

// Orders below one: a uniform grid refined geometrically toward both ends.
std::vector<double> lower_grid(std::size_t nodes)
{
    std::vector<double> g;
    for (double a : {1e-3, 2e-3, 5e-3}) g.push_back(a);
    for (std::size_t i = 1; i <= nodes; ++i) g.push_back(double(i) / double(nodes + 1));
    for (double a : {1.0 - 5e-3, 1.0 - 1e-3, 1.0 - 1e-4}) g.push_back(a);
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
}

std::vector<double> upper_grid(std::size_t nodes, double alpha_max)
{
    std::vector<double> g;
    for (std::size_t i = 1; i <= nodes; ++i) g.push_back(1.0 + (alpha_max - 1.0) * double(i) / double(nodes));
    return g;
}

// The shared search behind E_sp and its averaged form. `below_only` limits
// the supremum to orders in (0,1).
sp_result search(double rate, const exponent_curve& curve, std::size_t nodes, bool below_only)
{
    require(std::isfinite(rate) && rate >= 0.0, "rate must be a nonnegative real");
    require(nodes >= 64, "the order grid needs at least 64 nodes below one");
    sp_result out;
    out.rate = rate;

    const zero_plus_bracket zp = zero_plus_capacity(curve);
    const curve_point one = curve.at(1.0);
    const double slack = std::max(2.0 * one.gap, 1e-12);

    if (rate < zp.lower) {
        out.regime = sp_regime::infinite;
        out.value = infinity;
        out.upper = infinity;
        out.caveat = "rate lies below the C_{0+} bracket; reported as +inf";
        return out;
    }

    if (rate < one.value - slack || below_only) {
        auto f = [&](double a) { return (1.0 - a) / a * (curve.capacity(a) - rate); };
        const std::vector<double> grid = lower_grid(nodes);
        const auto pts = curve.sample(grid);
        std::vector<double> vals(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = (1.0 - grid[i]) / grid[i] * (pts[i].value - rate);
        sup_point s = bracketed_sup(f, grid, vals, 5e-4, 1.0);
        if (s.value <= 0.0) {
            // The objective tends to 0 as the order tends to one.
            s = {0.0, 1.0};
        }
        out.value = s.value;
        out.upper = s.value;
        out.maximizing_order = s.order;
        if (rate <= zp.upper) {
            out.regime = sp_regime::zero_plus;
            out.caveat = "rate lies inside the C_{0+} bracket; the supremum may be +inf";
        } else {
            out.regime = rate < one.value - slack ? sp_regime::below_capacity : sp_regime::at_capacity;
        }
        return out;
    }

    if (rate <= one.value + slack) {
        out.regime = sp_regime::at_capacity;
        out.value = 0.0;
        out.upper = 0.0;
        out.maximizing_order = 1.0;
        return out;
    }

    const double amax = curve.alpha_max();
    auto f = [&](double a) { return (a - 1.0) / a * (rate - curve.capacity(a)); };
    const std::vector<double> grid = upper_grid(nodes, amax);
    const auto pts = curve.sample(grid);
    std::vector<double> vals(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = (grid[i] - 1.0) / grid[i] * (rate - pts[i].value);
    sup_point s = bracketed_sup(f, grid, vals, 1.0, amax);
    if (s.value < 0.0) s = {0.0, 1.0};
    const double cap_value = pts.back().value;
    out.value = s.value;
    out.maximizing_order = s.order;
    if (rate > cap_value) {
        out.regime = sp_regime::beyond_order_cap;
        out.tail_bound = rate - cap_value;
        out.caveat = "supremum searched on [1, alpha_max]; orders beyond contribute at most tail_bound";
        if (out.tail_bound > out.value) out.maximizing_order.reset();
    } else {
        out.regime = sp_regime::above_capacity;
    }
    out.upper = std::max(out.value, out.tail_bound);
    return out;
}

}  // namespace

sp_result sphere_packing_exponent(double rate, const exponent_curve& curve, std::size_t nodes)
{
    return search(rate, curve, nodes, false);
}

sp_result average_sp_exponent(double eps, double rate, const exponent_curve& curve, std::size_t nodes, double tol)
{
    require(eps > 0.0 && eps < 1.0, "averaging width must lie in (0,1)");
    exponent_curve base = curve;
    auto f = [base, eps, tol](double alpha) {
        if (alpha >= 1.0) return base.at(alpha);
        return curve_point{alpha, average_capacity(alpha, eps, base, default_quadrature_nodes, tol), tol};
    };
    const exponent_curve averaged(f, curve.tol(), curve.alpha_max(), curve.label() + " averaged");
    return search(rate, averaged, nodes, true);
}

sp_result average_sp_exponent(double eps, double rate, const channel& w, double tol)
{
    return average_sp_exponent(eps, rate, exponent_curve(w, std::min(tol, 1e-10)), default_sp_nodes, tol);
}

double order_for_rate(const exponent_curve& curve, double rate, double tol)
{
    require(tol > 0.0, "tolerance must be positive");
    double lo = 1e-3;
    double hi = 1.0;
    const double c_lo = curve.capacity(lo);
    const double c_hi = curve.capacity(hi);
    if (!(rate >= c_lo && rate < c_hi))
        throw precondition_error("rate lies outside the range [C_{0.001}, C_1) of the capacity curve");
    if (rate - c_lo <= tol) return lo;
    double mid = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        mid = 0.5 * (lo + hi);
        const double c = curve.capacity(mid);
        if (std::abs(c - rate) <= tol) return mid;
        (c < rate ? lo : hi) = mid;
        if (hi - lo <= 1e-15) break;
    }
    return mid;
}

// ---------------------------------------------------------------------------
// Haroutunian exponent

namespace {

struct inner_value {
    double value = 0.0;      // min{D(v||W(x)) : D(v||Q) <= R}, +inf if infeasible
    double multiplier = 0.0; // mu = s / (1 - s)
    measure v;
};

// v_s proportional to W^{1-s} Q^s on the common support; D(v_s||Q) decreases
// in s, so s is set by bisection to meet D(v_s||Q) = R.
inner_value inner_min(std::span<const double> wx, const measure& q, double rate)
{
    const std::size_t n = q.size();
    inner_value out;
    double cover = 0.0;
    for (std::size_t y = 0; y < n; ++y)
        if (wx[y] > 0.0) cover += q[y];
    if (cover <= 0.0 || -std::log(cover) > rate) {
        out.value = infinity;
        return out;
    }
    if (renyi_divergence(1.0, wx, q) <= rate) {
        out.v.assign(wx.begin(), wx.end());
        return out;
    }
    // With L = ln W - ln Q on the common support and v = W^{1-s} Q^s / Z:
    //   D(v||Q) = (1-s) <v,L> - ln Z,   D(v||W) = -s <v,L> - ln Z.
    std::vector<double> lw, lq;
    std::vector<std::size_t> idx;
    for (std::size_t y = 0; y < n; ++y) {
        if (wx[y] > 0.0 && q[y] > 0.0) {
            idx.push_back(y);
            lq.push_back(std::log(q[y]));
            lw.push_back(std::log(wx[y]) - lq.back());
        }
    }
    const std::size_t k = idx.size();
    std::vector<double> t(k);
    double mean_l = 0.0;
    double log_z = 0.0;
    auto tilt = [&](double s) {
        double top = -infinity;
        for (std::size_t i = 0; i < k; ++i) {
            t[i] = (1.0 - s) * lw[i] + lq[i];
            top = std::max(top, t[i]);
        }
        double z = 0.0;
        double m = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            t[i] = std::exp(t[i] - top);
            z += t[i];
            m += t[i] * lw[i];
        }
        for (double& v : t) v /= z;
        mean_l = m / z;
        log_z = top + std::log(z);
        return (1.0 - s) * mean_l - log_z;
    };
    double lo = 0.0;
    double hi = 1.0;
    for (int it = 0; it < 200 && hi - lo > 1e-17; ++it) {
        const double s = 0.5 * (lo + hi);
        (tilt(s) > rate ? lo : hi) = s;
    }
    tilt(hi);
    out.v.assign(n, 0.0);
    for (std::size_t i = 0; i < k; ++i) out.v[idx[i]] = t[i];
    out.value = std::max(0.0, -hi * mean_l - log_z);
    out.multiplier = hi < 1.0 ? hi / (1.0 - hi) : infinity;
    return out;
}

struct outer_value {
    double value = infinity;
    std::size_t argmax = 0;
    std::vector<inner_value> parts;
};

outer_value objective(const channel& w, const measure& q, double rate)
{
    outer_value o;
    o.value = -infinity;
    o.parts.resize(w.inputs());
    for (std::size_t x = 0; x < w.inputs(); ++x) {
        o.parts[x] = inner_min(w.row(x), q, rate);
        if (o.parts[x].value > o.value) {
            o.value = o.parts[x].value;
            o.argmax = x;
        }
    }
    return o;
}

// Output measure from the free coordinates z (all but the last); negative
// coordinates are reported through `inside`.
measure from_free(const Eigen::VectorXd& z, bool& inside)
{
    const std::size_t m = std::size_t(z.size());
    measure q(m + 1);
    double s = 0.0;
    inside = true;
    for (std::size_t i = 0; i < m; ++i) {
        q[i] = z(Eigen::Index(i));
        if (q[i] < 0.0) inside = false;
        s += q[i];
    }
    q[m] = 1.0 - s;
    if (q[m] < 0.0) inside = false;
    return q;
}

// Gradient in the free coordinates of a function of Q with gradient gq.
Eigen::VectorXd reduce(const std::vector<double>& gq)
{
    const std::size_t m = gq.size() - 1;
    Eigen::VectorXd g = Eigen::VectorXd::Zero(Eigen::Index(m));
    for (std::size_t i = 0; i < m; ++i) g(Eigen::Index(i)) = gq[i] - gq[m];
    return g;
}

// Pattern search moving mass between pairs of outputs with a shrinking step.
std::pair<double, measure> local_search(const channel& w, measure q, double rate)
{
    double best = objective(w, q, rate).value;
    const std::size_t n = q.size();
    double step = 0.25;
    while (step > 1e-9) {
        bool improved = false;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                const double t = std::min(step, q[j]);
                if (t <= 0.0) continue;
                measure trial = q;
                trial[i] += t;
                trial[j] -= t;
                const double v = objective(w, trial, rate).value;
                if (v < best) {
                    best = v;
                    q.swap(trial);
                    improved = true;
                }
            }
        if (!improved) step *= 0.5;
    }
    return {best, q};
}

}  // namespace

haroutunian_result haroutunian_exponent(double rate, const channel& w, const haroutunian_options& opt)
{
    require(std::isfinite(rate) && rate > 0.0, "rate must be positive");
    require(opt.tol > 0.0, "tolerance must be positive");
    if (w.inputs() > opt.cap || w.outputs() > opt.cap)
        throw cap_exceeded("Haroutunian exponent is limited to channels with at most " + std::to_string(opt.cap) +
                           " inputs and outputs");

    haroutunian_result res;
    res.rate = rate;
    const std::size_t ny = w.outputs();

    auto finish = [&](const measure& q) {
        const outer_value o = objective(w, q, rate);
        res.output = q;
        res.test_channel.clear();
        for (const auto& p : o.parts) res.test_channel.push_back(p.v);
    };

    const capacity_solution c1 = renyi_capacity(1.0, w, 1e-12);
    if (rate >= c1.value) {
        res.value = 0.0;
        res.lower_bound = 0.0;
        res.local_value = 0.0;
        res.certified = true;
        res.output = c1.center;
        res.test_channel = w.rows();
        return res;
    }
    if (ny == 1) {
        // A single output: every channel has capacity zero.
        res.certified = true;
        finish(measure{1.0});
        return res;
    }

    measure start(ny, 1.0 / double(ny));
    if (opt.start) {
        require(opt.start->size() == ny && is_probability(*opt.start), "warm start must be an output distribution");
        start = *opt.start;
    }

    const std::size_t m = ny - 1;
    Eigen::VectorXd c = Eigen::VectorXd::Zero(Eigen::Index(m));
    for (std::size_t i = 0; i < m; ++i) c(Eigen::Index(i)) = start[i];
    // Any two distributions are within sqrt(2) in the free coordinates.
    Eigen::MatrixXd shape = Eigen::MatrixXd::Identity(Eigen::Index(m), Eigen::Index(m)) * 2.0;
    double lo1 = 0.0, hi1 = 1.0;  // the interval used when there is one free coordinate

    double best = infinity;
    measure best_q = start;
    double lower = 0.0;
    const double bound_r = std::exp(-rate);

    for (std::size_t it = 0; it < opt.max_iterations; ++it) {
        ++res.iterations;
        if (m == 1) c(0) = 0.5 * (lo1 + hi1);
        bool inside = false;
        const measure q = from_free(c, inside);
        Eigen::VectorXd g;
        bool objective_cut = false;
        double fval = infinity;

        if (!inside) {
            std::vector<double> gq(ny, 0.0);
            std::size_t worst = 0;
            for (std::size_t y = 0; y < ny; ++y)
                if (q[y] < q[worst]) worst = y;
            gq[worst] = -1.0;
            g = reduce(gq);
        } else {
            // Feasibility: each row's support must carry mass at least e^{-R}.
            std::size_t violated = w.inputs();
            double deficit = 0.0;
            for (std::size_t x = 0; x < w.inputs(); ++x) {
                double cover = 0.0;
                for (std::size_t y = 0; y < ny; ++y)
                    if (w(x, y) > 0.0) cover += q[y];
                if (bound_r - cover > deficit) {
                    deficit = bound_r - cover;
                    violated = x;
                }
            }
            if (violated < w.inputs()) {
                std::vector<double> gq(ny, 0.0);
                for (std::size_t y = 0; y < ny; ++y)
                    if (w(violated, y) > 0.0) gq[y] = -1.0;
                g = reduce(gq);
            } else {
                const outer_value o = objective(w, q, rate);
                fval = o.value;
                if (fval < best) {
                    best = fval;
                    best_q = q;
                }
                const inner_value& top = o.parts[o.argmax];
                std::vector<double> gq(ny, 0.0);
                if (std::isfinite(top.multiplier))
                    for (std::size_t y = 0; y < ny; ++y)
                        if (q[y] > 0.0) gq[y] = -top.multiplier * top.v[y] / q[y];
                g = reduce(gq);
                objective_cut = true;
                if (g.norm() == 0.0) {
                    // Zero subgradient: q is optimal.
                    lower = std::max(lower, fval);
                    break;
                }
            }
        }

        if (m == 1) {
            const double width = hi1 - lo1;
            if (objective_cut) lower = std::max(lower, fval - std::abs(g(0)) * width / 2.0);
            (g(0) > 0.0 ? hi1 : lo1) = c(0);
            if (best - lower <= opt.tol || hi1 - lo1 < 1e-16) break;
            continue;
        }

        const Eigen::VectorXd pg = shape * g;
        const double gpg = g.dot(pg);
        if (!(gpg > 0.0)) break;
        const double root = std::sqrt(gpg);
        if (objective_cut) lower = std::max(lower, fval - root);
        if (best - lower <= opt.tol) break;
        const double dm = double(m);
        const Eigen::VectorXd b = pg / root;
        c -= b / (dm + 1.0);
        shape = dm * dm / (dm * dm - 1.0) * (shape - 2.0 / (dm + 1.0) * b * b.transpose());
        shape = 0.5 * (shape + shape.transpose());
    }

    if (!std::isfinite(best)) {
        // No output measure met the support constraints: no channel V with
        // C_1(V) <= R is absolutely continuous row by row.
        res.value = infinity;
        res.lower_bound = lower;
        res.local_value = infinity;
        res.certified = false;
        res.output = best_q;
        return res;
    }

    // Random-restart local search from the cutting-plane optimum and from
    // Dirichlet draws. It can only polish the optimum; a value below the
    // certified lower bound would expose a failure of the cutting-plane run.
    std::vector<std::pair<double, measure>> local(opt.restarts + 1);
    parallel_for(local.size(), [&](std::size_t k) {
        measure q0 = best_q;
        if (k > 0) {
            rng g = substream(opt.seed, k);
            q0 = dirichlet(g, ny);
        }
        local[k] = local_search(w, q0, rate);
    });
    const auto top = std::min_element(local.begin(), local.end(),
                                      [](const auto& a, const auto& b) { return a.first < b.first; });
    res.local_value = top->first;
    if (top->first < best) {
        best = top->first;
        best_q = top->second;
    }
    res.value = best;
    res.lower_bound = std::min(lower, best);
    finish(best_q);
    res.certified = best - res.lower_bound <= opt.tol && res.local_value >= lower - 1e-12 * (1.0 + lower);
    return res;
}

}  // namespace renyi
