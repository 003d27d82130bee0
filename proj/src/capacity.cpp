#include "renyi/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include <Eigen/Dense>
#include <boost/math/special_functions/legendre.hpp>

#include "renyi/errors.hpp"
#include "renyi/parallel.hpp"

namespace renyi {

double renyi_radius(double alpha, const channel& w, std::span<const double> q)
{
    require(q.size() == w.outputs(), "output measure size must match the channel's outputs");
    double r = -infinity;
    for (std::size_t x = 0; x < w.inputs(); ++x) r = std::max(r, renyi_divergence(alpha, w.row(x), q));
    return r;
}

namespace {

// Evaluates, for a prior P, the Rényi mean q_{alpha,P}, the per-input
// divergences D_alpha(W(x) || q_{alpha,P}) and I_alpha(P;W).
class prior_evaluator {
public:
    prior_evaluator(double alpha, const channel& w) : alpha_(alpha), w_(w)
    {
        if (alpha_ != 1.0) {
            powered_.resize(w.entries().size());
            for (std::size_t i = 0; i < powered_.size(); ++i) powered_[i] = std::pow(w.entries()[i], alpha_);
        }
        q_.resize(w.outputs());
        d_.resize(w.inputs());
    }

    void evaluate(const std::vector<double>& p)
    {
        const std::size_t nx = w_.inputs();
        const std::size_t ny = w_.outputs();
        std::fill(q_.begin(), q_.end(), 0.0);
        if (alpha_ == 1.0) {
            for (std::size_t x = 0; x < nx; ++x)
                for (std::size_t y = 0; y < ny; ++y) q_[y] += p[x] * w_(x, y);
            double s = std::accumulate(q_.begin(), q_.end(), 0.0);
            for (double& v : q_) v /= s;
            primal_ = 0.0;
            for (std::size_t x = 0; x < nx; ++x) {
                d_[x] = renyi_divergence(1.0, w_.row(x), q_);
                primal_ += p[x] * d_[x];
            }
            return;
        }
        for (std::size_t x = 0; x < nx; ++x) {
            if (p[x] == 0.0) continue;
            const double* row = powered_.data() + x * ny;
            for (std::size_t y = 0; y < ny; ++y) q_[y] += p[x] * row[y];
        }
        // q_y proportional to g_y^{1/alpha}, formed in the log domain so small
        // orders do not underflow.
        double top = -infinity;
        for (double& v : q_) {
            v = v > 0.0 ? std::log(v) / alpha_ : -infinity;
            top = std::max(top, v);
        }
        double s = 0.0;
        for (double& v : q_) {
            v = std::exp(v - top);
            s += v;
        }
        for (double& v : q_) v /= s;

        const bool near_one = std::abs(alpha_ - 1.0) < 1e-2;
        if (near_one) {
            for (std::size_t x = 0; x < nx; ++x) d_[x] = renyi_divergence(alpha_, w_.row(x), q_);
        } else {
            qpow_.resize(ny);
            for (std::size_t y = 0; y < ny; ++y) qpow_[y] = q_[y] > 0.0 ? std::pow(q_[y], 1.0 - alpha_) : 0.0;
            for (std::size_t x = 0; x < nx; ++x) {
                const double* row = powered_.data() + x * ny;
                double t = 0.0;
                bool inf = false;
                for (std::size_t y = 0; y < ny; ++y) {
                    if (row[y] == 0.0) continue;
                    if (q_[y] == 0.0) {
                        if (alpha_ > 1.0) inf = true;
                        continue;
                    }
                    t += row[y] * qpow_[y];
                }
                d_[x] = inf || t == 0.0 ? infinity : std::log(t) / (alpha_ - 1.0);
            }
        }
        // I_alpha(P;W) = ln(sum_x P(x) e^{(a-1) D_x}) / (a-1) when q = q_{alpha,P}.
        const double a1 = alpha_ - 1.0;
        double acc = 0.0;
        for (std::size_t x = 0; x < nx; ++x)
            if (p[x] > 0.0) acc += p[x] * std::expm1(a1 * d_[x]);
        primal_ = std::log1p(acc) / a1;
    }

    const measure& mean() const { return q_; }
    const std::vector<double>& divergences() const { return d_; }
    double primal() const { return primal_; }
    double dual() const { return *std::max_element(d_.begin(), d_.end()); }

private:
    double alpha_;
    const channel& w_;
    std::vector<double> powered_;
    std::vector<double> qpow_;
    measure q_;
    std::vector<double> d_;
    double primal_ = 0.0;
};

struct run_result {
    double best_primal = -infinity;
    double best_dual = infinity;
    measure prior;
    measure center;
    std::size_t iterations = 0;

    void record(const prior_evaluator& ev, const std::vector<double>& p)
    {
        if (ev.primal() > best_primal) {
            best_primal = ev.primal();
            prior = p;
        }
        if (ev.dual() < best_dual) {
            best_dual = ev.dual();
            center = ev.mean();
        }
    }
    double gap() const { return best_dual - best_primal; }
};

// Multiplicative ascent P(x) <- P(x) exp(s D_x) with an adaptive step; the step
// halves whenever I_alpha would decrease. Stops at the target gap, when the
// step collapses, or after `budget` iterations. Returns the last prior.
std::vector<double> ascend(prior_evaluator& ev, std::vector<double> p, double target, std::size_t budget,
                           run_result& r)
{
    ev.evaluate(p);
    r.record(ev, p);
    double step = 1.0;
    double current = ev.primal();
    std::vector<double> trial(p.size());
    const std::size_t nx = p.size();
    for (std::size_t it = 0; it < budget; ++it) {
        ++r.iterations;
        if (r.gap() <= target) break;
        const std::vector<double> d = ev.divergences();
        const double top = *std::max_element(d.begin(), d.end());
        double s = 0.0;
        for (std::size_t x = 0; x < nx; ++x) {
            trial[x] = std::max(p[x] * std::exp(step * (d[x] - top)), 1e-300);
            s += trial[x];
        }
        for (double& v : trial) v /= s;
        ev.evaluate(trial);
        if (ev.primal() >= current - 1e-14 * (1.0 + std::abs(current))) {
            current = std::max(current, ev.primal());
            p.swap(trial);
            r.record(ev, p);
            step = std::min(step * 1.5, 1e6);
        } else {
            step *= 0.5;
            ev.evaluate(p);
            if (step < 1e-12) break;
        }
    }
    return p;
}

// Active-set Newton iteration. For alpha < 1 the prior problem is the
// minimization of the convex S(P) = sum_y (sum_x P(x) W(y|x)^alpha)^{1/alpha},
// for alpha > 1 the maximization of the concave S, and for alpha = 1 the
// maximization of the concave mutual information. In every case the reduced
// Newton system reads
//   M d + lambda 1 = r,  1'd = 0,
//   M(x,z) = sum_y q(y) a(x,y) a(z,y) / g(y)^2,   g = sum_x P(x) a(x,.),
//   r(x)   = alpha expm1((alpha-1)(D_x - I)) / (alpha - 1)   (D_x - I at one),
// with a = W^alpha and q the Rényi mean of P.
void polish(double alpha, const channel& w, prior_evaluator& ev, std::vector<double> p, double target,
            run_result& r)
{
    const std::size_t nx = w.inputs();
    const std::size_t ny = w.outputs();
    std::vector<double> a(w.entries().size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = alpha == 1.0 ? w.entries()[i] : std::pow(w.entries()[i], alpha);

    double top_p = *std::max_element(p.begin(), p.end());
    std::vector<char> active(nx, 0);
    for (std::size_t x = 0; x < nx; ++x) active[x] = p[x] > 1e-9 * top_p;
    for (std::size_t x = 0; x < nx; ++x)
        if (!active[x]) p[x] = 0.0;
    {
        const double s = std::accumulate(p.begin(), p.end(), 0.0);
        for (double& v : p) v /= s;
    }
    ev.evaluate(p);
    r.record(ev, p);
    double point_gap = ev.dual() - ev.primal();

    for (int round = 0; round < 60 && r.gap() > target; ++round) {
        ++r.iterations;
        const std::vector<double> d = ev.divergences();
        const measure q = ev.mean();
        const double info = ev.primal();

        std::vector<std::size_t> act;
        for (std::size_t x = 0; x < nx; ++x)
            if (active[x]) act.push_back(x);
        const std::size_t k = act.size();

        std::vector<double> g(ny, 0.0);
        for (std::size_t x = 0; x < nx; ++x)
            if (p[x] > 0.0)
                for (std::size_t y = 0; y < ny; ++y) g[y] += p[x] * a[x * ny + y];

        Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(Eigen::Index(k + 1), Eigen::Index(k + 1));
        Eigen::VectorXd rhs = Eigen::VectorXd::Zero(Eigen::Index(k + 1));
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = i; j < k; ++j) {
                double m = 0.0;
                for (std::size_t y = 0; y < ny; ++y)
                    if (g[y] > 0.0) m += q[y] * a[act[i] * ny + y] * a[act[j] * ny + y] / (g[y] * g[y]);
                kkt(Eigen::Index(i), Eigen::Index(j)) = m;
                kkt(Eigen::Index(j), Eigen::Index(i)) = m;
            }
            kkt(Eigen::Index(i), Eigen::Index(k)) = 1.0;
            kkt(Eigen::Index(k), Eigen::Index(i)) = 1.0;
            const double dev = d[act[i]] - info;
            rhs(Eigen::Index(i)) = alpha == 1.0 ? dev : alpha * std::expm1((alpha - 1.0) * dev) / (alpha - 1.0);
        }
        const Eigen::VectorXd delta = kkt.completeOrthogonalDecomposition().solve(rhs);

        // Ratio test: stop at the boundary of the simplex and release the
        // blocking input from the active set.
        double theta = 1.0;
        std::size_t blocking = nx;
        for (std::size_t i = 0; i < k; ++i) {
            const double di = delta(Eigen::Index(i));
            if (di < 0.0 && p[act[i]] + di < 0.0) {
                const double t = p[act[i]] / -di;
                if (t < theta) {
                    theta = t;
                    blocking = act[i];
                }
            }
        }
        bool moved = false;
        for (int back = 0; back < 30; ++back, theta *= 0.5) {
            std::vector<double> next = p;
            for (std::size_t i = 0; i < k; ++i) next[act[i]] = std::max(p[act[i]] + theta * delta(Eigen::Index(i)), 0.0);
            if (blocking < nx && back == 0) next[blocking] = 0.0;
            const double s = std::accumulate(next.begin(), next.end(), 0.0);
            for (double& v : next) v /= s;
            ev.evaluate(next);
            const double gnext = ev.dual() - ev.primal();
            if (ev.primal() > info || gnext < point_gap) {
                r.record(ev, next);
                point_gap = gnext;
                p.swap(next);
                if (back == 0 && blocking < nx) active[blocking] = 0;
                moved = true;
                break;
            }
        }
        if (!moved) ev.evaluate(p);

        // Release inputs pinned at zero whose divergence exceeds the current
        // Rényi information: the optimality conditions require them back.
        const std::vector<double> dn = ev.divergences();
        std::size_t best = nx;
        double excess = 1e-14;
        for (std::size_t x = 0; x < nx; ++x) {
            if (active[x]) continue;
            const double e = dn[x] - ev.primal();
            if (e > excess) {
                excess = e;
                best = x;
            }
        }
        if (best < nx) {
            active[best] = 1;
            p[best] = 0.0;
            continue;
        }
        if (moved) continue;
        // No progress: drop the active input lying furthest below the
        // information, whose weight the optimum cannot keep positive.
        std::size_t worst = nx;
        double deficit = -1e-14;
        for (std::size_t x = 0; x < nx; ++x) {
            if (!active[x]) continue;
            const double e = dn[x] - ev.primal();
            if (e < deficit) {
                deficit = e;
                worst = x;
            }
        }
        if (worst == nx || k <= 1) return;
        active[worst] = 0;
        p[worst] = 0.0;
        const double s = std::accumulate(p.begin(), p.end(), 0.0);
        for (double& v : p) v /= s;
        ev.evaluate(p);
        r.record(ev, p);
        point_gap = ev.dual() - ev.primal();
    }
}

void solve_from(double alpha, const channel& w, std::vector<double> p, const capacity_options& opt, run_result& r)
{
    prior_evaluator ev(alpha, w);
    const std::size_t warm = std::min<std::size_t>(opt.max_iterations, 3000);
    p = ascend(ev, std::move(p), std::max(opt.tol, 1e-7), warm, r);
    if (r.gap() <= opt.tol) return;
    polish(alpha, w, ev, p, opt.tol, r);
    if (r.gap() <= opt.tol) return;
    p = ascend(ev, std::move(p), opt.tol, opt.max_iterations - warm, r);
    polish(alpha, w, ev, p, opt.tol, r);
}

}  // namespace

capacity_solution renyi_capacity(double alpha, const channel& w, const capacity_options& opt)
{
    classify_order(alpha);
    require(opt.tol > 0.0, "capacity tolerance must be positive");

    run_result r;
    solve_from(alpha, w, std::vector<double>(w.inputs(), 1.0 / double(w.inputs())), opt, r);
    bool fallback = false;
    if (r.best_dual - r.best_primal > opt.tol) {
        fallback = true;
        for (std::size_t k = 0; k < opt.restarts; ++k) {
            rng g = substream(opt.seed, k);
            solve_from(alpha, w, dirichlet(g, w.inputs()), opt, r);
            if (r.best_dual - r.best_primal <= opt.tol) break;
        }
    }

    capacity_solution s;
    s.order = alpha;
    // Capacities are nonnegative; rounding can push both sides just below 0.
    s.primal = std::max(r.best_primal, 0.0);
    s.value = std::max(r.best_dual, s.primal);
    s.center = r.center;
    s.prior = r.prior;
    s.duality_gap = s.value - s.primal;
    s.iterations = r.iterations;
    s.converged = s.duality_gap <= opt.tol;
    s.used_fallback = fallback;
    return s;
}

capacity_solution renyi_capacity(double alpha, const channel& w, double tol)
{
    capacity_options opt;
    opt.tol = tol;
    return renyi_capacity(alpha, w, opt);
}

ehb_result ehb_certificate(double alpha, const channel& w, std::span<const double> q, double tol)
{
    const capacity_solution s = renyi_capacity(alpha, w, tol);
    if (!s.converged) throw solver_error("capacity solver did not reach the requested tolerance");
    ehb_result e;
    e.capacity = s.value;
    e.center_divergence = renyi_divergence(alpha, s.center, q);
    e.radius = renyi_radius(alpha, w, q);
    e.slack = e.radius - e.capacity - e.center_divergence;
    return e;
}

// ---------------------------------------------------------------------------

struct exponent_curve::cache {
    std::mutex lock;
    std::map<double, curve_point> memo;
};

exponent_curve::exponent_curve(const channel& w, double tol, double alpha_max)
    : tol_(tol), alpha_max_(alpha_max), label_("channel"), source_(std::make_shared<const channel>(w)),
      cache_(std::make_shared<cache>())
{
    require(alpha_max > 1.0, "alpha_max must exceed one");
    std::shared_ptr<const channel> src = source_;
    f_ = [src, tol](double alpha) {
        const capacity_solution s = renyi_capacity(alpha, *src, tol);
        return curve_point{alpha, s.value, s.duality_gap};
    };
}

exponent_curve::exponent_curve(evaluator f, double tol, double alpha_max, std::string label)
    : f_(std::move(f)), tol_(tol), alpha_max_(alpha_max), label_(std::move(label)), cache_(std::make_shared<cache>())
{
    require(alpha_max > 1.0, "alpha_max must exceed one");
}

curve_point exponent_curve::at(double alpha) const
{
    classify_order(alpha);
    {
        std::lock_guard<std::mutex> g(cache_->lock);
        auto it = cache_->memo.find(alpha);
        if (it != cache_->memo.end()) return it->second;
    }
    const curve_point p = f_(alpha);
    std::lock_guard<std::mutex> g(cache_->lock);
    cache_->memo.emplace(alpha, p);
    return p;
}

std::vector<curve_point> exponent_curve::sample(std::span<const double> orders) const
{
    std::vector<curve_point> out(orders.size());
    parallel_for(orders.size(), [&](std::size_t i) { out[i] = at(orders[i]); });
    return out;
}

exponent_curve exponent_curve::sum(const std::vector<exponent_curve>& parts)
{
    require(!parts.empty(), "sum of an empty curve list");
    double tol = 0.0;
    double amax = parts.front().alpha_max();
    for (const auto& c : parts) {
        tol += c.tol();
        amax = std::min(amax, c.alpha_max());
    }
    auto f = [parts](double alpha) {
        curve_point p{alpha, 0.0, 0.0};
        for (const auto& c : parts) {
            const curve_point q = c.at(alpha);
            p.value += q.value;
            p.gap += q.gap;
        }
        return p;
    };
    return exponent_curve(f, tol, amax, "sum");
}

exponent_curve exponent_curve::scaled(double n) const
{
    exponent_curve base = *this;
    auto f = [base, n](double alpha) {
        const curve_point q = base.at(alpha);
        return curve_point{alpha, n * q.value, n * q.gap};
    };
    return exponent_curve(f, n * tol_, alpha_max_, label_ + " x" + std::to_string(n));
}

std::vector<double> order_grid(std::size_t n_below_one, std::size_t n_above_one, double alpha_max)
{
    std::vector<double> g;
    for (std::size_t i = 1; i <= n_below_one; ++i) g.push_back(double(i) / double(n_below_one + 1));
    for (std::size_t j = 1; j <= n_above_one; ++j)
        g.push_back(1.0 + (alpha_max - 1.0) * double(j) / double(n_above_one));
    return g;
}

curve_report capacity_curve(const exponent_curve& curve, std::span<const double> orders)
{
    for (std::size_t i = 0; i < orders.size(); ++i) {
        require(orders[i] > 0.0 && orders[i] <= curve.alpha_max(), "curve orders must lie in (0, alpha_max]");
        if (i > 0) require(orders[i] > orders[i - 1], "curve orders must be strictly increasing");
    }
    curve_report rep;
    rep.points = curve.sample(orders);
    const auto& pts = rep.points;
    auto flag = [&](const std::string& what, double a) {
        std::ostringstream os;
        os.precision(12);
        os << what << " at order " << a;
        rep.violations.push_back(os.str());
    };
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const double slack = 2.0 * (pts[i].gap + pts[i - 1].gap) + 1e-12;
        if (pts[i].value < pts[i - 1].value - slack) flag("capacity decreased", pts[i].order);
        const double a0 = pts[i - 1].order;
        const double a1 = pts[i].order;
        if (a1 < 1.0) {
            const double r0 = (1.0 - a0) / a0 * pts[i - 1].value;
            const double r1 = (1.0 - a1) / a1 * pts[i].value;
            if (r1 > r0 + slack * (1.0 - a0) / a0) flag("(1-a)/a C_a increased", a1);
        }
    }
    bool has_half = false;
    curve_point half{};
    for (const auto& p : pts) {
        if (p.order < 1.0) {
            if (!has_half) {
                half = curve.at(0.5);
                has_half = true;
            }
            const double a = p.order;
            const double lo = std::min(a, 1.0 - a) / (1.0 - a) * half.value;
            const double hi = std::max(a, 1.0 - a) / (1.0 - a) * half.value;
            const double slack = 2.0 * (p.gap + half.gap) / (1.0 - a) + 1e-12;
            if (p.value < lo - slack || p.value > hi + slack) flag("order one-half sandwich violated", a);
        }
    }
    return rep;
}

zero_plus_bracket zero_plus_capacity(const exponent_curve& curve)
{
    const double c1 = curve.capacity(1e-3);
    const double c2 = curve.capacity(5e-4);
    zero_plus_bracket b;
    b.upper = c2;
    b.estimate = std::max(0.0, 2.0 * c2 - c1);
    b.lower = std::max(0.0, b.estimate - std::abs(c1 - c2));
    return b;
}

// ---------------------------------------------------------------------------

void gauss_legendre(std::size_t n, double a, double b, std::vector<double>& nodes, std::vector<double>& weights)
{
    require(n >= 1, "quadrature needs at least one node");
    nodes.clear();
    weights.clear();
    const auto zeros = boost::math::legendre_p_zeros<double>(int(n));
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    auto push = [&](double x) {
        const double dp = boost::math::legendre_p_prime<double>(int(n), x);
        const double wt = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes.push_back(mid + half * x);
        weights.push_back(half * wt);
    };
    for (auto it = zeros.rbegin(); it != zeros.rend(); ++it)
        if (*it != 0.0) push(-*it);
    for (double z : zeros) push(z);
}

namespace {

void check_window(double alpha, double eps)
{
    require(alpha > 0.0 && alpha < 1.0, "averaging order must lie in (0,1)");
    require(eps > 0.0 && eps < 1.0, "averaging width must lie in (0,1)");
}

// Composite rule on [alpha - eps alpha, alpha] and [alpha, alpha + eps (1 - alpha)],
// `nodes` split evenly across the halves, weights normalized by eps.
void window_rule(double alpha, double eps, std::size_t nodes, std::vector<double>& x, std::vector<double>& wt)
{
    const std::size_t per = std::max<std::size_t>(1, nodes / 2);
    std::vector<double> x1, w1, x2, w2;
    gauss_legendre(per, alpha - eps * alpha, alpha, x1, w1);
    gauss_legendre(per, alpha, alpha + eps * (1.0 - alpha), x2, w2);
    x = x1;
    x.insert(x.end(), x2.begin(), x2.end());
    wt = w1;
    wt.insert(wt.end(), w2.begin(), w2.end());
    for (double& v : wt) v /= eps;
}

constexpr std::size_t max_quadrature_nodes = 1024;

}  // namespace

averaged_center average_center(double alpha, double eps, const channel& w, std::size_t nodes, double tol)
{
    check_window(alpha, eps);
    require(nodes >= 1, "quadrature needs at least one node");
    auto compute = [&](std::size_t n, averaged_center& out) {
        window_rule(alpha, eps, n, out.node_orders, out.node_weights);
        std::vector<measure> centers(out.node_orders.size());
        parallel_for(centers.size(), [&](std::size_t i) {
            const capacity_solution s = renyi_capacity(out.node_orders[i], w, std::min(tol, 1e-10));
            centers[i] = s.center;
        });
        out.center.assign(w.outputs(), 0.0);
        for (std::size_t i = 0; i < centers.size(); ++i)
            for (std::size_t y = 0; y < w.outputs(); ++y) out.center[y] += out.node_weights[i] * centers[i][y];
        out.center = normalized(out.center);
        const double total = std::accumulate(out.node_weights.begin(), out.node_weights.end(), 0.0);
        for (double& v : out.node_weights) v /= total;
    };
    averaged_center cur;
    cur.order = alpha;
    cur.width = eps;
    compute(nodes, cur);
    for (std::size_t n = nodes * 2; n <= max_quadrature_nodes; n *= 2) {
        averaged_center next;
        next.order = alpha;
        next.width = eps;
        compute(n, next);
        const double change = total_variation(cur.center, next.center);
        cur = std::move(next);
        if (change < tol) return cur;
    }
    throw solver_error("averaged center quadrature did not settle within the node cap");
}

double average_capacity(double alpha, double eps, const exponent_curve& curve, std::size_t nodes, double tol)
{
    check_window(alpha, eps);
    require(nodes >= 1, "quadrature needs at least one node");
    auto compute = [&](std::size_t n) {
        std::vector<double> x, wt;
        window_rule(alpha, eps, n, x, wt);
        const auto pts = curve.sample(x);
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double b = x[i];
            const double factor = std::max(1.0, alpha * (1.0 - b) / ((1.0 - alpha) * b));
            s += wt[i] * factor * pts[i].value;
        }
        return s;
    };
    double cur = compute(nodes);
    for (std::size_t n = nodes * 2; n <= max_quadrature_nodes; n *= 2) {
        const double next = compute(n);
        const double change = std::abs(next - cur);
        cur = next;
        // Each sampled capacity carries a solver error of order curve.tol().
        if (change < (tol + 4.0 * curve.tol()) * std::max(1.0, std::abs(cur))) return cur;
    }
    throw solver_error("averaged capacity quadrature did not settle within the node cap");
}

double average_capacity(double alpha, double eps, const channel& w, double tol)
{
    return average_capacity(alpha, eps, exponent_curve(w, std::min(tol, 1e-10)), default_quadrature_nodes, tol);
}

}  // namespace renyi
