#include "renyi/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "renyi/errors.hpp"

namespace renyi {

order_class classify_order(double alpha)
{
    require(std::isfinite(alpha) && alpha > 0.0, "order must be a positive real");
    if (alpha == 1.0) return order_class::one;
    return alpha < 1.0 ? order_class::sub_one : order_class::super_one;
}

void check_finite_measure(std::span<const double> w)
{
    require(!w.empty(), "measure must have at least one outcome");
    bool positive = false;
    for (double x : w) {
        require(std::isfinite(x) && x >= 0.0, "measure weights must be finite and nonnegative");
        positive = positive || x > 0.0;
    }
    require(positive, "measure must be non-zero");
}

measure normalized(std::span<const double> w)
{
    check_finite_measure(w);
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    measure out(w.begin(), w.end());
    for (double& x : out) x /= total;
    return out;
}

bool is_probability(std::span<const double> w)
{
    return std::abs(std::accumulate(w.begin(), w.end(), 0.0) - 1.0) <= 1e-12;
}

namespace {

double kl(std::span<const double> w, std::span<const double> q)
{
    double s = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0.0) continue;
        if (q[i] == 0.0) return infinity;
        s += w[i] * (std::log(w[i]) - std::log(q[i]));
    }
    return s;
}

// Near alpha = 1 the log-sum-exp loses relative precision; expanding around
// one keeps the ratio ln(sum)/(alpha-1) accurate.
double near_one(double alpha, std::span<const double> w, std::span<const double> q)
{
    const double a1 = alpha - 1.0;
    double s = 0.0;
    double mass = 0.0;
    bool common = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
        mass += w[i];
        if (w[i] == 0.0) continue;
        if (q[i] == 0.0) {
            s -= w[i];
            continue;
        }
        common = true;
        s += w[i] * std::expm1(a1 * (std::log(w[i]) - std::log(q[i])));
    }
    if (!common) return infinity;
    s += mass - 1.0;
    if (s <= -1.0) return infinity;
    return std::log1p(s) / a1;
}

}  // namespace

double renyi_divergence(double alpha, std::span<const double> w, std::span<const double> q)
{
    const order_class kind = classify_order(alpha);
    require(w.size() == q.size(), "divergence arguments must share an outcome set");
    check_finite_measure(w);
    check_finite_measure(q);

    if (kind == order_class::one) return kl(w, q);

    if (kind == order_class::super_one) {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] > 0.0 && q[i] == 0.0) return infinity;
    }
    if (std::abs(alpha - 1.0) < 1e-2) return near_one(alpha, w, q);

    double top = -infinity;
    std::vector<double> terms;
    terms.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] > 0.0 && q[i] > 0.0) {
            terms.push_back(alpha * std::log(w[i]) + (1.0 - alpha) * std::log(q[i]));
            top = std::max(top, terms.back());
        }
    }
    if (terms.empty()) return infinity;
    double s = 0.0;
    for (double t : terms) s += std::exp(t - top);
    return (top + std::log(s)) / (alpha - 1.0);
}

double binary_divergence(double alpha, double a, double b)
{
    const order_class kind = classify_order(alpha);
    require(a >= 0.0 && a <= 1.0 && b >= 0.0 && b <= 1.0, "binary divergence arguments must lie in [0,1]");

    if (kind == order_class::one) {
        auto term = [](double x, double y) {
            if (x == 0.0) return 0.0;
            if (y == 0.0) return infinity;
            return x * std::log(x / y);
        };
        return term(a, b) + term(1.0 - a, 1.0 - b);
    }
    auto term = [alpha](double x, double y) {
        if (x == 0.0) return 0.0;
        if (y == 0.0) return alpha < 1.0 ? 0.0 : infinity;
        return std::pow(x, alpha) * std::pow(y, 1.0 - alpha);
    };
    const double s = term(a, b) + term(1.0 - a, 1.0 - b);
    if (std::isinf(s) || s == 0.0) return infinity;
    return std::log(s) / (alpha - 1.0);
}

measure tilted_measure(double alpha, std::span<const double> w, std::span<const double> q)
{
    require(std::isfinite(alpha) && alpha > 0.0 && alpha < 1.0, "tilting order must lie in (0,1)");
    require(w.size() == q.size(), "tilting arguments must share an outcome set");
    check_finite_measure(w);
    check_finite_measure(q);
    require(is_probability(w) && is_probability(q), "tilting is defined for probability measures");

    measure out(w.size(), 0.0);
    double top = -infinity;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] > 0.0 && q[i] > 0.0) {
            out[i] = alpha * std::log(w[i]) + (1.0 - alpha) * std::log(q[i]);
            top = std::max(top, out[i]);
        }
    }
    require(std::isfinite(top), "tilting requires a finite divergence (overlapping supports)");
    double s = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] > 0.0 && q[i] > 0.0) {
            out[i] = std::exp(out[i] - top);
            s += out[i];
        } else {
            out[i] = 0.0;
        }
    }
    for (double& x : out) x /= s;
    return out;
}

double total_variation(std::span<const double> w, std::span<const double> q)
{
    require(w.size() == q.size(), "total variation arguments must share an outcome set");
    double s = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) s += std::abs(w[i] - q[i]);
    return s;
}

}  // namespace renyi
