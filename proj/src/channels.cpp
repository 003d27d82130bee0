#include "renyi/channels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "renyi/errors.hpp"

namespace renyi {

channel::channel(std::size_t inputs, std::size_t outputs, std::vector<double> entries)
    : inputs_(inputs), outputs_(outputs), entries_(std::move(entries))
{
    require(inputs > 0 && outputs > 0, "channel needs at least one input and one output");
    require(entries_.size() == inputs * outputs, "channel entry count must equal inputs x outputs");
    for (std::size_t x = 0; x < inputs_; ++x) {
        const auto r = row(x);
        for (double v : r) require(std::isfinite(v) && v >= 0.0, "channel entries must be nonnegative");
        require(is_probability(r), "channel row " + std::to_string(x) + " must sum to one");
    }
}

channel channel::from_rows(const std::vector<measure>& rows)
{
    require(!rows.empty(), "channel needs at least one row");
    const std::size_t m = rows.front().size();
    std::vector<double> entries;
    entries.reserve(rows.size() * m);
    for (const auto& r : rows) {
        require(r.size() == m, "channel rows must share an output alphabet");
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return channel(rows.size(), m, std::move(entries));
}

std::vector<measure> channel::rows() const
{
    std::vector<measure> out;
    out.reserve(inputs_);
    for (std::size_t x = 0; x < inputs_; ++x) out.emplace_back(row(x).begin(), row(x).end());
    return out;
}

channel binary_symmetric(double p)
{
    require(p >= 0.0 && p <= 1.0, "crossover probability must lie in [0,1]");
    return channel(2, 2, {1.0 - p, p, p, 1.0 - p});
}

channel binary_erasure(double e)
{
    require(e >= 0.0 && e <= 1.0, "erasure probability must lie in [0,1]");
    return channel(2, 3, {1.0 - e, e, 0.0, 0.0, e, 1.0 - e});
}

channel haroutunian_example() { return channel(2, 2, {0.5, 0.5, 0.0, 1.0}); }

void check_input_distribution(std::span<const double> p, const channel& w)
{
    require(p.size() == w.inputs(), "input distribution size must match the channel's inputs");
    check_finite_measure(p);
    require(is_probability(p), "input distribution must sum to one");
}

namespace {

double log_sum_exp(const std::vector<double>& t)
{
    double top = -infinity;
    for (double v : t) top = std::max(top, v);
    if (!std::isfinite(top)) return top;
    double s = 0.0;
    for (double v : t) s += std::exp(v - top);
    return top + std::log(s);
}

// ln sum_x P(x) W(y|x)^alpha for each y; -inf where the sum vanishes.
std::vector<double> log_moment(double alpha, std::span<const double> p, const channel& w)
{
    std::vector<double> out(w.outputs(), -infinity);
    std::vector<double> terms;
    for (std::size_t y = 0; y < w.outputs(); ++y) {
        terms.clear();
        for (std::size_t x = 0; x < w.inputs(); ++x) {
            if (p[x] > 0.0 && w(x, y) > 0.0) terms.push_back(std::log(p[x]) + alpha * std::log(w(x, y)));
        }
        if (!terms.empty()) out[y] = log_sum_exp(terms);
    }
    return out;
}

measure mixture(std::span<const double> p, const channel& w)
{
    measure q(w.outputs(), 0.0);
    for (std::size_t x = 0; x < w.inputs(); ++x) {
        if (p[x] == 0.0) continue;
        for (std::size_t y = 0; y < w.outputs(); ++y) q[y] += p[x] * w(x, y);
    }
    return q;
}

}  // namespace

double renyi_information(double alpha, std::span<const double> p, const channel& w)
{
    const order_class kind = classify_order(alpha);
    check_input_distribution(p, w);
    if (kind == order_class::one) {
        const measure q = mixture(p, w);
        double s = 0.0;
        for (std::size_t x = 0; x < w.inputs(); ++x)
            if (p[x] > 0.0) s += p[x] * renyi_divergence(1.0, w.row(x), q);
        return s;
    }
    std::vector<double> lg = log_moment(alpha, p, w);
    for (double& v : lg) v /= alpha;
    return alpha / (alpha - 1.0) * log_sum_exp(lg);
}

measure renyi_mean(double alpha, std::span<const double> p, const channel& w)
{
    const order_class kind = classify_order(alpha);
    check_input_distribution(p, w);
    if (kind == order_class::one) return normalized(mixture(p, w));
    std::vector<double> lg = log_moment(alpha, p, w);
    double top = -infinity;
    for (double& v : lg) {
        v /= alpha;
        top = std::max(top, v);
    }
    measure q(w.outputs());
    double s = 0.0;
    for (std::size_t y = 0; y < q.size(); ++y) {
        q[y] = std::isfinite(lg[y]) ? std::exp(lg[y] - top) : 0.0;
        s += q[y];
    }
    for (double& v : q) v /= s;
    return q;
}

double joint_divergence(double alpha, std::span<const double> p, const channel& w, std::span<const double> q)
{
    const order_class kind = classify_order(alpha);
    check_input_distribution(p, w);
    require(q.size() == w.outputs(), "output measure size must match the channel's outputs");
    check_finite_measure(q);

    if (kind == order_class::one) {
        double s = 0.0;
        for (std::size_t x = 0; x < w.inputs(); ++x) {
            if (p[x] == 0.0) continue;
            for (std::size_t y = 0; y < w.outputs(); ++y) {
                const double v = w(x, y);
                if (v == 0.0) continue;
                if (q[y] == 0.0) return infinity;
                s += p[x] * v * (std::log(v) - std::log(q[y]));
            }
        }
        return s;
    }
    std::vector<double> terms;
    for (std::size_t x = 0; x < w.inputs(); ++x) {
        if (p[x] == 0.0) continue;
        for (std::size_t y = 0; y < w.outputs(); ++y) {
            const double v = w(x, y);
            if (v == 0.0) continue;
            if (q[y] == 0.0) {
                if (kind == order_class::super_one) return infinity;
                continue;
            }
            terms.push_back(std::log(p[x]) + alpha * std::log(v) + (1.0 - alpha) * std::log(q[y]));
        }
    }
    if (terms.empty()) return infinity;
    return log_sum_exp(terms) / (alpha - 1.0);
}

sibson_terms sibson_decomposition(double alpha, std::span<const double> p, const channel& w, std::span<const double> q)
{
    sibson_terms t;
    const measure mean = renyi_mean(alpha, p, w);
    t.lhs = joint_divergence(alpha, p, w, q);
    t.information = joint_divergence(alpha, p, w, mean);
    t.mean_gap = renyi_divergence(alpha, mean, q);
    require(std::isfinite(t.lhs) && std::isfinite(t.information) && std::isfinite(t.mean_gap),
            "Sibson decomposition requires finite divergences");
    return t;
}

channel product_channel(const std::vector<channel>& parts, std::size_t cap)
{
    require(!parts.empty(), "product of an empty channel list");
    double inputs = 1.0;
    double outputs = 1.0;
    for (const auto& c : parts) {
        inputs *= double(c.inputs());
        outputs *= double(c.outputs());
    }
    if (inputs * outputs > double(cap))
        throw cap_exceeded("product channel would have " + std::to_string(inputs * outputs) +
                           " entries, above the cap of " + std::to_string(cap));

    std::size_t a = parts.front().inputs();
    std::size_t b = parts.front().outputs();
    std::vector<double> cur = parts.front().entries();
    for (std::size_t k = 1; k < parts.size(); ++k) {
        const channel& c = parts[k];
        const std::size_t na = a * c.inputs();
        const std::size_t nb = b * c.outputs();
        std::vector<double> next(na * nb);
        for (std::size_t xc = 0; xc < c.inputs(); ++xc)
            for (std::size_t xr = 0; xr < a; ++xr) {
                const std::size_t x = xr + a * xc;
                for (std::size_t yc = 0; yc < c.outputs(); ++yc)
                    for (std::size_t yr = 0; yr < b; ++yr)
                        next[x * nb + yr + b * yc] = cur[xr * b + yr] * c(xc, yc);
            }
        cur = std::move(next);
        a = na;
        b = nb;
    }
    return channel(a, b, std::move(cur));
}

std::vector<std::size_t> mixed_radix_digits(std::size_t index, std::span<const std::size_t> radices)
{
    std::vector<std::size_t> d(radices.size());
    for (std::size_t k = 0; k < radices.size(); ++k) {
        d[k] = index % radices[k];
        index /= radices[k];
    }
    require(index == 0, "index exceeds the mixed-radix range");
    return d;
}

}  // namespace renyi
