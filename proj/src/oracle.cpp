#include "renyi/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "renyi/errors.hpp"

namespace renyi {

namespace {

constexpr std::size_t chunk_size = 4096;

std::size_t output_count(const std::vector<channel>& parts, std::size_t cap)
{
    std::size_t total = 1;
    for (const auto& w : parts) {
        if (w.outputs() != 0 && total > cap / w.outputs())
            throw cap_exceeded("output enumeration exceeds the cap of " + std::to_string(cap));
        total *= w.outputs();
    }
    if (total > cap) throw cap_exceeded("output enumeration exceeds the cap of " + std::to_string(cap));
    return total;
}

// Product of the factors taken in sorted order, so that equal multisets give
// bit-identical likelihoods and exact ties are recognized as ties.
double sorted_product(std::vector<double>& f)
{
    std::sort(f.begin(), f.end());
    double p = 1.0;
    for (double v : f) p *= v;
    return p;
}

// Likelihood mass of the messages left off the list: the list holds the l
// largest likelihoods, ties to lower indices.
double missed_mass(const std::vector<double>& lik, std::size_t l, std::vector<std::size_t>& order)
{
    const std::size_t m = lik.size();
    if (l >= m) return 0.0;
    order.resize(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto before = [&](std::size_t a, std::size_t b) { return lik[a] > lik[b] || (lik[a] == lik[b] && a < b); };
    std::nth_element(order.begin(), order.begin() + std::ptrdiff_t(l), order.end(), before);
    std::sort(order.begin() + std::ptrdiff_t(l), order.end());
    double s = 0.0;
    for (std::size_t i = l; i < m; ++i) s += lik[order[i]];
    return s;
}

void next_digits(std::vector<std::size_t>& d, const std::vector<channel>& parts)
{
    for (std::size_t t = 0; t < d.size(); ++t) {
        if (++d[t] < parts[t].outputs()) return;
        d[t] = 0;
    }
}

std::vector<std::size_t> digits_of(std::size_t index, const std::vector<channel>& parts)
{
    std::vector<std::size_t> d(parts.size());
    for (std::size_t t = 0; t < parts.size(); ++t) {
        d[t] = index % parts[t].outputs();
        index /= parts[t].outputs();
    }
    return d;
}

// Sum over outputs in [begin, end) of the missed likelihood mass, where
// likelihoods(digits, lik) fills the per-message likelihoods.
template <class Lik>
double missed_range(std::size_t begin, std::size_t end, const std::vector<channel>& parts, std::size_t m,
                    std::size_t l, Lik&& likelihoods)
{
    std::vector<std::size_t> d = digits_of(begin, parts);
    std::vector<double> lik(m);
    std::vector<std::size_t> order;
    double s = 0.0;
    for (std::size_t y = begin; y < end; ++y) {
        likelihoods(d, lik);
        s += missed_mass(lik, l, order);
        next_digits(d, parts);
    }
    return s;
}

// Chunks have fixed boundaries and are summed in order, so the result does
// not depend on the worker count.
template <class Lik>
double missed_total(std::size_t total, const std::vector<channel>& parts, std::size_t m, std::size_t l,
                    bool parallel, Lik&& likelihoods)
{
    const std::size_t chunks = (total + chunk_size - 1) / chunk_size;
    std::vector<double> partial(chunks, 0.0);
    auto body = [&](std::size_t c) {
        const std::size_t b = c * chunk_size;
        partial[c] = missed_range(b, std::min(total, b + chunk_size), parts, m, l, likelihoods);
    };
    if (parallel) {
        parallel_for(chunks, body);
    } else {
        for (std::size_t c = 0; c < chunks; ++c) body(c);
    }
    double s = 0.0;
    for (double v : partial) s += v;
    return s;
}

void check_code(const codebook& code, const std::vector<channel>& parts, std::size_t l)
{
    require(code.messages() >= 1, "the code needs at least one message");
    require(l >= 1, "list size must be positive");
    require(parts.size() == code.n, "one channel per time instance is needed");
    for (const auto& w : code.words) {
        require(w.size() == code.n, "every codeword must have n letters");
        for (std::size_t t = 0; t < code.n; ++t) require(w[t] < parts[t].inputs(), "codeword letter out of range");
    }
}

double code_error(const codebook& code, const std::vector<channel>& parts, std::size_t l, std::size_t cap,
                  bool parallel)
{
    check_code(code, parts, l);
    const std::size_t total = output_count(parts, cap);
    const std::size_t m = code.messages();
    const std::size_t n = code.n;
    auto lik = [&](const std::vector<std::size_t>& y, std::vector<double>& out) {
        std::vector<double> f(n);
        for (std::size_t k = 0; k < m; ++k) {
            for (std::size_t t = 0; t < n; ++t) f[t] = parts[t](code.words[k][t], y[t]);
            out[k] = sorted_product(f);
        }
    };
    return std::clamp(missed_total(total, parts, m, l, parallel, lik) / double(m), 0.0, 1.0);
}

std::vector<std::size_t> prefix_counts(const std::vector<channel>& parts)
{
    std::vector<std::size_t> p(parts.size(), 1);
    for (std::size_t t = 1; t < parts.size(); ++t) p[t] = p[t - 1] * parts[t - 1].outputs();
    return p;
}

void check_strategy(const feedback_strategy& s, const std::vector<channel>& parts)
{
    require(s.m >= 1, "the strategy needs at least one message");
    require(parts.size() == s.n && s.maps.size() == s.n, "one map and one channel per time instance are needed");
    const auto p = prefix_counts(parts);
    for (std::size_t t = 0; t < s.n; ++t) {
        require(s.maps[t].size() == s.m * p[t], "map at time t must cover every message and output prefix");
        for (std::size_t x : s.maps[t]) require(x < parts[t].inputs(), "strategy letter out of range");
    }
}

}  // namespace

double exact_error_probability(const codebook& code, const std::vector<channel>& parts, std::size_t l, std::size_t cap)
{
    return code_error(code, parts, l, cap, true);
}

double exact_error_probability(const codebook& code, const channel& w, std::size_t l, std::size_t cap)
{
    return code_error(code, std::vector<channel>(code.n, w), l, cap, true);
}

double feedback_error_probability(const feedback_strategy& s, const std::vector<channel>& parts, std::size_t l,
                                  std::size_t cap)
{
    require(l >= 1, "list size must be positive");
    check_strategy(s, parts);
    const std::size_t total = output_count(parts, cap);
    const auto pc = prefix_counts(parts);
    auto lik = [&](const std::vector<std::size_t>& y, std::vector<double>& out) {
        std::vector<double> f(s.n);
        for (std::size_t k = 0; k < s.m; ++k) {
            std::size_t prefix = 0;
            for (std::size_t t = 0; t < s.n; ++t) {
                f[t] = parts[t](s.maps[t][k * pc[t] + prefix], y[t]);
                prefix += y[t] * pc[t];
            }
            out[k] = sorted_product(f);
        }
    };
    return std::clamp(missed_total(total, parts, s.m, l, true, lik) / double(s.m), 0.0, 1.0);
}

measure feedback_output_measure(const feedback_strategy& s, std::size_t message, const std::vector<channel>& parts,
                                std::size_t cap)
{
    check_strategy(s, parts);
    require(message < s.m, "message index out of range");
    const std::size_t total = output_count(parts, cap);
    const auto pc = prefix_counts(parts);
    measure out(total);
    std::vector<std::size_t> y(s.n, 0);
    for (std::size_t i = 0; i < total; ++i) {
        double p = 1.0;
        std::size_t prefix = 0;
        for (std::size_t t = 0; t < s.n; ++t) {
            p *= parts[t](s.maps[t][message * pc[t] + prefix], y[t]);
            prefix += y[t] * pc[t];
        }
        out[i] = p;
        next_digits(y, parts);
    }
    return out;
}

feedback_strategy strategy_from_code(const codebook& code, const std::vector<channel>& parts)
{
    check_code(code, parts, 1);
    feedback_strategy s;
    s.n = code.n;
    s.m = code.messages();
    const auto pc = prefix_counts(parts);
    s.maps.resize(s.n);
    for (std::size_t t = 0; t < s.n; ++t) {
        s.maps[t].resize(s.m * pc[t]);
        for (std::size_t k = 0; k < s.m; ++k)
            std::fill_n(s.maps[t].begin() + std::ptrdiff_t(k * pc[t]), pc[t], code.words[k][t]);
    }
    return s;
}

feedback_strategy random_feedback_strategy(std::size_t m, const std::vector<channel>& parts, rng& g)
{
    require(m >= 1 && !parts.empty(), "needs at least one message and one channel");
    feedback_strategy s;
    s.n = parts.size();
    s.m = m;
    const auto pc = prefix_counts(parts);
    s.maps.resize(s.n);
    for (std::size_t t = 0; t < s.n; ++t) {
        std::uniform_int_distribution<std::size_t> letter(0, parts[t].inputs() - 1);
        s.maps[t].resize(m * pc[t]);
        for (auto& x : s.maps[t]) x = letter(g);
    }
    return s;
}

// ---------------------------------------------------------------------------

namespace {

codebook draw_code(std::size_t m, std::size_t n, std::span<const double> cdf, rng& g)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    codebook c;
    c.n = n;
    c.words.assign(m, std::vector<std::size_t>(n));
    for (auto& w : c.words)
        for (auto& x : w) {
            const double r = u(g) * cdf.back();
            x = std::size_t(std::upper_bound(cdf.begin(), cdf.end(), r) - cdf.begin());
            x = std::min(x, cdf.size() - 1);
        }
    return c;
}

std::size_t small_count(double v, const char* what)
{
    require(v >= 1.0 && v <= 1e6 && v == std::floor(v), std::string(what) + " must be a small positive integer");
    return std::size_t(v);
}

}  // namespace

code_search_result random_code_search(const code_params& c, const channel& w, std::span<const double> prior,
                                      std::size_t trials, std::uint64_t seed, std::size_t cap)
{
    c.validate();
    check_input_distribution(prior, w);
    require(trials >= 1, "at least one trial is needed");
    const std::size_t m = small_count(c.m, "M");
    const std::size_t l = small_count(c.l, "L");
    const std::vector<channel> parts(c.n, w);
    output_count(parts, cap);

    std::vector<double> cdf(prior.size());
    std::partial_sum(prior.begin(), prior.end(), cdf.begin());
    for (std::size_t x = 0; x < prior.size(); ++x)
        if (prior[x] == 0.0 && x > 0) cdf[x] = cdf[x - 1];

    std::vector<double> errors(trials);
    parallel_for(trials, [&](std::size_t t) {
        rng g = substream(seed, t);
        errors[t] = code_error(draw_code(m, c.n, cdf, g), parts, l, cap, false);
    });
    const auto best = std::size_t(std::min_element(errors.begin(), errors.end()) - errors.begin());
    code_search_result r;
    rng g = substream(seed, best);
    r.best = draw_code(m, c.n, cdf, g);
    r.error = errors[best];
    r.trial = best;
    return r;
}

code_search_result exhaustive_code_search(const code_params& c, const channel& w)
{
    c.validate();
    require(c.m == 2.0 && c.n <= 3 && w.inputs() == 2, "exhaustive search covers M = 2, n <= 3, binary inputs");
    const std::size_t l = small_count(c.l, "L");
    const std::size_t words = std::size_t(1) << c.n;
    const std::vector<channel> parts(c.n, w);
    code_search_result r;
    r.error = infinity;
    for (std::size_t i = 0; i < words * words; ++i) {
        codebook code;
        code.n = c.n;
        for (std::size_t word : {i % words, i / words}) {
            std::vector<std::size_t> letters(c.n);
            for (std::size_t t = 0; t < c.n; ++t) letters[t] = (word >> t) & 1U;
            code.words.push_back(letters);
        }
        const double e = code_error(code, parts, l, default_enumeration_cap, false);
        if (e < r.error) {
            r.error = e;
            r.best = code;
            r.trial = i;
        }
    }
    return r;
}

// ---------------------------------------------------------------------------

double grid_capacity(double alpha, const channel& w, double step)
{
    classify_order(alpha);
    const std::size_t k = w.inputs();
    require(k >= 1 && k <= 4, "the lattice search needs at most 4 inputs");
    require(step > 0.0 && step <= 1.0, "step must lie in (0,1]");
    const auto parts = std::size_t(std::llround(1.0 / step));
    require(std::abs(double(parts) * step - 1.0) <= 1e-9, "step must be the reciprocal of an integer");

    std::vector<double> best_p(k, 0.0);
    double best = -infinity;
    std::vector<std::size_t> comp(k, 0);
    // Enumerate compositions of `parts` into k nonnegative integers.
    auto visit = [&](auto&& self, std::size_t i, std::size_t left) -> void {
        if (i + 1 == k) {
            comp[i] = left;
            std::vector<double> p(k);
            for (std::size_t j = 0; j < k; ++j) p[j] = double(comp[j]) / double(parts);
            const double v = renyi_information(alpha, p, w);
            if (v > best) {
                best = v;
                best_p = p;
            }
            return;
        }
        for (std::size_t c = 0; c <= left; ++c) {
            comp[i] = c;
            self(self, i + 1, left - c);
        }
    };
    visit(visit, 0, parts);

    for (double d = step / 2.0; d >= step / 64.0; d /= 2.0) {
        bool moved = true;
        while (moved) {
            moved = false;
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) {
                    if (i == j || best_p[i] < d) continue;
                    std::vector<double> p = best_p;
                    p[i] -= d;
                    p[j] += d;
                    const double v = renyi_information(alpha, p, w);
                    if (v > best) {
                        best = v;
                        best_p = p;
                        moved = true;
                    }
                }
        }
    }
    return best;
}

double exact_tilted_moment(double alpha, std::span<const double> w, std::span<const double> q, double k)
{
    require(alpha > 0.0 && alpha < 1.0, "order must lie in (0,1)");
    require(k > 0.0, "moment order must be positive");
    require(w.size() == q.size(), "measures must share one alphabet");
    const measure v = tilted_measure(alpha, w, q);
    double mean = 0.0;
    for (std::size_t y = 0; y < v.size(); ++y)
        if (v[y] > 0.0) mean += v[y] * std::log(w[y] / q[y]);
    double s = 0.0;
    for (std::size_t y = 0; y < v.size(); ++y)
        if (v[y] > 0.0) s += v[y] * std::pow(std::abs(std::log(w[y] / q[y]) - mean), k);
    return s;
}

small_deviation exact_small_deviation(const std::vector<finite_variable>& vars, double k, std::size_t cap)
{
    require(!vars.empty(), "at least one variable is needed");
    require(k > 0.0, "moment order must be positive");
    std::size_t atoms = 1;
    double moments = 0.0;
    for (const auto& z : vars) {
        require(!z.empty(), "every variable needs an atom");
        double total = 0.0;
        double mean = 0.0;
        double scale = 1.0;
        for (const auto& [v, p] : z) {
            require(p >= 0.0 && std::isfinite(v), "atoms need finite values and nonnegative masses");
            total += p;
            mean += p * v;
            moments += p * std::pow(std::abs(v), k);
            scale = std::max(scale, std::abs(v));
        }
        require(std::abs(total - 1.0) <= 1e-12, "masses must sum to one");
        require(std::abs(mean) <= 1e-9 * scale, "variables must have zero mean");
        if (atoms > cap / z.size()) throw cap_exceeded("joint support exceeds the cap of " + std::to_string(cap));
        atoms *= z.size();
    }
    small_deviation r;
    r.moment = std::pow(moments, 1.0 / k);
    r.floor = small_deviation_floor(vars.size());

    finite_variable sum{{0.0, 1.0}};
    for (const auto& z : vars) {
        finite_variable next;
        next.reserve(sum.size() * z.size());
        for (const auto& [s, ps] : sum)
            for (const auto& [v, pv] : z) next.emplace_back(s + v, ps * pv);
        sum = std::move(next);
    }
    // With m_k = 0 every variable vanishes and so does the sum.
    if (r.moment == 0.0) {
        r.probability = 1.0;
        return r;
    }
    const double limit = 3.0 * r.moment;
    for (const auto& [s, p] : sum)
        if (std::abs(s) < limit) r.probability += p;
    return r;
}

double gallager_e0(double rho, std::span<const double> p, const channel& w)
{
    require(rho > -1.0 && std::isfinite(rho), "rho must exceed -1");
    check_input_distribution(p, w);
    const double s = 1.0 / (1.0 + rho);
    double total = 0.0;
    for (std::size_t y = 0; y < w.outputs(); ++y) {
        double inner = 0.0;
        for (std::size_t x = 0; x < w.inputs(); ++x)
            if (p[x] > 0.0 && w(x, y) > 0.0) inner += p[x] * std::pow(w(x, y), s);
        if (inner > 0.0) total += std::pow(inner, 1.0 + rho);
    }
    return -std::log(total);
}

}  // namespace renyi
