#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "renyi/capacity.hpp"
#include "renyi/errors.hpp"
#include "renyi/exponents.hpp"
#include "renyi/parallel.hpp"
#include "suites.hpp"

namespace renyi::cli {

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw io_error("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json_text(const std::string& text, const std::string& origin)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw io_error("malformed JSON in " + origin + ": " + e.what());
    }
}

std::vector<double> parse_list(const std::string& s, char sep)
{
    std::vector<double> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        if (item.empty()) continue;
        char* end = nullptr;
        const double x = std::strtod(item.c_str(), &end);
        require(end != item.c_str() && *end == '\0', "not a number: '" + item + "'");
        v.push_back(x);
    }
    return v;
}

double parse_number(const std::string& s)
{
    const auto v = parse_list(s, ',');
    require(v.size() == 1, "expected one number in '" + s + "'");
    return v.front();
}

channel channel_from_json(const json& j)
{
    const json& rows = j.is_object() ? j.at("rows") : j;
    require(rows.is_array() && !rows.empty(), "channel JSON needs a non-empty array of rows");
    std::vector<measure> r;
    for (const auto& row : rows) {
        measure m;
        for (const auto& v : row) m.push_back(to_double(v));
        r.push_back(m);
    }
    return channel::from_rows(r);
}

}  // namespace

channel parse_channel(const std::string& spec)
{
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string tail = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "bsc" && !tail.empty()) return binary_symmetric(parse_number(tail));
    if (head == "bec" && !tail.empty()) return binary_erasure(parse_number(tail));
    if (head == "z" && !tail.empty()) {
        const double p = parse_number(tail);
        require(p >= 0.0 && p <= 1.0, "z channel needs p in [0,1]");
        return channel(2, 2, {1.0, 0.0, p, 1.0 - p});
    }
    if (spec == "haroutunian") return haroutunian_example();
    if (head == "matrix" && !tail.empty()) {
        std::vector<measure> rows;
        std::stringstream ss(tail);
        std::string row;
        while (std::getline(ss, row, ';')) rows.push_back(parse_list(row, ','));
        return channel::from_rows(rows);
    }
    std::ifstream probe(spec);
    if (!probe) throw io_error("unknown channel '" + spec + "' (not a named channel and not a readable file)");
    try {
        return channel_from_json(parse_json_text(read_file(spec), spec));
    } catch (const json::exception& e) {
        throw io_error("bad channel file '" + spec + "': " + e.what());
    }
}

poisson_spec poisson_spec_from_json(const json& j)
{
    poisson_spec s;
    s.duration = to_double(j.at("T"));
    s.floor = j.contains("A") ? to_double(j.at("A")) : 0.0;
    s.ceiling = to_double(j.at("B"));
    s.variant = parse_poisson_variant(j.value("variant", std::string("free")));
    if (j.contains("x")) s.cost = to_double(j.at("x"));
    if (j.contains("profile"))
        for (const auto& seg : j.at("profile")) s.profile.emplace_back(to_double(seg.at(0)), to_double(seg.at(1)));
    s.validate();
    return s;
}

poisson_spec parse_poisson_spec(const std::string& spec_or_path)
{
    const bool inline_json = !spec_or_path.empty() && spec_or_path.front() == '{';
    const std::string text = inline_json ? spec_or_path : read_file(spec_or_path);
    try {
        return poisson_spec_from_json(parse_json_text(text, inline_json ? "inline spec" : spec_or_path));
    } catch (const json::exception& e) {
        throw io_error(std::string("bad Poisson spec: ") + e.what());
    }
}

json number(double v)
{
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

double to_double(const json& j)
{
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf") return infinity;
        if (s == "-inf") return -infinity;
        if (s == "nan") return std::nan("");
    }
    throw precondition_error("expected a number, got " + j.dump());
}

namespace {

json numbers(const std::vector<double>& v)
{
    json a = json::array();
    for (double x : v) a.push_back(number(x));
    return a;
}

}  // namespace

json to_json(const bound_report& r)
{
    json c = json::object();
    for (const auto& [k, v] : r.constants) c[k] = number(v);
    return {{"lemma", r.lemma},
            {"direction", r.direction == bound_direction::inner ? "inner" : "outer"},
            {"value", number(r.value)},
            {"log_value", number(r.log_value)},
            {"hypothesis_satisfied", r.hypothesis_satisfied},
            {"constants", c},
            {"notes", r.notes}};
}

bound_report bound_from_json(const json& j)
{
    bound_report r;
    r.lemma = j.at("lemma").get<std::string>();
    r.direction = j.at("direction").get<std::string>() == "inner" ? bound_direction::inner : bound_direction::outer;
    r.value = to_double(j.at("value"));
    r.log_value = to_double(j.at("log_value"));
    r.hypothesis_satisfied = j.at("hypothesis_satisfied").get<bool>();
    for (const auto& [k, v] : j.at("constants").items()) r.constants[k] = to_double(v);
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
}

namespace {

std::string cell(const json& v)
{
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    if (v.is_number_float()) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", v.get<double>());
        return buf;
    }
    if (v.is_array()) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + cell(v[i]);
        return s;
    }
    return v.dump();
}

void flatten(const json& obj, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out)
{
    for (const auto& [k, v] : obj.items()) {
        const std::string key = prefix.empty() ? k : prefix + "." + k;
        if (v.is_object()) {
            flatten(v, key, out);
        } else {
            out.emplace_back(key, cell(v));
        }
    }
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string e = "\"";
    for (char c : s) e += c == '"' ? std::string("\"\"") : std::string(1, c);
    return e + "\"";
}

}  // namespace

std::string report_csv(const json& results, const std::vector<std::string>& columns)
{
    std::vector<std::string> cols = columns;
    std::vector<std::map<std::string, std::string>> rows;
    for (const auto& r : results) {
        std::vector<std::pair<std::string, std::string>> flat;
        flatten(r, "", flat);
        std::map<std::string, std::string> row;
        for (const auto& [k, v] : flat) {
            if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
            row[k] = v;
        }
        rows.push_back(std::move(row));
    }
    std::string out;
    for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + csv_escape(cols[i]);
    out += "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < cols.size(); ++i) {
            auto it = row.find(cols[i]);
            out += (i ? "," : "") + csv_escape(it == row.end() ? "" : it->second);
        }
        out += "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

struct options {
    std::string format = "json";
    unsigned workers = 0;
    std::uint64_t seed = 7;
    bool require_binding = false;
    std::string config;

    std::string channel_spec;
    std::vector<std::string> parts;
    std::string kind;
    double order = 1.0;
    std::size_t curve_below = 0;
    std::size_t curve_above = 0;
    double width = 0.0;
    double tol = 1e-10;
    std::optional<double> rate;
    std::optional<double> rate_order;
    double eps = 0.05;
    std::size_t cap = 4;
    double m = 2.0;
    double l = 1.0;
    std::size_t n = 1;
    double kappa = 3.0;
    double phi = 0.5;
    std::optional<double> alpha;
    double alpha0 = 0.3;
    double alpha1 = 0.6;
    double gamma = 0.0;
    std::string variant = "constant-center";
    std::string prior;
    std::string orders;
    std::string spec;
    std::string suite = "all";
    std::size_t instances = 0;
    std::string input;
};

// Appends "--key value" pairs from a JSON config file for keys absent from
// the command line, so flags take precedence over the file.
std::vector<std::string> merge_config(std::vector<std::string> args)
{
    auto it = std::find(args.begin(), args.end(), "--config");
    if (it == args.end() || it + 1 == args.end()) return args;
    const json cfg = parse_json_text(read_file(*(it + 1)), *(it + 1));
    if (!cfg.is_object()) throw io_error("config file must hold a JSON object");
    std::vector<std::string> extra;
    for (const auto& [k, v] : cfg.items()) {
        const std::string flag = "--" + k;
        if (std::find(args.begin(), args.end(), flag) != args.end()) continue;
        if (v.is_boolean()) {
            if (v.get<bool>()) extra.push_back(flag);
            continue;
        }
        const json items = v.is_array() ? v : json::array({v});
        for (const auto& item : items) {
            extra.push_back(flag);
            extra.push_back(item.is_string() ? item.get<std::string>() : cell(item));
        }
    }
    args.insert(args.end(), extra.begin(), extra.end());
    return args;
}

std::vector<channel> component_channels(const options& o)
{
    if (!o.parts.empty()) {
        std::vector<channel> v;
        for (const auto& p : o.parts) v.push_back(parse_channel(p));
        return v;
    }
    require(!o.channel_spec.empty(), "--channel or --part is required");
    return std::vector<channel>(o.n, parse_channel(o.channel_spec));
}

channel main_channel(const options& o)
{
    require(!o.channel_spec.empty(), "--channel is required");
    return parse_channel(o.channel_spec);
}

double resolve_rate(const options& o, const exponent_curve& curve)
{
    if (o.rate) return *o.rate;
    require(o.rate_order.has_value(), "--rate or --rate-order is required");
    return curve.capacity(*o.rate_order);
}

code_params code_of(const options& o, std::size_t n)
{
    code_params c{o.m, o.l, n};
    c.validate();
    return c;
}

json sp_json(const sp_result& s)
{
    return {{"rate", number(s.rate)},
            {"value", number(s.value)},
            {"maximizing_order", s.maximizing_order ? number(*s.maximizing_order) : json(nullptr)},
            {"regime", to_string(s.regime)},
            {"tail_bound", number(s.tail_bound)},
            {"upper", number(s.upper)},
            {"caveat", s.caveat}};
}

json rows_json(const channel& w)
{
    json rows = json::array();
    for (std::size_t x = 0; x < w.inputs(); ++x) rows.push_back(numbers(measure(w.row(x).begin(), w.row(x).end())));
    return rows;
}

json run_capacity(const options& o)
{
    const channel w = main_channel(o);
    json results = json::array();
    if (o.curve_below + o.curve_above > 0) {
        const exponent_curve curve(w, o.tol);
        const auto grid = order_grid(o.curve_below, o.curve_above);
        const curve_report rep = capacity_curve(curve, grid);
        for (const auto& p : rep.points)
            results.push_back({{"order", number(p.order)}, {"value", number(p.value)}, {"gap", number(p.gap)}});
        return results;
    }
    if (o.width > 0.0) {
        const averaged_center c = average_center(o.order, o.width, w);
        results.push_back({{"order", number(o.order)},
                           {"width", number(o.width)},
                           {"averaged_capacity", number(average_capacity(o.order, o.width, w, o.tol))},
                           {"center", numbers(c.center)}});
        return results;
    }
    capacity_options opt;
    opt.tol = o.tol;
    const capacity_solution s = renyi_capacity(o.order, w, opt);
    results.push_back({{"order", number(s.order)},
                       {"value", number(s.value)},
                       {"primal", number(s.primal)},
                       {"gap", number(s.duality_gap)},
                       {"converged", s.converged},
                       {"used_fallback", s.used_fallback},
                       {"iterations", s.iterations},
                       {"center", numbers(s.center)},
                       {"prior", numbers(s.prior)}});
    return results;
}

json run_exponent(const options& o)
{
    const channel w = main_channel(o);
    const exponent_curve curve(w, std::min(o.tol, 1e-10));
    json results = json::array();
    if (o.kind == "sp") {
        results.push_back(sp_json(sphere_packing_exponent(resolve_rate(o, curve), curve)));
    } else if (o.kind == "avsp") {
        json j = sp_json(average_sp_exponent(o.eps, resolve_rate(o, curve), curve));
        j["eps"] = number(o.eps);
        results.push_back(j);
    } else if (o.kind == "haroutunian") {
        haroutunian_options opt;
        opt.cap = o.cap;
        opt.seed = o.seed;
        const haroutunian_result h = haroutunian_exponent(resolve_rate(o, curve), w, opt);
        json rows = json::array();
        for (const auto& r : h.test_channel) rows.push_back(numbers(r));
        results.push_back({{"rate", number(h.rate)},
                           {"value", number(h.value)},
                           {"lower_bound", number(h.lower_bound)},
                           {"local_value", number(h.local_value)},
                           {"certified", h.certified},
                           {"iterations", h.iterations},
                           {"output", numbers(h.output)},
                           {"test_channel", rows}});
    } else if (o.kind == "order") {
        const double rate = resolve_rate(o, curve);
        results.push_back({{"rate", number(rate)}, {"order", number(order_for_rate(curve, rate))}});
    } else {
        throw precondition_error("unknown exponent '" + o.kind + "' (sp, avsp, haroutunian, order)");
    }
    return results;
}

spb_variant parse_variant(const std::string& s)
{
    for (auto v : {spb_variant::monotone_center, spb_variant::constant_center, spb_variant::fixed_density})
        if (to_string(v) == s) return v;
    throw precondition_error("unknown variant '" + s + "' (monotone-center, constant-center, fixed-density)");
}

json tradeoff_json(const auxiliary_channel& a)
{
    json checks = json::array();
    for (const auto& k : a.capacity_checks)
        checks.push_back({{"order", number(k.order)}, {"capacity", number(k.capacity)}, {"cap", number(k.cap)}});
    std::vector<double> cases(a.cases.begin(), a.cases.end());
    return {{"lemma", "tradeoff"},
            {"rate", number(a.rate)},
            {"eps", number(a.eps)},
            {"phi", number(a.phi)},
            {"eta", number(a.eta)},
            {"sp_exponent", number(a.sp_exponent)},
            {"half_capacity", number(a.half_capacity)},
            {"target", number(a.target)},
            {"orders", numbers(a.orders)},
            {"cases", numbers(cases)},
            {"rate_terms", numbers(a.rate_terms)},
            {"exponent_terms", numbers(a.exponent_terms)},
            {"rate_cap", number(a.rate_cap)},
            {"exponent_cap", number(a.exponent_cap)},
            {"capacity_checks", checks},
            {"realized", rows_json(a.realized)},
            {"certified", a.certified}};
}

json run_bound(const options& o, bool& any_binding, bool& has_reports)
{
    json results = json::array();
    auto add = [&](const std::vector<bound_report>& reps) {
        for (const auto& r : reps) {
            has_reports = true;
            any_binding = any_binding || r.hypothesis_satisfied;
            results.push_back(to_json(r));
        }
    };
    if (o.kind == "gallager" || o.kind == "arimoto") {
        const auto parts = component_channels(o);
        const channel w = parts.size() == 1 ? parts.front() : product_channel(parts);
        const code_params c = code_of(o, parts.size());
        std::optional<measure> p;
        if (!o.prior.empty()) {
            const measure base = parse_list(o.prior, ',');
            measure full(w.inputs());
            for (std::size_t x = 0; x < w.inputs(); ++x) {
                double v = 1.0;
                std::size_t idx = x;
                for (const auto& part : parts) {
                    require(base.size() == part.inputs(), "--prior must cover the inputs of every component");
                    v *= base[idx % part.inputs()];
                    idx /= part.inputs();
                }
                full[x] = v;
            }
            p = full;
        }
        if (o.kind == "gallager") {
            require(o.alpha.has_value(), "--alpha is required");
            const measure prior = p ? *p : measure(w.inputs(), 1.0 / double(w.inputs()));
            add(gallager_inner(c, *o.alpha, prior, w));
        } else {
            const auto orders = o.orders.empty() ? std::vector<double>{0.5, 1.0, 2.0} : parse_list(o.orders, ',');
            add(arimoto_outer(c, w, p, orders));
        }
    } else if (o.kind == "spb-product") {
        const auto parts = component_channels(o);
        add(spb_product(code_of(o, parts.size()), parts, o.phi, o.eps, o.kappa));
    } else if (o.kind == "spb-special") {
        const auto parts = component_channels(o);
        add({spb_special_cases(code_of(o, parts.size()), parts, o.phi, o.kappa, parse_variant(o.variant))});
    } else if (o.kind == "spb-feedback") {
        require(o.kappa >= 1.0 && o.kappa == std::floor(o.kappa), "--kappa must be a positive integer");
        add({spb_feedback(code_of(o, o.n), main_channel(o), std::size_t(o.kappa), o.eps, o.alpha0, o.alpha1)});
    } else if (o.kind == "spb-feedback-gamma") {
        require(o.kappa >= 1.0 && o.kappa == std::floor(o.kappa), "--kappa must be a positive integer");
        const auto parts = component_channels(o);
        add({spb_feedback_gamma(code_of(o, parts.size()), parts, std::size_t(o.kappa), o.eps, o.alpha0, o.alpha1,
                                o.gamma)});
    } else if (o.kind == "tradeoff") {
        const channel w = main_channel(o);
        const exponent_curve curve(w, 1e-12);
        const auxiliary_channel a = tradeoff_channel(w, resolve_rate(o, curve), o.eps);
        has_reports = true;
        any_binding = any_binding || a.certified;
        results.push_back(tradeoff_json(a));
    } else if (o.kind == "assumption") {
        const auto parts = component_channels(o);
        const auto orders = o.orders.empty() ? std::vector<double>{0.25, 0.5, 0.75} : parse_list(o.orders, ',');
        const stationarity_fit fit = assumption_check(parts, orders);
        for (std::size_t i = 0; i < fit.window_lengths.size(); ++i)
            results.push_back({{"window", fit.window_lengths[i]}, {"constant", number(fit.constants[i])}});
    } else {
        throw precondition_error("unknown bound '" + o.kind +
                                 "' (gallager, arimoto, spb-product, spb-special, spb-feedback, "
                                 "spb-feedback-gamma, tradeoff, assumption)");
    }
    return results;
}

json run_poisson(const options& o, bool& any_binding, bool& has_reports)
{
    require(!o.spec.empty(), "--spec is required");
    const poisson_spec s = parse_poisson_spec(o.spec);
    json results = json::array();
    if (o.kind == "capacity") {
        const double x = poisson_optimal_cost(o.order, s.floor, s.ceiling);
        results.push_back({{"order", number(o.order)},
                           {"variant", to_string(s.variant)},
                           {"capacity", number(poisson_capacity(o.order, s))},
                           {"optimal_cost", number(x)}});
        return results;
    }
    std::vector<bound_report> reps;
    if (o.kind == "spb") {
        reps.push_back(poisson_spb(code_of(o, 1), s, o.phi));
    } else if (o.kind == "parametric") {
        reps = poisson_spb_parametric(code_of(o, 1), s, o.phi, o.n, o.eps, o.kappa);
    } else {
        throw precondition_error("unknown poisson command '" + o.kind + "' (capacity, spb, parametric)");
    }
    for (const auto& r : reps) {
        has_reports = true;
        any_binding = any_binding || r.hypothesis_satisfied;
        results.push_back(to_json(r));
    }
    return results;
}

json run_verify(const options& o, bool& all_passed)
{
    json results = json::array();
    std::vector<std::string> names;
    if (o.suite == "all") {
        names = suites::suite_names();
    } else {
        std::stringstream ss(o.suite);
        std::string item;
        while (std::getline(ss, item, ',')) names.push_back(item);
    }
    for (const auto& name : names) {
        const std::size_t count = o.instances ? o.instances : suites::default_instances(name);
        const suites::suite_result r = suites::run_suite(name, count, o.seed);
        all_passed = all_passed && r.passed;
        results.push_back({{"suite", r.name},
                           {"passed", r.passed},
                           {"instances", r.instances},
                           {"violations", r.violations},
                           {"worst_slack", number(r.worst_slack)},
                           {"tolerance", number(r.tolerance)},
                           {"seconds", number(r.seconds)},
                           {"notes", r.notes}});
    }
    return results;
}

void emit(const json& doc, const std::string& format, std::ostream& out)
{
    if (format == "json") {
        out << doc.dump(2) << "\n";
    } else if (format == "csv") {
        out << report_csv(doc.at("results"));
    } else {
        for (const auto& r : doc.at("results")) {
            std::vector<std::pair<std::string, std::string>> flat;
            flatten(r, "", flat);
            std::size_t width = 0;
            for (const auto& [k, v] : flat) width = std::max(width, k.size());
            for (const auto& [k, v] : flat) out << k << std::string(width - k.size() + 2, ' ') << v << "\n";
            out << "\n";
        }
    }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    try {
        args = merge_config(args);
    } catch (const io_error& e) {
        err << "error: " << e.what() << "\n";
        return io;
    }

    options o;
    CLI::App app{"Rényi capacities, error exponents and finite-length bounds"};
    app.require_subcommand(1);
    app.add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--workers", o.workers, "worker threads (default: RENYI_WORKERS or 1)");
    app.add_option("--seed", o.seed, "seed of randomized searches");
    app.add_flag("--require-binding", o.require_binding, "exit with status 3 unless some report is binding");
    app.add_option("--config", o.config, "JSON file of option values; flags take precedence");

    auto channel_opt = [&](CLI::App* s) { s->add_option("--channel", o.channel_spec, "channel name or JSON file"); };
    auto rate_opts = [&](CLI::App* s) {
        s->add_option("--rate", o.rate, "rate in nats");
        s->add_option("--rate-order", o.rate_order, "use the rate C_a of the channel");
    };
    auto code_opts = [&](CLI::App* s) {
        s->add_option("--M", o.m, "number of messages");
        s->add_option("--L", o.l, "list size");
        s->add_option("--n", o.n, "blocklength");
    };

    CLI::App* cap = app.add_subcommand("capacity", "Rényi capacity, center and prior");
    channel_opt(cap);
    cap->add_option("--order", o.order, "order alpha");
    cap->add_option("--curve", o.curve_below, "emit the curve on this many orders in (0,1)");
    cap->add_option("--curve-above", o.curve_above, "and this many in (1, 8]");
    cap->add_option("--width", o.width, "averaged capacity and center over relative width eps");
    cap->add_option("--tol", o.tol, "duality gap tolerance");

    CLI::App* exp = app.add_subcommand("exponent", "sp, avsp, haroutunian or order");
    exp->add_option("kind", o.kind)->required();
    channel_opt(exp);
    rate_opts(exp);
    exp->add_option("--eps", o.eps, "window width of the averaged exponent");
    exp->add_option("--cap", o.cap, "Haroutunian alphabet cap");
    exp->add_option("--tol", o.tol, "capacity tolerance");

    CLI::App* bnd = app.add_subcommand("bound", "finite-length inner and outer bounds");
    bnd->add_option("kind", o.kind)->required();
    channel_opt(bnd);
    bnd->add_option("--part", o.parts, "component channel, repeated once per time instance");
    code_opts(bnd);
    rate_opts(bnd);
    bnd->add_option("--kappa", o.kappa);
    bnd->add_option("--eps", o.eps);
    bnd->add_option("--phi", o.phi);
    bnd->add_option("--alpha", o.alpha);
    bnd->add_option("--alpha0", o.alpha0);
    bnd->add_option("--alpha1", o.alpha1);
    bnd->add_option("--gamma", o.gamma, "stationarity defect");
    bnd->add_option("--variant", o.variant, "monotone-center, constant-center or fixed-density");
    bnd->add_option("--prior", o.prior, "comma-separated prior on one component's inputs");
    bnd->add_option("--orders", o.orders, "comma-separated orders");

    CLI::App* poi = app.add_subcommand("poisson", "Poisson channel capacities and bounds");
    poi->add_option("kind", o.kind)->required();
    poi->add_option("--spec", o.spec, "JSON file or inline JSON");
    poi->add_option("--order", o.order);
    code_opts(poi);
    poi->add_option("--phi", o.phi);
    poi->add_option("--eps", o.eps);
    poi->add_option("--kappa", o.kappa);

    CLI::App* ver = app.add_subcommand("verify", "randomized inequality suites");
    ver->add_option("--suite", o.suite, "suite name, comma list, or all");
    ver->add_option("--instances", o.instances, "instances per suite (default: the suite's own)");

    CLI::App* rep = app.add_subcommand("report", "CSV table of a saved JSON report");
    rep->add_option("--input", o.input, "JSON report file")->required();

    for (CLI::App* s : {cap, exp, bnd, poi, ver, rep}) s->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : precondition;
    }

    unsigned w = o.workers;
    if (w == 0)
        if (const char* env = std::getenv("RENYI_WORKERS")) w = unsigned(std::strtoul(env, nullptr, 10));
    set_workers(w == 0 ? 1 : w);

    const std::string command = app.get_subcommands().front()->get_name();
    json config = {{"command", command}, {"seed", o.seed}, {"workers", workers()}};
    for (const CLI::App* a : {&app, app.get_subcommands().front()})
        for (const CLI::Option* opt : a->get_options())
            if (opt->count() > 0 && opt->get_name() != "--help") {
                const auto& res = opt->results();
                config[opt->get_name()] = res.size() == 1 ? json(res.front()) : json(res);
            }

    try {
        json doc = {{"command", command}, {"config", config}};
        bool any_binding = false;
        bool has_reports = false;
        bool passed = true;
        if (command == "capacity") {
            doc["results"] = run_capacity(o);
        } else if (command == "exponent") {
            doc["results"] = run_exponent(o);
        } else if (command == "bound") {
            doc["results"] = run_bound(o, any_binding, has_reports);
        } else if (command == "poisson") {
            doc["results"] = run_poisson(o, any_binding, has_reports);
        } else if (command == "verify") {
            doc["results"] = run_verify(o, passed);
        } else {
            const json saved = parse_json_text(read_file(o.input), o.input);
            const json& results = saved.is_object() && saved.contains("results") ? saved.at("results") : saved;
            if (!results.is_array()) throw io_error("report input needs a results array");
            out << report_csv(results);
            return ok;
        }
        emit(doc, o.format, out);
        if (!passed) return failure;
        if (o.require_binding && has_reports && !any_binding) {
            err << "no binding result\n";
            return non_binding;
        }
        return ok;
    } catch (const io_error& e) {
        err << "error: " << e.what() << "\n";
        return io;
    } catch (const precondition_error& e) {
        err << "precondition violated: " << e.what() << "\n";
        return precondition;
    } catch (const cap_exceeded& e) {
        err << "cap exceeded: " << e.what() << "\n";
        return precondition;
    } catch (const solver_error& e) {
        err << "solver error: " << e.what() << "\n";
        return failure;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return io;
    }
}

}  // namespace renyi::cli
