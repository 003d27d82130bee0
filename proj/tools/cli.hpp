#pragma once

// Command-line front end: argument and file parsing, dispatch, and JSON/CSV
// report emission. Exit codes: 0 ok, 1 failed verification or solver error,
// 2 precondition or usage error, 3 no binding result under --require-binding,
// 4 input/output error.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "renyi/bounds.hpp"
#include "renyi/channels.hpp"
#include "renyi/poisson.hpp"

namespace renyi::cli {

// Objects keep insertion order, so reports and CSV columns read naturally.
using json = nlohmann::ordered_json;

enum exit_code : int { ok = 0, failure = 1, precondition = 2, non_binding = 3, io = 4 };

class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

// bsc:p, bec:e, z:p, haroutunian, matrix:r;r;... with comma-separated rows,
// or the path of a JSON file holding {"rows": [[...], ...]} or a bare array.
channel parse_channel(const std::string& spec);

// Inline JSON (starting with '{') or the path of a JSON file.
poisson_spec parse_poisson_spec(const std::string& spec_or_path);
poisson_spec poisson_spec_from_json(const json& j);

// Doubles rounded to 12 significant digits; non-finite values as the strings
// "inf", "-inf" and "nan".
json number(double v);
double to_double(const json& j);

json to_json(const bound_report& r);
bound_report bound_from_json(const json& j);

// One row per result object; nested objects flatten to dotted keys and
// arrays to ';'-joined cells. Columns appear in first-seen order. An empty
// list gives the header line alone, from `columns`.
std::string report_csv(const json& results, const std::vector<std::string>& columns = {});

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace renyi::cli
