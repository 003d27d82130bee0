#pragma once

// Named randomized verification suites. Each instance draws from its own
// substream, so a suite is a pure function of (name, instances, seed).

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace renyi::suites {

struct suite_result {
    std::string name;
    std::size_t instances = 0;
    std::size_t violations = 0;
    double worst_slack = 0.0;  // smallest (right side - left side); negative means violated
    double tolerance = 0.0;    // slack below -tolerance counts as a violation
    bool passed = false;
    double seconds = 0.0;
    std::vector<std::string> notes;
};

// pinsker, shiryaev, dpi, order, convexity, tilt, ehb, taylor, moment, berry,
// additivity, product_center, feedback_cap, sandwich, feedback.
const std::vector<std::string>& suite_names();

// Default instance count of a suite.
std::size_t default_instances(const std::string& name);

// Throws precondition_error on an unknown name.
suite_result run_suite(const std::string& name, std::size_t instances, std::uint64_t seed);

}  // namespace renyi::suites
