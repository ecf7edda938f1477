#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "inctab/json_io.hpp"

namespace inctab {

struct VerifyConfig {
    int n_max = 6;              // two-row rectangles 2 x n, n <= n_max
    int identities_max_n = 30;  // binomial identities for N <= this
    int typeb_max_n = 6;        // brute-force type-B comparison
    int random_rows = 200;      // random tropical seeds
    unsigned long long seed = 20130611ULL;
    int jobs = 1;
};

struct CheckResult {
    std::string suite;
    std::string name;
    bool ok = true;
    std::size_t cases = 0;
    std::string witness;  // first failing case, empty on success
    double seconds = 0;
};

/// bijections, dynamics, words, frieze, csp, identities, all.
const std::vector<std::string>& suite_names();

/// Runs every check of a suite ("all" runs them all). Checks are spread over
/// config.jobs worker threads. Throws InputError for an unknown suite.
std::vector<CheckResult> run_suite(std::string_view suite, const VerifyConfig& config);

bool all_ok(const std::vector<CheckResult>& results) noexcept;

Json to_json(const std::vector<CheckResult>& results);
std::string render(const std::vector<CheckResult>& results);

}  // namespace inctab
