// Named invariant checks grouped into runnable suites.  Each case computes
// a worst-case error over its pinned grid and compares it to a pinned
// tolerance; suites are conjunctions of cases.
#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lfrac/quadrature.hpp"

namespace lfrac {

struct VerifyCase {
    std::string name;
    double max_abs_err = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyCase> cases;
    bool overall = false;  // conjunction of the case passes
};

using VerifyFn = VerifyCase (*)(const QuadSpec&);

struct VerifyEntry {
    const char* name;
    const char* suite;
    VerifyFn fn;
};

/// Every registered case, in suite order.
std::span<const VerifyEntry> verify_cases();

/// Suite names accepted by run_suite, not including "all".
std::vector<std::string> verify_suites();

/// Run one suite (or "all").  Unknown suite: std::invalid_argument.
VerifyReport run_suite(std::string_view suite, const QuadSpec& spec);

/// Run a single case by name.  Unknown name: std::invalid_argument.
VerifyCase run_case(std::string_view name, const QuadSpec& spec);

}  // namespace lfrac
