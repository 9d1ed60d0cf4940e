#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace umbral {

struct SuiteInstance {
    std::string params;
    bool passed = false;
    std::string witness; // failure detail, or informational notes on pass
};

struct SuiteReport {
    std::string suite_name;
    unsigned nmax = 0;
    std::uint64_t seed = 0;
    double elapsed_seconds = 0.0;
    std::vector<SuiteInstance> instances;

    bool all_passed() const;
};

struct SuiteOptions {
    std::optional<unsigned> nmax; // per-suite default when absent
    std::uint64_t seed = 0;
};

std::vector<std::string> list_suites();

/// Runs one named verification suite; unknown names raise InputError.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

nlohmann::ordered_json suite_report_to_json(const SuiteReport& report);

} // namespace umbral
