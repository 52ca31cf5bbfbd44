#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace cvf {

enum class CheckStatus { Pass, Fail, Reported };

inline const char* status_name(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Reported: return "reported";
    }
    return "?";
}

struct CheckOutcome {
    CheckStatus status = CheckStatus::Pass;
    std::string witness; // counterexample or computed finding; empty if none
};

inline CheckOutcome check_pass() { return {}; }
inline CheckOutcome check_fail(std::string witness) {
    return {CheckStatus::Fail, std::move(witness)};
}
inline CheckOutcome check_reported(std::string finding) {
    return {CheckStatus::Reported, std::move(finding)};
}

// One verifiable claim. The anchor is the mathematical statement under test,
// so reports are readable without the source.
struct Check {
    std::string name;
    std::string anchor;
    std::map<std::string, std::string> params;
    std::function<CheckOutcome()> run;
};

struct CheckResult {
    std::string name;
    std::string anchor;
    std::map<std::string, std::string> params;
    CheckStatus status = CheckStatus::Pass;
    std::string witness;
    long long millis = 0;
    bool internal_error = false; // an exception escaped the check body
};

// Runs checks concurrently (up to `jobs` workers) and returns results sorted
// by name, so the report is deterministic regardless of completion order.
std::vector<CheckResult> run_checks(const std::vector<Check>& checks, int jobs);

struct ReportSummary {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t reported = 0;
    bool internal_error = false;
};

ReportSummary summarize(const std::vector<CheckResult>& results);

// 0 all-pass, 1 any fail, 3 internal error.
int report_exit_code(const std::vector<CheckResult>& results);

void print_report(std::ostream& os, const std::vector<CheckResult>& results);

// {version, seed, checks: [...]}, checks sorted by name.
std::string report_to_json(const std::vector<CheckResult>& results, std::uint64_t seed);

} // namespace cvf
