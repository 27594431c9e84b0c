#ifndef BLOWUP_RUNNER_HPP
#define BLOWUP_RUNNER_HPP

#include <json.hpp>

#include "blowup/job.hpp"

namespace blowup {

inline constexpr const char* kToolkitVersion = "0.1.0";

// Exit codes: 0 all analyses completed (whatever the verdicts), 2 input
// error, 3 budget exceeded in some analysis, 4 internal invariant
// (theorem-implication) violation.
struct RunResult {
    int exitCode = 0;
    nlohmann::json machine;  // key-sorted structured report; no wall-clock data
    std::string human;
};

// Executes the requested analyses in order (presentations are cached and
// reused by later checkers); never silently skips — every requested analysis
// appears in the report with a status.
RunResult run_job(const Job& job);

// Canonical byte form of the machine report.
std::string emit_machine(const nlohmann::json& machine);

}  // namespace blowup

#endif
