#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

namespace ellh {

// One unit of CLI work: a curve, a point, and a place to evaluate at.
// Rationals stay strings end to end so exact inputs survive the boundary.
struct JobSpec {
    std::array<std::string, 5> curve; // a1, a2, a3, a4, a6
    std::array<std::string, 2> point; // x, y
    std::string place = "global";     // "real" | "p:<prime>" | "global"
    double tol = 1e-12;
    std::optional<int> n_max;         // default: 64 real, 40 p-adic
    bool trace = false;
};

struct JobOutcome {
    int exit_code = 0; // 0 ok, 2 domain error, 3 resource error
    nlohmann::json doc;
};

JobSpec jobspec_from_json(const nlohmann::json& j);

JobOutcome run_job(const JobSpec& spec);

// JSONL in, JSONL out, one line per input line in order; per-line failures
// become error records. Returns the process exit code (4 on stream failure).
int run_batch(std::istream& in, std::ostream& out);

} // namespace ellh
