#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jumploci/jsonio.hpp"

namespace jumploci {

/// One batch invocation: command, optional subcommand/name arguments, input
/// document, and numeric options. Schema validation happens before dispatch.
struct Job {
    std::string command;
    std::vector<std::string> args;
    Json input;

    int k = 1;
    int kmax = 0; // 0: choose from the data (n - 1, at least 1)
    int samples = 25;
    std::uint64_t seed = 1;
    int support_bound = 12;
    int vertex_bound = 16;
    std::optional<long long> sqrt_d; // restrict inputs to Q(sqrt d)
};

struct JobResult {
    Json doc;
    /// 0 computed, 1 verdict-negative, 2 input error, 3 resource bound.
    int exit_code = 0;
};

/// Executes a job; never throws (errors become exit codes 2/3 with an
/// {"error": ...} document).
JobResult run_job(const Job& job);

} // namespace jumploci
