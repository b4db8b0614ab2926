#pragma once

#include <atomic>
#include <ostream>
#include <string>
#include <vector>

namespace cuboid::cli {

/// Process exit codes; a total function of the command's result.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,        // bad arguments or unparseable rationals
    kUnresolved = 2,   // eval hit the divisor budget
    kIoError = 3,
    kCheckFailed = 4,  // verify-tuple: not a solution; nogo-report: a violation
};

/// Runs one subcommand. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::atomic<bool>* stop_flag = nullptr);

int cmd_eval(const std::string& b, const std::string& c, std::uint64_t max_trials, std::ostream& out,
             std::ostream& err);

int cmd_verify_tuple(const std::vector<std::string>& values, std::ostream& out, std::ostream& err);

int cmd_nogo_report(int height, std::ostream& out);

}  // namespace cuboid::cli
