#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "polysum/qform.hpp"
#include "polysum/report.hpp"

namespace polysum {

// Exit statuses of the command-line tool.
constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

// Runs one invocation (args exclude the program name). Reports go to `out`, diagnostics and timing to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "x:q:r1,r2" with an optional ":>=lb" suffix.
std::string format_condition(size_t var, const CongruenceCondition& c);
std::vector<std::string> format_conditions(const DiagonalForm& f);

}  // namespace polysum
