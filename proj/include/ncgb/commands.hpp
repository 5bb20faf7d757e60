#pragma once

#include <optional>
#include <ostream>
#include <string_view>

#include "ncgb/completion.hpp"
#include "ncgb/oracle.hpp"
#include "ncgb/parser.hpp"

namespace ncgb {

enum ExitCode : int {
    kExitOk = 0,
    kExitInputError = 1,
    kExitGuardHit = 2,
    kExitInternalError = 3,
};

// One runner per CLI subcommand. Results go to `out`, diagnostics to
// `err`; the return value is the process exit code. Library errors
// propagate to the caller.

int run_gb(const ProblemFile& problem, const CompletionGuard& guard, std::ostream& out, std::ostream& err);
int run_truncate(const ProblemFile& problem, int degree, std::ostream& out, std::ostream& err);
int run_mingen(const ProblemFile& problem, bool with_basis, std::ostream& out, std::ostream& err);
int run_stdbasis(const ProblemFile& problem, std::optional<int> certify_degree, std::ostream& out,
                 std::ostream& err);
int run_reduce(const ProblemFile& problem, std::string_view poly, bool certificate, std::ostream& out,
               std::ostream& err);
int run_dims(const ProblemFile& problem, int degree, bool json, const OracleLimits& limits, std::ostream& out,
             std::ostream& err);

} // namespace ncgb
