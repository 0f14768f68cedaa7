#pragma once

#include "msplect/parser.hpp"
#include "msplect/report.hpp"

#include <optional>

namespace msplect {

struct RunOptions {
    std::optional<unsigned> seed;
    std::optional<PairingSign> convention_override; // --convention flag
};

// Executes the workspace task list; deterministic given file + seed.
// Throws ParseError for malformed task specifications (usage errors).
Report run_workspace(const WorkspaceFile& ws, const RunOptions& opts);

Report run_check_identities(int dim, int degree, int cases, unsigned seed);

} // namespace msplect
