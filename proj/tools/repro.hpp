#pragma once

#include <string>

namespace qsc {

/// Replays a named worked example and diffs the canonical JSON against the
/// golden file under fixtures/golden/. `name` = "list" prints the catalog.
/// Returns the process exit code (0 match, 1 mismatch, 2 unknown name).
int run_repro(const std::string& name, bool verbose);

}  // namespace qsc
