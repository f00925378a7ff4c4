#pragma once

// Command-line front end.  Every subcommand writes one report to `out`:
// a JSON document (schema_version 1) or plain text, selected by --format.

#include <iosfwd>
#include <string>
#include <vector>

namespace heckelab::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { ok = 0, usage = 2, identity = 3 };

/// args excludes the program name.  Usage and domain errors return 2;
/// identity violations return 3 after printing a diagnostic JSON object.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heckelab::cli
