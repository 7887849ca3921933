#pragma once

#include <filesystem>

#include "scamtext/protocol.hpp"
#include "scamtext/tables.hpp"

namespace scamtext {

/// Writes the results directory:
///   tables/<name>.csv, tables/<name>.md
///   curves/<sd>-<classifier>-run<r>-{roc,pr}.csv   (hold-out curves)
///   runs/run-<r>.json                              (per-fold reports)
///   meta.json                                      (config, seeds, conventions, events)
/// Output contains no timestamps or host details, so equal inputs give
/// byte-identical directories.
void write_results(const std::filesystem::path& dir, const ExperimentResult& result, const ReportSet& tables);

/// Rebuilds an ExperimentResult from a directory written by write_results().
/// Hold-out score lists are not stored and come back empty. Throws
/// ConfigError when the directory or a file in it is missing or malformed.
ExperimentResult read_results(const std::filesystem::path& dir);

}  // namespace scamtext
