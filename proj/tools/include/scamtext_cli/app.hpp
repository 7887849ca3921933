#pragma once

#include <iosfwd>
#include <memory>

#include <CLI11.hpp>

namespace scamtext::cli {

/// Exit statuses shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kBadConfig = 2,
  kBadCorpus = 3,
  kCellFailure = 4,
};

/// Environment variable naming the default output directory for synth/run.
inline constexpr const char* kOutEnv = "SCAMTEXT_OUT";

class Cli {
 public:
  Cli(std::ostream& out, std::ostream& err);
  ~Cli();

  /// The parser, exposed so tests can inspect options and help text.
  CLI::App& app();

  /// Parses and dispatches; never throws. Returns the process exit status.
  int run(int argc, const char* const* argv);

 private:
  struct State;
  std::unique_ptr<State> state_;
};

}  // namespace scamtext::cli
