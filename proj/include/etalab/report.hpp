#pragma once

// Task pipelines (checks, resolutions, Tor, invariants) and report rendering.

#include <string>

#include <json.hpp>

#include "etalab/job.hpp"

namespace etalab {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,       // unreadable job file or bad arguments
  kExitHypothesis = 2,  // a standing hypothesis fails
  kExitBound = 3,       // J or D too small for the request
  kExitInternal = 4,
};

struct RunResult {
  Json report;
  int exit_code = kExitOk;
};

/// Runs task on job. Engine errors become an error object in the report and
/// the matching exit code; the sections computed before the error are kept.
RunResult run(const JobSpec& job, Task task);

/// Exit code for an error kind such as "InsufficientWindow".
int exit_code_for(const std::string& kind);

/// JSON (two-space indent, trailing newline), CSV or plain text.
std::string render(const Json& report, Format format);

}  // namespace etalab
