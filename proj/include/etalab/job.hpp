#pragma once

// Job files: a ring block, named module blocks and a job block, in a small
// INI-like syntax. The grammar is documented in docs/job-format.md.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "etalab/module.hpp"
#include "etalab/ring.hpp"

namespace etalab {

enum class Task { Check, Hilbert, Tor, Eta, GenFun, Rigidity, Report };

Task parse_task(const std::string& name);
std::string to_string(Task t);

enum class Format { Json, Csv, Text };

Format parse_format(const std::string& name);

struct JobSpec {
  RingDescriptor ring;
  std::vector<GradedPresentation> modules;  // user modules in declaration order
  std::optional<Task> task;
  std::optional<std::pair<std::string, std::string>> pair;
  std::optional<int> J, D;
  std::optional<Format> format;
  std::optional<std::string> out;

  /// A declared module, or the builtins R (free of rank 1) and k (residue field).
  const GradedPresentation& module(const std::string& name) const;
  bool has_module(const std::string& name) const;
  /// Same job over another field; relations are re-validated.
  JobSpec with_field(const FieldSpec& field) const;

 private:
  GradedPresentation builtin_R_, builtin_k_;
  friend JobSpec parse_job(std::string_view text);
};

/// Throws ParseError, UnknownVariable or HomogeneityError.
JobSpec parse_job(std::string_view text);

}  // namespace etalab
