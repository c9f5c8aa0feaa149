#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qnss/groebner.hpp"
#include "qnss_cli/problem.hpp"

namespace qnss::cli {

// Process exit codes.
enum ExitCode : int {
  kPositive = 0,  // proved / member / valid / violation found
  kNegative = 1,  // refuted / non-member / invalid / no violation
  kUnknown = 2,
  kUsageError = 3,  // bad command line, syntax, shape or input errors
  kResourceError = 4,
  kInternalError = 5,
};

struct Flags {
  std::string order = "grevlex";  // grevlex, lex, grevlex-top, lex-top
  unsigned degree_cap = 40;
  std::size_t probes = 2;
  std::size_t trials = 256;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::optional<std::string> cache_dir;
  bool timings = false;
};

struct Envelope {
  nlohmann::json json;
  int exit_code = kPositive;
  std::string text;  // rendering for --format text
};

const std::vector<std::string>& command_names();
GroebnerOptions groebner_options(const Flags& flags);

/// Runs `command` on a parsed problem. Errors are reported inside the
/// envelope. verify-cert is not handled here.
Envelope dispatch(const std::string& command, const ProblemFile& problem, const Flags& flags);
/// Re-verifies a certificate, an evidence object, or every piece of evidence in an envelope.
Envelope verify_document(const nlohmann::json& document, const Flags& flags);

/// Reads the file (problem text or JSON for verify-cert) and runs the command.
Envelope run_file(const std::string& command, const std::string& path, const Flags& flags);

/// The envelope in the requested format, newline-terminated.
std::string render(const Envelope& e, const std::string& format);

}  // namespace qnss::cli
