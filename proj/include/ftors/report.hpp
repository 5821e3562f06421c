#pragma once

#include <cstdint>
#include <string>

#include "ftors/representation.hpp"

namespace ftors {

enum class OutputFormat { Text, Json, Dot };

struct RunConfig {
  int prime = 5;
  std::uint64_t seed = 0;
  int dim_bound = 12;
  int loewy_bound = 4;
  OutputFormat format = OutputFormat::Text;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitInconclusive = 3;
inline constexpr int kExitIo = 4;

struct Report {
  int exit_code = kExitOk;
  std::string body;     // report content, empty on error
  std::string message;  // diagnostic for stderr
};

/// Throws PreconditionError on an invalid prime or bound.
void validate_config(const RunConfig& config);

/// Each builder is a pure function of its inputs; exceptions are mapped to
/// exit codes (bad input 2, inconclusive 3, failed verification 1).
Report classify_report(const QuiverPtr& q, const RunConfig& config);
Report knit_report(const QuiverPtr& q, const RunConfig& config);
Report tors_report(const QuiverPtr& q, const RunConfig& config);
Report extpair_report(const QuiverPtr& q, const RunConfig& config);
Report nocover_report(const QuiverPtr& q, const RunConfig& config);

/// Runs a subcommand by name on quiver text.
Report run_subcommand(const std::string& name, const std::string& quiver_text, const RunConfig& config);

}  // namespace ftors
