#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "solcheck/reports.hpp"

namespace solcheck {

enum class Stage {
  Classes,
  Sol,
  VerifyTables,
  Graph,
  Color,
  Hamiltonian,
  Eulerian,
  Conjectures,
  Appendix,
  ExportAdj,
};
// parses the CLI stage names ("classes", "sol", "verify-tables", ...)
Stage parseStage(const std::string& name);
std::string stageName(Stage s);

enum class RunMode { Auto, Shortcut, General, Both };

struct RunConfig {
  std::string groupSpec;
  std::vector<Stage> stages;
  std::uint64_t seed = 1;
  long long restarts = 1000;
  int threads = 0;  // 0 = hardware concurrency
  std::filesystem::path outDir;
  bool allowLarge = false;
  RunMode mode = RunMode::Auto;
  bool stampReports = false;
};

struct RunResult {
  int exitStatus = 0;  // 0 clean, 1 verification mismatch
  VerificationReport report;
  std::vector<std::filesystem::path> artifacts;
};

// Executes the requested stages (prerequisites added automatically) and
// writes report/artifact files under outDir when it is set.
RunResult run(const RunConfig& config);

}  // namespace solcheck
