// Command-line front end: parses flags, hands everything to the library
// pipeline, prints the report and artifact paths, and maps outcomes to exit
// codes (0 clean, 1 verification mismatch, 2 usage error).

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "solcheck/pipeline.hpp"
#include "solcheck/reports.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "solcheck: recomputes solubilizer classifications, solubility-graph "
      "properties, and conjecture checks by brute force and compares them "
      "with their closed forms"};
  app.get_formatter()->column_width(28);

  solcheck::RunConfig config;
  std::vector<std::string> stageNames;
  std::string modeName = "auto";
  bool csv = false;

  app.add_option("-g,--group", config.groupSpec,
                 "group to verify, e.g. psl2:8, psl3:3, sz:8")
      ->required();
  app.add_option("stages", stageNames,
                 "stages to run: classes, sol, verify-tables, graph, color, "
                 "hamiltonian, eulerian, conjectures, appendix, export-adj "
                 "(prerequisites are added automatically)")
      ->required();
  app.add_option("--seed", config.seed, "base seed for seeded searches")
      ->capture_default_str();
  app.add_option("--restarts", config.restarts,
                 "restart budget for the cycle search")
      ->capture_default_str();
  app.add_option("--threads", config.threads,
                 "worker threads (0 = all available)")
      ->capture_default_str();
  app.add_option("--out", config.outDir,
                 "directory for reports and exported artifacts");
  app.add_flag("--allow-large", config.allowLarge,
               "opt in to building graphs past the size gate");
  app.add_option("--mode", modeName,
                 "pair-solubility engine: auto, shortcut, general, both")
      ->check(CLI::IsMember({"auto", "shortcut", "general", "both"}))
      ->capture_default_str();
  app.add_flag("--stamp", config.stampReports,
               "include a UTC timestamp in reports (off keeps runs byte-reproducible)");
  app.add_flag("--csv", csv, "print the report in CSV instead of structured text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints help or the parse error itself
    return 2;
  }

  try {
    if (modeName == "shortcut")
      config.mode = solcheck::RunMode::Shortcut;
    else if (modeName == "general")
      config.mode = solcheck::RunMode::General;
    else if (modeName == "both")
      config.mode = solcheck::RunMode::Both;
    for (const auto& name : stageNames)
      config.stages.push_back(solcheck::parseStage(name));

    solcheck::RunResult result = solcheck::run(config);
    std::cout << renderReport(result.report, csv ? solcheck::ReportFormat::Csv
                                                 : solcheck::ReportFormat::StructuredText);
    for (const auto& path : result.artifacts)
      std::cout << "artifact: " << path.string() << "\n";
    return result.exitStatus;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
