#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "solcheck/graph.hpp"
#include "solcheck/oracle.hpp"
#include "solcheck/solubilizer.hpp"

namespace solcheck {

enum class ReportFormat { StructuredText, Csv };

struct ClassRow {
  int classIndex = 0;
  int elementOrder = 0;
  long long classSize = 0;
  long long normalizerOrder = 0;
  // filled by the sol stage
  bool haveSol = false;
  long long solSize = 0;
  std::string probability;
  bool isSubgroup = false;
  bool isSoluble = false;
  // filled by verify-tables
  std::string tableStatus;  // "match", "mismatch", "warning", "not-covered", ""
  long long predictedSize = -1;
};

struct GraphSection {
  bool present = false;
  long long vertices = 0;
  long long edges = 0;
  long long maxDegree = 0;
  bool connected = false;
  bool symmetric = false;
};

struct EulerianSection {
  bool present = false;
  bool eulerian = false;
  std::string witness;
};

struct ColoringSection {
  bool present = false;
  long long colorCount = 0;
  std::string order;
  std::uint64_t seed = 0;
  long long cliqueLowerBound = 0;
  std::string cliqueWitness;
  bool chromaticCertified = false;  // colorCount == cliqueLowerBound
  long long maxDegree = 0;
};

struct HamiltonianSection {
  bool present = false;
  bool found = false;
  std::uint64_t seed = 0;
  long long restartsUsed = 0;
  bool cycleValidated = false;
};

struct BottleneckSection {
  bool present = false;
  bool applicable = false;
  long long involutions = 0;
  long long petals = 0;
  bool bottleneck = false;
  std::string detail;
};

struct VerificationReport {
  std::string groupSpec;
  long long groupOrder = 0;
  bool minimalSimple = false;
  std::string mode;
  long long involutionCount = 0;
  std::string toolVersion;
  std::optional<std::string> timestamp;  // omitted unless explicitly stamped
  std::vector<ClassRow> classRows;
  GraphSection graph;
  EulerianSection eulerian;
  ColoringSection coloring;
  HamiltonianSection hamiltonian;
  BottleneckSection bottleneck;
  std::vector<std::string> conjectureViolations;
  std::vector<std::string> notes;  // informational: tally matches, identity rows, ...
  std::vector<std::string> warnings;
  std::vector<std::string> mismatches;  // any entry means exit status 1
};

std::string renderReport(const VerificationReport& r, ReportFormat format);
void writeTextFile(const std::filesystem::path& path, const std::string& content);

// Adjacency file format: first line the vertex count n in decimal, then n
// lines of n characters '0'/'1', newline-terminated.
void exportAdjacency(const SolubilityGraph& g, const std::filesystem::path& path);
SolubilityGraph importAdjacency(const std::filesystem::path& path);

// Cycle file: one line of n whitespace-separated 1-based vertex indices.
void exportCycle(const std::vector<std::uint32_t>& cycle, const std::filesystem::path& path);
// Coloring file: n lines "vertexIndex,colorId", both 1-based.
void exportColoring(const std::vector<int>& colors, const std::filesystem::path& path);

}  // namespace solcheck
