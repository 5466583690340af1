// Artifact serialization tests. The adjacency format is pinned byte-exactly
// (header line with the vertex count, then one '0'/'1' row per vertex);
// report rendering is pinned by determinism (identical input, identical
// bytes) plus structural content, so the files stay diffable across runs.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "common.hpp"
#include "solcheck/graph.hpp"
#include "solcheck/reports.hpp"

using namespace solcheck;
using solcheck::testing::testSet;

namespace {

std::filesystem::path tempPath(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("solcheck-test-" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const std::filesystem::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  out << content;
}

std::string importError(const std::string& content) {
  auto p = tempPath("import-error.txt");
  spit(p, content);
  try {
    importAdjacency(p);
  } catch (const std::exception& e) {
    std::filesystem::remove(p);
    return e.what();
  }
  std::filesystem::remove(p);
  return "";
}

SolubilityGraph triangle() {
  SolubilityGraph g(3);
  g.addEdge(0, 1);
  g.addEdge(1, 2);
  g.addEdge(0, 2);
  return g;
}

SolubilityGraph& sharedGraphForReports() {
  static SolubilityGraph g = buildGraph(testSet("psl2:4", SolMode::Shortcut));
  return g;
}

VerificationReport sampleReport() {
  VerificationReport r;
  r.groupSpec = "psl2:4";
  r.groupOrder = 60;
  r.minimalSimple = true;
  r.mode = "shortcut";
  r.involutionCount = 15;
  r.toolVersion = "0.1.0";
  ClassRow identity;
  identity.classIndex = 0;
  identity.elementOrder = 1;
  identity.classSize = 1;
  identity.normalizerOrder = 60;
  identity.haveSol = true;
  identity.solSize = 60;
  identity.probability = "1";
  identity.isSubgroup = true;
  identity.isSoluble = false;
  identity.tableStatus = "match";
  identity.predictedSize = 60;
  r.classRows.push_back(identity);
  ClassRow invol;
  invol.classIndex = 1;
  invol.elementOrder = 2;
  invol.classSize = 15;
  invol.normalizerOrder = 4;
  invol.haveSol = true;
  invol.solSize = 36;
  invol.probability = "3/5";
  invol.tableStatus = "match";
  invol.predictedSize = 36;
  r.classRows.push_back(invol);
  r.graph.present = true;
  r.graph.vertices = 59;
  r.graph.edges = 571;
  r.graph.maxDegree = 34;
  r.graph.connected = true;
  r.graph.symmetric = true;
  r.eulerian.present = true;
  r.eulerian.eulerian = true;
  r.coloring.present = true;
  r.coloring.colorCount = 15;
  r.coloring.order = "degree-descending";
  r.coloring.seed = 7;
  r.coloring.cliqueLowerBound = 15;
  r.coloring.cliqueWitness = "the 15 involutions";
  r.coloring.chromaticCertified = true;
  r.coloring.maxDegree = 34;
  r.hamiltonian.present = true;
  r.hamiltonian.found = true;
  r.hamiltonian.seed = 1;
  r.hamiltonian.restartsUsed = 0;
  r.hamiltonian.cycleValidated = true;
  return r;
}

}  // namespace

TEST_CASE("adjacency export writes the pinned byte format") {
  auto p = tempPath("triangle.adj");
  exportAdjacency(triangle(), p);
  CHECK(slurp(p) == "3\n011\n101\n110\n");
  std::filesystem::remove(p);

  SolubilityGraph lonely(2);
  exportAdjacency(lonely, p);
  CHECK(slurp(p) == "2\n00\n00\n");
  std::filesystem::remove(p);
}

TEST_CASE("adjacency export and import roundtrip exactly") {
  auto p = tempPath("roundtrip.adj");

  SolubilityGraph t = triangle();
  exportAdjacency(t, p);
  SolubilityGraph back = importAdjacency(p);
  REQUIRE(back.vertexCount() == 3);
  for (std::size_t u = 0; u < 3; ++u)
    for (std::size_t v = 0; v < 3; ++v) CHECK(back.adjacent(u, v) == t.adjacent(u, v));
  CHECK(back.vertexElement.empty());  // imported graphs carry no element map

  SolubilityGraph& g4 = sharedGraphForReports();
  exportAdjacency(g4, p);
  SolubilityGraph g4back = importAdjacency(p);
  REQUIRE(g4back.vertexCount() == g4.vertexCount());
  CHECK(g4back.edgeCount() == g4.edgeCount());
  for (std::size_t u = 0; u < g4.vertexCount(); ++u)
    for (std::size_t v = 0; v < g4.vertexCount(); ++v)
      CHECK(g4back.adjacent(u, v) == g4.adjacent(u, v));

  // re-export must give byte-identical output
  auto p2 = tempPath("roundtrip2.adj");
  exportAdjacency(g4back, p2);
  CHECK(slurp(p) == slurp(p2));
  std::filesystem::remove(p);
  std::filesystem::remove(p2);
}

TEST_CASE("adjacency import rejects malformed input with named diagnostics") {
  // row of the wrong length, reported with its line number
  std::string wrongLength = importError("3\n011\n10\n110\n");
  CHECK(wrongLength.find("line 3") != std::string::npos);

  // missing rows
  CHECK(importError("3\n011\n101\n") != "");

  // asymmetric entry
  std::string asymmetric = importError("2\n01\n00\n");
  CHECK(asymmetric.find("symmetric") != std::string::npos);

  // nonzero diagonal
  std::string diagonal = importError("2\n10\n01\n");
  CHECK(diagonal.find("diagonal") != std::string::npos);

  // characters outside {0,1}
  std::string badChar = importError("2\n0x\nx0\n");
  CHECK(badChar.find("line 2") != std::string::npos);

  // unusable header
  CHECK(importError("zebra\n01\n10\n") != "");
  CHECK(importError("") != "");
}

TEST_CASE("cycle and coloring exports use 1-based indices") {
  auto p = tempPath("cycle.txt");
  exportCycle({0, 1, 2}, p);
  CHECK(slurp(p) == "1 2 3\n");
  exportCycle({2, 0, 1}, p);
  CHECK(slurp(p) == "3 1 2\n");
  std::filesystem::remove(p);

  auto pc = tempPath("coloring.txt");
  exportColoring({0, 1, 0}, pc);
  CHECK(slurp(pc) == "1,1\n2,2\n3,1\n");
  std::filesystem::remove(pc);
}

TEST_CASE("report rendering is deterministic and carries every section") {
  VerificationReport r = sampleReport();

  std::string text = renderReport(r, ReportFormat::StructuredText);
  CHECK(text == renderReport(r, ReportFormat::StructuredText));
  CHECK(text.find("psl2:4") != std::string::npos);
  CHECK(text.find("60") != std::string::npos);
  CHECK(text.find("36") != std::string::npos);
  CHECK(text.find("3/5") != std::string::npos);
  CHECK(text.find("571") != std::string::npos);
  CHECK(text.find("match") != std::string::npos);
  CHECK(text.find("degree-descending") != std::string::npos);
  CHECK(text.find("eulerian") != std::string::npos);
  CHECK(text.find("hamiltonian") != std::string::npos);
  // no timestamp unless explicitly stamped
  CHECK(text.find("timestamp") == std::string::npos);

  r.timestamp = "2026-01-01T00:00:00Z";
  std::string stamped = renderReport(r, ReportFormat::StructuredText);
  CHECK(stamped.find("2026-01-01T00:00:00Z") != std::string::npos);
  r.timestamp.reset();

  std::string csv = renderReport(r, ReportFormat::Csv);
  CHECK(csv == renderReport(r, ReportFormat::Csv));
  CHECK(csv.find("psl2:4") != std::string::npos);
  // the class table is a proper comma-separated table with a header
  std::istringstream lines(csv);
  std::string line;
  bool sawClassHeader = false;
  bool sawInvolRow = false;
  while (std::getline(lines, line)) {
    if (line.find("index,") == 0) sawClassHeader = true;
    if (line.find("1,2,15,4,") == 0) sawInvolRow = true;
  }
  CHECK(sawClassHeader);
  CHECK(sawInvolRow);
}

TEST_CASE("report rendering surfaces mismatches, warnings and omissions") {
  VerificationReport r = sampleReport();
  r.mismatches.push_back("class 1: solubilizer size 36 != predicted 38");
  r.warnings.push_back("small parameter: count rows degenerate");
  std::string text = renderReport(r, ReportFormat::StructuredText);
  CHECK(text.find("solubilizer size 36 != predicted 38") != std::string::npos);
  CHECK(text.find("small parameter") != std::string::npos);

  // sections that never ran stay absent rather than defaulted
  VerificationReport bare;
  bare.groupSpec = "psl2:8";
  bare.groupOrder = 504;
  bare.minimalSimple = true;
  bare.mode = "shortcut";
  bare.involutionCount = 63;
  bare.toolVersion = "0.1.0";
  std::string bareText = renderReport(bare, ReportFormat::StructuredText);
  CHECK(bareText.find("hamiltonian") == std::string::npos);
  CHECK(bareText.find("coloring") == std::string::npos);
  CHECK(renderReport(bare, ReportFormat::Csv).find("psl2:8") != std::string::npos);
}

TEST_CASE("text files are written and readable through the shared helper") {
  auto p = tempPath("write.txt");
  writeTextFile(p, "alpha\nbeta\n");
  CHECK(slurp(p) == "alpha\nbeta\n");
  std::filesystem::remove(p);
}
