#include "solcheck/reports.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace solcheck {

namespace {

const char* yesNo(bool b) { return b ? "yes" : "no"; }

std::string statusOrDash(const std::string& s) { return s.empty() ? "-" : s; }

std::string predictedOrDash(long long predicted) {
  return predicted < 0 ? "-" : std::to_string(predicted);
}

void renderText(const VerificationReport& r, std::ostringstream& out) {
  out << "solubilizer verification report\n";
  out << "group: " << r.groupSpec << "\n";
  out << "order: " << r.groupOrder << "\n";
  out << "minimal simple: " << yesNo(r.minimalSimple) << "\n";
  out << "mode: " << r.mode << "\n";
  out << "involutions: " << r.involutionCount << "\n";
  out << "tool version: " << r.toolVersion << "\n";
  if (r.timestamp) out << "timestamp: " << *r.timestamp << "\n";

  if (!r.classRows.empty()) {
    out << "\nclasses (" << r.classRows.size() << ")\n";
    out << "index | order | class size | normalizer | sol size | probability | "
           "subgroup | soluble | table status | predicted\n";
    for (const auto& row : r.classRows) {
      out << row.classIndex << " | " << row.elementOrder << " | " << row.classSize
          << " | " << row.normalizerOrder << " | ";
      if (row.haveSol) {
        out << row.solSize << " | " << row.probability << " | " << yesNo(row.isSubgroup)
            << " | " << yesNo(row.isSubgroup && row.isSoluble) << " | ";
      } else {
        out << "- | - | - | - | ";
      }
      out << statusOrDash(row.tableStatus) << " | " << predictedOrDash(row.predictedSize)
          << "\n";
    }
  }

  if (r.graph.present) {
    out << "\ngraph\n";
    out << "vertices: " << r.graph.vertices << "\n";
    out << "edges: " << r.graph.edges << "\n";
    out << "max degree: " << r.graph.maxDegree << "\n";
    out << "connected: " << yesNo(r.graph.connected) << "\n";
    out << "symmetric: " << yesNo(r.graph.symmetric) << "\n";
  }
  if (r.eulerian.present) {
    out << "\neulerian: " << yesNo(r.eulerian.eulerian) << "\n";
    if (!r.eulerian.witness.empty()) out << "witness: " << r.eulerian.witness << "\n";
  }
  if (r.coloring.present) {
    out << "\ncoloring\n";
    out << "colors found: " << r.coloring.colorCount << "\n";
    out << "order: " << r.coloring.order << "\n";
    out << "seed: " << r.coloring.seed << "\n";
    out << "clique lower bound: " << r.coloring.cliqueLowerBound << " ("
        << r.coloring.cliqueWitness << ")\n";
    out << "max degree: " << r.coloring.maxDegree << "\n";
    out << "bracket: " << r.coloring.cliqueLowerBound
        << " <= chromatic number <= " << r.coloring.colorCount << "\n";
    out << "chromatic number certified: " << yesNo(r.coloring.chromaticCertified) << "\n";
  }
  if (r.hamiltonian.present) {
    out << "\nhamiltonian\n";
    out << "cycle found: " << yesNo(r.hamiltonian.found) << "\n";
    out << "seed: " << r.hamiltonian.seed << "\n";
    out << "restarts used: " << r.hamiltonian.restartsUsed << "\n";
    out << "cycle validated: " << yesNo(r.hamiltonian.cycleValidated) << "\n";
  }
  if (r.bottleneck.present) {
    out << "\ndihedral bottleneck\n";
    out << "applicable: " << yesNo(r.bottleneck.applicable) << "\n";
    out << "involutions: " << r.bottleneck.involutions << "\n";
    out << "petals: " << r.bottleneck.petals << "\n";
    out << "bottleneck: " << yesNo(r.bottleneck.bottleneck) << "\n";
    if (!r.bottleneck.detail.empty()) out << "detail: " << r.bottleneck.detail << "\n";
  }
  if (!r.conjectureViolations.empty()) {
    out << "\nconjecture violations (" << r.conjectureViolations.size() << ")\n";
    for (const auto& v : r.conjectureViolations) out << "- " << v << "\n";
  }
  if (!r.notes.empty()) {
    out << "\nnotes\n";
    for (const auto& n : r.notes) out << "- " << n << "\n";
  }
  if (!r.warnings.empty()) {
    out << "\nwarnings (" << r.warnings.size() << ")\n";
    for (const auto& w : r.warnings) out << "- " << w << "\n";
  }
  out << "\nmismatches: " << r.mismatches.size() << "\n";
  for (const auto& m : r.mismatches) out << "- " << m << "\n";
}

void renderCsv(const VerificationReport& r, std::ostringstream& out) {
  out << "# summary\n";
  out << "key,value\n";
  out << "group," << r.groupSpec << "\n";
  out << "order," << r.groupOrder << "\n";
  out << "minimal-simple," << yesNo(r.minimalSimple) << "\n";
  out << "mode," << r.mode << "\n";
  out << "involutions," << r.involutionCount << "\n";
  out << "tool-version," << r.toolVersion << "\n";
  if (r.timestamp) out << "timestamp," << *r.timestamp << "\n";
  out << "mismatches," << r.mismatches.size() << "\n";

  if (!r.classRows.empty()) {
    out << "\n# classes\n";
    out << "index,element-order,class-size,normalizer-order,sol-size,probability,"
           "is-subgroup,is-soluble,table-status,predicted-size\n";
    for (const auto& row : r.classRows) {
      out << row.classIndex << "," << row.elementOrder << "," << row.classSize << ","
          << row.normalizerOrder << ",";
      if (row.haveSol) {
        out << row.solSize << "," << row.probability << "," << yesNo(row.isSubgroup)
            << "," << yesNo(row.isSubgroup && row.isSoluble) << ",";
      } else {
        out << "-,-,-,-,";
      }
      out << statusOrDash(row.tableStatus) << "," << predictedOrDash(row.predictedSize)
          << "\n";
    }
  }

  if (r.graph.present) {
    out << "\n# graph\n";
    out << "vertices,edges,max-degree,connected,symmetric\n";
    out << r.graph.vertices << "," << r.graph.edges << "," << r.graph.maxDegree << ","
        << yesNo(r.graph.connected) << "," << yesNo(r.graph.symmetric) << "\n";
  }
  if (r.eulerian.present) {
    out << "\n# eulerian\n";
    out << "eulerian,witness\n";
    out << yesNo(r.eulerian.eulerian) << ","
        << (r.eulerian.witness.empty() ? "-" : r.eulerian.witness) << "\n";
  }
  if (r.coloring.present) {
    out << "\n# coloring\n";
    out << "colors,order,seed,clique-lower-bound,max-degree,certified\n";
    out << r.coloring.colorCount << "," << r.coloring.order << "," << r.coloring.seed
        << "," << r.coloring.cliqueLowerBound << "," << r.coloring.maxDegree << ","
        << yesNo(r.coloring.chromaticCertified) << "\n";
  }
  if (r.hamiltonian.present) {
    out << "\n# hamiltonian\n";
    out << "found,seed,restarts,validated\n";
    out << yesNo(r.hamiltonian.found) << "," << r.hamiltonian.seed << ","
        << r.hamiltonian.restartsUsed << "," << yesNo(r.hamiltonian.cycleValidated)
        << "\n";
  }
  if (r.bottleneck.present) {
    out << "\n# bottleneck\n";
    out << "applicable,involutions,petals,bottleneck\n";
    out << yesNo(r.bottleneck.applicable) << "," << r.bottleneck.involutions << ","
        << r.bottleneck.petals << "," << yesNo(r.bottleneck.bottleneck) << "\n";
  }
  auto listTable = [&out](const char* name, const std::vector<std::string>& items) {
    if (items.empty()) return;
    out << "\n# " << name << "\n";
    out << "message\n";
    for (const auto& item : items) out << item << "\n";
  };
  listTable("conjecture-violations", r.conjectureViolations);
  listTable("notes", r.notes);
  listTable("warnings", r.warnings);
  listTable("mismatch-list", r.mismatches);
}

}  // namespace

std::string renderReport(const VerificationReport& r, ReportFormat format) {
  std::ostringstream out;
  if (format == ReportFormat::StructuredText)
    renderText(r, out);
  else
    renderCsv(r, out);
  return out.str();
}

void writeTextFile(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

void exportAdjacency(const SolubilityGraph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  const std::size_t n = g.vertexCount();
  out << n << "\n";
  std::string line(n, '0');
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) line[v] = g.adjacent(u, v) ? '1' : '0';
    out << line << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

SolubilityGraph importAdjacency(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path.string());
  std::string header;
  if (!std::getline(in, header))
    throw std::runtime_error(path.string() + ": line 1: missing vertex count");
  if (!header.empty() && header.back() == '\r') header.pop_back();
  std::size_t n = 0;
  try {
    std::size_t used = 0;
    long long parsed = std::stoll(header, &used);
    if (used != header.size() || parsed < 0)
      throw std::invalid_argument("trailing characters");
    n = static_cast<std::size_t>(parsed);
  } catch (const std::exception&) {
    throw std::runtime_error(path.string() + ": line 1: vertex count expected, got \"" +
                             header + "\"");
  }

  SolubilityGraph g(n);
  std::string line;
  for (std::size_t u = 0; u < n; ++u) {
    const std::string lineLabel = "line " + std::to_string(u + 2);
    if (!std::getline(in, line))
      throw std::runtime_error(path.string() + ": " + lineLabel + ": missing row");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.size() != n)
      throw std::runtime_error(path.string() + ": " + lineLabel + ": expected " +
                               std::to_string(n) + " characters, got " +
                               std::to_string(line.size()));
    for (std::size_t v = 0; v < n; ++v) {
      if (line[v] == '1')
        g.setDirected(u, v);
      else if (line[v] != '0')
        throw std::runtime_error(path.string() + ": " + lineLabel +
                                 ": invalid character '" + std::string(1, line[v]) +
                                 "'");
    }
  }

  for (std::size_t u = 0; u < n; ++u)
    if (g.adjacent(u, u))
      throw std::runtime_error(path.string() + ": nonzero diagonal at vertex " +
                               std::to_string(u + 1));
  if (auto bad = g.symmetryViolation())
    throw std::runtime_error(path.string() + ": adjacency not symmetric between rows " +
                             std::to_string(bad->first + 1) + " and " +
                             std::to_string(bad->second + 1));
  return g;
}

void exportCycle(const std::vector<std::uint32_t>& cycle,
                 const std::filesystem::path& path) {
  std::ostringstream out;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i) out << ' ';
    out << cycle[i] + 1;
  }
  out << "\n";
  writeTextFile(path, out.str());
}

void exportColoring(const std::vector<int>& colors, const std::filesystem::path& path) {
  std::ostringstream out;
  for (std::size_t v = 0; v < colors.size(); ++v)
    out << v + 1 << "," << colors[v] + 1 << "\n";
  writeTextFile(path, out.str());
}

}  // namespace solcheck
