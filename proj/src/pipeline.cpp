#include "solcheck/pipeline.hpp"

#include <algorithm>
#include <ctime>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "solcheck/graph.hpp"
#include "solcheck/group.hpp"
#include "solcheck/oracle.hpp"
#include "solcheck/solubilizer.hpp"
#include "solcheck/subgroup.hpp"
#include "solcheck/version.hpp"

namespace solcheck {

namespace {

// Graphs of this many vertices and up (~1 GiB-scale bit matrices and long
// builds) need the explicit opt-in flag.
constexpr long long kLargeGraphVertexGate = 16384;

const std::map<std::string, Stage>& stageTable() {
  static const std::map<std::string, Stage> table = {
      {"classes", Stage::Classes},       {"sol", Stage::Sol},
      {"verify-tables", Stage::VerifyTables}, {"graph", Stage::Graph},
      {"color", Stage::Color},           {"hamiltonian", Stage::Hamiltonian},
      {"eulerian", Stage::Eulerian},     {"conjectures", Stage::Conjectures},
      {"appendix", Stage::Appendix},     {"export-adj", Stage::ExportAdj},
  };
  return table;
}

std::string sanitizedSpec(const std::string& spec) {
  std::string s = spec;
  std::replace(s.begin(), s.end(), ':', '-');
  return s;
}

std::string isoUtcNow() {
  std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

std::vector<Stage> expandStages(const std::vector<Stage>& requested) {
  std::set<Stage> want(requested.begin(), requested.end());
  if (want.count(Stage::Color) || want.count(Stage::Hamiltonian) ||
      want.count(Stage::ExportAdj))
    want.insert(Stage::Graph);
  if (want.count(Stage::Graph) || want.count(Stage::VerifyTables) ||
      want.count(Stage::Eulerian) || want.count(Stage::Conjectures) ||
      want.count(Stage::Appendix))
    want.insert(Stage::Sol);
  if (want.count(Stage::Sol)) want.insert(Stage::Classes);

  static const Stage canonical[] = {
      Stage::Classes,  Stage::Sol,         Stage::VerifyTables, Stage::Eulerian,
      Stage::Conjectures, Stage::Appendix, Stage::Graph,        Stage::Color,
      Stage::Hamiltonian, Stage::ExportAdj,
  };
  std::vector<Stage> ordered;
  for (Stage s : canonical)
    if (want.count(s)) ordered.push_back(s);
  return ordered;
}

}  // namespace

Stage parseStage(const std::string& name) {
  auto it = stageTable().find(name);
  if (it == stageTable().end())
    throw std::invalid_argument("unknown stage: \"" + name + "\"");
  return it->second;
}

std::string stageName(Stage s) {
  for (const auto& [name, stage] : stageTable())
    if (stage == s) return name;
  return "unknown";
}

RunResult run(const RunConfig& config) {
  GroupSpec spec = GroupSpec::parse(config.groupSpec);
  std::vector<Stage> stages = expandStages(config.stages);
  if (stages.empty()) throw std::invalid_argument("no stages requested");
  auto wants = [&stages](Stage s) {
    return std::find(stages.begin(), stages.end(), s) != stages.end();
  };

  if (wants(Stage::ExportAdj) && config.outDir.empty())
    throw std::invalid_argument("export-adj needs an output directory (--out)");
  if (wants(Stage::Graph) && spec.expectedOrder() - 1 >= kLargeGraphVertexGate &&
      !config.allowLarge)
    throw std::invalid_argument(
        "the graph on " + std::to_string(spec.expectedOrder() - 1) + " vertices for " +
        spec.text() + " is a large build; pass --allow-large to construct it");

  SolMode mode = SolMode::Shortcut;
  bool both = false;
  switch (config.mode) {
    case RunMode::Auto:
      mode = spec.minimalSimple() ? SolMode::Shortcut : SolMode::General;
      break;
    case RunMode::Shortcut:
    case RunMode::Both:
      if (!spec.minimalSimple())
        throw std::invalid_argument(
            "shortcut mode is only sound when every proper subgroup is soluble; " +
            spec.text() + " needs general mode");
      mode = SolMode::Shortcut;
      both = config.mode == RunMode::Both;
      break;
    case RunMode::General:
      mode = SolMode::General;
      break;
  }

  int threads = config.threads;
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads <= 0) threads = 1;

  RunResult result;
  VerificationReport& rep = result.report;
  rep.groupSpec = spec.text();
  rep.minimalSimple = spec.minimalSimple();
  rep.mode = both ? "both" : (mode == SolMode::Shortcut ? "shortcut" : "general");
  rep.toolVersion = kToolVersion;
  if (config.stampReports) rep.timestamp = isoUtcNow();

  std::shared_ptr<const Group> group = Group::build(spec);
  const Group& g = *group;
  rep.groupOrder = g.order();
  rep.involutionCount = g.involutionCount();

  SolubilizerSet set(group, mode, threads);
  std::optional<SolubilizerSet> crossSet;
  if (both) crossSet.emplace(group, SolMode::General, threads);

  std::optional<SolubilityGraph> graph;
  std::optional<ColoringResult> bestColoring;
  std::optional<HamiltonianResult> cycle;

  // maximal soluble overgroups per class, shared between the verification
  // stages that need them
  std::map<int, std::vector<std::vector<std::uint32_t>>> overgroupCache;
  auto overgroupsOf = [&](int classIndex) -> const std::vector<std::vector<std::uint32_t>>& {
    auto it = overgroupCache.find(classIndex);
    if (it == overgroupCache.end()) {
      const auto& rec = set.record(classIndex);
      it = overgroupCache
               .emplace(classIndex, maximalSolubleOvergroups(g, rec.representative, mode,
                                                             rec.members))
               .first;
    }
    return it->second;
  };

  for (Stage stage : stages) {
    switch (stage) {
      case Stage::Classes: {
        rep.classRows.clear();
        for (std::size_t c = 0; c < g.classes().size(); ++c) {
          const auto& cls = g.classes()[c];
          ClassRow row;
          row.classIndex = static_cast<int>(c);
          row.elementOrder = cls.elementOrder;
          row.classSize = static_cast<long long>(cls.members.size());
          row.normalizerOrder = cls.normalizerOrder;
          rep.classRows.push_back(row);
        }
        break;
      }

      case Stage::Sol: {
        for (const auto& rec : set.all()) {
          ClassRow& row = rep.classRows[static_cast<std::size_t>(rec.classIndex)];
          row.haveSol = true;
          row.solSize = rec.size;
          row.probability = rec.probability.str();
          row.isSubgroup = rec.isSubgroup;
          row.isSoluble = rec.isSoluble;
        }
        AxiomReport axioms = verifySolubilizerAxioms(set);
        for (const auto& v : axioms.violations)
          rep.mismatches.push_back("solubilizer axiom: " + v);
        if (both) {
          for (const auto& rec : set.all()) {
            const auto& other = crossSet->record(rec.classIndex);
            if (other.size != rec.size)
              rep.mismatches.push_back(
                  "mode disagreement on class " + std::to_string(rec.classIndex) +
                  ": shortcut " + std::to_string(rec.size) + " vs general " +
                  std::to_string(other.size));
          }
        }
        break;
      }

      case Stage::VerifyTables: {
        Coverage coverage = coverageOf(spec);
        if (!coverage.covered) {
          for (auto& row : rep.classRows) row.tableStatus = "not-covered";
          rep.notes.push_back("closed forms not applicable: " + coverage.reason);
        } else {
          static const std::vector<std::vector<std::uint32_t>> noOvergroups;
          for (auto& row : rep.classRows) {
            const auto& rec = set.record(row.classIndex);
            // The identity column has no overgroup tabulation; skip the search.
            const auto& overgroups =
                rec.elementOrder == 1 ? noOvergroups : overgroupsOf(row.classIndex);
            TableCheck check = verifyMaximalCounts(g, rec, overgroups);
            row.predictedSize = check.expectedSize;
            if (!check.covered) {
              row.tableStatus = "not-covered";
            } else if (!check.ok()) {
              row.tableStatus = "mismatch";
              for (const auto& n : check.notes)
                rep.mismatches.push_back("class " + std::to_string(row.classIndex) +
                                         " (order " + std::to_string(row.elementOrder) +
                                         "): " + n);
            } else if (check.countsWarnedOnly) {
              row.tableStatus = "warning";
              for (const auto& n : check.notes)
                rep.warnings.push_back("class " + std::to_string(row.classIndex) + ": " + n);
            } else {
              row.tableStatus = "match";
              for (const auto& n : check.notes)
                rep.notes.push_back("class " + std::to_string(row.classIndex) + ": " + n);
            }
          }
          InvolutionIdentity identity = involutionIdentityCheck(set);
          if (!identity.applicable) {
            rep.notes.push_back(
                "involution-count identity needs a single involution class");
          } else if (identity.holds) {
            rep.notes.push_back("involution-count identity holds: " +
                                std::to_string(identity.lhs) + " = " +
                                std::to_string(identity.rhs));
          } else {
            rep.mismatches.push_back("involution-count identity fails: " +
                                     std::to_string(identity.lhs) +
                                     " != " + std::to_string(identity.rhs));
          }
        }
        break;
      }

      case Stage::Eulerian: {
        EulerianVerdict verdict = eulerianCheck(set);
        rep.eulerian.present = true;
        rep.eulerian.eulerian = verdict.eulerian;
        if (!verdict.eulerian) {
          const auto& rec = set.record(verdict.witnessClass);
          rep.eulerian.witness = "class " + std::to_string(verdict.witnessClass) +
                                 " (order " + std::to_string(rec.elementOrder) +
                                 ") has odd |Sol| = " + std::to_string(verdict.witnessSolSize);
        }
        break;
      }

      case Stage::Conjectures: {
        ConjectureReport scan = scanConjectures(set);
        rep.conjectureViolations = scan.violations;
        for (const auto& v : scan.violations)
          rep.mismatches.push_back("conjecture violation: " + v);
        for (const auto& n : scan.notes) rep.notes.push_back(n);
        break;
      }

      case Stage::Appendix: {
        if (g.spec().family != Family::Psl3) {
          rep.notes.push_back(
              "pairwise intersection expectations exist only for psl3:3");
          break;
        }
        for (const auto& rec : set.all()) {
          if (rec.elementOrder == 1) continue;
          auto tally = intersectionTally(g, overgroupsOf(rec.classIndex));
          std::map<long long, int> byOrder;
          for (const auto& [fp, count] : tally) byOrder[fp.order] += count;
          AppendixCheck check = verifyAppendixCase(g, rec, tally);
          if (!check.applicable) continue;
          std::ostringstream line;
          line << "order " << rec.elementOrder << " (normalizer "
               << rec.normalizerOrder << "): pairwise intersection tally {";
          bool first = true;
          for (const auto& [order, count] : byOrder) {
            if (!first) line << ", ";
            first = false;
            line << order << ":" << count;
          }
          line << "} " << (check.ok ? "matches" : "MISMATCH");
          rep.notes.push_back(line.str());
          if (!check.ok)
            for (const auto& n : check.notes)
              rep.mismatches.push_back("intersection tally (class " +
                                       std::to_string(rec.classIndex) + "): " + n);
        }
        break;
      }

      case Stage::Graph: {
        graph.emplace(buildGraph(set));
        rep.graph.present = true;
        rep.graph.vertices = static_cast<long long>(graph->vertexCount());
        rep.graph.edges = graph->edgeCount();
        rep.graph.maxDegree = graph->maxDegree();
        rep.graph.connected = graph->connected();
        auto asym = graph->symmetryViolation();
        rep.graph.symmetric = !asym.has_value();
        if (asym)
          rep.mismatches.push_back("adjacency asymmetric between vertices " +
                                   std::to_string(asym->first) + " and " +
                                   std::to_string(asym->second));
        for (const auto& rec : set.all()) {
          if (rec.elementOrder == 1) continue;
          long long expected = rec.size - 2;
          long long got = graph->degree(rec.representative - 1);
          if (got != expected)
            rep.mismatches.push_back(
                "degree of class-" + std::to_string(rec.classIndex) +
                " representative is " + std::to_string(got) + ", expected |Sol|-2 = " +
                std::to_string(expected));
        }
        break;
      }

      case Stage::Color: {
        CliqueBound clique = cliqueLowerBound(set, &*graph);
        bestColoring.reset();
        auto consider = [&](ColoringResult&& candidate) {
          if (!coloringIsProper(*graph, candidate.colors)) {
            rep.mismatches.push_back("greedy coloring (" + colorOrderName(candidate.order) +
                                     ") produced an improper coloring");
            return;
          }
          if (!bestColoring || candidate.colorCount < bestColoring->colorCount)
            bestColoring = std::move(candidate);
        };
        consider(greedyColoring(*graph, ColorOrder::Canonical));
        consider(greedyColoring(*graph, ColorOrder::DegreeDescending));
        for (std::uint64_t s = 0; s < 32; ++s)
          consider(greedyColoring(*graph, ColorOrder::SeededRandom, config.seed + s));

        rep.coloring.present = true;
        rep.coloring.cliqueLowerBound = clique.bound;
        rep.coloring.cliqueWitness = clique.witness;
        rep.coloring.maxDegree = graph->maxDegree();
        if (!clique.verified)
          rep.mismatches.push_back("clique witness failed verification in the graph");
        if (bestColoring) {
          bestColoring->lowerBound = clique.bound;
          rep.coloring.colorCount = bestColoring->colorCount;
          rep.coloring.order = colorOrderName(bestColoring->order);
          rep.coloring.seed = bestColoring->seed;
          rep.coloring.chromaticCertified =
              clique.verified && bestColoring->colorCount == clique.bound;
          if (bestColoring->colorCount < clique.bound)
            rep.mismatches.push_back(
                "coloring used fewer colors than a verified clique needs");
        }
        break;
      }

      case Stage::Hamiltonian: {
        HamiltonianResult search = hamiltonianSearch(*graph, config.seed, config.restarts);
        rep.hamiltonian.present = true;
        rep.hamiltonian.found = search.found;
        rep.hamiltonian.seed = search.seed;
        rep.hamiltonian.restartsUsed = search.restartsUsed;
        rep.hamiltonian.cycleValidated =
            search.found && validateCycle(*graph, search.cycle);
        if (search.found && !rep.hamiltonian.cycleValidated)
          rep.mismatches.push_back("reported cycle failed independent validation");
        if (search.found) cycle = std::move(search);

        BottleneckReport bottleneck = dihedralBottleneckCheck(set);
        rep.bottleneck.present = true;
        rep.bottleneck.applicable = bottleneck.applicable;
        rep.bottleneck.involutions = bottleneck.involutions;
        rep.bottleneck.petals = bottleneck.petals;
        rep.bottleneck.bottleneck = bottleneck.bottleneck;
        rep.bottleneck.detail = bottleneck.detail;
        if (bottleneck.bottleneck && rep.hamiltonian.cycleValidated)
          rep.mismatches.push_back(
              "validated hamiltonian cycle contradicts the dihedral counting argument");
        break;
      }

      case Stage::ExportAdj:
        break;  // written with the other artifacts below
    }
  }

  if (!config.outDir.empty()) {
    std::filesystem::create_directories(config.outDir);
    const std::string base = sanitizedSpec(rep.groupSpec);
    auto emit = [&result](const std::filesystem::path& path, const std::string& content) {
      writeTextFile(path, content);
      result.artifacts.push_back(path);
    };
    if (wants(Stage::ExportAdj)) {
      auto path = config.outDir / (base + "-adjacency.txt");
      exportAdjacency(*graph, path);
      result.artifacts.push_back(path);
    }
    if (bestColoring) {
      auto path = config.outDir / (base + "-coloring.txt");
      exportColoring(bestColoring->colors, path);
      result.artifacts.push_back(path);
    }
    if (cycle) {
      auto path = config.outDir / (base + "-cycle.txt");
      exportCycle(cycle->cycle, path);
      result.artifacts.push_back(path);
    }
    emit(config.outDir / (base + "-report.txt"),
         renderReport(rep, ReportFormat::StructuredText));
    emit(config.outDir / (base + "-report.csv"), renderReport(rep, ReportFormat::Csv));
  }

  result.exitStatus = rep.mismatches.empty() ? 0 : 1;
  return result;
}

}  // namespace solcheck
