// Python bindings: the full verification pipeline plus a few direct queries.
// Reports cross the boundary as plain dicts/lists so callers get native
// Python data instead of wrapped C++ objects.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "solcheck/graph.hpp"
#include "solcheck/group.hpp"
#include "solcheck/pipeline.hpp"
#include "solcheck/reports.hpp"
#include "solcheck/solubilizer.hpp"
#include "solcheck/version.hpp"

namespace py = pybind11;
using namespace solcheck;

namespace {

RunMode parseRunMode(const std::string& name) {
  if (name == "auto") return RunMode::Auto;
  if (name == "shortcut") return RunMode::Shortcut;
  if (name == "general") return RunMode::General;
  if (name == "both") return RunMode::Both;
  throw std::invalid_argument("unknown mode: \"" + name + "\" (want auto, shortcut, general, or both)");
}

SolMode parseSolMode(const GroupSpec& spec, const std::string& name) {
  if (name == "auto") return spec.minimalSimple() ? SolMode::Shortcut : SolMode::General;
  if (name == "shortcut") return SolMode::Shortcut;
  if (name == "general") return SolMode::General;
  throw std::invalid_argument("unknown mode: \"" + name + "\" (want auto, shortcut, or general)");
}

py::dict classRowDict(const ClassRow& row) {
  py::dict d;
  d["class_index"] = row.classIndex;
  d["element_order"] = row.elementOrder;
  d["class_size"] = row.classSize;
  d["normalizer_order"] = row.normalizerOrder;
  if (row.haveSol) {
    d["sol_size"] = row.solSize;
    d["probability"] = row.probability;
    d["is_subgroup"] = row.isSubgroup;
    d["is_soluble"] = row.isSoluble;
  }
  if (!row.tableStatus.empty()) {
    d["table_status"] = row.tableStatus;
    d["predicted_size"] = row.predictedSize;
  }
  return d;
}

py::dict reportDict(const VerificationReport& r) {
  py::dict d;
  d["group"] = r.groupSpec;
  d["order"] = r.groupOrder;
  d["minimal_simple"] = r.minimalSimple;
  d["mode"] = r.mode;
  d["involutions"] = r.involutionCount;
  d["tool_version"] = r.toolVersion;
  if (r.timestamp) d["timestamp"] = *r.timestamp;
  py::list rows;
  for (const auto& row : r.classRows) rows.append(classRowDict(row));
  d["classes"] = rows;
  if (r.graph.present) {
    py::dict s;
    s["vertices"] = r.graph.vertices;
    s["edges"] = r.graph.edges;
    s["max_degree"] = r.graph.maxDegree;
    s["connected"] = r.graph.connected;
    s["symmetric"] = r.graph.symmetric;
    d["graph"] = s;
  }
  if (r.eulerian.present) {
    py::dict s;
    s["eulerian"] = r.eulerian.eulerian;
    if (!r.eulerian.witness.empty()) s["witness"] = r.eulerian.witness;
    d["eulerian"] = s;
  }
  if (r.coloring.present) {
    py::dict s;
    s["colors"] = r.coloring.colorCount;
    s["order"] = r.coloring.order;
    s["seed"] = r.coloring.seed;
    s["clique_lower_bound"] = r.coloring.cliqueLowerBound;
    s["clique_witness"] = r.coloring.cliqueWitness;
    s["chromatic_certified"] = r.coloring.chromaticCertified;
    s["max_degree"] = r.coloring.maxDegree;
    d["coloring"] = s;
  }
  if (r.hamiltonian.present) {
    py::dict s;
    s["found"] = r.hamiltonian.found;
    s["seed"] = r.hamiltonian.seed;
    s["restarts_used"] = r.hamiltonian.restartsUsed;
    s["cycle_validated"] = r.hamiltonian.cycleValidated;
    d["hamiltonian"] = s;
  }
  if (r.bottleneck.present) {
    py::dict s;
    s["applicable"] = r.bottleneck.applicable;
    s["involutions"] = r.bottleneck.involutions;
    s["petals"] = r.bottleneck.petals;
    s["bottleneck"] = r.bottleneck.bottleneck;
    s["detail"] = r.bottleneck.detail;
    d["bottleneck"] = s;
  }
  d["conjecture_violations"] = r.conjectureViolations;
  d["notes"] = r.notes;
  d["warnings"] = r.warnings;
  d["mismatches"] = r.mismatches;
  return d;
}

}  // namespace

PYBIND11_MODULE(_solcheck, m) {
  m.doc() =
      "Brute-force verification of solubilizer classifications, solubility "
      "graphs, and the associated conjectures in the minimal simple groups";
  m.attr("__version__") = kToolVersion;

  m.def(
      "run",
      [](const std::string& group, const std::vector<std::string>& stages,
         std::uint64_t seed, long long restarts, int threads, const std::string& outDir,
         bool allowLarge, const std::string& mode, bool stamp) {
        RunConfig config;
        config.groupSpec = group;
        for (const auto& name : stages) config.stages.push_back(parseStage(name));
        config.seed = seed;
        config.restarts = restarts;
        config.threads = threads;
        config.outDir = outDir;
        config.allowLarge = allowLarge;
        config.mode = parseRunMode(mode);
        config.stampReports = stamp;
        RunResult result = run(config);
        py::dict d;
        d["exit_status"] = result.exitStatus;
        d["report"] = reportDict(result.report);
        py::list artifacts;
        for (const auto& p : result.artifacts) artifacts.append(p.string());
        d["artifacts"] = artifacts;
        return d;
      },
      py::arg("group"), py::arg("stages"), py::arg("seed") = 1,
      py::arg("restarts") = 1000, py::arg("threads") = 0, py::arg("out_dir") = "",
      py::arg("allow_large") = false, py::arg("mode") = "auto",
      py::arg("stamp") = false,
      "Run verification stages for a group and return "
      "{exit_status, report, artifacts}. Prerequisite stages are added "
      "automatically; exit_status is 0 exactly when nothing mismatched.");

  m.def(
      "group_order",
      [](const std::string& spec) { return Group::build(spec)->order(); },
      py::arg("group"), "Order of the group named by a spec such as 'psl2:8'.");

  m.def(
      "solubilizer_sizes",
      [](const std::string& specText, const std::string& mode, int threads) {
        GroupSpec spec = GroupSpec::parse(specText);
        SolubilizerSet set(Group::build(spec), parseSolMode(spec, mode),
                           threads > 0 ? threads : 1);
        py::list out;
        for (const auto& rec : set.all()) {
          py::dict d;
          d["class_index"] = rec.classIndex;
          d["element_order"] = rec.elementOrder;
          d["class_size"] = rec.classSize;
          d["normalizer_order"] = rec.normalizerOrder;
          d["sol_size"] = rec.size;
          d["probability"] = rec.probability.str();
          d["is_subgroup"] = rec.isSubgroup;
          d["is_soluble"] = rec.isSoluble;
          out.append(d);
        }
        return out;
      },
      py::arg("group"), py::arg("mode") = "auto", py::arg("threads") = 1,
      "Per-conjugacy-class solubilizer records: |Sol|, probability, and "
      "whether Sol is a (soluble) subgroup.");

  m.def(
      "stage_names",
      [] {
        return std::vector<std::string>{"classes",     "sol",        "verify-tables",
                                        "graph",       "color",      "hamiltonian",
                                        "eulerian",    "conjectures", "appendix",
                                        "export-adj"};
      },
      "All recognized stage names.");
}
