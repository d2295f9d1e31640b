#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "uirg/catalog.hpp"
#include "uirg/graph.hpp"

namespace uirg {

inline constexpr const char* kReportSchema = "uirg-report/1";

/// Theorem identifiers accepted by verify().
const std::vector<std::string>& theorem_ids();

struct ClassificationRecord {
  std::string display_name;
  int order = 0;
  int characteristic = 0;
  bool local = false;
  std::optional<int> n_generators;  // local rings only
  std::string graph6;
  bool line_graph_side = false;
  bool line_ring_side = false;
  bool coline_graph_side = false;
  bool coline_ring_side = false;
  bool agree = false;
  std::string line_rule;
  std::string coline_rule;
  std::string digest;
  std::vector<std::string> notes;

  friend bool operator==(const ClassificationRecord&, const ClassificationRecord&) = default;
};

struct ClassificationReport {
  std::string theorem;
  std::vector<ClassificationRecord> records;
  int counterexamples = 0;
  double runtime_seconds = 0.0;
};

/// Hook applied to each Γ_U graph before the graph-side decisions (fault injection).
using GraphMutator = std::function<void(const CatalogEntry&, SimpleGraph&)>;

/// Disagreement on the predicate the theorem id covers: line for "2-*", co-line for "3-*",
/// both for "all".
bool is_counterexample(const ClassificationRecord& record, const std::string& theorem);

/// Compares graph-side and ring-side verdicts on every applicable entry.
/// Throws std::invalid_argument for an unknown theorem id.
ClassificationReport verify(const std::string& theorem, const std::vector<CatalogEntry>& catalog,
                            const GraphMutator& mutate = {});

/// Record for a single entry, independent of theorem filtering.
ClassificationRecord classify_entry(const CatalogEntry& entry, const GraphMutator& mutate = {});

std::string report_to_json(const ClassificationReport& report, int indent = 2);
ClassificationReport report_from_json(const std::string& text);

}  // namespace uirg
