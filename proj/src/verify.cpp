#include "uirg/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "uirg/line_graph.hpp"
#include "uirg/upper_ideal_graph.hpp"

namespace uirg {

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {"2-nonlocal", "2-local", "3-nonlocal", "3-local", "all"};
  return ids;
}

ClassificationRecord classify_entry(const CatalogEntry& entry, const GraphMutator& mutate) {
  const FiniteRing& r = entry.ring;
  ClassificationRecord rec;
  rec.display_name = entry.display_name;
  rec.order = r.order();
  rec.characteristic = characteristic(r);
  rec.local = entry.local();
  if (rec.local) rec.n_generators = minimal_generator_count(r).count;
  rec.digest = table_digest(r);

  SimpleGraph g = upper_ideal_graph(r).graph;
  if (mutate) mutate(entry, g);
  rec.graph6 = to_graph6(g);
  rec.line_graph_side = is_line_graph(g);
  rec.coline_graph_side = is_complement_of_line_graph(g);

  const RingVerdict v = classify(r, entry.factors);
  rec.line_ring_side = v.line.holds;
  rec.coline_ring_side = v.coline.holds;
  rec.line_rule = std::string(rule_id(v.line.rule));
  rec.coline_rule = std::string(rule_id(v.coline.rule));
  rec.agree = rec.line_graph_side == rec.line_ring_side && rec.coline_graph_side == rec.coline_ring_side;

  if (v.coline.rule == Rule::CharTwoPowerAtLeast8) rec.notes.emplace_back("characteristic-0 branch vacuous (finite ring)");
  if (v.coline.rule == Rule::CharTwoConditions)
    rec.notes.emplace_back("generator condition read as x1^2 = x2^2 = 0 and x1*x2 != 0");
  return rec;
}

bool is_counterexample(const ClassificationRecord& record, const std::string& theorem) {
  if (theorem.rfind("2-", 0) == 0) return record.line_graph_side != record.line_ring_side;
  if (theorem.rfind("3-", 0) == 0) return record.coline_graph_side != record.coline_ring_side;
  return !record.agree;
}

ClassificationReport verify(const std::string& theorem, const std::vector<CatalogEntry>& catalog,
                            const GraphMutator& mutate) {
  const auto& ids = theorem_ids();
  if (std::find(ids.begin(), ids.end(), theorem) == ids.end())
    throw std::invalid_argument("unknown theorem id '" + theorem + "'");
  const auto start = std::chrono::steady_clock::now();
  const bool want_local = theorem == "2-local" || theorem == "3-local" || theorem == "all";
  const bool want_nonlocal = theorem == "2-nonlocal" || theorem == "3-nonlocal" || theorem == "all";

  ClassificationReport report;
  report.theorem = theorem;
  for (const auto& entry : catalog) {
    if (entry.local() ? !want_local : !want_nonlocal) continue;
    report.records.push_back(classify_entry(entry, mutate));
  }
  std::stable_sort(report.records.begin(), report.records.end(), [](const auto& a, const auto& b) {
    return std::make_pair(a.order, a.display_name) < std::make_pair(b.order, b.display_name);
  });
  report.counterexamples = static_cast<int>(std::count_if(
      report.records.begin(), report.records.end(), [&](const auto& r) { return is_counterexample(r, theorem); }));
  report.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

nlohmann::json record_json(const ClassificationRecord& r) {
  nlohmann::json j;
  j["display_name"] = r.display_name;
  j["order"] = r.order;
  j["char"] = r.characteristic;
  j["local"] = r.local;
  j["n_generators"] = r.n_generators ? nlohmann::json(*r.n_generators) : nlohmann::json(nullptr);
  j["graph6"] = r.graph6;
  j["line_graph_side"] = r.line_graph_side;
  j["line_ring_side"] = r.line_ring_side;
  j["coline_graph_side"] = r.coline_graph_side;
  j["coline_ring_side"] = r.coline_ring_side;
  j["agree"] = r.agree;
  j["rule"] = {{"line", r.line_rule}, {"coline", r.coline_rule}};
  j["digest"] = r.digest;
  j["notes"] = r.notes;
  return j;
}

ClassificationRecord record_from_json(const nlohmann::json& j) {
  ClassificationRecord r;
  r.display_name = j.at("display_name").get<std::string>();
  r.order = j.at("order").get<int>();
  r.characteristic = j.at("char").get<int>();
  r.local = j.at("local").get<bool>();
  if (!j.at("n_generators").is_null()) r.n_generators = j.at("n_generators").get<int>();
  r.graph6 = j.at("graph6").get<std::string>();
  r.line_graph_side = j.at("line_graph_side").get<bool>();
  r.line_ring_side = j.at("line_ring_side").get<bool>();
  r.coline_graph_side = j.at("coline_graph_side").get<bool>();
  r.coline_ring_side = j.at("coline_ring_side").get<bool>();
  r.agree = j.at("agree").get<bool>();
  r.line_rule = j.at("rule").at("line").get<std::string>();
  r.coline_rule = j.at("rule").at("coline").get<std::string>();
  r.digest = j.at("digest").get<std::string>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

}  // namespace

std::string report_to_json(const ClassificationReport& report, int indent) {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["theorem"] = report.theorem;
  j["records"] = nlohmann::json::array();
  for (const auto& r : report.records) j["records"].push_back(record_json(r));
  nlohmann::json counter = nlohmann::json::array();
  for (const auto& r : report.records)
    if (is_counterexample(r, report.theorem)) counter.push_back({{"display_name", r.display_name}, {"graph6", r.graph6}, {"digest", r.digest}});
  j["summary"] = {{"entries", report.records.size()},
                  {"counterexamples", report.counterexamples},
                  {"counterexample_entries", counter},
                  {"runtime_seconds", report.runtime_seconds}};
  return j.dump(indent) + "\n";
}

ClassificationReport report_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  if (j.at("schema").get<std::string>() != kReportSchema) throw std::invalid_argument("unsupported report schema");
  ClassificationReport report;
  report.theorem = j.at("theorem").get<std::string>();
  for (const auto& r : j.at("records")) report.records.push_back(record_from_json(r));
  report.counterexamples = j.at("summary").at("counterexamples").get<int>();
  report.runtime_seconds = j.at("summary").at("runtime_seconds").get<double>();
  return report;
}

}  // namespace uirg
