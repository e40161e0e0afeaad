#include "xsperner/report.hpp"

#include <sstream>

namespace xsperner {

Json set_to_json(Mask bits) { return Json(mask_elements(bits)); }

Json family_to_json(const Family& family) {
  Json out = Json::array();
  for (Mask m : family) out.push_back(set_to_json(m));
  return out;
}

Json pair_to_json(const FamilyPair& pair) {
  return Json{{"F", family_to_json(pair.f())}, {"G", family_to_json(pair.g())}};
}

Json counterexample_to_json(const Counterexample& counterexample) {
  if (const auto* pair = std::get_if<FamilyPair>(&counterexample)) {
    Json out = pair_to_json(*pair);
    out["n"] = pair->ground().size();
    return out;
  }
  if (const auto* params = std::get_if<ParamTuple>(&counterexample)) {
    Json out = Json::object();
    for (const auto& [name, value] : *params) out[name] = value;
    return out;
  }
  return nullptr;
}

ReportFinding to_report_finding(const AuditFinding& finding) {
  ReportFinding out{std::string(to_string(finding.claim)), finding.passed, finding.instance, std::nullopt};
  if (finding.has_counterexample()) out.counterexample = counterexample_to_json(finding.counterexample);
  return out;
}

ReportDocument to_report_document(const SearchReport& report) {
  ReportDocument doc;
  doc.n = report.n;
  doc.command = "search";
  doc.method = std::string(to_string(report.method));
  doc.m_value = report.m_value;
  doc.formula_value = report.formula_value;
  doc.agrees = report.agrees();
  for (const auto& w : report.witnesses) doc.witnesses.push_back(ReportWitness{w.pair, w.split});
  doc.candidates_examined = report.candidates_examined;
  doc.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(report.elapsed).count();
  for (const auto& a : search_assumptions(report.method)) doc.notes.push_back("assumes: " + a);
  if (!report.witnesses.empty()) {
    doc.notes.push_back("mutually-maximal extremal pairs before deduplication: " +
                        std::to_string(report.raw_witness_count));
  }
  return doc;
}

namespace {

template <typename T>
Json optional_json(const std::optional<T>& value) {
  return value ? Json(*value) : Json(nullptr);
}

}  // namespace

Json to_json(const ReportDocument& doc) {
  Json witnesses = Json::array();
  for (const auto& w : doc.witnesses) {
    Json entry = pair_to_json(w.pair);
    entry["split"] = w.split ? Json{{"X", set_to_json(w.split->x())}, {"Y", set_to_json(w.split->y())}} : Json(nullptr);
    witnesses.push_back(std::move(entry));
  }
  Json findings = Json::array();
  for (const auto& f : doc.findings) {
    findings.push_back(Json{{"claim", f.claim},
                            {"passed", f.passed},
                            {"instance", f.instance},
                            {"counterexample", f.counterexample ? *f.counterexample : Json(nullptr)}});
  }
  Json out;
  out["n"] = optional_json(doc.n);
  out["command"] = doc.command;
  out["method"] = optional_json(doc.method);
  out["m_value"] = optional_json(doc.m_value);
  out["formula_value"] = optional_json(doc.formula_value);
  out["agrees"] = doc.agrees;
  out["witnesses"] = std::move(witnesses);
  out["findings"] = std::move(findings);
  out["candidates_examined"] = optional_json(doc.candidates_examined);
  out["seed"] = optional_json(doc.seed);
  out["elapsed_ms"] = doc.elapsed_ms;
  return out;
}

std::string to_text(const ReportDocument& doc) {
  std::ostringstream out;
  out << doc.command;
  if (doc.n) out << "  n=" << *doc.n;
  if (doc.method) out << "  method=" << *doc.method;
  out << '\n';
  if (doc.m_value) out << "  value:          " << *doc.m_value << '\n';
  if (doc.formula_value) out << "  formula:        " << *doc.formula_value << '\n';
  out << "  agrees:         " << (doc.agrees ? "yes" : "NO") << '\n';
  if (doc.candidates_examined) out << "  candidates:     " << *doc.candidates_examined << '\n';
  if (doc.seed) out << "  seed:           " << *doc.seed << '\n';
  out << "  elapsed_ms:     " << doc.elapsed_ms << '\n';
  for (const auto& note : doc.notes) out << "  " << note << '\n';
  if (!doc.witnesses.empty()) {
    out << "witnesses (" << doc.witnesses.size() << "):\n";
    for (const auto& w : doc.witnesses) {
      out << "  F=" << format_family(w.pair.f()) << "\n  G=" << format_family(w.pair.g()) << '\n';
      if (w.split) {
        out << "  type X=" << format_set(w.split->x()) << " Y=" << format_set(w.split->y()) << '\n';
      } else {
        out << "  not a type (X,Y) pair\n";
      }
    }
  }
  if (!doc.findings.empty()) {
    out << "findings (" << doc.findings.size() << "):\n";
    for (const auto& f : doc.findings) {
      out << "  [" << (f.passed ? "pass" : "FAIL") << "] " << f.claim << ": " << f.instance << '\n';
      if (f.counterexample) out << "         counterexample " << f.counterexample->dump() << '\n';
    }
  }
  return out.str();
}

}  // namespace xsperner
