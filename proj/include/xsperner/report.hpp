#pragma once

// Report documents shared by every CLI command, with JSON and text renderers.
//
// JSON keys, in order: n, command, method, m_value, formula_value, agrees,
// witnesses, findings, candidates_examined, seed, elapsed_ms. Fields that do
// not apply to a command are null. Sets are sorted integer arrays; families
// are sorted by mask value.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "xsperner/audit.hpp"
#include "xsperner/constructions.hpp"
#include "xsperner/search.hpp"

namespace xsperner {

using Json = nlohmann::ordered_json;

struct ReportWitness {
  FamilyPair pair;
  std::optional<TypeSplit> split;
};

struct ReportFinding {
  std::string claim;
  bool passed = true;
  std::string instance;
  std::optional<Json> counterexample;
};

struct ReportDocument {
  std::optional<int> n;
  std::string command;
  std::optional<std::string> method;
  std::optional<std::uint64_t> m_value;
  std::optional<std::uint64_t> formula_value;
  bool agrees = true;
  std::vector<ReportWitness> witnesses;
  std::vector<ReportFinding> findings;
  std::optional<std::uint64_t> candidates_examined;
  std::optional<std::uint64_t> seed;
  std::int64_t elapsed_ms = 0;
  /// Extra lines for the text renderer only.
  std::vector<std::string> notes;
};

Json set_to_json(Mask bits);
Json family_to_json(const Family& family);
Json pair_to_json(const FamilyPair& pair);
Json counterexample_to_json(const Counterexample& counterexample);

ReportFinding to_report_finding(const AuditFinding& finding);
ReportDocument to_report_document(const SearchReport& report);

Json to_json(const ReportDocument& doc);
std::string to_text(const ReportDocument& doc);

}  // namespace xsperner
