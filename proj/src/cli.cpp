#include "xsperner/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "xsperner/audit.hpp"
#include "xsperner/constructions.hpp"
#include "xsperner/family_io.hpp"
#include "xsperner/report.hpp"

namespace xsperner::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

struct Outcome {
  ReportDocument doc;
  int exit_code = kExitOk;
  std::string text_override;  // replaces the generic text rendering when set
};

FamilyPair load_input(const RunConfig& config) {
  if (!config.input_path) throw UsageError("--input <file> is required");
  return parse_family_file(*config.input_path);
}

Outcome run_verify(const RunConfig& config) {
  const auto start = Clock::now();
  const FamilyPair pair = load_input(config);
  Outcome result;
  auto& doc = result.doc;
  doc.n = pair.ground().size();
  doc.command = "verify";
  doc.formula_value = m_formula(pair.ground().size());
  doc.witnesses.push_back(ReportWitness{pair, classify_type_xy(pair)});

  const auto offending = first_comparable(pair);
  ReportFinding finding{"cross-sperner", !offending.has_value(),
                        "|F|=" + std::to_string(pair.f().size()) + " |G|=" + std::to_string(pair.g().size()),
                        std::nullopt};
  if (offending) {
    const auto [a, b] = *offending;
    finding.instance += " comparable A=" + format_set(a) + " B=" + format_set(b);
    finding.counterexample = Json{{"A", set_to_json(a)}, {"B", set_to_json(b)}};
    doc.notes.push_back("not cross-Sperner: A=" + format_set(a) + " and B=" + format_set(b) + " are comparable");
  } else {
    const auto size = intersection_family(pair).size();
    doc.m_value = size;
    doc.notes.push_back("cross-Sperner; |I(F,G)| = " + std::to_string(size));
  }
  doc.findings.push_back(std::move(finding));
  doc.agrees = !offending.has_value();
  doc.elapsed_ms = ms_since(start);
  result.exit_code = doc.agrees ? kExitOk : kExitCheckFailed;
  return result;
}

Outcome run_intersect(const RunConfig& config) {
  const auto start = Clock::now();
  const FamilyPair pair = load_input(config);
  const Family meet = intersection_family(pair);
  const bool cross = is_cross_sperner(pair);
  const auto bound = m_formula(pair.ground().size());

  Outcome result;
  auto& doc = result.doc;
  doc.n = pair.ground().size();
  doc.command = "intersect";
  doc.m_value = meet.size();
  doc.formula_value = bound;
  // A cross-Sperner pair beating the closed form would contradict it.
  doc.agrees = !(cross && meet.size() > bound);
  doc.witnesses.push_back(ReportWitness{pair, classify_type_xy(pair)});
  doc.findings.push_back(ReportFinding{"intersection", doc.agrees,
                                       "I=" + format_family(meet) + " |I|=" + std::to_string(meet.size()) +
                                           (cross ? " (cross-Sperner)" : " (not cross-Sperner)"),
                                       std::nullopt});
  doc.elapsed_ms = ms_since(start);
  result.exit_code = doc.agrees ? kExitOk : kExitCheckFailed;
  return result;
}

Outcome run_construct(const RunConfig& config) {
  const auto start = Clock::now();
  const GroundSet ground(config.n);
  if (config.x_elements.empty()) throw UsageError("--x <comma-list> is required");
  const TypeSplit split(ground, SubsetMask::of(ground, config.x_elements).bits());
  const FamilyPair pair = type_xy(split);
  const auto size = intersection_family(pair).size();
  const auto expected = construction_intersection_size(std::popcount(split.x()), std::popcount(split.y()));

  Outcome result;
  auto& doc = result.doc;
  doc.n = config.n;
  doc.command = "construct";
  doc.m_value = size;
  doc.formula_value = expected;
  doc.agrees = size == expected && is_cross_sperner(pair);
  doc.witnesses.push_back(ReportWitness{pair, split});
  doc.elapsed_ms = ms_since(start);
  result.exit_code = doc.agrees ? kExitOk : kExitCheckFailed;

  std::ostringstream text;
  text << "# type (X,Y) pair, X=" << format_set(split.x()) << " Y=" << format_set(split.y()) << '\n'
       << "# |F|=" << pair.f().size() << " |G|=" << pair.g().size() << " |I(F,G)|=" << size
       << " (2^|X|-1)(2^|Y|-1)=" << expected << " m(n)=" << m_formula(config.n) << '\n'
       << format_family_file(pair);
  result.text_override = text.str();
  return result;
}

Outcome run_search(const RunConfig& config) {
  const SearchReport report = search_m(config.n, config.pruning, SearchOptions{config.witnesses, config.workers});
  Outcome result{to_report_document(report), report.agrees() ? kExitOk : kExitCheckFailed, {}};
  return result;
}

bool in_range(int n, int lo, int hi) { return n >= lo && n <= hi; }

// Runs one claim at config.n. Returns nullopt when the claim does not apply
// at this n and `skip_out_of_range` is set.
std::optional<AuditReport> audit_one(Claim claim, const RunConfig& config, bool skip_out_of_range) {
  const int n = config.n;
  const std::uint64_t seed = config.seed.value_or(kDefaultSeed);
  auto guard = [&](bool ok) { return ok || !skip_out_of_range; };
  switch (claim) {
    case Claim::lemma21:
      if (!guard(in_range(n, 2, 5))) return std::nullopt;
      return audit_lemma21(n);
    case Claim::cor22:
      if (!guard(in_range(n, 2, 4))) return std::nullopt;
      return audit_cor22(n);
    case Claim::lemma23: {
      const std::uint64_t samples = config.samples.value_or(n <= 3 ? 0 : 10000);
      if (!guard(samples == 0 ? in_range(n, 1, 3) : in_range(n, 2, 6))) return std::nullopt;
      return audit_lemma23(n, samples, seed);
    }
    case Claim::lemma24_structure:
      if (!guard(in_range(n, 2, 5))) return std::nullopt;
      return audit_lemma24_structure(n);
    case Claim::lemma24_inequality:
      if (!guard(in_range(n, 2, 40))) return std::nullopt;
      return audit_lemma24_inequality(n);
    case Claim::monotone_m:
      if (!guard(in_range(n, 3, 62))) return std::nullopt;
      return audit_monotone_m(n);
    case Claim::seymour: {
      const std::uint64_t samples = config.samples.value_or(n <= 4 ? 0 : 1000);
      if (!guard(samples == 0 ? in_range(n, 1, 4) : in_range(n, 1, 10))) return std::nullopt;
      return audit_seymour(n, samples, seed);
    }
    case Claim::sperner:
      if (!guard(in_range(n, 1, 4))) return std::nullopt;
      return audit_sperner(n);
    case Claim::theorem12_uniqueness:
      if (!guard(in_range(n, 2, 5))) return std::nullopt;
      return audit_theorem12_uniqueness(n);
  }
  return std::nullopt;
}

Outcome run_audit(const RunConfig& config) {
  const auto start = Clock::now();
  std::vector<Claim> claims;
  const bool all = config.claim == "all";
  if (all) {
    claims.assign(std::begin(kAllClaims), std::end(kAllClaims));
  } else if (auto claim = parse_claim(config.claim)) {
    claims.push_back(*claim);
  } else {
    throw UsageError("unknown claim '" + config.claim + "'");
  }

  Outcome result;
  auto& doc = result.doc;
  doc.n = config.n;
  doc.command = "audit";
  for (Claim claim : claims) {
    auto report = audit_one(claim, config, all);
    if (!report) {
      doc.notes.push_back("skipped " + std::string(to_string(claim)) + ": not defined at n=" + std::to_string(config.n));
      continue;
    }
    if (report->seed) doc.seed = report->seed;
    doc.notes.push_back(std::string(to_string(claim)) + ": " + std::to_string(report->instances_checked) +
                        " instances checked, " + std::to_string(report->instances_skipped) + " skipped, " +
                        (report->passed() ? "passed" : "FAILED"));
    for (const auto& f : report->findings) doc.findings.push_back(to_report_finding(f));
  }
  doc.agrees = std::all_of(doc.findings.begin(), doc.findings.end(), [](const ReportFinding& f) { return f.passed; });
  doc.elapsed_ms = ms_since(start);
  result.exit_code = doc.agrees ? kExitOk : kExitCheckFailed;
  return result;
}

Outcome run_report(const RunConfig& config) {
  const auto start = Clock::now();
  if (config.n_max < 2 || config.n_max > 62) throw UsageError("--n-max must be in 2..62");
  Outcome result;
  auto& doc = result.doc;
  doc.n = config.n_max;
  doc.command = "report";

  std::ostringstream table;
  table << "   n  m_formula  search  method          agrees\n";
  for (int n = 2; n <= config.n_max; ++n) {
    const auto formula = m_formula(n);
    std::optional<SearchReport> searched;
    if (n <= 4) {
      searched = search_m(n, PruningLevel::none, SearchOptions{false, config.workers});
    } else if (n == 5) {
      searched = search_m(n, PruningLevel::common_element, SearchOptions{false, config.workers});
    } else if (n <= max_search_n(PruningLevel::full)) {
      searched = search_m(n, PruningLevel::full, SearchOptions{false, config.workers});
    }
    std::string instance = "n=" + std::to_string(n) + " formula=" + std::to_string(formula);
    bool ok = true;
    char line[96];
    if (searched) {
      ok = searched->m_value == formula;
      instance += " search=" + std::to_string(searched->m_value) + " method=" + std::string(to_string(searched->method));
      std::snprintf(line, sizeof line, "%4d %10llu %7llu  %-15s %s\n", n, static_cast<unsigned long long>(formula),
                    static_cast<unsigned long long>(searched->m_value), std::string(to_string(searched->method)).c_str(),
                    ok ? "yes" : "NO");
    } else {
      instance += " search=infeasible";
      std::snprintf(line, sizeof line, "%4d %10llu %7s  %-15s %s\n", n, static_cast<unsigned long long>(formula), "-",
                    "-", "-");
    }
    table << line;
    doc.findings.push_back(ReportFinding{"report", ok, instance, std::nullopt});
  }
  doc.agrees = std::all_of(doc.findings.begin(), doc.findings.end(), [](const ReportFinding& f) { return f.passed; });
  doc.elapsed_ms = ms_since(start);
  result.exit_code = doc.agrees ? kExitOk : kExitCheckFailed;
  result.text_override = table.str();
  return result;
}

Outcome dispatch(const RunConfig& config) {
  switch (config.command) {
    case Command::verify: return run_verify(config);
    case Command::intersect: return run_intersect(config);
    case Command::construct: return run_construct(config);
    case Command::search: return run_search(config);
    case Command::audit: return run_audit(config);
    case Command::report: return run_report(config);
  }
  throw UsageError("unknown command");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Outcome result;
  try {
    result = dispatch(config);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::string rendered;
  if (config.format == OutputFormat::json) {
    rendered = to_json(result.doc).dump(2) + "\n";
  } else {
    rendered = result.text_override.empty() ? to_text(result.doc) : result.text_override;
  }

  if (config.output_path) {
    std::ofstream file(*config.output_path, std::ios::binary);
    if (!file) {
      err << "usage error: cannot write " << config.output_path->string() << '\n';
      return kExitUsage;
    }
    file << rendered;
  } else {
    out << rendered;
  }
  if (result.exit_code == kExitCheckFailed && config.format == OutputFormat::text) {
    for (const auto& f : result.doc.findings) {
      if (!f.passed) err << "check failed: " << f.claim << ": " << f.instance << '\n';
    }
    if (result.doc.findings.empty()) err << "check failed: search value disagrees with the closed form\n";
  }
  return result.exit_code;
}

int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Search and verification toolkit for cross-Sperner families"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string format = "text";
  std::string output;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output", output, "Write the report to this path");

  std::string input;
  auto* verify = app.add_subcommand("verify", "Check that a pair file is cross-Sperner");
  verify->add_option("--input", input, "Family pair file")->required();
  auto* intersect = app.add_subcommand("intersect", "Print I(F,G) for a pair file");
  intersect->add_option("--input", input, "Family pair file")->required();

  std::string x_list;
  auto* construct = app.add_subcommand("construct", "Build the type (X,Y) pair");
  construct->add_option("--n", config.n, "Ground set size")->required();
  construct->add_option("--x", x_list, "Elements of X, comma separated")->required();

  std::string pruning = "none";
  auto* search = app.add_subcommand("search", "Compute m(n) by enumeration");
  search->add_option("--n", config.n, "Ground set size")->required();
  search->add_option("--pruning", pruning, "Pruning level")
      ->check(CLI::IsMember({"none", "common-element", "full"}));
  search->add_flag("--witnesses", config.witnesses, "Enumerate canonical extremal witnesses");
  search->add_option("--workers", config.workers, "Worker threads (1 = sequential)")->check(CLI::PositiveNumber);

  auto* audit = app.add_subcommand("audit", "Check the structural claims on small cases");
  audit->add_option("--claim", config.claim, "Claim to audit, or 'all'");
  audit->add_option("--n", config.n, "Ground set size (n_max for range claims)")->required();
  audit->add_option("--samples", config.samples, "Sample count for sampled modes (0 = exhaustive)");
  audit->add_option("--seed", config.seed, "Seed for sampled modes");

  auto* report = app.add_subcommand("report", "Table of closed form vs search");
  report->add_option("--n-max", config.n_max, "Largest n in the table")->required();
  report->add_option("--workers", config.workers, "Worker threads (1 = sequential)")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (*verify) config.command = Command::verify;
  if (*intersect) config.command = Command::intersect;
  if (*construct) config.command = Command::construct;
  if (*search) config.command = Command::search;
  if (*audit) config.command = Command::audit;
  if (*report) config.command = Command::report;

  config.format = format == "json" ? OutputFormat::json : OutputFormat::text;
  if (!output.empty()) config.output_path = output;
  if (!input.empty()) config.input_path = input;
  config.pruning = parse_pruning_level(pruning).value_or(PruningLevel::none);

  if (!x_list.empty()) {
    std::stringstream ss(x_list);
    std::string token;
    while (std::getline(ss, token, ',')) {
      try {
        std::size_t used = 0;
        config.x_elements.push_back(std::stoi(token, &used));
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        err << "usage error: bad element '" << token << "' in --x\n";
        return kExitUsage;
      }
    }
  }
  return run(config, out, err);
}

}  // namespace xsperner::cli
