#pragma once

// Finite checks of the structural claims behind m(n): each audit runs a claim
// over every instance it can enumerate (or a seeded sample) and reports one
// finding per instance or per group of instances. Failing findings carry a
// counterexample that recheck() evaluates again from scratch.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "xsperner/setfam.hpp"

namespace xsperner {

enum class Claim {
  lemma21,
  cor22,
  lemma23,
  lemma24_structure,
  lemma24_inequality,
  monotone_m,
  seymour,
  sperner,
  theorem12_uniqueness,
};

inline constexpr Claim kAllClaims[] = {
    Claim::lemma21,  Claim::cor22,   Claim::lemma23, Claim::lemma24_structure,   Claim::lemma24_inequality,
    Claim::monotone_m, Claim::seymour, Claim::sperner, Claim::theorem12_uniqueness,
};

std::string_view to_string(Claim claim) noexcept;
std::optional<Claim> parse_claim(std::string_view text) noexcept;

/// Named integer parameters, in a fixed order, e.g. {{"n",5},{"m",4},...}.
using ParamTuple = std::vector<std::pair<std::string, std::int64_t>>;
using Counterexample = std::variant<std::monostate, FamilyPair, ParamTuple>;

struct AuditFinding {
  Claim claim;
  std::string instance;
  bool passed = true;
  Counterexample counterexample;

  [[nodiscard]] bool has_counterexample() const noexcept {
    return !std::holds_alternative<std::monostate>(counterexample);
  }
};

struct AuditReport {
  Claim claim;
  int n = 0;
  std::vector<AuditFinding> findings;
  std::uint64_t instances_checked = 0;
  std::uint64_t instances_skipped = 0;
  std::optional<std::uint64_t> seed;
  /// Claim-specific figures, e.g. "canonical_classes" or "max_lhs".
  std::map<std::string, double> stats;

  [[nodiscard]] bool passed() const noexcept;
};

inline constexpr std::uint64_t kDefaultSeed = 20240917;
inline constexpr double kSeymourTolerance = 1e-9;

struct InequalityParams {
  int n = 0;
  int m = 0;  // |X ∪ Y|
  int x = 0;  // |X|
  int y = 0;  // |Y|
};

// Per-instance predicates. Each returns true when the claim holds on the
// instance; the audits below are loops over these.
bool lemma21_holds(const FamilyPair& pair);
bool cor22_holds(const FamilyPair& pair);
/// Requires a qualifying pair: both families nonempty, cross-Sperner, and
/// ⋂F, ⋂G partition [n].
bool lemma23_holds(const FamilyPair& pair);
bool lemma23_qualifies(const FamilyPair& pair);
bool lemma24_structure_holds(const FamilyPair& pair);
bool lemma24_inequality_holds(const InequalityParams& params);
bool seymour_holds(const FamilyPair& pair);
bool theorem12_uniqueness_holds(const FamilyPair& pair);

/// Re-evaluates a finding's counterexample with the claim's predicate;
/// returns the predicate value (false reproduces a failure). Findings without
/// a counterexample return their recorded `passed`.
bool recheck(const AuditFinding& finding);

/// Witnesses come from the unpruned search for n <= 4 and from the
/// common-element search at n = 5.
AuditReport audit_lemma21(int n);
AuditReport audit_cor22(int n);
/// samples == 0 selects exhaustive mode (n <= 3); otherwise `samples`
/// qualifying pairs are drawn with `seed` (n <= 6).
AuditReport audit_lemma23(int n, std::uint64_t samples, std::uint64_t seed = kDefaultSeed);
AuditReport audit_lemma24_structure(int n);
AuditReport audit_lemma24_inequality(int n_max);
AuditReport audit_monotone_m(int n_max);
/// samples == 0 selects exhaustive mode over every G (n <= 4); otherwise
/// random G families with F = maximal_partner(G) (n <= 10).
AuditReport audit_seymour(int n, std::uint64_t samples = 0, std::uint64_t seed = kDefaultSeed);
AuditReport audit_sperner(int n);
AuditReport audit_theorem12_uniqueness(int n);

/// Σ_{n=2}^{n_max} #{(x, y) : x, y >= 1, x + y < n}.
std::uint64_t inequality_tuple_count(int n_max);

/// Size of a largest antichain in 2^[n] by exhaustive search (n <= 4).
int max_antichain_brute_force(int n);

}  // namespace xsperner
