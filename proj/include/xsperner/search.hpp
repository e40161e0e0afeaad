#pragma once

// Exact computation of m(n) by enumerating the G side of a pair and taking
// F = maximal_partner(G). Any cross-Sperner (F, G) has F ⊆ maximal_partner(G)
// and I is monotone under ⊆, so the maximum over G alone is m(n).
//
// Pruning levels shrink the G space using structural facts about extremal
// pairs plus relabeling of [n]:
//   none            every G ⊆ 2^[n]
//   common-element  every member of G contains 1; [n] ∉ G
//   full            additionally [n]∖{n} ∈ G
// Candidates containing ∅ or [n] force F = ∅ and are counted but not scored.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xsperner/constructions.hpp"
#include "xsperner/setfam.hpp"

namespace xsperner {

enum class PruningLevel { none, common_element, full };

std::string_view to_string(PruningLevel level) noexcept;
std::optional<PruningLevel> parse_pruning_level(std::string_view text) noexcept;

/// Largest n each level accepts.
int max_search_n(PruningLevel level) noexcept;

/// Size of the G index space: 2^(2^n), 2^(2^(n-1)-1), 2^(2^(n-1)-2).
std::uint64_t candidate_count(int n, PruningLevel level);

/// Structural assumptions a level relies on beyond the lossless
/// maximal-partner reduction, in plain words.
std::vector<std::string> search_assumptions(PruningLevel level);

struct ExtremalWitness {
  FamilyPair pair;  // canonical form
  std::uint64_t i_size = 0;
  std::optional<TypeSplit> split;
};

struct SearchOptions {
  bool enumerate_witnesses = false;
  /// 0 picks the hardware concurrency; 1 runs on the calling thread.
  unsigned workers = 0;
};

struct SearchReport {
  int n = 0;
  PruningLevel method = PruningLevel::none;
  std::uint64_t m_value = 0;
  std::uint64_t formula_value = 0;
  /// Canonical classes of mutually-maximal extremal pairs, ascending.
  std::vector<ExtremalWitness> witnesses;
  /// Mutually-maximal extremal pairs hit before canonical deduplication.
  std::uint64_t raw_witness_count = 0;
  std::uint64_t candidates_examined = 0;
  std::chrono::nanoseconds elapsed{0};

  [[nodiscard]] bool agrees() const noexcept { return m_value == formula_value; }
};

/// Throws UsageError if n < 2 or n exceeds the level's cap.
SearchReport search_m(int n, PruningLevel pruning, const SearchOptions& options = {});

/// True iff all three pruning levels report the same m(n). Requires n <= 4.
bool cross_validate(int n, unsigned workers = 1);

}  // namespace xsperner
