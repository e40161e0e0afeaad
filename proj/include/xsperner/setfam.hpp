#pragma once

// Subsets of [n] as bit masks, families of subsets, and the cross-Sperner
// predicates everything else is built on.
//
// Bit i-1 of a mask stands for element i. Families keep their members as a
// strictly increasing sequence of masks, so two families are equal exactly
// when their member vectors are equal.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace xsperner {

using Mask = std::uint32_t;

/// Raised on contract violations (bad arguments, mismatched ground sets,
/// out-of-range sizes). The CLI maps this to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GroundSet {
 public:
  static constexpr int kMaxSize = 24;

  explicit GroundSet(int n);

  [[nodiscard]] int size() const noexcept { return n_; }
  [[nodiscard]] Mask full() const noexcept { return static_cast<Mask>((std::uint64_t{1} << n_) - 1); }
  [[nodiscard]] std::uint64_t subset_count() const noexcept { return std::uint64_t{1} << n_; }
  [[nodiscard]] bool contains(Mask bits) const noexcept { return (bits & ~full()) == 0; }

  auto operator<=>(const GroundSet&) const = default;

 private:
  int n_;
};

class SubsetMask {
 public:
  SubsetMask(GroundSet ground, Mask bits);

  /// Builds a subset from 1-based element labels.
  static SubsetMask of(GroundSet ground, std::initializer_list<int> elements);
  static SubsetMask of(GroundSet ground, std::span<const int> elements);

  [[nodiscard]] Mask bits() const noexcept { return bits_; }
  [[nodiscard]] GroundSet ground() const noexcept { return ground_; }
  [[nodiscard]] int cardinality() const noexcept;
  [[nodiscard]] std::vector<int> elements() const;

  bool operator==(const SubsetMask&) const = default;

 private:
  Mask bits_;
  GroundSet ground_;
};

/// 1-based labels of the elements of `bits`, ascending.
std::vector<int> mask_elements(Mask bits);
Mask mask_of(std::span<const int> elements);
Mask mask_of(std::initializer_list<int> elements);

class Family {
 public:
  explicit Family(GroundSet ground) : ground_(ground) {}

  /// Sorts and deduplicates `members`; throws UsageError if any member has
  /// bits outside the ground set.
  Family(GroundSet ground, std::vector<Mask> members);

  /// Convenience for literals: each inner list is one member in 1-based labels.
  static Family of(GroundSet ground, std::initializer_list<std::initializer_list<int>> members);

  /// Every subset of [n].
  static Family power_set(GroundSet ground);

  [[nodiscard]] GroundSet ground() const noexcept { return ground_; }
  [[nodiscard]] std::span<const Mask> members() const noexcept { return members_; }
  [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
  [[nodiscard]] bool empty() const noexcept { return members_.empty(); }
  [[nodiscard]] bool contains(Mask bits) const noexcept;
  [[nodiscard]] bool is_subfamily_of(const Family& other) const;

  /// Intersection of all members; the full ground set for an empty family.
  [[nodiscard]] Mask common_elements() const noexcept;

  [[nodiscard]] auto begin() const noexcept { return members_.begin(); }
  [[nodiscard]] auto end() const noexcept { return members_.end(); }

  bool operator==(const Family&) const = default;

 private:
  GroundSet ground_;
  std::vector<Mask> members_;
};

class FamilyPair {
 public:
  FamilyPair(Family f, Family g);

  [[nodiscard]] const Family& f() const noexcept { return f_; }
  [[nodiscard]] const Family& g() const noexcept { return g_; }
  [[nodiscard]] GroundSet ground() const noexcept { return f_.ground(); }

  bool operator==(const FamilyPair&) const = default;

 private:
  Family f_;
  Family g_;
};

/// Orders pairs by the F member sequence, then the G member sequence.
std::strong_ordering compare_pairs(const FamilyPair& lhs, const FamilyPair& rhs);

// Mask-level primitives, used by the hot loops. The SubsetMask overloads below
// add the ground-set check.
[[nodiscard]] constexpr bool mask_leq(Mask s, Mask t) noexcept { return (s & ~t) == 0; }
[[nodiscard]] constexpr bool mask_incomparable(Mask s, Mask t) noexcept {
  return !mask_leq(s, t) && !mask_leq(t, s);
}

bool subset_leq(const SubsetMask& s, const SubsetMask& t);

/// Neither set contains the other. Equal sets are comparable.
bool incomparable(const SubsetMask& s, const SubsetMask& t);

bool is_cross_sperner(const FamilyPair& pair);

/// First (A, B) with A in F, B in G that are comparable, scanning F then G in
/// canonical order.
std::optional<std::pair<Mask, Mask>> first_comparable(const FamilyPair& pair);

/// I(F, G) = { A ∩ B : A ∈ F, B ∈ G }. Defined for any pair.
Family intersection_family(const FamilyPair& pair);

/// All subsets of [n] incomparable with every member of `g`: the largest F
/// for which (F, g) is cross-Sperner.
Family maximal_partner(const Family& g);

/// Relabels elements: element i+1 maps to element perm[i]+1 (0-based perm).
Mask permute_mask(Mask bits, std::span<const int> perm);
Family permute_family(const Family& family, std::span<const int> perm);
FamilyPair permute_pair(const FamilyPair& pair, std::span<const int> perm);

/// Largest ground set canonicalize_pair accepts (it scans all n! relabelings).
inline constexpr int kMaxCanonicalN = 8;

/// Lexicographically least image of the pair under relabelings of [n].
FamilyPair canonicalize_pair(const FamilyPair& pair);

std::string format_set(Mask bits);
std::string format_family(const Family& family);

}  // namespace xsperner
