#pragma once

// Dense family representation for small ground sets: one bit per subset of
// [n], packed into a single machine word (n <= 6) or a 128-bit word (n = 7).
// Bit s of a word is set iff the subset with mask s is in the family.
//
// Used in the search and audit hot loops. Observably equivalent to Family;
// the test suite checks the two against each other.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "xsperner/setfam.hpp"

namespace xsperner::dense {

__extension__ typedef unsigned __int128 Wide;

template <typename Word>
inline constexpr int kMaxN = (sizeof(Word) * 8 == 64) ? 6 : 7;

inline int popcount(std::uint64_t w) noexcept { return std::popcount(w); }
inline int popcount(Wide w) noexcept {
  return std::popcount(static_cast<std::uint64_t>(w)) + std::popcount(static_cast<std::uint64_t>(w >> 64));
}

inline int lowest_bit(std::uint64_t w) noexcept { return std::countr_zero(w); }
inline int lowest_bit(Wide w) noexcept {
  const auto lo = static_cast<std::uint64_t>(w);
  return lo != 0 ? std::countr_zero(lo) : 64 + std::countr_zero(static_cast<std::uint64_t>(w >> 64));
}

template <typename Word>
class Lattice {
 public:
  explicit Lattice(int n) : n_(n), subsets_(std::size_t{1} << n) {
    if (n < 1 || n > kMaxN<Word>) throw UsageError("dense lattice word too small for n = " + std::to_string(n));
    all_ = subsets_ == sizeof(Word) * 8 ? ~Word{0} : ((Word{1} << subsets_) - 1);
    for (int e = 0; e < n; ++e) {
      Word w = 0;
      for (std::size_t s = 0; s < subsets_; ++s) {
        if ((s >> e) & 1U) w |= Word{1} << s;
      }
      with_element_[e] = w;
    }
    incomparable_.resize(subsets_);
    strict_down_.resize(subsets_);
    for (std::size_t s = 0; s < subsets_; ++s) {
      Word inc = 0;
      Word down = 0;
      for (std::size_t t = 0; t < subsets_; ++t) {
        if (mask_incomparable(static_cast<Mask>(s), static_cast<Mask>(t))) inc |= Word{1} << t;
        if (t != s && mask_leq(static_cast<Mask>(t), static_cast<Mask>(s))) down |= Word{1} << t;
      }
      incomparable_[s] = inc;
      strict_down_[s] = down;
    }
  }

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] Word all() const noexcept { return all_; }
  [[nodiscard]] static Word bit(Mask s) noexcept { return Word{1} << s; }

  [[nodiscard]] Word incomparable_with(Mask s) const noexcept { return incomparable_[s]; }
  [[nodiscard]] Word strict_subsets_of(Mask s) const noexcept { return strict_down_[s]; }

  /// Every subset of some member.
  [[nodiscard]] Word down_closure(Word fam) const noexcept {
    for (int e = 0; e < n_; ++e) fam |= (fam & with_element_[e]) >> (1U << e);
    return fam;
  }

  /// Every proper subset of some member.
  [[nodiscard]] Word strict_down_closure(Word fam) const noexcept {
    Word shrunk = 0;
    for (int e = 0; e < n_; ++e) shrunk |= (fam & with_element_[e]) >> (1U << e);
    return down_closure(shrunk);
  }

  /// { a ∩ b : a ∈ fam }.
  [[nodiscard]] Word project(Word fam, Mask b) const noexcept {
    for (int e = 0; e < n_; ++e) {
      if ((b >> e) & 1U) continue;
      const Word moving = fam & with_element_[e];
      fam = (fam & ~with_element_[e]) | (moving >> (1U << e));
    }
    return fam;
  }

  /// Subsets incomparable with every member of g.
  [[nodiscard]] Word partner(Word g) const noexcept {
    Word out = all_;
    for (Word rest = g; rest != 0; rest &= rest - 1) out &= incomparable_[lowest_bit(rest)];
    return out;
  }

  [[nodiscard]] Word intersections(Word f, Word g) const noexcept {
    Word out = 0;
    if (f == 0) return 0;
    for (Word rest = g; rest != 0; rest &= rest - 1) out |= project(f, static_cast<Mask>(lowest_bit(rest)));
    return out;
  }

  [[nodiscard]] Word from_family(const Family& fam) const {
    if (fam.ground().size() != n_) throw UsageError("family ground set does not match dense lattice");
    Word w = 0;
    for (Mask m : fam) w |= bit(m);
    return w;
  }

  [[nodiscard]] Family to_family(Word w) const {
    std::vector<Mask> members;
    members.reserve(static_cast<std::size_t>(popcount(w)));
    for (Word rest = w; rest != 0; rest &= rest - 1) members.push_back(static_cast<Mask>(lowest_bit(rest)));
    return Family(GroundSet(n_), std::move(members));
  }

 private:
  int n_;
  std::size_t subsets_;
  Word all_ = 0;
  Word with_element_[7] = {};
  std::vector<Word> incomparable_;
  std::vector<Word> strict_down_;
};

}  // namespace xsperner::dense
