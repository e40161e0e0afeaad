#pragma once

// The type-(X,Y) extremal pair and the closed forms that go with it.
//
// For a partition X ⊎ Y = [n] with both parts nonempty:
//   F = { A ∪ Y : A ⊊ X },  G = { B ∪ X : B ⊊ Y }
// so ⋂F = Y, ⋂G = X, |F| = 2^|X| - 1, |G| = 2^|Y| - 1 and
// |I(F,G)| = (2^|X| - 1)(2^|Y| - 1).

#include <cstdint>
#include <optional>

#include "xsperner/setfam.hpp"

namespace xsperner {

class TypeSplit {
 public:
  /// Throws UsageError unless x is a nonempty proper subset of [n]; y is its
  /// complement.
  TypeSplit(GroundSet ground, Mask x);

  [[nodiscard]] GroundSet ground() const noexcept { return ground_; }
  [[nodiscard]] Mask x() const noexcept { return x_; }
  [[nodiscard]] Mask y() const noexcept { return ground_.full() & ~x_; }

  bool operator==(const TypeSplit&) const = default;

 private:
  GroundSet ground_;
  Mask x_;
};

FamilyPair type_xy(const TypeSplit& split);

/// 2^n - 2^⌊n/2⌋ - 2^⌈n/2⌉ + 1 for 2 <= n <= 62; 0 for n = 1.
std::uint64_t m_formula(int n);

/// (2^a - 1)(2^b - 1); requires a, b >= 1 and a + b <= 62.
std::uint64_t construction_intersection_size(int a, int b);

/// The split whose construction equals `pair` exactly, if any. The only
/// candidate is X = ⋂G, Y = ⋂F.
std::optional<TypeSplit> classify_type_xy(const FamilyPair& pair);

/// argmax over a in 1..n-1 of 2^n - 2^a - 2^(n-a) + 1, smallest a on ties.
int optimal_split(int n);

}  // namespace xsperner
