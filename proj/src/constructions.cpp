#include "xsperner/constructions.hpp"

#include <string>
#include <vector>

namespace xsperner {

TypeSplit::TypeSplit(GroundSet ground, Mask x) : ground_(ground), x_(x) {
  if (!ground.contains(x)) throw UsageError("split part X is not inside the ground set");
  if (x == 0 || x == ground.full()) {
    throw UsageError("split parts X and Y must both be nonempty (X = " + format_set(x) + ")");
  }
}

namespace {

// All proper subsets of `part`, each united with `base`.
std::vector<Mask> proper_subsets_with(Mask part, Mask base) {
  std::vector<Mask> out;
  // Standard submask walk; starts from part itself, which is skipped.
  for (Mask sub = (part - 1) & part;; sub = (sub - 1) & part) {
    out.push_back(sub | base);
    if (sub == 0) break;
  }
  return out;
}

}  // namespace

FamilyPair type_xy(const TypeSplit& split) {
  const GroundSet ground = split.ground();
  return FamilyPair(Family(ground, proper_subsets_with(split.x(), split.y())),
                    Family(ground, proper_subsets_with(split.y(), split.x())));
}

std::uint64_t m_formula(int n) {
  if (n < 1 || n > 62) throw UsageError("m_formula needs 1 <= n <= 62, got " + std::to_string(n));
  if (n == 1) return 0;
  return construction_intersection_size(n / 2, n - n / 2);
}

std::uint64_t construction_intersection_size(int a, int b) {
  if (a < 1 || b < 1 || a + b > 62) {
    throw UsageError("construction_intersection_size needs a, b >= 1 and a + b <= 62");
  }
  return ((std::uint64_t{1} << a) - 1) * ((std::uint64_t{1} << b) - 1);
}

std::optional<TypeSplit> classify_type_xy(const FamilyPair& pair) {
  if (pair.f().empty() || pair.g().empty()) return std::nullopt;
  const Mask x = pair.g().common_elements();
  const Mask y = pair.f().common_elements();
  const GroundSet ground = pair.ground();
  if ((x & y) != 0 || (x | y) != ground.full() || x == 0 || y == 0) return std::nullopt;
  TypeSplit split(ground, x);
  if (type_xy(split) != pair) return std::nullopt;
  return split;
}

int optimal_split(int n) {
  if (n < 2 || n > 62) throw UsageError("optimal_split needs 2 <= n <= 62, got " + std::to_string(n));
  int best = 1;
  std::uint64_t best_value = 0;
  for (int a = 1; a <= n - 1; ++a) {
    const std::uint64_t value = construction_intersection_size(a, n - a);
    if (value > best_value) {
      best_value = value;
      best = a;
    }
  }
  return best;
}

}  // namespace xsperner
