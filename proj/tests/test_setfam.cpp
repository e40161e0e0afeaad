#include "doctest.h"

#include <set>

#include "support/oracles.hpp"
#include "xsperner/constructions.hpp"
#include "xsperner/setfam.hpp"

using namespace xsperner;

namespace {

SubsetMask set3(std::initializer_list<int> elems) { return SubsetMask::of(GroundSet(3), elems); }

Family two_subsets_of_4() {
  std::vector<Mask> members;
  for (Mask s = 0; s < 16; ++s) {
    if (std::popcount(s) == 2) members.push_back(s);
  }
  return Family(GroundSet(4), members);
}

}  // namespace

TEST_CASE("ground set bounds") {
  CHECK_THROWS_AS(GroundSet(0), UsageError);
  CHECK_THROWS_AS(GroundSet(25), UsageError);
  CHECK(GroundSet(24).full() == 0xFFFFFFu);
  CHECK_THROWS_AS(SubsetMask(GroundSet(2), 0b100), UsageError);
  CHECK_THROWS_AS(Family(GroundSet(2), {0b100}), UsageError);
}

TEST_CASE("family members are sorted and deduplicated") {
  const Family fam(GroundSet(3), {5, 1, 5, 3});
  const std::vector<Mask> expected{1, 3, 5};
  CHECK(std::vector<Mask>(fam.begin(), fam.end()) == expected);
  CHECK(fam.contains(3));
  CHECK_FALSE(fam.contains(2));
  CHECK(Family(GroundSet(3)).common_elements() == GroundSet(3).full());
}

TEST_CASE("subset_leq") {
  CHECK(subset_leq(set3({1}), set3({1, 2})));
  CHECK(subset_leq(set3({}), set3({3})));
  CHECK_FALSE(subset_leq(set3({1, 3}), set3({1, 2})));
  CHECK_THROWS_AS(subset_leq(set3({1}), SubsetMask::of(GroundSet(4), {1})), UsageError);
}

TEST_CASE("incomparable treats equal sets as comparable") {
  CHECK(incomparable(set3({1}), set3({2})));
  CHECK_FALSE(incomparable(set3({1}), set3({1})));
  CHECK(incomparable(set3({1, 2}), set3({2, 3})));
  CHECK_THROWS_AS(incomparable(set3({1}), SubsetMask::of(GroundSet(2), {2})), UsageError);
}

TEST_CASE("is_cross_sperner") {
  const GroundSet g3(3);
  CHECK(is_cross_sperner(FamilyPair(Family::of(g3, {{2, 3}}), Family::of(g3, {{1}, {1, 2}, {1, 3}}))));
  CHECK_FALSE(is_cross_sperner(FamilyPair(Family::of(g3, {{1}}), Family::of(g3, {{1}}))));
  CHECK(is_cross_sperner(FamilyPair(Family(g3), Family::power_set(g3))));

  const Family two = two_subsets_of_4();
  CHECK_FALSE(is_cross_sperner(FamilyPair(two, two)));
  const auto offending = first_comparable(FamilyPair(two, two));
  REQUIRE(offending.has_value());
  CHECK(offending->first == offending->second);
}

TEST_CASE("family pairs need a shared ground set") {
  CHECK_THROWS_AS(FamilyPair(Family(GroundSet(3)), Family(GroundSet(4))), UsageError);
}

TEST_CASE("intersection_family") {
  const GroundSet g3(3);
  const FamilyPair example(Family::of(g3, {{2, 3}}), Family::of(g3, {{1}, {1, 2}, {1, 3}}));
  CHECK(intersection_family(example) == Family::of(g3, {{}, {2}, {3}}));
  CHECK(intersection_family(FamilyPair(Family(g3), Family::power_set(g3))).empty());

  // Oracle: every pairwise intersection collected into a std::set.
  const Family two = two_subsets_of_4();
  std::set<Mask> expected;
  for (Mask a : two) {
    for (Mask b : two) expected.insert(a & b);
  }
  CHECK(expected.size() == 11);
  CHECK(intersection_family(FamilyPair(two, two)).size() == 11);
}

TEST_CASE("maximal_partner") {
  const GroundSet g2(2);
  CHECK(maximal_partner(Family::of(g2, {{1}})) == Family::of(g2, {{2}}));
  CHECK(maximal_partner(Family(g2)) == Family::power_set(g2));
  CHECK(maximal_partner(Family::of(g2, {{1}, {2}})).empty());

  const GroundSet g5(5);
  const Family g = Family::of(g5, {{1, 2}, {1, 3, 4}});
  for (Mask a = 0; a < 32; ++a) {
    const bool expected = mask_incomparable(a, 0b00011) && mask_incomparable(a, 0b01101);
    CHECK(maximal_partner(g).contains(a) == expected);
  }
}

TEST_CASE("canonicalize_pair") {
  const GroundSet g2(2);
  CHECK(canonicalize_pair(FamilyPair(Family::of(g2, {{2}}), Family::of(g2, {{1}}))) ==
        FamilyPair(Family::of(g2, {{1}}), Family::of(g2, {{2}})));

  const FamilyPair already(Family::of(g2, {{1}}), Family::of(g2, {{2}}));
  CHECK(canonicalize_pair(already) == already);

  // n=3 type pair with X={2,3}: minimum over all 6 relabelings, computed by the
  // enumeration oracle. F = {{1},{1,2},{1,3}} (masks 1,3,5) is already least,
  // so the pair is its own canonical form.
  const FamilyPair type23 = type_xy(TypeSplit(GroundSet(3), mask_of({2, 3})));
  const FamilyPair oracle = testing::canonical_by_enumeration(type23);
  CHECK(oracle == type23);
  CHECK(canonicalize_pair(type23) == oracle);
  CHECK(canonicalize_pair(type_xy(TypeSplit(GroundSet(3), mask_of({1, 2})))) ==
        canonicalize_pair(type_xy(TypeSplit(GroundSet(3), mask_of({1, 3})))));

  CHECK_THROWS_AS(canonicalize_pair(FamilyPair(Family(GroundSet(9)), Family(GroundSet(9)))), UsageError);
}

TEST_CASE("canonicalize_pair matches the enumeration oracle on random pairs") {
  testing::Rng rng(7);
  for (int n = 2; n <= 5; ++n) {
    for (int i = 0; i < 200; ++i) {
      const FamilyPair pair = testing::random_pair(GroundSet(n), rng);
      CHECK(canonicalize_pair(pair) == testing::canonical_by_enumeration(pair));
    }
  }
}

TEST_CASE("core invariants hold exhaustively for n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    const auto stats = testing::check_properties_exhaustive(n);
    INFO("n=" << n << " first failure: " << (stats.ok() ? "" : stats.failures.front()));
    CHECK(stats.ok());
  }
}

TEST_CASE("core invariants hold on random pairs for n = 4..6") {
  for (int n = 4; n <= 6; ++n) {
    const auto stats = testing::check_properties_random(n, 10000, 1000 + static_cast<std::uint64_t>(n));
    INFO("n=" << n << " first failure: " << (stats.ok() ? "" : stats.failures.front()));
    CHECK(stats.instances == 10000);
    CHECK(stats.ok());
  }
}

TEST_CASE("formatting") {
  CHECK(format_set(0) == "{}");
  CHECK(format_set(mask_of({1, 3})) == "{1,3}");
  CHECK(format_family(Family::of(GroundSet(3), {{2}, {}})) == "{{}, {2}}");
}
