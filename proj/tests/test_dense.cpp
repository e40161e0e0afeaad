#include "doctest.h"

#include "support/oracles.hpp"
#include "xsperner/dense.hpp"

using namespace xsperner;

TEST_CASE_TEMPLATE("dense lattice agrees with Family operations", Word, std::uint64_t, dense::Wide) {
  testing::Rng rng(99);
  for (int n = 1; n <= dense::kMaxN<Word>; ++n) {
    const dense::Lattice<Word> lattice(n);
    const GroundSet ground(n);
    for (int i = 0; i < 300; ++i) {
      const FamilyPair pair = testing::random_pair(ground, rng);
      const Word f = lattice.from_family(pair.f());
      const Word g = lattice.from_family(pair.g());
      CHECK(lattice.to_family(f) == pair.f());
      CHECK(lattice.to_family(lattice.partner(g)) == maximal_partner(pair.g()));
      CHECK(lattice.to_family(lattice.intersections(f, g)) == intersection_family(pair));
      CHECK(dense::popcount(f) == static_cast<int>(pair.f().size()));

      std::vector<Mask> down;
      std::vector<Mask> strict_down;
      for (Mask s = 0; s < ground.subset_count(); ++s) {
        bool below = false;
        bool strictly = false;
        for (Mask a : pair.f()) {
          below = below || mask_leq(s, a);
          strictly = strictly || (mask_leq(s, a) && s != a);
        }
        if (below) down.push_back(s);
        if (strictly) strict_down.push_back(s);
      }
      CHECK(lattice.to_family(lattice.down_closure(f)) == Family(ground, down));
      CHECK(lattice.to_family(lattice.strict_down_closure(f)) == Family(ground, strict_down));
    }
  }
}

TEST_CASE("dense lattice rejects ground sets its word cannot hold") {
  CHECK_THROWS_AS(dense::Lattice<std::uint64_t>(7), UsageError);
  CHECK_NOTHROW(dense::Lattice<dense::Wide>(7));
  CHECK(dense::Lattice<std::uint64_t>(6).all() == ~std::uint64_t{0});
}
