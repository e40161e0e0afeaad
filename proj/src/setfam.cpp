#include "xsperner/setfam.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace xsperner {

GroundSet::GroundSet(int n) : n_(n) {
  if (n < 1 || n > kMaxSize) {
    throw UsageError("ground set size must be in 1.." + std::to_string(kMaxSize) + ", got " +
                     std::to_string(n));
  }
}

SubsetMask::SubsetMask(GroundSet ground, Mask bits) : bits_(bits), ground_(ground) {
  if (!ground.contains(bits)) {
    throw UsageError("subset " + format_set(bits) + " is not inside [" + std::to_string(ground.size()) +
                     "]");
  }
}

SubsetMask SubsetMask::of(GroundSet ground, std::initializer_list<int> elements) {
  return of(ground, std::span<const int>(elements.begin(), elements.size()));
}

SubsetMask SubsetMask::of(GroundSet ground, std::span<const int> elements) {
  for (int e : elements) {
    if (e < 1 || e > ground.size()) {
      throw UsageError("element " + std::to_string(e) + " outside [" + std::to_string(ground.size()) + "]");
    }
  }
  return SubsetMask(ground, mask_of(elements));
}

int SubsetMask::cardinality() const noexcept { return std::popcount(bits_); }

std::vector<int> SubsetMask::elements() const { return mask_elements(bits_); }

std::vector<int> mask_elements(Mask bits) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(bits)));
  for (Mask rest = bits; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest) + 1);
  }
  return out;
}

Mask mask_of(std::span<const int> elements) {
  Mask bits = 0;
  for (int e : elements) {
    if (e < 1 || e > GroundSet::kMaxSize) {
      throw UsageError("element label " + std::to_string(e) + " out of range");
    }
    bits |= Mask{1} << (e - 1);
  }
  return bits;
}

Mask mask_of(std::initializer_list<int> elements) {
  return mask_of(std::span<const int>(elements.begin(), elements.size()));
}

Family::Family(GroundSet ground, std::vector<Mask> members) : ground_(ground), members_(std::move(members)) {
  for (Mask m : members_) {
    if (!ground_.contains(m)) {
      throw UsageError("family member " + format_set(m) + " is not inside [" +
                       std::to_string(ground_.size()) + "]");
    }
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

Family Family::of(GroundSet ground, std::initializer_list<std::initializer_list<int>> members) {
  std::vector<Mask> masks;
  masks.reserve(members.size());
  for (const auto& m : members) {
    masks.push_back(SubsetMask::of(ground, m).bits());
  }
  return Family(ground, std::move(masks));
}

Family Family::power_set(GroundSet ground) {
  std::vector<Mask> masks(ground.subset_count());
  std::iota(masks.begin(), masks.end(), Mask{0});
  return Family(ground, std::move(masks));
}

bool Family::contains(Mask bits) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), bits);
}

bool Family::is_subfamily_of(const Family& other) const {
  return ground_ == other.ground_ &&
         std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

Mask Family::common_elements() const noexcept {
  Mask acc = ground_.full();
  for (Mask m : members_) acc &= m;
  return acc;
}

FamilyPair::FamilyPair(Family f, Family g) : f_(std::move(f)), g_(std::move(g)) {
  if (f_.ground() != g_.ground()) {
    throw UsageError("family pair over different ground sets: [" + std::to_string(f_.ground().size()) +
                     "] vs [" + std::to_string(g_.ground().size()) + "]");
  }
}

std::strong_ordering compare_pairs(const FamilyPair& lhs, const FamilyPair& rhs) {
  auto seq = [](const Family& fam) { return fam.members(); };
  auto f = std::lexicographical_compare_three_way(seq(lhs.f()).begin(), seq(lhs.f()).end(),
                                                  seq(rhs.f()).begin(), seq(rhs.f()).end());
  if (f != std::strong_ordering::equal) return f;
  return std::lexicographical_compare_three_way(seq(lhs.g()).begin(), seq(lhs.g()).end(),
                                                seq(rhs.g()).begin(), seq(rhs.g()).end());
}

namespace {

void require_same_ground(const SubsetMask& s, const SubsetMask& t) {
  if (s.ground() != t.ground()) {
    throw UsageError("subsets over different ground sets: [" + std::to_string(s.ground().size()) +
                     "] vs [" + std::to_string(t.ground().size()) + "]");
  }
}

}  // namespace

bool subset_leq(const SubsetMask& s, const SubsetMask& t) {
  require_same_ground(s, t);
  return mask_leq(s.bits(), t.bits());
}

bool incomparable(const SubsetMask& s, const SubsetMask& t) {
  require_same_ground(s, t);
  return mask_incomparable(s.bits(), t.bits());
}

std::optional<std::pair<Mask, Mask>> first_comparable(const FamilyPair& pair) {
  for (Mask a : pair.f()) {
    for (Mask b : pair.g()) {
      if (!mask_incomparable(a, b)) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

bool is_cross_sperner(const FamilyPair& pair) { return !first_comparable(pair).has_value(); }

Family intersection_family(const FamilyPair& pair) {
  std::vector<Mask> out;
  out.reserve(pair.f().size() * pair.g().size());
  for (Mask a : pair.f()) {
    for (Mask b : pair.g()) out.push_back(a & b);
  }
  return Family(pair.ground(), std::move(out));
}

Family maximal_partner(const Family& g) {
  const GroundSet ground = g.ground();
  std::vector<Mask> out;
  for (std::uint64_t s = 0; s < ground.subset_count(); ++s) {
    const auto a = static_cast<Mask>(s);
    if (std::all_of(g.begin(), g.end(), [a](Mask b) { return mask_incomparable(a, b); })) {
      out.push_back(a);
    }
  }
  return Family(ground, std::move(out));
}

Mask permute_mask(Mask bits, std::span<const int> perm) {
  Mask out = 0;
  for (Mask rest = bits; rest != 0; rest &= rest - 1) {
    out |= Mask{1} << perm[static_cast<std::size_t>(std::countr_zero(rest))];
  }
  return out;
}

Family permute_family(const Family& family, std::span<const int> perm) {
  if (perm.size() != static_cast<std::size_t>(family.ground().size())) {
    throw UsageError("permutation length does not match ground set");
  }
  std::vector<Mask> out;
  out.reserve(family.size());
  for (Mask m : family) out.push_back(permute_mask(m, perm));
  return Family(family.ground(), std::move(out));
}

FamilyPair permute_pair(const FamilyPair& pair, std::span<const int> perm) {
  return FamilyPair(permute_family(pair.f(), perm), permute_family(pair.g(), perm));
}

FamilyPair canonicalize_pair(const FamilyPair& pair) {
  const int n = pair.ground().size();
  if (n > kMaxCanonicalN) {
    throw UsageError("canonicalize_pair supports n <= " + std::to_string(kMaxCanonicalN) + ", got " +
                     std::to_string(n));
  }
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);

  std::vector<Mask> image(subsets);
  std::vector<Mask> f_img(pair.f().size());
  std::vector<Mask> g_img(pair.g().size());
  std::vector<Mask> best_f(pair.f().begin(), pair.f().end());
  std::vector<Mask> best_g(pair.g().begin(), pair.g().end());

  do {
    // image[s] built from image[s without its lowest bit]
    image[0] = 0;
    for (std::size_t s = 1; s < subsets; ++s) {
      image[s] = image[s & (s - 1)] | (Mask{1} << perm[static_cast<std::size_t>(std::countr_zero(s))]);
    }
    std::transform(pair.f().begin(), pair.f().end(), f_img.begin(), [&](Mask m) { return image[m]; });
    std::sort(f_img.begin(), f_img.end());
    auto cmp = std::lexicographical_compare_three_way(f_img.begin(), f_img.end(), best_f.begin(), best_f.end());
    if (cmp == std::strong_ordering::greater) continue;
    std::transform(pair.g().begin(), pair.g().end(), g_img.begin(), [&](Mask m) { return image[m]; });
    std::sort(g_img.begin(), g_img.end());
    if (cmp == std::strong_ordering::equal &&
        std::lexicographical_compare_three_way(g_img.begin(), g_img.end(), best_g.begin(), best_g.end()) !=
            std::strong_ordering::less) {
      continue;
    }
    best_f = f_img;
    best_g = g_img;
  } while (std::next_permutation(perm.begin(), perm.end()));

  return FamilyPair(Family(pair.ground(), std::move(best_f)), Family(pair.ground(), std::move(best_g)));
}

std::string format_set(Mask bits) {
  if (bits == 0) return "{}";
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int e : mask_elements(bits)) {
    if (!first) out << ',';
    out << e;
    first = false;
  }
  out << '}';
  return out.str();
}

std::string format_family(const Family& family) {
  std::string out = "{";
  bool first = true;
  for (Mask m : family) {
    if (!first) out += ", ";
    out += format_set(m);
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace xsperner
