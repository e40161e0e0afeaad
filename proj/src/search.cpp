#include "xsperner/search.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "xsperner/dense.hpp"

namespace xsperner {

std::string_view to_string(PruningLevel level) noexcept {
  switch (level) {
    case PruningLevel::none: return "none";
    case PruningLevel::common_element: return "common-element";
    case PruningLevel::full: return "full";
  }
  return "?";
}

std::optional<PruningLevel> parse_pruning_level(std::string_view text) noexcept {
  if (text == "none") return PruningLevel::none;
  if (text == "common-element") return PruningLevel::common_element;
  if (text == "full") return PruningLevel::full;
  return std::nullopt;
}

int max_search_n(PruningLevel level) noexcept {
  switch (level) {
    case PruningLevel::none: return 4;
    case PruningLevel::common_element: return 5;
    case PruningLevel::full: return 7;
  }
  return 0;
}

namespace {

void check_search_range(int n, PruningLevel level) {
  if (n < 2 || n > max_search_n(level)) {
    throw UsageError("search with pruning '" + std::string(to_string(level)) + "' supports 2 <= n <= " +
                     std::to_string(max_search_n(level)) + ", got n = " + std::to_string(n));
  }
}

struct CandidateSpace {
  Mask fixed = 0;  // 0 when nothing is fixed; otherwise the single forced member
  bool has_fixed = false;
  std::vector<Mask> free;
};

CandidateSpace candidate_space(int n, PruningLevel level) {
  const Mask full = GroundSet(n).full();
  const Mask top = full & ~(Mask{1} << (n - 1));  // [n] minus n
  CandidateSpace space;
  for (Mask s = 0; s <= full; ++s) {
    switch (level) {
      case PruningLevel::none:
        space.free.push_back(s);
        break;
      case PruningLevel::common_element:
        if ((s & 1U) != 0 && s != full) space.free.push_back(s);
        break;
      case PruningLevel::full:
        if ((s & 1U) != 0 && s != full && s != top) space.free.push_back(s);
        break;
    }
  }
  if (level == PruningLevel::full) {
    space.fixed = top;
    space.has_fixed = true;
  }
  return space;
}

template <typename Word>
struct Accumulator {
  std::uint64_t best = 0;
  std::vector<Word> hits;  // G of mutually-maximal pairs attaining `best`
  std::uint64_t examined = 0;

  void merge(Accumulator&& other) {
    examined += other.examined;
    if (other.best > best) {
      best = other.best;
      hits = std::move(other.hits);
    } else if (other.best == best) {
      hits.insert(hits.end(), other.hits.begin(), other.hits.end());
    }
  }
};

// Scores every G in a candidate space. The space is indexed by bit vectors
// over `free`; the top bits select a chunk, the low bits are walked by DFS so
// F = ∩ incomparable(b) and the strict down-set of G update incrementally.
// Subtrees whose upper bound on |I| falls below the best value seen so far are
// skipped; they cannot contain a maximum, so the report is unaffected.
template <typename Word>
class Engine {
 public:
  Engine(int n, const CandidateSpace& space, bool witnesses, std::atomic<std::uint64_t>& shared_best)
      : lattice_(n), space_(space), witnesses_(witnesses), shared_best_(shared_best) {
    const int k = static_cast<int>(space.free.size());
    low_bits_ = std::max(0, k - kChunkBits);
    high_bits_ = k - low_bits_;
    suffix_down_.assign(static_cast<std::size_t>(low_bits_) + 1, Word{0});
    for (int j = low_bits_ - 1; j >= 0; --j) {
      suffix_down_[static_cast<std::size_t>(j)] =
          suffix_down_[static_cast<std::size_t>(j) + 1] | lattice_.strict_subsets_of(space.free[static_cast<std::size_t>(j)]);
    }
  }

  [[nodiscard]] std::uint64_t chunk_count() const noexcept { return std::uint64_t{1} << high_bits_; }

  void run_chunk(std::uint64_t chunk, Accumulator<Word>& acc) {
    acc.examined += std::uint64_t{1} << low_bits_;
    Word g = 0;
    Word f = lattice_.all();
    Word down = 0;
    if (space_.has_fixed) include(space_.fixed, g, f, down);
    for (int j = 0; j < high_bits_; ++j) {
      if ((chunk >> j) & 1U) include(space_.free[static_cast<std::size_t>(low_bits_ + j)], g, f, down);
    }
    threshold_ = std::max<std::uint64_t>({acc.best, shared_best_.load(std::memory_order_relaxed), 1});
    visit(0, g, f, down, acc);
  }

  [[nodiscard]] const dense::Lattice<Word>& lattice() const noexcept { return lattice_; }

 private:
  static constexpr int kChunkBits = 8;

  void include(Mask b, Word& g, Word& f, Word& down) const noexcept {
    g |= dense::Lattice<Word>::bit(b);
    f &= lattice_.incomparable_with(b);
    down |= lattice_.strict_subsets_of(b);
  }

  void visit(int j, Word g, Word f, Word down, Accumulator<Word>& acc) {
    if (f == 0) return;
    const auto remaining = static_cast<std::uint64_t>(low_bits_ - j);
    const auto f_size = static_cast<std::uint64_t>(dense::popcount(f));
    const auto g_size = static_cast<std::uint64_t>(dense::popcount(g));
    if (f_size * (g_size + remaining) < threshold_) return;
    const Word reachable = lattice_.strict_down_closure(f) & (down | suffix_down_[static_cast<std::size_t>(j)]);
    if (static_cast<std::uint64_t>(dense::popcount(reachable)) < threshold_) return;
    if (j == low_bits_) {
      score(g, f, acc);
      return;
    }
    visit(j + 1, g, f, down, acc);
    include(space_.free[static_cast<std::size_t>(j)], g, f, down);
    visit(j + 1, g, f, down, acc);
  }

  void score(Word g, Word f, Accumulator<Word>& acc) {
    const auto value = static_cast<std::uint64_t>(dense::popcount(lattice_.intersections(f, g)));
    if (value < threshold_) return;
    if (value > acc.best) {
      acc.best = value;
      acc.hits.clear();
      threshold_ = value;
      std::uint64_t seen = shared_best_.load(std::memory_order_relaxed);
      while (seen < value && !shared_best_.compare_exchange_weak(seen, value, std::memory_order_relaxed)) {
      }
    }
    if (value == acc.best && witnesses_ && lattice_.partner(f) == g) acc.hits.push_back(g);
  }

  dense::Lattice<Word> lattice_;
  const CandidateSpace& space_;
  bool witnesses_;
  std::atomic<std::uint64_t>& shared_best_;
  int low_bits_ = 0;
  int high_bits_ = 0;
  std::vector<Word> suffix_down_;
  std::uint64_t threshold_ = 1;
};

template <typename Word>
SearchReport run_search(int n, PruningLevel level, const SearchOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  const CandidateSpace space = candidate_space(n, level);
  std::atomic<std::uint64_t> shared_best{0};

  unsigned workers = options.workers == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.workers;

  Engine<Word> probe(n, space, options.enumerate_witnesses, shared_best);
  const std::uint64_t chunks = probe.chunk_count();
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));

  Accumulator<Word> total;
  if (workers <= 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) probe.run_chunk(c, total);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<Accumulator<Word>> partial(workers);
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        Engine<Word> engine(n, space, options.enumerate_witnesses, shared_best);
        for (std::uint64_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) {
          engine.run_chunk(c, partial[w]);
        }
      });
    }
    pool.clear();
    for (auto& p : partial) total.merge(std::move(p));
  }

  SearchReport report;
  report.n = n;
  report.method = level;
  report.m_value = total.best;
  report.formula_value = m_formula(n);
  report.candidates_examined = total.examined;
  report.raw_witness_count = total.hits.size();

  const auto& lattice = probe.lattice();
  std::vector<FamilyPair> classes;
  for (Word g : total.hits) {
    FamilyPair canonical = canonicalize_pair(FamilyPair(lattice.to_family(lattice.partner(g)), lattice.to_family(g)));
    classes.push_back(std::move(canonical));
  }
  std::sort(classes.begin(), classes.end(),
            [](const FamilyPair& a, const FamilyPair& b) { return compare_pairs(a, b) < 0; });
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  for (auto& pair : classes) {
    auto split = classify_type_xy(pair);
    report.witnesses.push_back(ExtremalWitness{std::move(pair), total.best, split});
  }

  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - started);
  return report;
}

}  // namespace

std::uint64_t candidate_count(int n, PruningLevel level) {
  check_search_range(n, level);
  const int subsets = 1 << n;
  switch (level) {
    case PruningLevel::none: return std::uint64_t{1} << subsets;
    case PruningLevel::common_element: return std::uint64_t{1} << (subsets / 2 - 1);
    case PruningLevel::full: return std::uint64_t{1} << (subsets / 2 - 2);
  }
  return 0;
}

std::vector<std::string> search_assumptions(PruningLevel level) {
  std::vector<std::string> out{"F = maximal_partner(G) (lossless: I is monotone and every compatible F is contained in it)"};
  if (level == PruningLevel::none) return out;
  out.emplace_back("extremal G has a nonempty common intersection; relabelled so element 1 lies in every member of G");
  if (level == PruningLevel::common_element) return out;
  out.emplace_back("extremal F and G each contain an (n-1)-subset; relabelled so [n]\\{n} is in G");
  return out;
}

SearchReport search_m(int n, PruningLevel pruning, const SearchOptions& options) {
  check_search_range(n, pruning);
  if (n <= dense::kMaxN<std::uint64_t>) return run_search<std::uint64_t>(n, pruning, options);
  return run_search<dense::Wide>(n, pruning, options);
}

bool cross_validate(int n, unsigned workers) {
  if (n > 4) throw UsageError("cross_validate requires n <= 4, got " + std::to_string(n));
  const SearchOptions options{false, workers};
  const auto none = search_m(n, PruningLevel::none, options).m_value;
  return none == search_m(n, PruningLevel::common_element, options).m_value &&
         none == search_m(n, PruningLevel::full, options).m_value;
}

}  // namespace xsperner
