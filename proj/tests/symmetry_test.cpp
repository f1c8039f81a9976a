#include "frankl/symmetry.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "frankl/error.hpp"
#include "frankl/oracle.hpp"

namespace frankl {
namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

bool related(const NkmList& a, const NkmList& b, const std::vector<Permutation>& perms) {
  for (const Permutation& p : perms) {
    if (perm_family(a, p) == b) return true;
  }
  return false;
}

TEST(Combine, SmallCases) {
  const std::vector<ElementId> l{0, 1, 2};
  EXPECT_EQ(combine(l, 2), (std::vector<Block>{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(combine(l, 0), (std::vector<Block>{{}}));
  EXPECT_EQ(combine(std::vector<ElementId>{0, 1, 2, 3, 4}, 3).size(), 10u);
  EXPECT_TRUE(combine(l, 4).empty());
}

TEST(Combine, OutputIsSortedDistinctAndComplete) {
  for (unsigned n = 0; n <= 8; ++n) {
    std::vector<ElementId> l(n);
    for (unsigned i = 0; i < n; ++i) l[i] = i;
    for (unsigned k = 0; k <= n; ++k) {
      const auto out = combine(l, k);
      ASSERT_EQ(out.size(), binomial(n, k));
      ASSERT_TRUE(std::is_sorted(out.begin(), out.end()));
      ASSERT_EQ(std::adjacent_find(out.begin(), out.end()), out.end());
      for (const auto& c : out) ASSERT_TRUE(std::is_sorted(c.begin(), c.end()));
    }
  }
}

TEST(GenFamilies, CountsMatchBinomials) {
  EXPECT_EQ(gen_families(5, 3, 3).size(), 120u);
  EXPECT_EQ(gen_families(6, 3, 4).size(), 4845u);
  EXPECT_EQ(gen_families(7, 3, 4).size(), 52360u);
  for (unsigned n = 1; n <= 5; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      for (unsigned m = 0; m <= 3; ++m) {
        ASSERT_EQ(gen_families(n, k, m).size(), binomial(binomial(n, k), m));
      }
    }
  }
}

TEST(Permutations, CountsAndGuard) {
  EXPECT_EQ(all_permutations(3).size(), 6u);
  EXPECT_EQ(all_permutations(1), (std::vector<Permutation>{{0}}));
  EXPECT_EQ(all_permutations(7).size(), 5040u);
  EXPECT_EQ(all_permutations(4).front(), (Permutation{0, 1, 2, 3}));
  try {
    all_permutations(11);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DomainTooLarge);
  }
}

TEST(PermSet, Examples) {
  const Permutation p{3, 4, 1, 2, 0};
  EXPECT_EQ(perm_set({0, 1, 2}, p), (Block{1, 3, 4}));
  EXPECT_EQ(perm_set({0, 2, 4}, {0, 1, 2, 3, 4}), (Block{0, 2, 4}));
  EXPECT_EQ(perm_set({}, p), Block{});
}

TEST(PermFamily, Examples) {
  const Permutation p{3, 4, 1, 2, 0};
  const NkmList f{{0, 1, 2}, {0, 1, 3}, {2, 3, 4}};
  EXPECT_EQ(perm_family(f, p), (NkmList{{0, 1, 2}, {1, 3, 4}, {2, 3, 4}}));
  EXPECT_EQ(perm_family(f, {0, 1, 2, 3, 4}), f);
  EXPECT_EQ(perm_family(perm_family(f, p), inverse(p)), f);
}

TEST(PermFamily, PreservesShapeAndInvariants) {
  std::mt19937_64 rng(41);
  const auto families = gen_families(6, 3, 4);
  auto perms = all_permutations(6);
  std::uniform_int_distribution<std::size_t> pick_f(0, families.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_p(0, perms.size() - 1);
  for (int trial = 0; trial < 2000; ++trial) {
    const NkmList& f = families[pick_f(rng)];
    const Permutation& p = perms[pick_p(rng)];
    const NkmList g = perm_family(f, p);
    ASSERT_EQ(g.size(), f.size());
    ASSERT_TRUE(std::is_sorted(g.begin(), g.end()));
    for (const Block& b : g) {
      ASSERT_EQ(b.size(), 3u);
      for (ElementId e : b) ASSERT_LT(e, 6u);
    }
    ASSERT_EQ(cardinality(big_union(to_family(g))), cardinality(big_union(to_family(f))));
  }
}

TEST(Nef, TrivialCases) {
  const NkmList f{{0, 1, 2}, {0, 1, 3}, {2, 3, 4}};
  const Permutation id{0, 1, 2, 3, 4};
  EXPECT_EQ(nef({f}, std::vector<Permutation>{id}), (std::vector<NkmList>{f}));
  const Permutation p{3, 4, 1, 2, 0};
  const std::vector<Permutation> perms{id, p, inverse(p)};
  EXPECT_EQ(nef({f, perm_family(f, p)}, perms).size(), 1u);
  EXPECT_TRUE(nef({}, perms).empty());
}

TEST(Nef, FiveThreeThreeCoverageAndMinimality) {
  const auto candidates = gen_families(5, 3, 3);
  const auto perms = all_permutations(5);
  const auto reps = nef(candidates, perms);
  ASSERT_EQ(reps.size(), 4u);
  for (const NkmList& f : candidates) {
    int hits = 0;
    for (const NkmList& r : reps) hits += related(f, r, perms) ? 1 : 0;
    ASSERT_EQ(hits, 1);
  }
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = 0; j < reps.size(); ++j) {
      if (i != j) ASSERT_FALSE(related(reps[i], reps[j], perms));
    }
  }
  // Reverse order of selection: the lexicographically first family was
  // picked first and so comes last.
  EXPECT_EQ(reps.back(), candidates.front());
}

TEST(Nef, FilteredBlocks) {
  auto c6 = gen_families(6, 3, 4);
  std::erase_if(c6, [](const NkmList& f) { return check_533(f); });
  EXPECT_EQ(nef(c6, all_permutations(6)).size(), 2u);
}

TEST(StructuralChecks, ThreeOfFourWithinFive) {
  EXPECT_TRUE(check_533({{0, 1, 2}, {0, 1, 3}, {2, 3, 4}, {5, 6, 7}}));
  EXPECT_FALSE(check_533({{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}}));
  EXPECT_TRUE(check_533({{0, 1, 2}, {5, 6, 7}, {0, 1, 3}, {1, 2, 3}}));
}

TEST(StructuralChecks, AllFourWithinSix) {
  EXPECT_TRUE(check_634({{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}}));
  EXPECT_FALSE(check_634({{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 6}}));
  EXPECT_FALSE(check_634({{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {9, 10, 11}}));
}

TEST(StructuralChecks, ArityMismatch) {
  for (const NkmList& bad : {NkmList{{0, 1, 2}, {0, 1, 3}, {2, 3, 4}},
                             NkmList{{0, 1}, {0, 2}, {1, 2}, {2, 3}},
                             NkmList{{0, 1, 2}, {0, 1, 3}, {2, 3, 4}, {0, 1, 4}, {1, 2, 3}}}) {
    try {
      check_533(bad);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ArityMismatch);
    }
    EXPECT_THROW(check_634(bad), Error);
  }
}

TEST(StructuralChecks, FilterLayering) {
  const auto all = gen_families(7, 3, 4);
  std::set<NkmList> kept634, kept734;
  for (const NkmList& f : all) {
    if (!check_533(f)) kept634.insert(f);
    if (!check_533(f) && !check_634(f)) kept734.insert(f);
  }
  auto filtered = all;
  std::erase_if(filtered, [](const NkmList& f) { return check_533(f) || check_634(f); });
  EXPECT_EQ(std::set<NkmList>(filtered.begin(), filtered.end()), kept734);
  for (const NkmList& f : kept734) EXPECT_TRUE(kept634.contains(f));
}

}  // namespace
}  // namespace frankl
