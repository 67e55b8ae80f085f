#include <gtest/gtest.h>

#include <random>

#include "oracles/oracles.hpp"
#include "skewbrace/search.hpp"
#include "skewbrace/ybe.hpp"

// Randomised properties over relabelled braces. Seeds are fixed so failures
// reproduce.

namespace skewbrace {
namespace {

PermMap random_relabeling(int n, std::mt19937& rng) {
  std::vector<Element> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  if (n > 1) std::shuffle(p.begin() + 1, p.end(), rng);
  return PermMap(p);
}

TEST(Properties, RelabelledBracesStayBracesAndSolutions) {
  std::mt19937 rng(101);
  for (int n = 1; n <= 8; ++n) {
    for (const SkewBrace& b : enumerate_braces(n, true).braces) {
      const SkewBrace moved = relabel(b, random_relabeling(n, rng));
      EXPECT_TRUE(check_compatibility(moved.dot(), moved.circ()));
      EXPECT_TRUE(brace_isomorphic(b, moved));
      EXPECT_TRUE(brace_isomorphic(moved, b));
      const YbeMap r = build_r(moved);
      EXPECT_TRUE(check_ybe(r));
      EXPECT_TRUE(oracle::ybe_first_failure_materialized(r).empty());
    }
  }
}

TEST(Properties, SigmaTransportsAlongRelabelings) {
  std::mt19937 rng(202);
  for (const SkewBrace& b : enumerate_braces(8, true).braces) {
    const PermMap p = random_relabeling(8, rng);
    const BraceMaps before(b);
    const BraceMaps after(relabel(b, p));
    for (Element x = 0; x < 8; ++x) {
      for (Element y = 0; y < 8; ++y) {
        EXPECT_EQ(after.sigma(p(x), p(y)), p(before.sigma(x, y)));
        EXPECT_EQ(after.tau(p(y), p(x)), p(before.tau(y, x)));
      }
    }
  }
}

TEST(Properties, CompatibilityWitnessesCheckOutByHand) {
  std::mt19937 rng(303);
  const auto tables = oracle::all_group_tables(5);
  std::uniform_int_distribution<std::size_t> pick(0, tables.size() - 1);
  for (int i = 0; i < 200; ++i) {
    const oracle::Rows& dot = tables[pick(rng)];
    const oracle::Rows& circ = tables[pick(rng)];
    const CheckResult result = check_compatibility(validate_table(dot), validate_table(circ));
    EXPECT_EQ(result.holds, oracle::compatible(dot, circ));
    if (!result) {
      const auto& w = result.witness;
      ASSERT_EQ(w.size(), 3u);
      Element x_inv = 0;
      while (dot[w[0]][x_inv] != 0) ++x_inv;
      EXPECT_NE(circ[w[0]][dot[w[1]][w[2]]],
                dot[dot[circ[w[0]][w[1]]][x_inv]][circ[w[0]][w[2]]]);
    }
  }
}

}  // namespace
}  // namespace skewbrace
