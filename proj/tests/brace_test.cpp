#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles/oracles.hpp"
#include "skewbrace/brace.hpp"

namespace skewbrace {
namespace {

using testing::incompatible_circ_z4;
using testing::radical_brace_z4;
using testing::radical_circ_z4;

// Evaluates both sides of the compatibility law at one triple, written out
// independently of check_compatibility().
std::pair<Element, Element> compatibility_sides(const GroupTable& dot, const GroupTable& circ,
                                                Element x, Element y, Element z) {
  Element x_inv = 0;
  while (dot(x, x_inv) != 0) ++x_inv;
  return {circ(x, dot(y, z)), dot(dot(circ(x, y), x_inv), circ(x, z))};
}

TEST(CheckCompatibility, SameTableTwiceIsABrace) {
  for (const GroupTable& g : {cyclic_group(5), klein_four_group(), symmetric_group_3()}) {
    EXPECT_TRUE(check_compatibility(g, g));
  }
}

TEST(CheckCompatibility, RadicalCircleOperationOnZ4) {
  EXPECT_TRUE(check_compatibility(cyclic_group(4), radical_circ_z4()));
  // The circle operation x + y + 2xy is xor on this carrier.
  EXPECT_EQ(radical_circ_z4(), klein_four_group());
  EXPECT_TRUE(check_compatibility(cyclic_group(4), klein_four_group()));
}

TEST(CheckCompatibility, IncompatibleRelabelledZ4HasHandCheckedWitness) {
  const GroupTable dot = cyclic_group(4);
  const GroupTable circ = incompatible_circ_z4();
  const CheckResult r = check_compatibility(dot, circ);
  ASSERT_FALSE(r);
  EXPECT_EQ(r.witness, (std::vector<Element>{1, 1, 1}));
  // 1 o (1 + 1) = 1 o 2 = 0, while (1 o 1) + (-1) + (1 o 1) = 3 + 3 + 3 = 1.
  const auto [lhs, rhs] = compatibility_sides(dot, circ, 1, 1, 1);
  EXPECT_EQ(lhs, 0);
  EXPECT_EQ(rhs, 1);
  // Every earlier triple satisfies the law.
  for (Element x = 0; x <= 1; ++x) {
    for (Element y = 0; y < 4; ++y) {
      for (Element z = 0; z < 4; ++z) {
        if (x == 1 && (y > 1 || (y == 1 && z >= 1))) continue;
        const auto [l, r2] = compatibility_sides(dot, circ, x, y, z);
        EXPECT_EQ(l, r2) << x << y << z;
      }
    }
  }
}

TEST(CheckCompatibility, CarrierMismatch) {
  try {
    check_compatibility(cyclic_group(2), cyclic_group(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCarrierMismatch);
  }
}

TEST(CheckCompatibility, WitnessDoesNotDependOnJobs) {
  for (int jobs = 1; jobs <= 4; ++jobs) {
    SweepOptions options;
    options.jobs = jobs;
    const CheckResult r = check_compatibility(cyclic_group(4), incompatible_circ_z4(), options);
    EXPECT_EQ(r.witness, (std::vector<Element>{1, 1, 1}));
  }
}

TEST(CheckCompatibility, AllWitnessesStreamsInOrder) {
  std::vector<std::vector<Element>> seen;
  SweepOptions options;
  options.on_failure = [&](const std::vector<Element>& w) { seen.push_back(w); };
  const CheckResult r = check_compatibility(cyclic_group(4), incompatible_circ_z4(), options);
  ASSERT_FALSE(seen.empty());
  EXPECT_EQ(seen.front(), r.witness);
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
  std::size_t expected = 0;
  for (Element x = 0; x < 4; ++x) {
    for (Element y = 0; y < 4; ++y) {
      for (Element z = 0; z < 4; ++z) {
        const auto [l, rr] = compatibility_sides(cyclic_group(4), incompatible_circ_z4(), x, y, z);
        expected += l != rr;
      }
    }
  }
  EXPECT_EQ(seen.size(), expected);
}

TEST(MakeBrace, AcceptsAndRejects) {
  const SkewBrace z2 = make_brace(cyclic_group(2), cyclic_group(2));
  EXPECT_EQ(z2.order(), 2);
  EXPECT_EQ(radical_brace_z4().circ(), radical_circ_z4());
  try {
    make_brace(cyclic_group(4), incompatible_circ_z4());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotABrace);
    EXPECT_EQ(e.witness(), (std::vector<Element>{1, 1, 1}));
  }
}

TEST(MakeBrace, OrderOneIsABrace) {
  const SkewBrace b = trivial_brace(cyclic_group(1));
  EXPECT_EQ(b.order(), 1);
  EXPECT_EQ(sigma(b, 0, 0), 0);
  EXPECT_EQ(tau(b, 0, 0), 0);
  EXPECT_TRUE(check_lemma_inverse(b));
  EXPECT_TRUE(check_tau_antihomomorphism(b));
}

TEST(TrivialBrace, SigmaIsIdentity) {
  const SkewBrace b = trivial_brace(cyclic_group(3));
  for (Element x = 0; x < 3; ++x) {
    EXPECT_TRUE(sigma_perm(b, x).is_identity());
    for (Element y = 0; y < 3; ++y) EXPECT_EQ(sigma(b, x, y), y);
  }
  EXPECT_TRUE(check_compatibility(cyclic_group(2), cyclic_group(2)));
}

TEST(TrivialBrace, TauIsConjugationOnS3) {
  const GroupTable s3 = symmetric_group_3();
  const SkewBrace b = trivial_brace(s3);
  for (Element y = 0; y < 6; ++y) {
    std::vector<Element> conjugation(6);
    for (Element x = 0; x < 6; ++x) {
      conjugation[x] = s3(s3(s3.inverse(y), x), y);
      EXPECT_EQ(tau(b, y, x), conjugation[x]);
    }
    EXPECT_EQ(tau_perm(b, y), PermMap(conjugation));
  }
}

TEST(TrivialBrace, TauIsIdentityOnAbelianGroups) {
  const SkewBrace b = trivial_brace(cyclic_group(6));
  for (Element y = 0; y < 6; ++y) {
    for (Element x = 0; x < 6; ++x) EXPECT_EQ(tau(b, y, x), x);
  }
}

TEST(OppositeBrace, S3SigmaIsConjugationAndTauIsTrivial) {
  const GroupTable s3 = symmetric_group_3();
  const SkewBrace b = opposite_brace(s3);
  for (Element x = 0; x < 6; ++x) {
    for (Element y = 0; y < 6; ++y) {
      EXPECT_EQ(b.circ()(x, y), s3(y, x));
      EXPECT_EQ(sigma(b, x, y), s3(s3(s3.inverse(x), y), x));
      EXPECT_EQ(tau(b, y, x), x);
    }
  }
}

TEST(OppositeBrace, EqualsTrivialOnAbelianGroups) {
  for (const GroupTable& g : {cyclic_group(4), klein_four_group(), cyclic_group(7)}) {
    EXPECT_EQ(opposite_brace(g), trivial_brace(g));
  }
  EXPECT_NE(opposite_brace(symmetric_group_3()), trivial_brace(symmetric_group_3()));
}

TEST(SigmaTau, RadicalBraceValues) {
  const SkewBrace b = radical_brace_z4();
  EXPECT_EQ(sigma(b, 1, 1), 3);
  EXPECT_EQ(tau(b, 1, 1), 3);
  EXPECT_EQ(sigma_perm(b, 1), PermMap({0, 3, 2, 1}));
  // sigma_x(y) = y (1 + 2x) mod 4.
  for (Element x = 0; x < 4; ++x) {
    for (Element y = 0; y < 4; ++y) EXPECT_EQ(sigma(b, x, y), y * (1 + 2 * x) % 4);
  }
}

TEST(SigmaTau, RangeChecks) {
  const SkewBrace b = radical_brace_z4();
  EXPECT_THROW(sigma(b, 4, 0), Error);
  EXPECT_THROW(sigma(b, 0, -1), Error);
  EXPECT_THROW(tau(b, 9, 0), Error);
  EXPECT_THROW(sigma_perm(b, 4), Error);
  EXPECT_THROW(tau_perm(b, -1), Error);
}

TEST(SigmaTau, MemoizedTablesMatchOnDemandValues) {
  for (const SkewBrace& b : {radical_brace_z4(), opposite_brace(symmetric_group_3())}) {
    const BraceMaps maps(b);
    for (Element x = 0; x < b.order(); ++x) {
      for (Element y = 0; y < b.order(); ++y) {
        EXPECT_EQ(maps.sigma(x, y), sigma(b, x, y));
        EXPECT_EQ(maps.tau(y, x), tau(b, y, x));
      }
    }
  }
}

TEST(LemmaInverse, RadicalBraceAtOneOne) {
  const SkewBrace b = radical_brace_z4();
  const GroupTable& dot = b.dot();
  const GroupTable& circ = b.circ();
  // 3 + (1 o 3) + 3 = 3 + 2 + 3 = 0 and -(1 o 1) = -0 = 0.
  EXPECT_EQ(circ(1, 3), 2);
  EXPECT_EQ(dot(dot(3, circ(1, dot.inverse(1))), 3), 0);
  EXPECT_EQ(dot.inverse(circ(1, 1)), 0);
  EXPECT_TRUE(check_lemma_inverse(b));
}

TEST(LemmaInverse, TrivialBraceSidesAreBInverseAInverse) {
  const GroupTable s3 = symmetric_group_3();
  const SkewBrace b = trivial_brace(s3);
  EXPECT_TRUE(check_lemma_inverse(b));
  for (Element a = 0; a < 6; ++a) {
    for (Element c = 0; c < 6; ++c) {
      EXPECT_EQ(s3.inverse(s3(a, c)), s3(s3.inverse(c), s3.inverse(a)));
    }
  }
}

TEST(IdentitySuite, AllHoldOnKnownBraces) {
  for (const SkewBrace& b : {radical_brace_z4(), trivial_brace(symmetric_group_3()),
                             opposite_brace(symmetric_group_3()), trivial_brace(cyclic_group(1))}) {
    EXPECT_TRUE(check_lemma_inverse(b));
    EXPECT_TRUE(check_sigma_homomorphism(b));
    EXPECT_TRUE(check_tau_antihomomorphism(b));
    EXPECT_TRUE(check_sigma_twisted_product(b));
    EXPECT_TRUE(check_sigma_automorphism(b));
    EXPECT_TRUE(check_sigma_tau_factorization(b));
    for (const auto& outcome : identity_suite(b.dot(), b.circ())) {
      EXPECT_TRUE(outcome.result) << outcome.name;
    }
  }
}

TEST(IdentitySuite, ReportsFailuresOnNonBracePairs) {
  const auto outcomes = identity_suite(cyclic_group(4), incompatible_circ_z4());
  ASSERT_EQ(outcomes.size(), 7u);
  EXPECT_STREQ(outcomes[0].name, kCompatibility);
  EXPECT_FALSE(outcomes[0].result);
  EXPECT_EQ(outcomes[0].result.witness, (std::vector<Element>{1, 1, 1}));
  // The sigma composition law fails together with compatibility.
  EXPECT_STREQ(outcomes[2].name, kSigmaHomomorphism);
  EXPECT_FALSE(outcomes[2].result);
}

TEST(GvEquivalence, ExhaustiveOverAllGroupPairsUpToOrderFive) {
  std::size_t pairs = 0;
  std::size_t braces = 0;
  for (int n = 1; n <= 5; ++n) {
    std::vector<GroupTable> tables;
    for (const auto& t : oracle::all_group_tables(n)) tables.push_back(validate_table(t));
    for (const GroupTable& dot : tables) {
      for (const GroupTable& circ : tables) {
        EXPECT_TRUE(check_gv_equivalence(dot, circ));
        ++pairs;
        braces += check_compatibility(dot, circ).holds;
      }
    }
  }
  // 1 + 1 + 1 + 16 + 36 labelled pairs; 1 + 1 + 1 + 10 + 6 of them are braces.
  EXPECT_EQ(pairs, 55u);
  EXPECT_EQ(braces, 19u);
}

}  // namespace
}  // namespace skewbrace
