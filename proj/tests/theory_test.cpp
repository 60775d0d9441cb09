#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "oracles.hpp"
#include "qorbit/theory.hpp"

using namespace qorbit;

namespace {

std::vector<Nat> nats(std::initializer_list<unsigned long> xs) {
  std::vector<Nat> v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// classify

TEST(Classify, Examples) {
  EXPECT_EQ(classify(Nat{33}), OrbitClass(EventuallyPeriodic{5, 0, 0, Nat{33}}));
  EXPECT_EQ(classify(Nat{3}), OrbitClass(EventuallyPeriodic{1, 0, 0, Nat{3}}));
  EXPECT_EQ(classify(Nat{7}), OrbitClass(Divergent{1, Nat{3}}));
  EXPECT_EQ(classify(Nat{19}), OrbitClass(Divergent{1, Nat{9}}));
  EXPECT_EQ(classify(Nat{8}), OrbitClass(FallsToZero{4}));
  EXPECT_EQ(classify(Nat{0}), OrbitClass(FallsToZero{0}));
  EXPECT_EQ(classify(Nat{1}), OrbitClass(FallsToZero{1}));
}

TEST(Classify, SeedAboveTheCycle) {
  // Oracle: simulate 2112 = 2^6 * 33 and read off entry index and the step
  // at which 33 first appears.
  const auto sim = oracle::simulate(Nat{2112}, 4096);
  ASSERT_TRUE(sim.cycled);
  EXPECT_EQ(sim.entry, 2u);
  EXPECT_EQ(sim.period, 5u);
  Nat x{2112};
  for (int i = 0; i < 6; ++i) x = oracle::q(x);
  EXPECT_EQ(x, 33);

  EXPECT_EQ(classify(Nat{2112}), OrbitClass(EventuallyPeriodic{5, 2, 6, Nat{33}}));
}

TEST(Classify, CycleElementsHaveNoTransient) {
  for (Exponent m = 1; m <= 12; ++m) {
    const auto cycle = cycle_for(m);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const auto c = std::get<EventuallyPeriodic>(classify(cycle[i]));
      EXPECT_EQ(c.m, m);
      EXPECT_EQ(c.transient_steps, 0u);
      EXPECT_EQ(c.steps_to_anchor, i == 0 ? 0 : m - i);
    }
  }
}

TEST(Classify, AgreesWithSimulation) {
  for (unsigned long n = 0; n <= 3000; ++n) {
    const Nat seed{n};
    const auto sim = oracle::simulate(seed, 2048);
    const auto cls = classify(seed);
    if (const auto* z = std::get_if<FallsToZero>(&cls)) {
      ASSERT_TRUE(sim.cycled) << n;
      ASSERT_EQ(sim.period, 1u);
      ASSERT_EQ(sim.entry, z->transient_steps) << n;
    } else if (const auto* p = std::get_if<EventuallyPeriodic>(&cls)) {
      ASSERT_TRUE(sim.cycled) << n;
      ASSERT_EQ(sim.period, p->m) << n;
      ASSERT_EQ(sim.entry, p->transient_steps) << n;
      Nat x = seed;
      for (Exponent i = 0; i < p->steps_to_anchor; ++i) x = oracle::q(x);
      ASSERT_EQ(x, p->anchor);
      ASSERT_EQ(p->anchor, pow2(p->m) + 1);
    } else {
      ASSERT_FALSE(sim.cycled) << n;
      const auto& d = std::get<Divergent>(cls);
      ASSERT_GE(d.k0, 3);
      ASSERT_TRUE(is_odd(d.k0));
    }
  }
}

// ---------------------------------------------------------------------------
// cycle_for

TEST(CycleFor, Examples) {
  EXPECT_EQ(cycle_for(1), nats({3}));
  EXPECT_EQ(cycle_for(2), nats({5, 10}));
  EXPECT_EQ(cycle_for(5), nats({33, 528, 264, 132, 66}));
  EXPECT_THROW(cycle_for(0), DomainError);
}

TEST(CycleFor, ClosesUnderQ) {
  for (Exponent m = 1; m <= 16; ++m) {
    const auto cycle = cycle_for(m);
    ASSERT_EQ(cycle.size(), m);
    ASSERT_EQ(cycle.front(), pow2(m) + 1);
    for (std::size_t i = 0; i < m; ++i) ASSERT_EQ(oracle::q(cycle[i]), cycle[(i + 1) % m]);
    ASSERT_EQ(std::set<Nat>(cycle.begin(), cycle.end()).size(), m);
  }
}

// ---------------------------------------------------------------------------
// next_odd

TEST(NextOdd, Examples) {
  EXPECT_EQ(next_odd(Nat{33}), (OddStep{Nat{33}, 5, Nat{1}, Nat{33}}));

  EXPECT_EQ(oracle::q(Nat{7}), 21);
  EXPECT_EQ(next_odd(Nat{7}), (OddStep{Nat{7}, 1, Nat{3}, Nat{21}}));

  EXPECT_EQ(oracle::q(Nat{21}), 210);
  EXPECT_EQ(oracle::q(Nat{210}), 105);
  EXPECT_EQ(next_odd(Nat{21}), (OddStep{Nat{21}, 2, Nat{5}, Nat{105}}));

  EXPECT_THROW(next_odd(Nat{1}), DomainError);
  EXPECT_THROW(next_odd(Nat{8}), DomainError);
}

TEST(NextOdd, MatchesNaiveStepping) {
  for (unsigned long o = 3; o <= 10000; o += 2) {
    const auto s = next_odd(Nat{o});
    const auto [v, steps] = oracle::next_odd_by_stepping(Nat{o});
    ASSERT_EQ(s.odd_out, v) << o;
    ASSERT_EQ(s.j, steps) << o;
    ASSERT_EQ(s.odd_out, s.k * s.odd_in);
  }
}

// ---------------------------------------------------------------------------
// certify_divergence

TEST(Certify, SevenThreeSteps) {
  // Oracle chain by stepping Q.
  std::vector<Nat> chain{Nat{7}};
  for (int i = 0; i < 3; ++i) chain.push_back(oracle::next_odd_by_stepping(chain.back()).first);
  EXPECT_EQ(chain, nats({7, 21, 105, 1365}));

  const auto cert = certify_divergence(Nat{7}, 3);
  ASSERT_EQ(cert.steps.size(), 3u);
  EXPECT_EQ(cert.lead_in_steps, 0u);
  EXPECT_EQ(cert.odd0, 7);
  EXPECT_EQ(cert.steps[0], (OddStep{Nat{7}, 1, Nat{3}, Nat{21}}));
  EXPECT_EQ(cert.steps[1], (OddStep{Nat{21}, 2, Nat{5}, Nat{105}}));
  EXPECT_EQ(cert.steps[2], (OddStep{Nat{105}, 3, Nat{13}, Nat{1365}}));
  EXPECT_EQ(cert.growth_bound(), 27 * 7);
  EXPECT_TRUE(cert.growth_ok);
}

TEST(Certify, NineteenTwoSteps) {
  EXPECT_EQ(oracle::next_odd_by_stepping(Nat{19}).first, 171);
  EXPECT_EQ(oracle::next_odd_by_stepping(Nat{171}).first, 14535);

  const auto cert = certify_divergence(Nat{19}, 2);
  EXPECT_EQ(cert.steps[0].k, 9);
  EXPECT_EQ(cert.steps[1].k, 85);
  EXPECT_EQ(cert.steps[1].odd_out, 14535);
  EXPECT_GE(cert.steps[1].odd_out, 9 * 19);
  EXPECT_TRUE(cert.growth_ok);
}

TEST(Certify, FifteenTwoSteps) {
  const auto cert = certify_divergence(Nat{15}, 2);
  EXPECT_EQ(cert.steps[0], (OddStep{Nat{15}, 1, Nat{7}, Nat{105}}));
  EXPECT_EQ(cert.steps[1], (OddStep{Nat{105}, 3, Nat{13}, Nat{1365}}));
}

TEST(Certify, EvenSeedRecordsLeadIn) {
  const auto cert = certify_divergence(Nat{7 * 16}, 1);
  EXPECT_EQ(cert.lead_in_steps, 4u);
  EXPECT_EQ(cert.odd0, 7);
}

TEST(Certify, RejectsNonDivergentSeeds) {
  EXPECT_THROW(certify_divergence(Nat{33}, 1), DomainError);
  EXPECT_THROW(certify_divergence(Nat{0}, 1), DomainError);
  EXPECT_THROW(certify_divergence(Nat{64}, 1), DomainError);
  EXPECT_THROW(certify_divergence(Nat{2112}, 1), DomainError);
  EXPECT_THROW(certify_divergence(Nat{7}, 0), DomainError);
}

TEST(Certify, BitCapReportsCompletedSteps) {
  // 7 -> 21 -> 105 -> 1365 (11 bits) -> 1365 * k ...
  try {
    certify_divergence(Nat{7}, 10, 11);
    FAIL() << "expected ResourceError";
  } catch (const ResourceError& e) {
    EXPECT_EQ(e.completed(), 3u);
  }
}

TEST(Certify, MultipliersAndGrowthAcrossSeeds) {
  for (unsigned long n = 1; n <= 2000; ++n) {
    if (!is_divergent(classify(Nat{n}))) continue;
    const auto cert = certify_divergence(Nat{n}, 4);
    ASSERT_TRUE(cert.growth_ok) << n;
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
      ASSERT_GE(cert.steps[i].k, 3);
      ASSERT_GE(cert.steps[i].odd_out, 3 * cert.steps[i].odd_in);
      if (i + 1 < cert.steps.size()) ASSERT_EQ(cert.steps[i].odd_out, cert.steps[i + 1].odd_in);
    }
  }
}

// ---------------------------------------------------------------------------
// lemma2_scan

TEST(Lemma2Scan, EmptyOnStandardGrid) {
  const auto r = lemma2_scan({1, 20}, {3, 9999});
  EXPECT_TRUE(r.solutions.empty());
  EXPECT_EQ(r.pairs_checked, 20u * 4999u);
}

TEST(Lemma2Scan, JOneByFactorization) {
  // 2k^2 + k - 1 = (2k - 1)(k + 1); for k >= 3 the factor 2k - 1 >= 5 is odd.
  for (unsigned long k = 3; k <= 99999; k += 2) {
    const Nat lhs = 2 * Nat{k} * k + k - 1;
    ASSERT_EQ(lhs, Nat{2 * k - 1} * (k + 1));
    ASSERT_FALSE(is_power_of_two(lhs));
  }
  EXPECT_TRUE(lemma2_scan({1, 1}, {3, 99999}).solutions.empty());
}

TEST(Lemma2Scan, JTwoBelowTwentyNine) {
  EXPECT_EQ(4 * (8 - 1) + 1, 29);
  const auto r = lemma2_scan({2, 2}, {3, 27});
  EXPECT_TRUE(r.solutions.empty());
  EXPECT_EQ(r.pairs_checked, 13u);
}

TEST(Lemma2Scan, ParallelMatchesSequential) {
  const auto seq = lemma2_scan({1, 12}, {3, 4001}, 1);
  for (unsigned w : {2u, 3u, 8u, 5000u}) EXPECT_EQ(lemma2_scan({1, 12}, {3, 4001}, w), seq) << w;
}

TEST(Lemma2Scan, OddRestrictionOfKRange) {
  EXPECT_EQ(lemma2_scan({1, 1}, {0, 3}).pairs_checked, 1u);
  EXPECT_EQ(lemma2_scan({1, 1}, {4, 9}).pairs_checked, 3u);  // 5, 7, 9
  EXPECT_EQ(lemma2_scan({3, 5}, {5, 5}).pairs_checked, 3u);
}

TEST(Lemma2Scan, RejectsEmptyRanges) {
  EXPECT_THROW(lemma2_scan({0, 3}, {3, 9}), DomainError);
  EXPECT_THROW(lemma2_scan({4, 3}, {3, 9}), DomainError);
  EXPECT_THROW(lemma2_scan({1, 3}, {0, 2}), DomainError);
  EXPECT_THROW(lemma2_scan({1, 3}, {4, 4}), DomainError);
}

// ---------------------------------------------------------------------------
// periodic_seed_census

TEST(Census, UpToTen) {
  // Oracle: simulate every seed; bounded orbits are the ones that cycle.
  std::vector<Nat> expected;
  for (unsigned long n = 0; n <= 10; ++n) {
    if (oracle::simulate(Nat{n}, 4096).cycled) expected.emplace_back(n);
  }
  EXPECT_EQ(expected, nats({0, 1, 2, 3, 4, 5, 6, 8, 9, 10}));

  const auto c = periodic_seed_census(Nat{10}, true);
  EXPECT_EQ(c.count, 10u);
  ASSERT_TRUE(c.seeds);
  EXPECT_EQ(*c.seeds, expected);
}

TEST(Census, UpToThree) {
  const auto c = periodic_seed_census(Nat{3}, true);
  EXPECT_EQ(c.count, 4u);
  EXPECT_EQ(*c.seeds, nats({0, 1, 2, 3}));
  EXPECT_FALSE(periodic_seed_census(Nat{3}).seeds);
}

TEST(Census, MatchesSimulationToFourThousand) {
  std::uint64_t bounded = 0;
  for (unsigned long n = 0; n <= 4096; ++n) {
    if (oracle::simulate(Nat{n}, 1024).cycled) ++bounded;
    if ((n & (n - 1)) == 0 && n >= 1) ASSERT_EQ(periodic_seed_census(Nat{n}).count, bounded) << n;
  }
}

TEST(Census, NoDuplicatesAndLogSquaredBound) {
  for (Exponent e = 1; e <= 200; e += 7) {
    const Nat n = pow2(e) + 12345;
    const auto c = periodic_seed_census(n, true);
    std::set<Nat> unique(c.seeds->begin(), c.seeds->end());
    ASSERT_EQ(unique.size(), c.seeds->size());
    ASSERT_EQ(c.count, c.seeds->size());
    const double log2n = static_cast<double>(bit_length(n));
    ASSERT_LE(static_cast<double>(c.count), (log2n + 2) * (log2n + 2));
    for (const auto& s : *c.seeds) ASSERT_FALSE(is_divergent(classify(s)));
  }
  EXPECT_THROW(periodic_seed_census(Nat{0}), DomainError);
}
