#include <gtest/gtest.h>

#include <thread>

#include "oracles.hpp"
#include "schubert/schubert.hpp"

using namespace schubert;
using oracle::perm;

namespace {
Polynomial X(int i) { return Polynomial::x(i); }
Polynomial Y(int j) { return Polynomial::y(j); }
}  // namespace

TEST(Schubert, SmallExamples) {
  EXPECT_EQ(schubert_single(Permutation()), Polynomial(1));
  EXPECT_EQ(schubert_single(perm({2, 1})), X(1));
  EXPECT_EQ(schubert_single(perm({1, 3, 2})), X(1) + X(2));
  EXPECT_EQ(schubert_single(perm({2, 3, 1})), X(1) * X(2));
  EXPECT_EQ(schubert_single(perm({3, 1, 2})), X(1) * X(1));
  EXPECT_EQ(schubert_single(perm({3, 2, 1})).to_string(), "x1^2*x2");
  EXPECT_EQ(schubert_double(perm({2, 1}), 2), X(1) - Y(1));
}

TEST(Schubert, TopElements) {
  EXPECT_EQ(top_schubert_single(1), Polynomial(1));
  EXPECT_EQ(top_schubert_single(4), X(1) * X(1) * X(1) * X(2) * X(2) * X(3));
  EXPECT_EQ(top_schubert_double(2), X(1) - Y(1));
  EXPECT_EQ(top_schubert_double(3), (X(1) - Y(1)) * (X(1) - Y(2)) * (X(2) - Y(1)));
  EXPECT_THROW(top_schubert_single(0), std::invalid_argument);
}

TEST(Schubert, AgreesWithCompatibleSequenceFormula) {
  for (int n = 1; n <= 5; ++n)
    for (const Permutation& w : all_permutations(n)) {
      if (n == 5 && w.length() > 7) continue;  // keeps the word search small
      EXPECT_EQ(default_table().single_in(w, n), oracle::bjs(w, false)) << w.to_string();
      if (n <= 4) EXPECT_EQ(schubert_double(w, n), oracle::bjs(w, true)) << w.to_string();
    }
}

TEST(Schubert, RecursionAuditBothBranches) {
  for (int n = 2; n <= 4; ++n)
    for (const RecursionCheck& c : verify_demazure_recursion(n, true))
      EXPECT_TRUE(c.passed) << c.w.to_string() << " i=" << c.index << (c.double_version ? " double" : "");
}

TEST(Schubert, StableUnderRankIncrease) {
  for (const Permutation& w : all_permutations(3)) {
    EXPECT_EQ(default_table().single_in(w, 3), default_table().single_in(w, 5));
    EXPECT_EQ(schubert_double(w, 3), schubert_double(w, 4));
  }
}

TEST(Schubert, DoubleSpecializesToSingle) {
  for (const Permutation& w : all_permutations(4)) {
    const Polynomial d = schubert_double(w, 4);
    EXPECT_EQ(set_y_zero(d), schubert_single(w)) << w.to_string();
    EXPECT_TRUE(d.is_homogeneous());
    EXPECT_EQ(d.degree(), w.length());
  }
}

TEST(Schubert, RejectsPermutationOutsideGroup) {
  EXPECT_THROW(default_table().single_in(perm({3, 1, 2}), 2), std::invalid_argument);
  EXPECT_THROW(schubert_double(perm({3, 1, 2}), 2), std::invalid_argument);
}

TEST(Schubert, TableIsSafeToShare) {
  SchubertTable table;
  const auto all = all_permutations(4);
  std::vector<std::vector<Polynomial>> seen(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&, t] {
      for (const Permutation& w : all) seen[t].push_back(table.double_poly(w, 4));
    });
  for (auto& th : threads) th.join();
  for (int t = 1; t < 4; ++t) EXPECT_EQ(seen[t], seen[0]);
  EXPECT_EQ(table.cached_entries(), all.size());
}
