#include <gtest/gtest.h>

#include "oracles.hpp"
#include "schubert/bumpless.hpp"
#include "schubert/schubert.hpp"

using namespace schubert;
using oracle::perm;

TEST(Bumpless, TileEdges) {
  EXPECT_FALSE(tile_edges(BpdTile::Blank).north);
  const TileEdges c = tile_edges(BpdTile::Cross);
  EXPECT_TRUE(c.north && c.south && c.east && c.west);
  const TileEdges se = tile_edges(BpdTile::ElbowSE);
  EXPECT_TRUE(se.south && se.east && !se.north && !se.west);
  const TileEdges nw = tile_edges(BpdTile::ElbowNW);
  EXPECT_TRUE(nw.north && nw.west && !nw.south && !nw.east);
  for (BpdTile t : {BpdTile::Blank, BpdTile::Cross, BpdTile::Horizontal, BpdTile::Vertical, BpdTile::ElbowSE,
                    BpdTile::ElbowNW})
    EXPECT_EQ(tile_from_name(tile_name(t)), t);
}

TEST(Bumpless, IdentityHasNoBlanks) {
  const auto bpds = enumerate_bpds(Permutation(), 3);
  ASSERT_EQ(bpds.size(), 1u);
  EXPECT_EQ(blank_count(bpds[0]), 0);
  EXPECT_EQ(bpd_weight_single(bpds[0]), Polynomial(1));
}

TEST(Bumpless, SimpleTransposition) {
  // Blank at (1,1); the pipe of row 1 turns east at (1,2), the one of row 2 at
  // (2,1) and crosses the column-2 pipe at (2,2).
  const auto bpds = enumerate_bpds(perm({2, 1}));
  ASSERT_EQ(bpds.size(), 1u);
  const BumplessPipeDream& b = bpds[0];
  EXPECT_EQ(b.at(1, 1), BpdTile::Blank);
  EXPECT_EQ(b.at(1, 2), BpdTile::ElbowSE);
  EXPECT_EQ(b.at(2, 1), BpdTile::ElbowSE);
  EXPECT_EQ(b.at(2, 2), BpdTile::Cross);
  EXPECT_EQ(bpd_permutation(b), perm({2, 1}));
  EXPECT_EQ(render_bpd(b).substr(0, 3), "░");
}

TEST(Bumpless, RotheBlanksAreTheDiagram) {
  for (int n = 1; n <= 4; ++n)
    for (const Permutation& w : all_permutations(n)) {
      const BumplessPipeDream r = rothe_bpd(w, n);
      std::set<std::pair<int, int>> blanks;
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          if (r.at(i, j) == BpdTile::Blank) blanks.insert({i, j});
      EXPECT_EQ(blanks, oracle::rothe_diagram(w, n)) << w.to_string();
      EXPECT_EQ(bpd_permutation(r), w);
    }
}

TEST(Bumpless, AllGridsAreAlternatingSignMatrices) {
  // 1, 2, 7, 42, 429 alternating sign matrices.
  const std::size_t asm_counts[] = {1, 2, 7, 42, 429};
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(all_bpd_grids(n).size(), asm_counts[n - 1]) << n;
}

TEST(Bumpless, SumsMatchCompatibleSequences) {
  for (int n = 1; n <= 4; ++n)
    for (const Permutation& w : all_permutations(n)) {
      Polynomial single, dbl;
      for (const auto& b : enumerate_bpds(w, n)) {
        single += bpd_weight_single(b);
        dbl += bpd_weight_double(b);
      }
      EXPECT_EQ(single, oracle::bjs(w, false)) << w.to_string();
      EXPECT_EQ(dbl, oracle::bjs(w, true)) << w.to_string();
    }
}

TEST(Bumpless, BlankCountIsLengthAndTraceRecoversW) {
  for (int n = 1; n <= 4; ++n)
    for (const Permutation& w : all_permutations(n))
      for (const auto& b : enumerate_bpds(w, n)) {
        EXPECT_EQ(blank_count(b), w.length());
        EXPECT_EQ(bpd_permutation(b), w);
        EXPECT_TRUE(trace_bpd(b).reduced);
      }
}

TEST(Bumpless, DroopClosureEqualsEnumeration) {
  for (int n = 1; n <= 4; ++n)
    for (const Permutation& w : all_permutations(n)) EXPECT_EQ(droop_closure(w, n), enumerate_bpds(w, n)) << w.to_string();
}

TEST(Bumpless, DroopsPreservePermutationAndBlankCount) {
  for (const Permutation& w : all_permutations(4))
    for (const auto& b : enumerate_bpds(w, 4))
      for (const auto& d : droops(b)) {
        EXPECT_EQ(bpd_permutation(d), w);
        EXPECT_EQ(blank_count(d), blank_count(b));
        EXPECT_NE(d, b);
      }
}

TEST(Bumpless, ColumnReadingIsTheInverse) {
  // Reading the same grids column-to-row yields w^{-1}; it differs from the
  // canonical reading exactly on non-involutions.
  for (const Permutation& w : all_permutations(3))
    for (const auto& b : enumerate_bpds(w, 3))
      EXPECT_EQ(bpd_permutation(b, BpdConvention::ColumnToRow), w.inverse());
}

TEST(Bumpless, InvalidGridsAreRejected) {
  BumplessPipeDream b{2, {{BpdTile::Cross, BpdTile::Cross}, {BpdTile::Cross, BpdTile::Cross}}};
  EXPECT_THROW(trace_bpd(b), InvalidBpd);
  BumplessPipeDream ragged{2, {{BpdTile::Blank}}};
  EXPECT_THROW(trace_bpd(ragged), InvalidBpd);
}

TEST(Bumpless, JsonRoundTrip) {
  for (const auto& b : enumerate_bpds(perm({1, 4, 3, 2}))) EXPECT_EQ(bpd_from_json(bpd_to_json(b)), b);
  EXPECT_THROW(bpd_from_json(nlohmann::json{{"n", 1}, {"grid", {{"teapot"}}}}), std::exception);
}
