#include <gtest/gtest.h>

#include <random>

#include "forcelab/error.hpp"
#include "forcelab/exact.hpp"
#include "forcelab/zero_forcing.hpp"
#include "oracles.hpp"

using namespace forcelab;

namespace {

std::vector<Vertex> all_vertices(const Graph& g) {
  std::vector<Vertex> v(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

// Closure with forces applied in a random order among the eligible ones.
std::vector<bool> shuffled_closure(const Graph& g, std::span<const Vertex> start, std::mt19937& rng) {
  std::vector<bool> blue(static_cast<std::size_t>(g.order()), false);
  for (Vertex v : start) blue[static_cast<std::size_t>(v)] = true;
  for (;;) {
    std::vector<std::pair<Vertex, Vertex>> eligible;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (!blue[static_cast<std::size_t>(v)]) continue;
      std::vector<Vertex> white;
      for (Vertex w : g.neighbors(v)) {
        if (!blue[static_cast<std::size_t>(w)]) white.push_back(w);
      }
      if (white.size() == 1) eligible.emplace_back(v, white[0]);
    }
    if (eligible.empty()) return blue;
    std::uniform_int_distribution<std::size_t> pick(0, eligible.size() - 1);
    blue[static_cast<std::size_t>(eligible[pick(rng)].second)] = true;
  }
}

}  // namespace

TEST(Closure, PathFromEndpoint) {
  const Coloring c = zf_closure(path_graph(4), std::vector<Vertex>{0});
  EXPECT_TRUE(c.all_blue());
  EXPECT_EQ(c.log, (std::vector<Force>{{0, 1}, {1, 2}, {2, 3}}));
}

TEST(Closure, CycleStalls) {
  const Coloring c = zf_closure(cycle_graph(4), std::vector<Vertex>{0});
  EXPECT_EQ(c.blue_set(), std::vector<Vertex>{0});
  EXPECT_TRUE(c.log.empty());
}

TEST(Closure, AztecBorderForces) {
  const Graph g = aztec_diamond(3);
  std::vector<Vertex> set;
  for (auto [i, j] : {std::pair{1, 3}, {2, 2}, {3, 1}, {1, 4}, {2, 5}, {3, 6}}) set.push_back(aztec_vertex(3, i, j));
  EXPECT_TRUE(is_zfs(g, set));
  EXPECT_EQ(zf_closure(g, set).log.size(), 18U);
}

TEST(Closure, LogReplaysAndForcesEachVertexOnce) {
  for (const Graph& g : oracle::random_corpus(60, 10, 17)) {
    const std::vector<Vertex> start{0};
    const Coloring c = zf_closure(g, start);
    std::vector<bool> replay(static_cast<std::size_t>(g.order()), false);
    replay[0] = true;
    for (const Force& f : c.log) {
      ASSERT_TRUE(replay[static_cast<std::size_t>(f.forcer)]);
      ASSERT_FALSE(replay[static_cast<std::size_t>(f.forced)]);
      int white = 0;
      for (Vertex w : g.neighbors(f.forcer)) white += replay[static_cast<std::size_t>(w)] ? 0 : 1;
      ASSERT_EQ(white, 1);
      replay[static_cast<std::size_t>(f.forced)] = true;
    }
    EXPECT_EQ(replay, c.blue);
  }
}

TEST(Closure, RejectsOutOfRange) { EXPECT_THROW(zf_closure(path_graph(3), std::vector<Vertex>{3}), InvalidArgument); }

TEST(Closure, MonotoneAndOrderIndependent) {
  std::mt19937 rng(23);
  for (const Graph& g : oracle::random_corpus(120, 12, 29)) {
    const int n = g.order();
    std::uniform_int_distribution<int> vert(0, n - 1);
    std::vector<Vertex> small{vert(rng)};
    std::vector<Vertex> large = small;
    for (int extra = 0; extra < 3; ++extra) large.push_back(vert(rng));
    std::sort(large.begin(), large.end());
    large.erase(std::unique(large.begin(), large.end()), large.end());
    const Coloring a = zf_closure(g, small);
    const Coloring b = zf_closure(g, large);
    for (int v = 0; v < n; ++v) {
      if (a.blue[static_cast<std::size_t>(v)]) {
        EXPECT_TRUE(b.blue[static_cast<std::size_t>(v)]);
      }
    }
    for (int trial = 0; trial < 3; ++trial) EXPECT_EQ(shuffled_closure(g, large, rng), b.blue);
    const std::set<Vertex> lit = oracle::closure(g, std::set<Vertex>(large.begin(), large.end()));
    EXPECT_EQ(lit.size(), b.blue_set().size());
  }
}

TEST(Zfs, Examples) {
  std::vector<Vertex> set;
  for (int i = 0; i <= 8; ++i) set.push_back(i);
  set.push_back(15);
  EXPECT_TRUE(is_zfs(circulant(16, {1, 7}), set));
  const Graph k44 = complete_bipartite(4, 4);
  EXPECT_TRUE(is_zfs(k44, all_vertices(k44)));
  std::vector<bool> pick(8, false);
  std::fill(pick.begin(), pick.begin() + 5, true);
  do {
    std::vector<Vertex> s;
    for (int v = 0; v < 8; ++v) {
      if (pick[static_cast<std::size_t>(v)]) s.push_back(v);
    }
    EXPECT_FALSE(is_zfs(k44, s));
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

TEST(ZeroForcingNumber, KnownValues) {
  EXPECT_EQ(zero_forcing_number(aztec_diamond(2)).zf_number, 4);
  EXPECT_EQ(zero_forcing_number(extended_cube(1, 1)).zf_number, 4);
  EXPECT_EQ(zero_forcing_number(circulant(8, {1, 3})).zf_number, 6);
  EXPECT_EQ(zero_forcing_number(complete_bipartite(4, 4)).zf_number, 6);
}

TEST(ZeroForcingNumber, WitnessAndForcesReplay) {
  const ZfResult r = zero_forcing_number(aztec_diamond(2));
  EXPECT_TRUE(r.is_exact);
  EXPECT_EQ(r.witness.size(), static_cast<std::size_t>(r.zf_number));
  EXPECT_TRUE(is_zfs(aztec_diamond(2), r.witness));
  EXPECT_EQ(r.forces.size(), static_cast<std::size_t>(aztec_diamond(2).order() - r.zf_number));
  EXPECT_GT(r.stats.subsets_examined, 0U);
}

TEST(ZeroForcingNumber, AgreesWithBruteForce) {
  for (const Graph& g : oracle::random_corpus(150, 8, 31)) {
    ASSERT_EQ(zero_forcing_number(g).zf_number, oracle::brute_force_z(g)) << write_edge_list(g);
  }
  EXPECT_EQ(zero_forcing_number(path_graph(1)).zf_number, 1);
  EXPECT_EQ(zero_forcing_number(empty_graph(3)).zf_number, 3);
}

TEST(ZeroForcingNumber, HintDoesNotChangeTheAnswer) {
  const Graph g = aztec_diamond(2);
  const ZfResult plain = zero_forcing_number(g);
  for (int hint : {1, 3, 4, 6}) {
    ZfOptions o;
    o.size_hint = hint;
    const ZfResult r = zero_forcing_number(g, o);
    EXPECT_EQ(r.zf_number, plain.zf_number);
    EXPECT_EQ(r.witness, plain.witness);
  }
  ZfOptions asserted;
  asserted.size_hint = 4;
  asserted.assert_lower_bound = true;
  const ZfResult fast = zero_forcing_number(g, asserted);
  EXPECT_EQ(fast.witness, plain.witness);
  EXPECT_LT(fast.stats.subsets_examined, plain.stats.subsets_examined);
}

TEST(ZeroForcingNumber, ParallelIsDeterministic) {
  for (const Graph& g : {aztec_diamond(3), circulant(12, {1, 3}), extended_cube(1, 2)}) {
    const ZfResult one = zero_forcing_number(g);
    for (unsigned w : {2U, 3U, 5U}) {
      ZfOptions o;
      o.workers = w;
      const ZfResult many = zero_forcing_number(g, o);
      EXPECT_EQ(many.zf_number, one.zf_number);
      EXPECT_EQ(many.witness, one.witness);
    }
  }
}

TEST(ZeroForcingNumber, CapGivesBoundsOnly) {
  ZfOptions o;
  o.cap = 10;
  const Graph g = aztec_diamond(2);
  const ZfResult r = zero_forcing_number(g, o);
  EXPECT_FALSE(r.is_exact);
  EXPECT_TRUE(is_zfs(g, r.witness));
  EXPECT_EQ(r.upper_bound, static_cast<int>(r.witness.size()));
  EXPECT_GE(r.upper_bound, 4);
}

TEST(ZeroForcingNumber, NullityNeverExceedsZ) {
  for (const Graph& g : oracle::random_corpus(80, 10, 37)) {
    const int z = zero_forcing_number(g).zf_number;
    for (long lambda = -3; lambda <= 3; ++lambda) {
      EXPECT_LE(static_cast<int>(adjacency_nullity(g, lambda)), z);
    }
  }
}

TEST(Construction, ListedSets) {
  EXPECT_EQ(construction_zfs(family::ExtendedCube{1, 2}), (std::vector<Vertex>{0, 10, 11, 13}));
  EXPECT_EQ(construction_zfs(family::Circulant{12, {1, 3}}), (std::vector<Vertex>{0, 1, 2, 3, 4, 5}));
  std::vector<Vertex> ad3;
  for (auto [i, j] : {std::pair{1, 3}, {2, 2}, {3, 1}, {1, 4}, {2, 5}, {3, 6}}) ad3.push_back(aztec_vertex(3, i, j));
  std::sort(ad3.begin(), ad3.end());
  EXPECT_EQ(construction_zfs(family::Aztec{3}), ad3);
}

TEST(Construction, EverySetForces) {
  std::vector<FamilyInstance> cases;
  for (int r = 1; r <= 5; ++r) cases.emplace_back(family::Aztec{r});
  for (int n : {8, 16, 24, 32}) cases.emplace_back(family::CirculantHalfStep{n});
  for (int t = 0; t <= 3; ++t) {
    for (int k = 0; k <= 3; ++k) cases.emplace_back(family::ExtendedCube{t, k});
  }
  for (int l : {3, 4, 5}) {
    for (int k = 1; k <= 2; ++k) cases.emplace_back(family::Circulant{(l * l - 1) * k, {1, l}});
  }
  for (int n = 10; n <= 17; ++n) cases.emplace_back(family::CirculantGap{n});
  for (const FamilyInstance& f : cases) EXPECT_TRUE(is_zfs(family_graph(f), construction_zfs(f)));
}

TEST(Construction, GapCirculantSetIsTight) {
  for (int n = 10; n <= 15; ++n) {
    const int m = (n + 1) / 2 - 1;
    EXPECT_EQ(construction_zfs(family::CirculantGap{n}).size(), static_cast<std::size_t>(2 * (m - 1)));
  }
}

TEST(Construction, RejectsBadInstances) {
  EXPECT_THROW(construction_zfs(family::CirculantHalfStep{12}), InvalidArgument);
  EXPECT_THROW(construction_zfs(family::CirculantGap{8}), InvalidArgument);
}
