#include <gtest/gtest.h>

#include "forcelab/equitable.hpp"
#include "forcelab/exact.hpp"
#include "forcelab/spectrum.hpp"
#include "oracles.hpp"

using namespace forcelab;

namespace {

using G = GaussianRational;

Partition blocks_mod(int total, int n) {
  Partition p;
  for (int i = 0; i < n; ++i) {
    Block b;
    for (int v = i; v < total; v += n) b.push_back(v);
    p.blocks.push_back(b);
  }
  return p;
}

GaussianMatrix gaussian(std::initializer_list<std::initializer_list<G>> rows) {
  GaussianMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (const G& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

std::vector<double> exact_spectrum(const Graph& g) { return spectrum(to_real(adjacency_rational(g))).values; }

// Eigenvalues of a divisor matrix through the similar symmetric matrix
// sqrt(|V_i| / |V_j|) b_ij.
std::vector<double> quotient_spectrum(const RationalMatrix& d, const Partition& p) {
  RealMatrix s(d.rows(), d.cols());
  for (std::size_t i = 0; i < d.rows(); ++i) {
    for (std::size_t j = 0; j < d.cols(); ++j) {
      s(i, j) = std::sqrt(static_cast<double>(p.blocks[i].size()) / static_cast<double>(p.blocks[j].size())) * d(i, j).get_d();
    }
  }
  return spectrum(s, 1e-9).values;
}

}  // namespace

TEST(IsEquitable, Examples) {
  const Graph p3 = path_graph(3);
  const EquitableCheck ok = is_equitable(p3, Partition{{{0, 2}, {1}}, std::nullopt});
  EXPECT_TRUE(ok.equitable);
  ASSERT_TRUE(ok.b.has_value());
  EXPECT_EQ((*ok.b)(0, 0), 0);
  EXPECT_EQ((*ok.b)(0, 1), 1);
  EXPECT_EQ((*ok.b)(1, 0), 2);
  EXPECT_EQ((*ok.b)(1, 1), 0);
  EXPECT_TRUE(is_equitable(circulant(24, {1, 3}), blocks_mod(24, 8)).equitable);
  const EquitableCheck bad = is_equitable(cycle_graph(4), Partition{{{0}, {1, 2, 3}}, std::nullopt});
  EXPECT_FALSE(bad.equitable);
  EXPECT_EQ(bad.violating_vertex, 2);
  EXPECT_THROW(is_equitable(p3, Partition{{{0}, {1}}, std::nullopt}), InvalidArgument);
  EXPECT_THROW(is_equitable(p3, Partition{{{0, 1}, {1, 2}}, std::nullopt}), InvalidArgument);
}

TEST(CoarsestEquitable, Examples) {
  const Graph c6 = cycle_graph(6);
  EXPECT_EQ(coarsest_equitable(c6, unit_partition(6)).blocks.size(), 1U);
  EXPECT_EQ(coarsest_equitable(path_graph(3), unit_partition(3)).blocks, (std::vector<Block>{{0, 2}, {1}}));
  const Graph ad2 = aztec_diamond(2);
  const Partition p = coarsest_equitable(ad2, unit_partition(ad2.order()));
  EXPECT_TRUE(is_equitable(ad2, p).equitable);
  for (const Block& b : p.blocks) {
    for (Vertex v : b) EXPECT_EQ(ad2.degree(v), ad2.degree(b.front()));
  }
}

TEST(CoarsestEquitable, RefinesAndIsEquitableOnCorpus) {
  for (const Graph& g : oracle::random_corpus(80, 10, 67)) {
    Partition initial{{{0}, {}}, std::nullopt};
    initial.blocks.pop_back();
    if (g.order() > 1) {
      initial.blocks.emplace_back();
      for (Vertex v = 1; v < g.order(); ++v) initial.blocks.back().push_back(v);
    }
    const Partition p = coarsest_equitable(g, initial);
    EXPECT_TRUE(is_equitable(g, p).equitable);
    EXPECT_EQ(p.blocks.front(), Block{0});
    for (std::size_t i = 1; i < p.blocks.size(); ++i) EXPECT_LT(p.blocks[i - 1].front(), p.blocks[i].front());
  }
}

TEST(DivisorMatrix, CirculantQuotients) {
  EXPECT_EQ(divisor_matrix(circulant(24, {1, 3}), blocks_mod(24, 8)), adjacency_rational(circulant(8, {1, 3})));
  const RationalMatrix d = divisor_matrix(circulant(12, {1, 3}), blocks_mod(12, 6));
  const std::vector<long> row0{0, 1, 0, 2, 0, 1};
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(d(i, j), Rational(row0[(j + 6 - i) % 6]));
  }
  const RationalMatrix one = divisor_matrix(cycle_graph(5), unit_partition(5));
  EXPECT_EQ(one.rows(), 1U);
  EXPECT_EQ(one(0, 0), Rational(2));
  EXPECT_THROW(divisor_matrix(cycle_graph(4), Partition{{{0}, {1, 2, 3}}, std::nullopt}), InvalidArgument);
}

TEST(DivisorMatrix, CirculantLiftProperty) {
  struct Case {
    int n, k;
    std::vector<int> s;
  };
  const std::vector<Case> cases{{8, 3, {1, 3}}, {8, 3, {2}}, {8, 2, {1, 2, 3}}, {8, 2, {3}}, {5, 4, {1}}, {5, 4, {1, 2}}};
  for (const Case& c : cases) {
    const Graph big = circulant(c.n * c.k, c.s);
    const Graph small = circulant(c.n, c.s);
    EXPECT_EQ(divisor_matrix(big, blocks_mod(c.n * c.k, c.n)), adjacency_rational(small));
    EXPECT_TRUE(contained_multiset(exact_spectrum(small), exact_spectrum(big)));
    EXPECT_LE(adjacency_nullity(small), adjacency_nullity(big));
  }
}

TEST(DivisorMatrix, SpectrumContainedOnCorpus) {
  for (const Graph& g : oracle::random_corpus(60, 10, 71)) {
    const Partition p = coarsest_equitable(g, unit_partition(g.order()));
    const std::vector<double> quotient = quotient_spectrum(divisor_matrix(g, p), p);
    EXPECT_TRUE(contained_multiset(quotient, exact_spectrum(g)));
  }
}

TEST(DivisorMatrix, NegativeControlHalfStep) {
  const std::vector<double> big = exact_spectrum(circulant(12, {1, 3}));
  double nearest = 1e9;
  for (double x : big) nearest = std::min(nearest, std::abs(x - 3.0));
  EXPECT_GT(nearest, 0.5);
  // Value set {±4, ±√3, ±1, 0} with multiplicities from exact ranks.
  std::size_t total = 0;
  for (long lambda : {-4L, -1L, 0L, 1L, 4L}) total += adjacency_nullity(circulant(12, {1, 3}), lambda);
  std::size_t sqrt3 = 0;
  for (double x : big) sqrt3 += std::abs(std::abs(x) - std::sqrt(3.0)) < 1e-6 ? 1 : 0;
  EXPECT_EQ(total + sqrt3, 12U);
  // The mod-6 blocks are still equitable, but 3 = 6/2 lies in S so the quotient is not A(Circ[6,S]).
  const Graph c12 = circulant(12, {1, 3});
  EXPECT_NE(divisor_matrix(c12, circulant_orbit_partition(c12, 6)), adjacency_rational(circulant(6, {1, 3})));
  EXPECT_THROW(circulant_orbit_partition(circulant(12, {1, 6}), 6), InvalidArgument);
}

TEST(Orbits, Examples) {
  const Graph c24 = circulant(24, {1, 3});
  const Partition p = orbit_partition(c24, rotation(c24, 8));
  EXPECT_EQ(p.blocks.size(), 8U);
  EXPECT_EQ(p.blocks[0], (Block{0, 8, 16}));
  EXPECT_TRUE(is_equitable(c24, p).equitable);
  EXPECT_EQ(circulant_orbit_partition(c24, 8).blocks, p.blocks);
  std::vector<Vertex> id(6);
  for (int i = 0; i < 6; ++i) id[static_cast<std::size_t>(i)] = i;
  EXPECT_EQ(orbit_partition(cycle_graph(6), make_automorphism(cycle_graph(6), id)).blocks.size(), 6U);
  const Graph ecg = extended_cube(1, 1);
  const Automorphism phi = rotation(ecg, 3);
  EXPECT_EQ(phi.orbit_size, 4);
  EXPECT_EQ(orbit_partition(ecg, phi).blocks, (std::vector<Block>{{0, 3, 6, 9}, {1, 4, 7, 10}, {2, 5, 8, 11}}));
  EXPECT_THROW(make_automorphism(path_graph(3), {1, 0, 2}), InvalidArgument);
  EXPECT_THROW(make_automorphism(path_graph(3), {0, 0, 2}), InvalidArgument);
}

TEST(Decomposition, EcgExampleBlocks) {
  const Graph ecg = extended_cube(1, 1);
  const Decomposition d = equitable_decomposition(ecg, rotation(ecg, 3), std::vector<Vertex>{0, 1, 2});
  ASSERT_EQ(d.k, 4);
  ASSERT_TRUE(d.exact);
  ASSERT_EQ(d.blocks.size(), 4U);
  const G i = G::root();
  EXPECT_EQ(d.blocks[0].gaussian(), gaussian({{0, 1, 2}, {1, 1, 1}, {2, 1, 0}}));
  EXPECT_EQ(d.blocks[1].gaussian(), gaussian({{0, 1, G(-1) - i}, {1, -1, 1}, {G(-1) + i, 1, 0}}));
  EXPECT_EQ(d.blocks[2].gaussian(), gaussian({{0, 1, 0}, {1, 1, 1}, {0, 1, 0}}));
  EXPECT_EQ(d.blocks[3].gaussian(), gaussian({{0, 1, G(-1) + i}, {1, -1, 1}, {G(-1) - i, 1, 0}}));
  EXPECT_EQ(d.transversals[1], (std::vector<Vertex>{3, 4, 5}));
  const std::vector<double> want{3, 2, 1.561552, 1.561552, 0, 0, 0, 0, -1, -2, -2.561552, -2.561552};
  EXPECT_TRUE(same_multiset(decomposition_spectrum(d), want));
  std::size_t block_nullity = 0;
  for (const ExactMatrix& b : d.blocks) block_nullity += b.nullity();
  EXPECT_EQ(block_nullity, adjacency_nullity(ecg));
  EXPECT_EQ(block_nullity, 4U);
}

TEST(Decomposition, IdentityGivesTheMatrix) {
  const Graph g = aztec_diamond(2);
  std::vector<Vertex> id(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) id[static_cast<std::size_t>(v)] = v;
  const Decomposition d = equitable_decomposition(g, make_automorphism(g, id));
  EXPECT_EQ(d.k, 1);
  ASSERT_EQ(d.blocks.size(), 1U);
  EXPECT_EQ(d.blocks[0].rational(), adjacency_rational(g));
}

TEST(Decomposition, SpectrumUnionOnCirculants) {
  for (int k : {2, 3, 4, 5, 6}) {
    const Graph g = circulant(4 * k, {1, 3});
    const Decomposition d = equitable_decomposition(g, rotation(g, 4));
    EXPECT_EQ(d.k, k);
    EXPECT_EQ(d.exact, k != 5);
    std::size_t order = 0;
    for (const ComplexMatrix& b : d.complex_blocks()) order += b.rows();
    EXPECT_EQ(order, static_cast<std::size_t>(g.order()));
    EXPECT_TRUE(same_multiset(decomposition_spectrum(d), exact_spectrum(g))) << "k=" << k;
    if (d.exact) {
      std::size_t nullity = 0;
      for (const ExactMatrix& b : d.blocks) nullity += b.nullity();
      EXPECT_EQ(nullity, adjacency_nullity(g));
    }
  }
}

TEST(Decomposition, Errors) {
  const Graph c6 = cycle_graph(6);
  // Reflection has orbits of sizes 1 and 2.
  EXPECT_THROW(equitable_decomposition(c6, make_automorphism(c6, {0, 5, 4, 3, 2, 1})), InvalidArgument);
  EXPECT_THROW(equitable_decomposition(c6, rotation(c6, 2), std::vector<Vertex>{0, 2}), InvalidArgument);
  RationalMatrix skewed = adjacency_rational(c6);
  skewed(0, 0) = 5;
  EXPECT_THROW(equitable_decomposition(skewed, rotation(c6, 2)), InvalidArgument);
}

TEST(EcgNullVectors, Checks) {
  for (int q = 0; q <= 2; ++q) {
    const EcgNullReport r = verify_ecg_nullvectors(q);
    EXPECT_TRUE(r.passed()) << "q=" << q;
    EXPECT_EQ(r.order, 12 + 24 * q);
  }
  EXPECT_EQ(adjacency_nullity(extended_cube(13, 13)), 4U);
}
