#include <gtest/gtest.h>

#include <random>

#include "forcelab/structure.hpp"
#include "forcelab/zero_forcing.hpp"
#include "oracles.hpp"

using namespace forcelab;

namespace {

bool disconnects(const Graph& g, const std::vector<Vertex>& separator) {
  std::vector<bool> removed(static_cast<std::size_t>(g.order()), false);
  for (Vertex v : separator) removed[static_cast<std::size_t>(v)] = true;
  return !oracle::connected_without(g, removed);
}

// Verifies AX = 0, A∘X = 0, I∘X = 0, X symmetric and nonzero.
void expect_violation(const RationalMatrix& a, const RationalMatrix& x) {
  const std::size_t n = a.rows();
  bool nonzero = false;
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_EQ(x(i, i), Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
      EXPECT_EQ(x(i, j), x(j, i));
      if (i != j && a(i, j) != 0) {
        EXPECT_EQ(x(i, j), Rational(0));
      }
      nonzero = nonzero || x(i, j) != 0;
      Rational s = 0;
      for (std::size_t l = 0; l < n; ++l) s += a(i, l) * x(l, j);
      EXPECT_EQ(s, Rational(0));
    }
  }
  EXPECT_TRUE(nonzero);
}

}  // namespace

TEST(VertexConnectivity, Examples) {
  EXPECT_EQ(vertex_connectivity(complete_graph(5)).kappa, 4);
  EXPECT_TRUE(vertex_connectivity(complete_graph(5)).separator.empty());
  EXPECT_EQ(vertex_connectivity(circulant(9, {1, 2})).kappa, 4);
  EXPECT_EQ(vertex_connectivity(cycle_graph(6)).kappa, 2);
  const KappaWitness split = vertex_connectivity(circulant(6, {2}));
  EXPECT_EQ(split.kappa, 0);
  EXPECT_TRUE(split.separator.empty());
}

TEST(VertexConnectivity, AgreesWithBruteForce) {
  for (const Graph& g : oracle::random_corpus(200, 10, 53)) {
    const KappaWitness w = vertex_connectivity(g);
    ASSERT_EQ(w.kappa, oracle::brute_force_kappa(g)) << write_edge_list(g);
    if (!w.separator.empty()) {
      EXPECT_EQ(static_cast<int>(w.separator.size()), w.kappa);
      EXPECT_TRUE(disconnects(g, w.separator));
    }
  }
}

TEST(MinDegree, Examples) {
  EXPECT_EQ(min_degree(circulant(12, {1, 3})), 4);
  EXPECT_EQ(min_degree(path_graph(2)), 1);
  EXPECT_EQ(min_degree(aztec_diamond(2)), 2);
}

TEST(KappaDeficiency, Examples) {
  const std::vector<int> s12{1, 2};
  EXPECT_FALSE(circulant_kappa_deficient(9, s12).deficient);
  const std::vector<int> s2{2};
  const KappaDeficiency d = circulant_kappa_deficient(6, s2);
  EXPECT_TRUE(d.deficient);
  EXPECT_EQ(d.divisor, 2);
  const std::vector<int> gap{1, 2, 4};
  EXPECT_FALSE(circulant_kappa_deficient(12, gap).deficient);
  const Graph g = circulant(12, gap);
  EXPECT_EQ(vertex_connectivity(g).kappa, 6);
  EXPECT_EQ(min_degree(g), 6);
}

TEST(KappaDeficiency, MatchesMaxFlowOnAllSmallCirculants) {
  int checked = 0;
  for (int n = 3; n <= 16; ++n) {
    const int half = n / 2;
    for (unsigned mask = 1; mask < (1U << half); ++mask) {
      std::vector<int> s;
      for (int i = 1; i <= half; ++i) {
        if (mask & (1U << (i - 1))) s.push_back(i);
      }
      const Graph g = circulant(n, s);
      const bool deficient = vertex_connectivity(g).kappa < min_degree(g);
      ASSERT_EQ(circulant_kappa_deficient(n, s).deficient, deficient) << "n=" << n << " mask=" << mask;
      ++checked;
    }
  }
  EXPECT_GT(checked, 500);
}

TEST(Kappa, NeverExceedsZ) {
  for (const Graph& g : oracle::random_corpus(80, 10, 59)) {
    EXPECT_LE(vertex_connectivity(g).kappa, zero_forcing_number(g).zf_number);
  }
}

TEST(Sap, Examples) {
  const Graph cp = cartesian_product(cycle_graph(8), path_graph(3));
  const SapReport r = has_sap(adjacency_rational(cp), cp);
  EXPECT_TRUE(r.has_sap);
  EXPECT_EQ(r.violation_dim, 0U);
  EXPECT_FALSE(r.sample_violation.has_value());
  EXPECT_EQ(adjacency_nullity(cp), 6U);
  const Graph k2 = complete_graph(2);
  EXPECT_TRUE(has_sap(adjacency_rational(k2), k2).has_sap);
  const Graph e2 = empty_graph(2);
  const RationalMatrix zero(2, 2);
  const SapReport bad = has_sap(zero, e2);
  EXPECT_FALSE(bad.has_sap);
  EXPECT_EQ(bad.violation_dim, 1U);
  ASSERT_TRUE(bad.sample_violation.has_value());
  EXPECT_EQ((*bad.sample_violation)(0, 1), Rational(1));
  EXPECT_EQ((*bad.sample_violation)(1, 0), Rational(1));
}

TEST(Sap, ViolationSamplesSatisfyAllConditions) {
  for (const Graph& g : oracle::random_corpus(60, 8, 61)) {
    const RationalMatrix a = adjacency_rational(g);
    const SapReport r = has_sap(a, g);
    EXPECT_EQ(r.has_sap, r.violation_dim == 0);
    EXPECT_EQ(r.sample_violation.has_value(), r.violation_dim > 0);
    if (r.sample_violation) expect_violation(a, *r.sample_violation);
  }
}

TEST(Sap, RejectsMatricesOutsidePattern) {
  const Graph p3 = path_graph(3);
  RationalMatrix a = adjacency_rational(p3);
  a(0, 2) = 1;
  a(2, 0) = 1;
  EXPECT_THROW(has_sap(a, p3), InvalidArgument);
  RationalMatrix asym = adjacency_rational(p3);
  asym(0, 1) = 2;
  EXPECT_THROW(has_sap(asym, p3), InvalidArgument);
  RationalMatrix missing = adjacency_rational(p3);
  missing(0, 1) = 0;
  missing(1, 0) = 0;
  EXPECT_THROW(has_sap(missing, p3), InvalidArgument);
}
