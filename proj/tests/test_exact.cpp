#include <gtest/gtest.h>

#include <random>

#include "forcelab/error.hpp"
#include "forcelab/exact.hpp"
#include "forcelab/spectrum.hpp"
#include "oracles.hpp"

using namespace forcelab;

namespace {

RationalMatrix random_symmetric(std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> entry(-3, 3);
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = entry(rng);
  }
  return m;
}

template <class T>
bool is_zero_vector(const std::vector<T>& v) {
  return std::all_of(v.begin(), v.end(), [](const T& x) { return x == T(0); });
}

}  // namespace

TEST(Field, PrimeFieldArithmetic) {
  const PrimeField f(7);
  EXPECT_EQ(f.reduce(-1LL), 6U);
  EXPECT_EQ(f.mul(f.inv(3), 3), 1U);
  EXPECT_EQ(f.reduce(Rational(1, 2)), 4U);
  EXPECT_THROW(f.reduce(Rational(1, 7)), InvalidArgument);
  EXPECT_THROW(PrimeField(9), InvalidArgument);
  EXPECT_THROW(PrimeField(1), InvalidArgument);
  EXPECT_THROW(CoeffDomain::prime_field(4), InvalidArgument);
}

TEST(Field, GaussianArithmeticAndText) {
  const GaussianRational i = GaussianRational::root();
  EXPECT_EQ(i * i, GaussianRational(-1));
  EXPECT_EQ(GaussianRational(1) / (GaussianRational(1) + i), GaussianRational(Rational(1, 2), Rational(-1, 2)));
  EXPECT_EQ(to_string(GaussianRational(-1) - i), "-1-i");
  EXPECT_EQ(to_string(GaussianRational(Rational(1, 2), Rational(3, 4))), "1/2+3/4i");
  for (const char* text : {"0", "-1-i", "1/2+3/4i", "i", "-i", "5", "-2/3i"}) {
    EXPECT_EQ(to_string(parse_gaussian(text)), text);
  }
  const EisensteinRational w(Rational(-1, 2), Rational(1, 2));
  EXPECT_EQ(w * w * w, EisensteinRational(1));
}

TEST(Adjacency, SmallCases) {
  EXPECT_EQ(adjacency_rational(complete_graph(2)), (RationalMatrix{{0, 1}, {1, 0}}));
  const ExactMatrix c4 = adjacency_matrix(cycle_graph(4), 0, CoeffDomain::prime_field(2));
  EXPECT_EQ(c4.domain().name(), "GF(2)");
  EXPECT_EQ(c4.residues()(0, 1), 1U);
  EXPECT_EQ(c4.residues()(0, 2), 0U);
  EXPECT_TRUE(c4.is_symmetric());
  const RationalMatrix shifted = adjacency_rational(path_graph(2), 3);
  EXPECT_EQ(shifted(0, 0), -3);
  const ExactMatrix mod5 = adjacency_matrix(path_graph(2), 3, CoeffDomain::prime_field(5));
  EXPECT_EQ(mod5.residues()(0, 0), 2U);
  const RationalMatrix a = adjacency_rational(circulant(8, {1, 3}));
  for (std::size_t c = 0; c < 8; ++c) EXPECT_EQ(a(0, c), c % 2 == 1 ? 1 : 0);
}

TEST(Rank, KnownValues) {
  EXPECT_EQ(rank_nullity(adjacency_rational(circulant(8, {1, 3}))), (RankNullity{2, 6}));
  EXPECT_EQ(rank_nullity(RationalMatrix::identity(5)), (RankNullity{5, 0}));
  EXPECT_EQ(rank_nullity(adjacency_rational(complete_bipartite(3, 3))), (RankNullity{2, 4}));
  EXPECT_EQ(rank_nullity(RationalMatrix(3, 4, Rational(0))), (RankNullity{0, 4}));
  EXPECT_EQ(rank_nullity(RationalMatrix{{Rational(1, 2), Rational(1, 3)}, {3, 2}}).rank, 1U);
}

TEST(Rank, AgreesWithNaiveEliminationExhaustiveSmall) {
  // Every 3x3 matrix with entries in {-1, 0, 1}.
  for (int code = 0; code < 19683; ++code) {
    RationalMatrix m(3, 3);
    int c = code;
    for (std::size_t i = 0; i < 9; ++i, c /= 3) m(i / 3, i % 3) = c % 3 - 1;
    ASSERT_EQ(rank_nullity(m).rank, oracle::naive_rank(m)) << code;
  }
}

TEST(Rank, AgreesWithNaiveEliminationRandom) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dim(1, 6);
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  for (int trial = 0; trial < 400; ++trial) {
    const auto r = static_cast<std::size_t>(dim(rng));
    const auto c = static_cast<std::size_t>(dim(rng));
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(num(rng), den(rng));
    }
    if (trial % 3 == 0 && r > 1) {
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 2 - m(r - 2, j);
    }
    ASSERT_EQ(rank_nullity(m).rank, oracle::naive_rank(m));
  }
}

TEST(Rank, PrimeFieldNeverExceedsRational) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> dim(1, 8);
  for (int trial = 0; trial < 300; ++trial) {
    const RationalMatrix m = random_symmetric(static_cast<std::size_t>(dim(rng)), rng);
    const std::size_t q_rank = rank_nullity(m).rank;
    for (std::uint32_t p : {2U, 3U, 5U, 7U}) {
      const PrimeField f(p);
      EXPECT_LE(rank_nullity(reduce_mod(m, f), f).rank, q_rank);
    }
  }
}

TEST(Rank, GaussianMatchesRationalOnRealInput) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const RationalMatrix m = random_symmetric(5, rng);
    const GaussianMatrix g = m.map([](const Rational& x) { return GaussianRational(x); });
    EXPECT_EQ(rank_nullity(g), rank_nullity(m));
  }
  const GaussianRational i = GaussianRational::root();
  const GaussianMatrix singular{{1, i}, {i, -1}};
  EXPECT_EQ(rank_nullity(singular).rank, 1U);
}

TEST(Nullspace, Basics) {
  EXPECT_TRUE(nullspace_basis(adjacency_rational(complete_graph(2))).empty());
  const auto zero = nullspace_basis(RationalMatrix(3, 3, Rational(0)));
  ASSERT_EQ(zero.size(), 3U);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(zero[i][j], i == j ? 1 : 0);
  }
}

TEST(Nullspace, VectorsAreKilledAndIndependent) {
  std::vector<RationalMatrix> cases{adjacency_rational(circulant(8, {1, 3})), adjacency_rational(aztec_diamond(3)),
                                    adjacency_rational(extended_cube(1, 1))};
  std::mt19937 rng(9);
  for (int t = 0; t < 30; ++t) cases.push_back(adjacency_rational(oracle::random_graph(9, 0.3, rng)));
  for (const RationalMatrix& m : cases) {
    const auto basis = nullspace_basis(m);
    ASSERT_EQ(basis.size(), rank_nullity(m).nullity);
    if (basis.empty()) continue;
    RationalMatrix stacked(basis.size(), m.cols());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      EXPECT_TRUE(is_zero_vector(m.apply(basis[i])));
      for (std::size_t j = 0; j < m.cols(); ++j) stacked(i, j) = basis[i][j];
    }
    EXPECT_EQ(oracle::naive_rank(stacked), basis.size());
  }
  const auto six = nullspace_basis(adjacency_rational(circulant(8, {1, 3})));
  EXPECT_EQ(six.size(), 6U);
}

TEST(Nullspace, PrimeFieldAndGaussian) {
  const PrimeField f(2);
  const ResidueMatrix m = reduce_mod(adjacency_rational(cycle_graph(6)), f);
  const auto basis = nullspace_basis(m, f);
  EXPECT_EQ(basis.size(), rank_nullity(m, f).nullity);
  for (const auto& v : basis) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      std::uint32_t acc = 0;
      for (std::size_t c = 0; c < m.cols(); ++c) acc = f.add(acc, f.mul(m(r, c), v[c]));
      EXPECT_EQ(acc, 0U);
    }
  }
  const GaussianRational i = GaussianRational::root();
  const GaussianMatrix g{{1, i}, {i, -1}};
  const auto gb = nullspace_basis(g);
  ASSERT_EQ(gb.size(), 1U);
  EXPECT_TRUE(is_zero_vector(g.apply(gb[0])));
}

TEST(RowBasis, IndependentRowsAndExpression) {
  const RationalMatrix a = adjacency_rational(cycle_graph(4));
  EXPECT_EQ(independent_rows(a), (std::vector<std::size_t>{0, 1}));
  const std::vector<std::size_t> basis_rows{0, 1};
  const std::vector<std::size_t> cols{0, 1, 2, 3};
  const std::vector<std::size_t> target_rows{2, 3};
  const auto coeffs = express_in_row_basis(a.select(basis_rows, cols), a.select(target_rows, cols));
  EXPECT_EQ(coeffs[0], (RationalVector{1, 0}));
  EXPECT_EQ(coeffs[1], (RationalVector{0, 1}));
  EXPECT_THROW(express_in_row_basis(RationalMatrix{{1, 0}}, RationalMatrix{{0, 1}}), InvalidArgument);
}

TEST(ExactMatrix, TextRoundTrip) {
  const ExactMatrix q(RationalMatrix{{Rational(1, 2), -3}, {0, Rational(7, 5)}});
  EXPECT_EQ(q.to_text(), "2 2 Q\n1/2 -3\n0 7/5\n");
  EXPECT_EQ(ExactMatrix::parse(q.to_text()), q);
  const GaussianRational i = GaussianRational::root();
  const ExactMatrix g(GaussianMatrix{{0, GaussianRational(-1) - i}, {GaussianRational(Rational(1, 2), Rational(1, 3)), 1}});
  EXPECT_EQ(ExactMatrix::parse(g.to_text()), g);
  const ExactMatrix p = adjacency_matrix(cycle_graph(3), 1, CoeffDomain::prime_field(3));
  EXPECT_EQ(ExactMatrix::parse(p.to_text()), p);
  EXPECT_EQ(p.nullity(), rank_nullity(reduce_mod(adjacency_rational(cycle_graph(3), 1), PrimeField(3)), PrimeField(3)).nullity);
  EXPECT_THROW(ExactMatrix::parse("2 2 Q\n1 2 3\n"), ParseError);
  EXPECT_THROW(ExactMatrix::parse("1 1 R\n1\n"), ParseError);
  EXPECT_THROW(q.gaussian(), InvalidArgument);
}

TEST(Spectrum, Example61Blocks) {
  const RealMatrix b0{{0, 1, 2}, {1, 1, 1}, {2, 1, 0}};
  const std::vector<double> want0{3, 0, -2};
  EXPECT_TRUE(same_multiset(spectrum(b0).values, want0));
  const GaussianRational i = GaussianRational::root();
  const ExactMatrix b1(GaussianMatrix{{0, 1, GaussianRational(-1) - i}, {1, -1, 1}, {GaussianRational(-1) + i, 1, 0}});
  const std::vector<double> want1{1.561552, 0, -2.561552};
  EXPECT_TRUE(same_multiset(spectrum(b1).values, want1));
  const std::vector<double> ones{1, 1, 1};
  EXPECT_TRUE(same_multiset(spectrum(RealMatrix::identity(3)).values, ones));
}

TEST(Spectrum, CyclesMatchClosedForm) {
  for (int n = 3; n <= 16; ++n) {
    const Spectrum s = spectrum(to_real(adjacency_rational(cycle_graph(n))));
    EXPECT_TRUE(same_multiset(s.values, oracle::cycle_spectrum(n))) << n;
    EXPECT_TRUE(std::is_sorted(s.values.begin(), s.values.end(), std::greater<>()));
  }
}

TEST(Spectrum, TraceAndReproducibility) {
  std::mt19937 rng(21);
  for (int t = 0; t < 20; ++t) {
    const Graph g = oracle::random_graph(10, 0.4, rng);
    const Spectrum s = spectrum(to_real(adjacency_rational(g)));
    double sum = 0;
    for (double x : s.values) sum += x;
    EXPECT_NEAR(sum, 0.0, g.order() * s.tol);
    const Spectrum again = spectrum(to_real(adjacency_rational(g)));
    for (std::size_t i = 0; i < s.values.size(); ++i) EXPECT_NEAR(s.values[i], again.values[i], 10 * s.tol);
  }
}

TEST(Spectrum, RejectsNonHermitian) {
  EXPECT_THROW(spectrum(RealMatrix{{0, 1}, {2, 0}}), InvalidArgument);
  const ComplexMatrix c{{0, {0, 1}}, {{0, 1}, 0}};
  EXPECT_THROW(spectrum(c), InvalidArgument);
  EXPECT_THROW(spectrum(adjacency_matrix(path_graph(2), 0, CoeffDomain::prime_field(3))), InvalidArgument);
}
