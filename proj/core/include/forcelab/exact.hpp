#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "forcelab/field.hpp"
#include "forcelab/graph.hpp"
#include "forcelab/matrix.hpp"

namespace forcelab {

using RationalMatrix = Matrix<Rational>;
using ResidueMatrix = Matrix<std::uint32_t>;
using GaussianMatrix = Matrix<GaussianRational>;
using EisensteinMatrix = Matrix<EisensteinRational>;

using RationalVector = std::vector<Rational>;
using GaussianVector = std::vector<GaussianRational>;

/// The coefficient field of an ExactMatrix.
class CoeffDomain {
 public:
  enum class Kind { Rationals, PrimeField, GaussianRationals, EisensteinRationals };

  static CoeffDomain rationals() { return CoeffDomain(Kind::Rationals, 0); }
  /// Verifies primality of p.
  static CoeffDomain prime_field(std::uint32_t p);
  static CoeffDomain gaussian_rationals() { return CoeffDomain(Kind::GaussianRationals, 0); }
  static CoeffDomain eisenstein_rationals() { return CoeffDomain(Kind::EisensteinRationals, 0); }

  Kind kind() const { return kind_; }
  std::uint32_t prime() const { return p_; }
  /// "Q", "GF(p)", "Q(i)" or "Q(sqrt-3)".
  std::string name() const;
  static CoeffDomain parse(std::string_view name);

  friend bool operator==(const CoeffDomain&, const CoeffDomain&) = default;

 private:
  CoeffDomain(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

struct RankNullity {
  std::size_t rank = 0;
  std::size_t nullity = 0;

  friend bool operator==(const RankNullity&, const RankNullity&) = default;
};

// ---------------------------------------------------------------------------
// Typed kernels

/// Rank over Q by fraction-free elimination on the row-scaled integer matrix.
RankNullity rank_nullity(const RationalMatrix& m);
/// Rank over GF(p) of a residue matrix (entries already reduced).
RankNullity rank_nullity(const ResidueMatrix& m, const PrimeField& field);
RankNullity rank_nullity(const GaussianMatrix& m);
RankNullity rank_nullity(const EisensteinMatrix& m);

/// Entrywise reduction of a rational matrix modulo p.
ResidueMatrix reduce_mod(const RationalMatrix& m, const PrimeField& field);

/// Right nullspace basis: one vector per free column, that coordinate set to 1,
/// the other free coordinates 0. Pivots are the first nonzero entry in column order.
std::vector<RationalVector> nullspace_basis(const RationalMatrix& m);
std::vector<std::vector<std::uint32_t>> nullspace_basis(const ResidueMatrix& m,
                                                        const PrimeField& field);
std::vector<GaussianVector> nullspace_basis(const GaussianMatrix& m);
std::vector<std::vector<EisensteinRational>> nullspace_basis(const EisensteinMatrix& m);

/// Indices of the lexicographically first maximal set of linearly independent rows.
std::vector<std::size_t> independent_rows(const RationalMatrix& m);

/// Solves coefficients c with sum_i c_i * basis.row(i) = target for every target
/// row; basis rows must be independent. Throws if some target is outside the span.
std::vector<RationalVector> express_in_row_basis(const RationalMatrix& basis,
                                                 const RationalMatrix& targets);

// ---------------------------------------------------------------------------

/// A matrix over a selectable exact domain.
class ExactMatrix {
 public:
  using Storage = std::variant<RationalMatrix, ResidueMatrix, GaussianMatrix, EisensteinMatrix>;

  explicit ExactMatrix(RationalMatrix m);
  ExactMatrix(ResidueMatrix m, std::uint32_t p);
  explicit ExactMatrix(GaussianMatrix m);
  explicit ExactMatrix(EisensteinMatrix m);

  const CoeffDomain& domain() const { return domain_; }
  std::size_t rows() const;
  std::size_t cols() const;
  const Storage& storage() const { return data_; }

  const RationalMatrix& rational() const;
  const ResidueMatrix& residues() const;
  const GaussianMatrix& gaussian() const;
  const EisensteinMatrix& eisenstein() const;

  RankNullity rank_nullity() const;
  std::size_t nullity() const { return rank_nullity().nullity; }
  bool is_symmetric() const;

  /// "rows cols domain" header then one line per row, entries space-separated.
  std::string to_text() const;
  static ExactMatrix parse(std::string_view text);

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.domain_ == b.domain_ && a.data_ == b.data_;
  }

 private:
  CoeffDomain domain_;
  Storage data_;
};

/// A(G) - lambda I over the requested domain.
ExactMatrix adjacency_matrix(const Graph& g, long lambda, const CoeffDomain& domain);
/// A(G) - lambda I over Q.
RationalMatrix adjacency_rational(const Graph& g, long lambda = 0);

/// Nullity of A(G) - lambda I over Q or GF(p) (p = 0 selects Q).
std::size_t adjacency_nullity(const Graph& g, long lambda = 0, std::uint32_t p = 0);

}  // namespace forcelab
