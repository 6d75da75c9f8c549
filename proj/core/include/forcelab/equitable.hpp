#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "forcelab/exact.hpp"
#include "forcelab/graph.hpp"
#include "forcelab/spectrum.hpp"

namespace forcelab {

using Block = std::vector<Vertex>;

/// Ordered disjoint blocks covering V(G). `b` is filled once the partition
/// has been checked equitable.
struct Partition {
  std::vector<Block> blocks;
  std::optional<Matrix<long>> b;
};

Partition unit_partition(int n);
/// Throws InvalidArgument unless the blocks are nonempty, disjoint and cover 0..n-1.
void check_partition(const Partition& p, int n);

struct EquitableCheck {
  bool equitable = false;
  /// b(i, j) = neighbors in block j of any vertex of block i.
  std::optional<Matrix<long>> b;
  /// First vertex whose count into block `block` differs from its block's first vertex.
  std::optional<Vertex> violating_vertex;
  std::optional<std::size_t> violating_block;
};

EquitableCheck is_equitable(const Graph& g, const Partition& p);

/// Coarsest equitable refinement by neighbor-count splitting. Blocks are
/// ordered by least vertex; the result carries b.
Partition coarsest_equitable(const Graph& g, const Partition& initial);

/// [b_ij] for an equitable partition; throws InvalidArgument otherwise.
RationalMatrix divisor_matrix(const Graph& g, const Partition& p);

struct Automorphism {
  std::vector<Vertex> perm;
  /// Common orbit size when all orbits have the same size.
  std::optional<int> orbit_size;
};

/// Verifies that perm preserves adjacency; throws InvalidArgument naming a
/// pair whose adjacency changes.
Automorphism make_automorphism(const Graph& g, std::vector<Vertex> perm);
/// x -> x + shift (mod n), verified against g.
Automorphism rotation(const Graph& g, int shift);

/// Cycles of the permutation, each listed from its least vertex.
Partition orbit_partition(const Graph& g, const Automorphism& phi);

/// Blocks {i, i+n, i+2n, ...} of Circ[nk, S]. Refuses graphs built with n/2 in S.
Partition circulant_orbit_partition(const Graph& g, int n);

struct Decomposition {
  int k = 0;
  /// False when omega had to be approximated in floating point.
  bool exact = false;
  std::vector<std::vector<Vertex>> transversals;
  std::vector<RationalMatrix> slices;
  /// B_0..B_{k-1}; exact blocks for k in {1, 2, 3, 4, 6}.
  std::vector<ExactMatrix> blocks;
  std::vector<ComplexMatrix> approx_blocks;

  std::vector<ComplexMatrix> complex_blocks() const;
};

/// B_j = sum_l omega^{jl} A[T_0, T_l] for a uniform automorphism phi of the
/// matrix m. The default transversal takes the least vertex of each orbit.
Decomposition equitable_decomposition(const RationalMatrix& m, const Automorphism& phi,
                                      std::optional<std::vector<Vertex>> t0 = std::nullopt);
Decomposition equitable_decomposition(const Graph& g, const Automorphism& phi,
                                      std::optional<std::vector<Vertex>> t0 = std::nullopt);

/// Eigenvalues of every block, merged.
std::vector<double> decomposition_spectrum(const Decomposition& d, double tol = 1e-10);

struct EcgNullReport {
  int q = 0;
  int order = 0;
  bool b0_kills_x0 = false;
  bool b1_kills_x1 = false;
  bool b2_kills_x2 = false;
  bool b3_is_b1_transpose = false;

  bool passed() const { return b0_kills_x0 && b1_kills_x1 && b2_kills_x2 && b3_is_b1_transpose; }
};

/// Exact checks of the three null vectors of ECG(6q+1, 6q+1) under x -> x + n/4.
EcgNullReport verify_ecg_nullvectors(int q);

}  // namespace forcelab
