#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "forcelab/exact.hpp"
#include "forcelab/graph.hpp"

namespace forcelab {

struct KappaWitness {
  int kappa = 0;
  /// Empty for complete and for disconnected graphs.
  std::vector<Vertex> separator;
};

/// Vertex connectivity by unit-capacity max-flow on the split graph, over
/// non-adjacent pairs (v_i, v_j) with i at most the best cut found so far.
KappaWitness vertex_connectivity(const Graph& g);

int min_degree(const Graph& g);

struct KappaDeficiency {
  bool deficient = false;
  std::optional<int> divisor;
};

/// Divisor criterion for kappa(Circ[n,S]) < delta: some proper divisor d of n
/// sees fewer than min{d-1, delta*d/n} distinct nonzero residues among
/// s and n-s. Returns the least such d.
KappaDeficiency circulant_kappa_deficient(int n, std::span<const int> connections);

struct SapReport {
  bool has_sap = false;
  std::size_t violation_dim = 0;
  std::optional<RationalMatrix> sample_violation;
};

/// Throws InvalidArgument unless A is symmetric with a_ij != 0 exactly on the
/// edges of g (off the diagonal).
void check_in_pattern(const RationalMatrix& a, const Graph& g);

/// Strong Arnold Property of A in S(G), solved over the non-edge entries of X.
SapReport has_sap(const RationalMatrix& a, const Graph& g);
SapReport has_sap(const ExactMatrix& a, const Graph& g);

}  // namespace forcelab
