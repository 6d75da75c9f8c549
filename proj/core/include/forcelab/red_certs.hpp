#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "forcelab/error.hpp"
#include "forcelab/graph.hpp"

namespace forcelab {

/// Vertex -> positive multiplicity.
using Multiset = std::map<Vertex, std::uint64_t>;

/// Largest multiplicity accepted in a move.
inline constexpr std::uint64_t kMaxMultiplicity = 1'000'000;

/// u is colored red by (v, X, Y, k).
struct RedMove {
  Vertex u = 0;
  Vertex v = 0;
  Multiset X;
  Multiset Y;
  std::uint64_t k = 0;

  friend bool operator==(const RedMove&, const RedMove&) = default;
};

struct RedCertificate {
  std::vector<RedMove> moves;

  /// Targets in order.
  std::vector<Vertex> red_set() const;
};

/// Raised by apply_red_sequence; `index` is the 0-based position of the
/// first move that fails.
class RedSequenceError : public Error {
 public:
  RedSequenceError(std::size_t index, const std::string& what)
      : Error("red move " + std::to_string(index) + ": " + what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// Checks (k+1) row(u) = row(v) + sum_X row(x) - sum_Y row(y) over the integers.
/// Throws InvalidArgument if a participant is already red, u appears among
/// the participants, or a vertex is out of range.
bool verify_red_move(const Graph& g, std::span<const Vertex> red_so_far, const RedMove& m);

/// Replays the moves in order and returns the red set.
std::vector<Vertex> apply_red_sequence(const Graph& g, const RedCertificate& cert);

/// Nullity of A(G) over Q.
std::size_t graph_nullity(const Graph& g);

struct RedDerivation {
  RedCertificate certificate;
  /// Zero rows for which no white partner exists (edgeless graphs).
  std::vector<Vertex> unrepresentable;

  std::size_t nullity() const { return certificate.moves.size() + unrepresentable.size(); }
};

/// One move per row outside the lexicographically first row basis of A(G),
/// built from the integer dependency that expresses the row in that basis.
RedDerivation derive_red_certificates(const Graph& g);

struct DoublingBound {
  std::size_t bound = 0;
  std::size_t nullity = 0;
  bool holds() const { return bound <= nullity; }
};

/// For a balanced bipartite graph and a certificate living inside one side,
/// returns 2|R| next to null(A(G)). Throws InvalidArgument when a hypothesis fails.
DoublingBound bipartite_doubling_bound(const Graph& g, std::span<const Vertex> side,
                                       const RedCertificate& cert);

/// Per-diagonal moves on AD_r; the side is the union of the first r diagonals.
RedCertificate aztec_diagonal_certificate(int r);
std::vector<Vertex> aztec_diagonal_side(int r);

/// Twin moves plus the closing move on Circ[n,{1,n/2-1}], 8 | n; side = evens.
RedCertificate circulant_half_step_certificate(int n);

}  // namespace forcelab
