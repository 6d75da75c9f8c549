#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "forcelab/graph.hpp"

namespace forcelab {

struct Force {
  Vertex forcer = 0;
  Vertex forced = 0;

  friend bool operator==(const Force&, const Force&) = default;
};

/// Blue vertices plus the chronological list of forces that produced them.
struct Coloring {
  int n = 0;
  std::vector<bool> blue;
  std::vector<Force> log;

  bool all_blue() const;
  std::vector<Vertex> blue_set() const;
};

/// Runs the color change rule to its fixed point. At each step the lowest
/// blue vertex with exactly one white neighbor forces that neighbor.
Coloring zf_closure(const Graph& g, std::span<const Vertex> initial);
bool is_zfs(const Graph& g, std::span<const Vertex> set);

/// Bitmask closure for graphs with at most 64 vertices.
class FastClosure {
 public:
  explicit FastClosure(const Graph& g);
  std::uint64_t close(std::uint64_t blue) const;
  std::uint64_t full() const { return full_; }

 private:
  std::vector<std::uint64_t> nbr_;
  std::uint64_t full_ = 0;
};

struct ZfOptions {
  /// Largest order the exact search accepts.
  int cap = 34;
  /// First set size to try.
  std::optional<int> size_hint;
  /// Treat size_hint as a proven lower bound instead of re-checking smaller sizes.
  bool assert_lower_bound = false;
  /// Threads sharing the subsets of one size, split by first element.
  unsigned workers = 1;
};

struct ZfStats {
  std::uint64_t subsets_examined = 0;
  double seconds = 0;
};

struct ZfResult {
  /// Exact value when is_exact; otherwise equals upper_bound.
  int zf_number = 0;
  std::vector<Vertex> witness;
  std::vector<Force> forces;
  ZfStats stats;
  bool is_exact = false;
  int lower_bound = 0;
  int upper_bound = 0;
};

/// Exact minimum zero forcing set by enumerating sets of increasing size in
/// lexicographic order. Graphs above the cap get a bounds-only result with a
/// greedy witness.
ZfResult zero_forcing_number(const Graph& g, const ZfOptions& options = {});

// ---------------------------------------------------------------------------
// Explicit forcing sets for the families with known constructions

namespace family {
struct Aztec {
  int r;
};
/// Circ[n, {1, n/2 - 1}] with 8 | n.
struct CirculantHalfStep {
  int n;
};
struct ExtendedCube {
  int t, k;
};
/// Circ[n, S]; the set {0, ..., 2m-1} for m = max S.
struct Circulant {
  int n;
  std::vector<int> connections;
};
/// Circ[n, [m] \ {m-1}] with m = ceil(n/2) - 1 and n >= 10.
struct CirculantGap {
  int n;
};
}  // namespace family

using FamilyInstance = std::variant<family::Aztec, family::CirculantHalfStep, family::ExtendedCube,
                                    family::Circulant, family::CirculantGap>;

Graph family_graph(const FamilyInstance& f);
std::vector<Vertex> construction_zfs(const FamilyInstance& f);

}  // namespace forcelab
