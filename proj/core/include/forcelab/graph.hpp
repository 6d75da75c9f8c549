#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace forcelab {

using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Connection data recorded by the circulant generator. `half_step` is set
/// when n/2 belongs to the connection set; equitable constructions that rely
/// on every connection being a proper +-s pair refuse such graphs.
struct CirculantInfo {
  int n = 0;
  std::vector<int> connections;
  bool half_step = false;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Neighbor lists are kept sorted and a dense
/// adjacency table backs `has_edge`, so the type is sized for the few-hundred
/// vertex graphs this library works with.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Throws InvalidArgument on loops, duplicate edges or out-of-range endpoints.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  std::size_t size() const { return edge_count_; }

  bool has_edge(Vertex u, Vertex v) const {
    return adj_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                static_cast<std::size_t>(v)] != 0;
  }
  const std::vector<Vertex>& neighbors(Vertex v) const { return nbrs_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(nbrs_[static_cast<std::size_t>(v)].size()); }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Display label of v; the decimal index when no label map is attached.
  std::string label(Vertex v) const;
  Graph with_labels(std::vector<std::string> labels) const;

  const std::optional<CirculantInfo>& circulant_info() const { return circulant_; }
  Graph with_circulant_info(CirculantInfo info) const;

  bool contains(Vertex v) const { return v >= 0 && v < n_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<Vertex>> nbrs_;
  std::vector<std::string> labels_;
  std::optional<CirculantInfo> circulant_;
};

// ---------------------------------------------------------------------------
// Generators

/// Circ[n,S]: i ~ i+-s (mod n) for s in S. Requires S nonempty, S in [1, n/2].
Graph circulant(int n, std::span<const int> connections);
inline Graph circulant(int n, std::initializer_list<int> connections) {
  return circulant(n, std::span<const int>(connections.begin(), connections.size()));
}

/// G box H. Vertex (v,w) is encoded as v*|H| + w.
Graph cartesian_product(const Graph& g, const Graph& h);

/// Aztec diamond graph of order r: 2r(r+1) squares labelled "(i,j)" in
/// row-major order.
Graph aztec_diamond(int r);
/// Index of square (i,j) in aztec_diamond(r); throws if it is not a square.
Vertex aztec_vertex(int r, int i, int j);

/// Extended cube graph ECG(t,k) on 8 + 2(t+k) vertices.
Graph extended_cube(int t, int k);

/// Generalized Petersen graph P(n,k): outer cycle 0..n-1, inner vertices n..2n-1.
/// k = floor(n/2) is only accepted with `allow_degenerate`.
Graph generalized_petersen(int n, int k, bool allow_degenerate = false);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph empty_graph(int n);

enum class BasicFamily { Path, Cycle, Complete, CompleteBipartite };
Graph basic_family(BasicFamily kind, std::span<const int> params);

// ---------------------------------------------------------------------------
// Editing

namespace edit {
struct DeleteVertex {
  Vertex v;
};
struct DeleteEdge {
  Vertex u, v;
};
/// Removes u and v and appends one vertex adjacent to N(u) + N(v).
struct ContractEdge {
  Vertex u, v;
};
/// Replaces uv by the path u, n, n+1, ..., n+k-1, v.
struct SubdivideEdge {
  Vertex u, v;
  int k;
};
/// k-subdivides `first` and `second`; the i-th new vertex on `first` (counted
/// from first.u) is joined to the i-th new vertex on `second` (from second.u).
/// New vertices on `first` come before those on `second`.
struct SubdivisionEdgeInsertion {
  Edge first, second;
  int k;
};
}  // namespace edit

using GraphEdit = std::variant<edit::DeleteVertex, edit::DeleteEdge, edit::ContractEdge,
                               edit::SubdivideEdge, edit::SubdivisionEdgeInsertion>;

/// Deleted vertices close the gap in label order, inserted vertices append.
Graph apply_edit(const Graph& g, const GraphEdit& e);

/// H with vertex v renamed to new_index[v]; new_index must be a permutation.
Graph relabel(const Graph& g, std::span<const Vertex> new_index);

/// Induced subgraph on `keep` (in the given order).
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

// ---------------------------------------------------------------------------
// Serialization

Graph read_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

/// {"n": .., "edges": [[u,v],..], "labels": {"0": "..", ..}}
Graph read_graph_json(std::string_view text);
std::string write_graph_json(const Graph& g);

/// Accepts either the edge-list or the JSON form.
Graph read_graph(std::string_view text);

}  // namespace forcelab
