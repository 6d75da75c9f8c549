#include "forcelab/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "forcelab/error.hpp"

namespace forcelab {

namespace {

std::string pair_label(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void check_vertex(const Graph& g, Vertex v, const char* what) {
  if (!g.contains(v)) {
    throw InvalidArgument(std::string(what) + ": vertex " + std::to_string(v) + " not in 0.." +
                          std::to_string(g.order() - 1));
  }
}

// Builds a graph from an edge multiset, silently merging parallel edges.
Graph from_edge_set(int n, std::set<Edge> edges) {
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph(n, list);
}

Edge normalized(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

}  // namespace

Graph::Graph(int n) : Graph(n, std::span<const Edge>{}) {}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw InvalidArgument("graph order must be nonnegative");
  const auto nn = static_cast<std::size_t>(n);
  adj_.assign(nn * nn, 0);
  nbrs_.resize(nn);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw InvalidArgument("edge endpoint out of range: " + std::to_string(e.u) + " " +
                            std::to_string(e.v));
    }
    if (e.u == e.v) throw InvalidArgument("loop at vertex " + std::to_string(e.u));
    auto& cell = adj_[static_cast<std::size_t>(e.u) * nn + static_cast<std::size_t>(e.v)];
    if (cell) {
      throw InvalidArgument("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    cell = 1;
    adj_[static_cast<std::size_t>(e.v) * nn + static_cast<std::size_t>(e.u)] = 1;
    nbrs_[static_cast<std::size_t>(e.u)].push_back(e.v);
    nbrs_[static_cast<std::size_t>(e.v)].push_back(e.u);
    ++edge_count_;
  }
  for (auto& list : nbrs_) std::sort(list.begin(), list.end());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

std::string Graph::label(Vertex v) const {
  if (labels_.empty()) return std::to_string(v);
  return labels_[static_cast<std::size_t>(v)];
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(n_)) {
    throw InvalidArgument("label map size does not match graph order");
  }
  Graph out = *this;
  out.labels_ = std::move(labels);
  return out;
}

Graph Graph::with_circulant_info(CirculantInfo info) const {
  Graph out = *this;
  out.circulant_ = std::move(info);
  return out;
}

// ---------------------------------------------------------------------------

Graph circulant(int n, std::span<const int> connections) {
  if (n < 3) throw InvalidArgument("circulant needs n >= 3");
  if (connections.empty()) throw InvalidArgument("circulant connection set is empty");
  std::set<int> s(connections.begin(), connections.end());
  std::set<Edge> edges;
  for (int c : s) {
    if (c < 1 || c > n / 2) {
      throw InvalidArgument("connection " + std::to_string(c) + " outside [1, " +
                            std::to_string(n / 2) + "]");
    }
    for (int i = 0; i < n; ++i) edges.insert(normalized(i, (i + c) % n));
  }
  CirculantInfo info{n, std::vector<int>(s.begin(), s.end()), n % 2 == 0 && s.count(n / 2) > 0};
  return from_edge_set(n, std::move(edges)).with_circulant_info(std::move(info));
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  if (g.order() == 0 || h.order() == 0) throw InvalidArgument("cartesian product of empty graph");
  const int hn = h.order();
  std::vector<Edge> edges;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (const Edge& e : h.edges()) edges.push_back({v * hn + e.u, v * hn + e.v});
  }
  for (const Edge& e : g.edges()) {
    for (Vertex w = 0; w < hn; ++w) edges.push_back(normalized(e.u * hn + w, e.v * hn + w));
  }
  std::sort(edges.begin(), edges.end());
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(g.order() * hn));
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w = 0; w < hn; ++w) labels.push_back(pair_label(v, w));
  }
  return Graph(g.order() * hn, edges).with_labels(std::move(labels));
}

namespace {

bool is_aztec_square(int r, int i, int j) {
  return i >= 1 && j >= 1 && i <= 2 * r && j <= 2 * r && i + j >= r + 1 && i + j <= 3 * r + 1 &&
         std::abs(j - i) <= r;
}

}  // namespace

Vertex aztec_vertex(int r, int i, int j) {
  if (!is_aztec_square(r, i, j)) {
    throw InvalidArgument(pair_label(i, j) + " is not a square of AD_" + std::to_string(r));
  }
  Vertex index = 0;
  for (int a = 1; a <= 2 * r; ++a) {
    for (int b = 1; b <= 2 * r; ++b) {
      if (a == i && b == j) return index;
      if (is_aztec_square(r, a, b)) ++index;
    }
  }
  return index;  // unreachable
}

Graph aztec_diamond(int r) {
  if (r < 1) throw InvalidArgument("aztec diamond order must be >= 1");
  std::vector<std::pair<int, int>> squares;
  for (int i = 1; i <= 2 * r; ++i) {
    for (int j = 1; j <= 2 * r; ++j) {
      if (is_aztec_square(r, i, j)) squares.emplace_back(i, j);
    }
  }
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < squares.size(); ++a) {
    labels.push_back(pair_label(squares[a].first, squares[a].second));
    for (std::size_t b = a + 1; b < squares.size(); ++b) {
      const int d = std::abs(squares[a].first - squares[b].first) +
                    std::abs(squares[a].second - squares[b].second);
      if (d == 1) edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    }
  }
  return Graph(static_cast<int>(squares.size()), edges).with_labels(std::move(labels));
}

Graph extended_cube(int t, int k) {
  if (t < 0 || k < 0) throw InvalidArgument("extended cube parameters must be >= 0");
  const int n = 8 + 2 * (t + k);
  std::set<Edge> edges;
  for (int i = 0; i < n; ++i) edges.insert(normalized(i, (i + 1) % n));
  for (int i = 0; i <= k + 1; ++i) edges.insert(normalized(i, n - t - 3 - i));
  for (int j = 0; j <= t + 1; ++j) edges.insert(normalized(k + 2 + j, n - 1 - j));
  return from_edge_set(n, std::move(edges));
}

Graph generalized_petersen(int n, int k, bool allow_degenerate) {
  if (n < 3) throw InvalidArgument("generalized Petersen graph needs n >= 3");
  const bool in_range = k >= 1 && k < n / 2;
  const bool degenerate = k == n / 2 && k >= 1;
  if (!in_range && !(degenerate && allow_degenerate)) {
    throw InvalidArgument("P(n,k) requires 1 <= k < floor(n/2)");
  }
  std::set<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.insert(normalized(i, (i + 1) % n));
    edges.insert(normalized(n + i, n + (i + k) % n));
    edges.insert(normalized(i, n + i));
  }
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("u" + std::to_string(i));
  for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  return from_edge_set(2 * n, std::move(edges)).with_labels(std::move(labels));
}

Graph path_graph(int n) {
  if (n < 1) throw InvalidArgument("path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidArgument("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(normalized(i, (i + 1) % n));
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  if (n < 1) throw InvalidArgument("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph(n, edges);
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw InvalidArgument("complete bipartite parts must be nonempty");
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
  }
  return Graph(a + b, edges);
}

Graph empty_graph(int n) { return Graph(n); }

Graph basic_family(BasicFamily kind, std::span<const int> params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) throw InvalidArgument("wrong number of family parameters");
  };
  switch (kind) {
    case BasicFamily::Path:
      need(1);
      return path_graph(params[0]);
    case BasicFamily::Cycle:
      need(1);
      return cycle_graph(params[0]);
    case BasicFamily::Complete:
      need(1);
      return complete_graph(params[0]);
    case BasicFamily::CompleteBipartite:
      need(2);
      return complete_bipartite(params[0], params[1]);
  }
  throw InvalidArgument("unknown family");
}

// ---------------------------------------------------------------------------

namespace {

struct EditVisitor {
  const Graph& g;

  Graph operator()(const edit::DeleteVertex& d) const {
    check_vertex(g, d.v, "DeleteVertex");
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (v != d.v) keep.push_back(v);
    }
    return induced_subgraph(g, keep);
  }

  Graph operator()(const edit::DeleteEdge& d) const {
    check_vertex(g, d.u, "DeleteEdge");
    check_vertex(g, d.v, "DeleteEdge");
    if (d.u == d.v || !g.has_edge(d.u, d.v)) throw InvalidArgument("DeleteEdge: no such edge");
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
      if (e != normalized(d.u, d.v)) edges.push_back(e);
    }
    return Graph(g.order(), edges).with_labels(g.labels());
  }

  Graph operator()(const edit::ContractEdge& c) const {
    check_vertex(g, c.u, "ContractEdge");
    check_vertex(g, c.v, "ContractEdge");
    if (c.u == c.v || !g.has_edge(c.u, c.v)) {
      throw InvalidArgument("ContractEdge: vertices are not adjacent");
    }
    std::vector<Vertex> index(static_cast<std::size_t>(g.order()), -1);
    Vertex next = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (v != c.u && v != c.v) index[static_cast<std::size_t>(v)] = next++;
    }
    const Vertex merged = next;
    std::set<Edge> edges;
    for (const Edge& e : g.edges()) {
      const bool eu = e.u == c.u || e.u == c.v;
      const bool ev = e.v == c.u || e.v == c.v;
      if (eu && ev) continue;
      const Vertex a = eu ? merged : index[static_cast<std::size_t>(e.u)];
      const Vertex b = ev ? merged : index[static_cast<std::size_t>(e.v)];
      edges.insert(normalized(a, b));
    }
    Graph out = from_edge_set(merged + 1, std::move(edges));
    if (g.has_labels()) {
      std::vector<std::string> labels;
      for (Vertex v = 0; v < g.order(); ++v) {
        if (v != c.u && v != c.v) labels.push_back(g.label(v));
      }
      labels.push_back(g.label(c.u) + "+" + g.label(c.v));
      out = out.with_labels(std::move(labels));
    }
    return out;
  }

  Graph operator()(const edit::SubdivideEdge& s) const {
    check_vertex(g, s.u, "SubdivideEdge");
    check_vertex(g, s.v, "SubdivideEdge");
    if (s.k < 1) throw InvalidArgument("SubdivideEdge: k must be >= 1");
    if (s.u == s.v || !g.has_edge(s.u, s.v)) throw InvalidArgument("SubdivideEdge: no such edge");
    const int n = g.order();
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
      if (e != normalized(s.u, s.v)) edges.push_back(e);
    }
    Vertex prev = s.u;
    for (int i = 0; i < s.k; ++i) {
      edges.push_back(normalized(prev, n + i));
      prev = n + i;
    }
    edges.push_back(normalized(prev, s.v));
    return Graph(n + s.k, edges);
  }

  Graph operator()(const edit::SubdivisionEdgeInsertion& s) const {
    for (Vertex v : {s.first.u, s.first.v, s.second.u, s.second.v}) {
      check_vertex(g, v, "SubdivisionEdgeInsertion");
    }
    if (s.k < 1) throw InvalidArgument("SubdivisionEdgeInsertion: k must be >= 1");
    const Edge a = normalized(s.first.u, s.first.v);
    const Edge b = normalized(s.second.u, s.second.v);
    if (a == b) throw InvalidArgument("SubdivisionEdgeInsertion: edges must be distinct");
    if (!g.has_edge(a.u, a.v) || !g.has_edge(b.u, b.v)) {
      throw InvalidArgument("SubdivisionEdgeInsertion: no such edge");
    }
    const int n = g.order();
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
      if (e != a && e != b) edges.push_back(e);
    }
    auto chain = [&](Edge e, Vertex first_new) {
      Vertex prev = e.u;
      for (int i = 0; i < s.k; ++i) {
        edges.push_back(normalized(prev, first_new + i));
        prev = first_new + i;
      }
      edges.push_back(normalized(prev, e.v));
    };
    chain(s.first, n);
    chain(s.second, n + s.k);
    for (int i = 0; i < s.k; ++i) edges.push_back({n + i, n + s.k + i});
    return Graph(n + 2 * s.k, edges);
  }
};

}  // namespace

Graph apply_edit(const Graph& g, const GraphEdit& e) { return std::visit(EditVisitor{g}, e); }

Graph relabel(const Graph& g, std::span<const Vertex> new_index) {
  const auto n = static_cast<std::size_t>(g.order());
  if (new_index.size() != n) throw InvalidArgument("relabel: permutation has wrong length");
  std::vector<bool> seen(n, false);
  for (Vertex v : new_index) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)]) {
      throw InvalidArgument("relabel: not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    edges.push_back(normalized(new_index[static_cast<std::size_t>(e.u)],
                               new_index[static_cast<std::size_t>(e.v)]));
  }
  std::sort(edges.begin(), edges.end());
  Graph out(g.order(), edges);
  if (g.has_labels()) {
    std::vector<std::string> labels(n);
    for (std::size_t v = 0; v < n; ++v) {
      labels[static_cast<std::size_t>(new_index[v])] = g.labels()[v];
    }
    out = out.with_labels(std::move(labels));
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    check_vertex(g, keep[i], "induced_subgraph");
    if (index[static_cast<std::size_t>(keep[i])] != -1) {
      throw InvalidArgument("induced_subgraph: repeated vertex");
    }
    index[static_cast<std::size_t>(keep[i])] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const Vertex a = index[static_cast<std::size_t>(e.u)];
    const Vertex b = index[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.push_back(normalized(a, b));
  }
  Graph out(static_cast<int>(keep.size()), edges);
  if (g.has_labels()) {
    std::vector<std::string> labels;
    for (Vertex v : keep) labels.push_back(g.label(v));
    out = out.with_labels(std::move(labels));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool next(std::string_view& line) {
    if (pos_ >= text_.size()) return false;
    const auto end = text_.find('\n', pos_);
    const auto stop = end == std::string_view::npos ? text_.size() : end;
    line = text_.substr(pos_, stop - pos_);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos_ = stop + 1;
    ++number_;
    return true;
  }
  int number() const { return number_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int number_ = 0;
};

// Parses exactly two nonnegative decimal integers separated by one space.
bool parse_pair(std::string_view line, long long& a, long long& b) {
  const auto space = line.find(' ');
  if (space == std::string_view::npos) return false;
  auto parse = [](std::string_view s, long long& out) {
    if (s.empty()) return false;
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last && out >= 0;
  };
  return parse(line.substr(0, space), a) && parse(line.substr(space + 1), b);
}

}  // namespace

Graph read_edge_list(std::string_view text) {
  LineReader reader(text);
  std::string_view line;
  if (!reader.next(line)) throw ParseError("edge list: missing header line");
  long long n = 0;
  long long m = 0;
  if (!parse_pair(line, n, m)) throw ParseError("edge list: header must be \"n m\"");
  if (n > 1'000'000) throw ParseError("edge list: vertex count too large");
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (long long i = 0; i < m; ++i) {
    if (!reader.next(line)) {
      throw ParseError("edge list: expected " + std::to_string(m) + " edges, found " +
                       std::to_string(i));
    }
    long long u = 0;
    long long v = 0;
    const std::string where = " (line " + std::to_string(reader.number()) + ")";
    if (!parse_pair(line, u, v)) throw ParseError("edge list: malformed edge line" + where);
    if (u >= n || v >= n) throw ParseError("edge list: endpoint out of range" + where);
    if (u == v) throw ParseError("edge list: loop" + where);
    const Edge e = normalized(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!seen.insert(e).second) throw ParseError("edge list: duplicate edge" + where);
    edges.push_back(e);
  }
  while (reader.next(line)) {
    if (line.find_first_not_of(" \t") != std::string_view::npos) {
      throw ParseError("edge list: trailing content after " + std::to_string(m) + " edges");
    }
  }
  std::sort(edges.begin(), edges.end());
  return Graph(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph read_graph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("graph json: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
    throw ParseError("graph json: missing integer field \"n\"");
  }
  const auto n = doc["n"].get<long long>();
  if (n < 0 || n > 1'000'000) throw ParseError("graph json: bad vertex count");
  std::vector<Edge> edges;
  std::set<Edge> seen;
  if (doc.contains("edges")) {
    for (const auto& item : doc["edges"]) {
      if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
          !item[1].is_number_integer()) {
        throw ParseError("graph json: edges must be [u,v] integer pairs");
      }
      const auto u = item[0].get<long long>();
      const auto v = item[1].get<long long>();
      if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("graph json: endpoint out of range");
      if (u == v) throw ParseError("graph json: loop");
      const Edge e = normalized(static_cast<Vertex>(u), static_cast<Vertex>(v));
      if (!seen.insert(e).second) throw ParseError("graph json: duplicate edge");
      edges.push_back(e);
    }
  }
  std::sort(edges.begin(), edges.end());
  Graph g(static_cast<int>(n), edges);
  if (doc.contains("labels") && doc["labels"].is_object()) {
    std::vector<std::string> labels;
    for (long long v = 0; v < n; ++v) labels.push_back(std::to_string(v));
    for (const auto& [key, value] : doc["labels"].items()) {
      long long v = -1;
      auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
      if (ec != std::errc{} || ptr != key.data() + key.size() || v < 0 || v >= n ||
          !value.is_string()) {
        throw ParseError("graph json: bad label entry \"" + key + "\"");
      }
      labels[static_cast<std::size_t>(v)] = value.get<std::string>();
    }
    g = g.with_labels(std::move(labels));
  }
  return g;
}

std::string write_graph_json(const Graph& g) {
  nlohmann::json doc;
  doc["n"] = g.order();
  doc["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges()) doc["edges"].push_back({e.u, e.v});
  if (g.has_labels()) {
    nlohmann::json labels = nlohmann::json::object();
    for (Vertex v = 0; v < g.order(); ++v) labels[std::to_string(v)] = g.label(v);
    doc["labels"] = labels;
  }
  return doc.dump();
}

Graph read_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return read_graph_json(text);
  return read_edge_list(text);
}

}  // namespace forcelab
