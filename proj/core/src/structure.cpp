#include "forcelab/structure.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>

#include "forcelab/error.hpp"

namespace forcelab {

namespace {

// Unit vertex capacities via the split x -> (2x in, 2x+1 out).
class SplitFlow {
 public:
  explicit SplitFlow(const Graph& g) : n_(g.order()), head_(2 * static_cast<std::size_t>(g.order()), -1) {
    for (Vertex x = 0; x < n_; ++x) add_arc(in(x), out(x), 1);
    for (const Edge& e : g.edges()) {
      add_arc(out(e.u), in(e.v), kInf);
      add_arc(out(e.v), in(e.u), kInf);
    }
  }

  /// Minimum s-t vertex cut for non-adjacent s, t; gives up once `limit` is reached.
  int min_cut(Vertex s, Vertex t, int limit, std::vector<Vertex>* cut) {
    std::fill(flow_.begin(), flow_.end(), 0);
    const int source = out(s);
    const int sink = in(t);
    int total = 0;
    std::vector<int> parent_arc;
    while (total < limit && augment(source, sink, parent_arc)) ++total;
    if (cut != nullptr && total < limit) {
      const std::vector<bool> reach = reachable(source);
      cut->clear();
      for (Vertex x = 0; x < n_; ++x) {
        if (reach[static_cast<std::size_t>(in(x))] && !reach[static_cast<std::size_t>(out(x))]) {
          cut->push_back(x);
        }
      }
    }
    return total;
  }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max() / 2;
  static int in(Vertex x) { return 2 * x; }
  static int out(Vertex x) { return 2 * x + 1; }

  void add_arc(int a, int b, int cap) {
    push(a, b, cap);
    push(b, a, 0);
  }
  void push(int a, int b, int cap) {
    to_.push_back(b);
    cap_.push_back(cap);
    flow_.push_back(0);
    next_.push_back(head_[static_cast<std::size_t>(a)]);
    head_[static_cast<std::size_t>(a)] = static_cast<int>(to_.size()) - 1;
  }
  int residual(int arc) const {
    return cap_[static_cast<std::size_t>(arc)] - flow_[static_cast<std::size_t>(arc)];
  }

  bool augment(int source, int sink, std::vector<int>& parent_arc) {
    parent_arc.assign(head_.size(), -1);
    std::vector<bool> seen(head_.size(), false);
    std::queue<int> q;
    q.push(source);
    seen[static_cast<std::size_t>(source)] = true;
    while (!q.empty() && !seen[static_cast<std::size_t>(sink)]) {
      const int a = q.front();
      q.pop();
      for (int arc = head_[static_cast<std::size_t>(a)]; arc != -1; arc = next_[static_cast<std::size_t>(arc)]) {
        const int b = to_[static_cast<std::size_t>(arc)];
        if (seen[static_cast<std::size_t>(b)] || residual(arc) <= 0) continue;
        seen[static_cast<std::size_t>(b)] = true;
        parent_arc[static_cast<std::size_t>(b)] = arc;
        q.push(b);
      }
    }
    if (!seen[static_cast<std::size_t>(sink)]) return false;
    for (int b = sink; b != source;) {
      const int arc = parent_arc[static_cast<std::size_t>(b)];
      flow_[static_cast<std::size_t>(arc)] += 1;
      flow_[static_cast<std::size_t>(arc ^ 1)] -= 1;
      b = to_[static_cast<std::size_t>(arc ^ 1)];
    }
    return true;
  }

  std::vector<bool> reachable(int source) const {
    std::vector<bool> seen(head_.size(), false);
    std::queue<int> q;
    q.push(source);
    seen[static_cast<std::size_t>(source)] = true;
    while (!q.empty()) {
      const int a = q.front();
      q.pop();
      for (int arc = head_[static_cast<std::size_t>(a)]; arc != -1; arc = next_[static_cast<std::size_t>(arc)]) {
        const int b = to_[static_cast<std::size_t>(arc)];
        if (!seen[static_cast<std::size_t>(b)] && residual(arc) > 0) {
          seen[static_cast<std::size_t>(b)] = true;
          q.push(b);
        }
      }
    }
    return seen;
  }

  int n_;
  std::vector<int> head_;
  std::vector<int> to_, cap_, flow_, next_;
};

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.order();
}

}  // namespace

KappaWitness vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return {0, {}};
  if (g.size() == static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2) return {n - 1, {}};
  if (!is_connected(g)) return {0, {}};

  SplitFlow flow(g);
  KappaWitness best{n - 1, {}};
  std::vector<Vertex> cut;
  for (Vertex i = 0; i <= best.kappa && i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (g.has_edge(i, j)) continue;
      const int c = flow.min_cut(i, j, best.kappa, &cut);
      if (c < best.kappa) best = {c, cut};
    }
  }
  std::sort(best.separator.begin(), best.separator.end());
  return best;
}

int min_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = v == 0 ? g.degree(v) : std::min(best, g.degree(v));
  return best;
}

KappaDeficiency circulant_kappa_deficient(int n, std::span<const int> connections) {
  const Graph g = circulant(n, connections);
  const long long delta = min_degree(g);
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    std::set<int> residues;
    for (int s : connections) {
      for (int x : {s, n - s}) {
        if (x % d != 0) residues.insert(x % d);
      }
    }
    const auto count = static_cast<long long>(residues.size());
    // count < min{d-1, delta*d/n}, compared without division.
    if (count < d - 1 && count * n < delta * d) return {true, d};
  }
  return {false, std::nullopt};
}

void check_in_pattern(const RationalMatrix& a, const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  if (a.rows() != n || a.cols() != n) throw InvalidArgument("SAP: matrix order differs from the graph");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a(i, j) != a(j, i)) throw InvalidArgument("SAP: matrix is not symmetric");
      const bool edge = g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
      if ((sgn(a(i, j)) != 0) != edge) {
        throw InvalidArgument("SAP: entry (" + std::to_string(i) + "," + std::to_string(j) +
                              ") does not match the graph");
      }
    }
  }
}

SapReport has_sap(const RationalMatrix& a, const Graph& g) {
  check_in_pattern(a, g);
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<std::pair<std::size_t, std::size_t>> vars;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j))) vars.emplace_back(i, j);
    }
  }
  SapReport report;
  if (vars.empty()) {
    report.has_sap = true;
    return report;
  }
  // Row (r, c) of AX = 0; x_ij sits at (i, j) and (j, i).
  RationalMatrix system(n * n, vars.size(), Rational(0));
  for (std::size_t k = 0; k < vars.size(); ++k) {
    const auto [i, j] = vars[k];
    for (std::size_t r = 0; r < n; ++r) {
      system(r * n + j, k) += a(r, i);
      system(r * n + i, k) += a(r, j);
    }
  }
  report.violation_dim = rank_nullity(system).nullity;
  report.has_sap = report.violation_dim == 0;
  if (!report.has_sap) {
    const RationalVector x = nullspace_basis(system).front();
    RationalMatrix sample(n, n, Rational(0));
    for (std::size_t k = 0; k < vars.size(); ++k) {
      sample(vars[k].first, vars[k].second) = x[k];
      sample(vars[k].second, vars[k].first) = x[k];
    }
    report.sample_violation = std::move(sample);
  }
  return report;
}

SapReport has_sap(const ExactMatrix& a, const Graph& g) { return has_sap(a.rational(), g); }

}  // namespace forcelab
