#include "forcelab/zero_forcing.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <thread>

#include "forcelab/error.hpp"

namespace forcelab {

bool Coloring::all_blue() const { return std::all_of(blue.begin(), blue.end(), [](bool b) { return b; }); }

std::vector<Vertex> Coloring::blue_set() const {
  std::vector<Vertex> out;
  for (int v = 0; v < n; ++v) {
    if (blue[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

Coloring zf_closure(const Graph& g, std::span<const Vertex> initial) {
  const int n = g.order();
  Coloring c{n, std::vector<bool>(static_cast<std::size_t>(n), false), {}};
  for (Vertex v : initial) {
    if (!g.contains(v)) throw InvalidArgument("zero forcing: vertex " + std::to_string(v) + " out of range");
    c.blue[static_cast<std::size_t>(v)] = true;
  }
  // white[v] counts the white neighbors of v.
  std::vector<int> white(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) {
      if (!c.blue[static_cast<std::size_t>(w)]) ++white[static_cast<std::size_t>(v)];
    }
  }
  bool progress = true;
  while (progress) {
    progress = false;
    for (Vertex v = 0; v < n; ++v) {
      if (!c.blue[static_cast<std::size_t>(v)] || white[static_cast<std::size_t>(v)] != 1) continue;
      Vertex target = -1;
      for (Vertex w : g.neighbors(v)) {
        if (!c.blue[static_cast<std::size_t>(w)]) {
          target = w;
          break;
        }
      }
      c.blue[static_cast<std::size_t>(target)] = true;
      c.log.push_back({v, target});
      for (Vertex w : g.neighbors(target)) --white[static_cast<std::size_t>(w)];
      progress = true;
      break;
    }
  }
  return c;
}

bool is_zfs(const Graph& g, std::span<const Vertex> set) { return zf_closure(g, set).all_blue(); }

FastClosure::FastClosure(const Graph& g) {
  const int n = g.order();
  if (n > 64) throw InvalidArgument("bitmask closure needs at most 64 vertices");
  nbr_.assign(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) nbr_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << w;
  }
  full_ = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

std::uint64_t FastClosure::close(std::uint64_t blue) const {
  // `active` holds blue vertices that may still have white neighbors.
  std::uint64_t active = blue;
  bool progress = true;
  while (progress) {
    progress = false;
    std::uint64_t scan = active;
    while (scan) {
      const int v = std::countr_zero(scan);
      scan &= scan - 1;
      const std::uint64_t white = nbr_[static_cast<std::size_t>(v)] & ~blue;
      if (white == 0) {
        active &= ~(std::uint64_t{1} << v);
      } else if ((white & (white - 1)) == 0) {
        blue |= white;
        active |= white;
        active &= ~(std::uint64_t{1} << v);
        progress = true;
      }
    }
  }
  return blue;
}

namespace {

using Clock = std::chrono::steady_clock;

// Advances idx (strictly increasing, values < n) to the next combination,
// leaving positions before `fixed` untouched.
bool next_combination(std::vector<int>& idx, int n, std::size_t fixed) {
  const std::size_t s = idx.size();
  std::size_t i = s;
  while (i > fixed) {
    --i;
    if (idx[i] < n - static_cast<int>(s - i)) {
      ++idx[i];
      for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Lexicographically first forcing set of size s whose least element is `first`.
std::optional<std::vector<int>> search_shard(const FastClosure& fc, int n, int s, int first,
                                             std::uint64_t& examined) {
  if (first + s > n) return std::nullopt;
  std::vector<int> idx(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) idx[static_cast<std::size_t>(i)] = first + i;
  do {
    std::uint64_t mask = 0;
    for (int v : idx) mask |= std::uint64_t{1} << v;
    ++examined;
    if (fc.close(mask) == fc.full()) return idx;
  } while (next_combination(idx, n, 1));
  return std::nullopt;
}

std::optional<std::vector<int>> search_size(const FastClosure& fc, int n, int s, unsigned workers,
                                            std::uint64_t& examined) {
  if (s == 0) {
    ++examined;
    if (fc.close(0) == fc.full()) return std::vector<int>{};
    return std::nullopt;
  }
  if (workers <= 1) {
    for (int first = 0; first + s <= n; ++first) {
      if (auto hit = search_shard(fc, n, s, first, examined)) return hit;
    }
    return std::nullopt;
  }
  std::atomic<int> next_first{0};
  std::atomic<int> best_first{n};
  std::atomic<std::uint64_t> total{0};
  std::mutex mu;
  std::optional<std::vector<int>> best;
  auto work = [&] {
    std::uint64_t local = 0;
    for (;;) {
      const int first = next_first.fetch_add(1);
      if (first + s > n || first > best_first.load()) break;
      if (auto hit = search_shard(fc, n, s, first, local)) {
        const std::lock_guard lock(mu);
        if (first < best_first.load()) {
          best_first.store(first);
          best = std::move(hit);
        }
        break;
      }
    }
    total += local;
  };
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  examined += total.load();
  return best;
}

std::vector<Vertex> greedy_zfs(const Graph& g) {
  std::vector<bool> in(static_cast<std::size_t>(g.order()), true);
  auto current = [&] {
    std::vector<Vertex> s;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (in[static_cast<std::size_t>(v)]) s.push_back(v);
    }
    return s;
  };
  for (Vertex v = 0; v < g.order(); ++v) {
    in[static_cast<std::size_t>(v)] = false;
    if (!is_zfs(g, current())) in[static_cast<std::size_t>(v)] = true;
  }
  return current();
}

}  // namespace

ZfResult zero_forcing_number(const Graph& g, const ZfOptions& options) {
  const auto start = Clock::now();
  const int n = g.order();
  ZfResult result;
  const int hint = std::clamp(options.size_hint.value_or(0), 0, n);
  const bool exact_possible = n <= options.cap && n <= 64;

  if (!exact_possible) {
    result.witness = greedy_zfs(g);
    result.upper_bound = static_cast<int>(result.witness.size());
    result.zf_number = result.upper_bound;
    result.lower_bound = options.assert_lower_bound ? std::min(hint, result.upper_bound) : 0;
    result.is_exact = result.lower_bound == result.upper_bound;
    result.forces = zf_closure(g, result.witness).log;
    result.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return result;
  }

  const FastClosure fc(g);
  // Sizes below the hint are re-checked unless the caller vouches for the bound.
  int s = options.assert_lower_bound ? hint : 0;
  std::optional<std::vector<int>> hit;
  if (!options.assert_lower_bound && hint > 0) {
    // Confirm the hint first, then walk down to prove minimality.
    hit = search_size(fc, n, hint, options.workers, result.stats.subsets_examined);
    if (hit) {
      int best = hint;
      for (int t = hint - 1; t >= 0; --t) {
        auto smaller = search_size(fc, n, t, options.workers, result.stats.subsets_examined);
        if (!smaller) break;
        hit = std::move(smaller);
        best = t;
      }
      s = best;
    } else {
      s = hint + 1;
    }
  }
  if (!hit) {
    for (; s <= n; ++s) {
      hit = search_size(fc, n, s, options.workers, result.stats.subsets_examined);
      if (hit) break;
    }
  }
  result.witness.assign(hit->begin(), hit->end());
  result.zf_number = static_cast<int>(result.witness.size());
  result.lower_bound = result.zf_number;
  result.upper_bound = result.zf_number;
  result.is_exact = true;
  result.forces = zf_closure(g, result.witness).log;
  result.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> gap_connections(int n) {
  const int m = (n + 1) / 2 - 1;
  std::vector<int> s;
  for (int i = 1; i <= m; ++i) {
    if (i != m - 1) s.push_back(i);
  }
  return s;
}

struct FamilyGraph {
  Graph operator()(const family::Aztec& f) const { return aztec_diamond(f.r); }
  Graph operator()(const family::CirculantHalfStep& f) const {
    if (f.n < 8 || f.n % 8 != 0) throw InvalidArgument("Circ[n,{1,n/2-1}] family needs 8 | n");
    return circulant(f.n, {1, f.n / 2 - 1});
  }
  Graph operator()(const family::ExtendedCube& f) const { return extended_cube(f.t, f.k); }
  Graph operator()(const family::Circulant& f) const { return circulant(f.n, f.connections); }
  Graph operator()(const family::CirculantGap& f) const {
    if (f.n < 10) throw InvalidArgument("Circ[n,[m]\\{m-1}] family needs n >= 10");
    return circulant(f.n, gap_connections(f.n));
  }
};

struct FamilySet {
  std::vector<Vertex> operator()(const family::Aztec& f) const {
    // The two staircases along the upper-left border.
    std::vector<Vertex> out;
    for (int i = 1; i <= f.r; ++i) out.push_back(aztec_vertex(f.r, i, f.r + 1 - i));
    for (int i = 1; i <= f.r; ++i) out.push_back(aztec_vertex(f.r, i, f.r + i));
    return out;
  }
  std::vector<Vertex> operator()(const family::CirculantHalfStep& f) const {
    std::vector<Vertex> out;
    for (int i = 0; i <= f.n / 2; ++i) out.push_back(i);
    out.push_back(f.n - 1);
    return out;
  }
  std::vector<Vertex> operator()(const family::ExtendedCube& f) const {
    const int n = 8 + 2 * (f.t + f.k);
    const int r = n - f.t - 3;
    return {0, r, r + 1, n - 1};
  }
  std::vector<Vertex> operator()(const family::Circulant& f) const {
    const int m = *std::max_element(f.connections.begin(), f.connections.end());
    std::vector<Vertex> out;
    for (int i = 0; i < std::min(2 * m, f.n); ++i) out.push_back(i);
    return out;
  }
  std::vector<Vertex> operator()(const family::CirculantGap& f) const {
    const int n = f.n;
    const int m = (n + 1) / 2 - 1;
    std::vector<Vertex> removed;
    if (n % 2 == 1) {
      removed = {m - 2, m - 1, m + 2};
    } else {
      removed = {2, m - 1, m + 1, m + 3};
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v) {
      if (std::find(removed.begin(), removed.end(), v) == removed.end()) out.push_back(v);
    }
    return out;
  }
};

}  // namespace

Graph family_graph(const FamilyInstance& f) { return std::visit(FamilyGraph{}, f); }

std::vector<Vertex> construction_zfs(const FamilyInstance& f) {
  family_graph(f);  // validates the instance
  auto set = std::visit(FamilySet{}, f);
  std::sort(set.begin(), set.end());
  return set;
}

}  // namespace forcelab
