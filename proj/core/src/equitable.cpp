#include "forcelab/equitable.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "forcelab/error.hpp"

namespace forcelab {

Partition unit_partition(int n) {
  Block all(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
  Partition p;
  if (n > 0) p.blocks.push_back(std::move(all));
  return p;
}

void check_partition(const Partition& p, int n) {
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::size_t total = 0;
  for (const Block& b : p.blocks) {
    if (b.empty()) throw InvalidArgument("partition: empty block");
    for (Vertex v : b) {
      if (v < 0 || v >= n) throw InvalidArgument("partition: vertex " + std::to_string(v) + " out of range");
      if (seen[static_cast<std::size_t>(v)]) {
        throw InvalidArgument("partition: vertex " + std::to_string(v) + " in two blocks");
      }
      seen[static_cast<std::size_t>(v)] = true;
      ++total;
    }
  }
  if (total != static_cast<std::size_t>(n)) throw InvalidArgument("partition: blocks do not cover V(G)");
}

namespace {

std::vector<std::size_t> block_of(const Partition& p, int n) {
  std::vector<std::size_t> out(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    for (Vertex v : p.blocks[i]) out[static_cast<std::size_t>(v)] = i;
  }
  return out;
}

std::vector<long> counts_into_blocks(const Graph& g, Vertex v, const std::vector<std::size_t>& owner,
                                     std::size_t blocks) {
  std::vector<long> c(blocks, 0);
  for (Vertex w : g.neighbors(v)) ++c[owner[static_cast<std::size_t>(w)]];
  return c;
}

}  // namespace

EquitableCheck is_equitable(const Graph& g, const Partition& p) {
  check_partition(p, g.order());
  const auto owner = block_of(p, g.order());
  const std::size_t k = p.blocks.size();
  Matrix<long> b(k, k, 0);
  EquitableCheck out;
  for (std::size_t i = 0; i < k; ++i) {
    const std::vector<long> ref = counts_into_blocks(g, p.blocks[i].front(), owner, k);
    for (std::size_t j = 0; j < k; ++j) b(i, j) = ref[j];
    for (Vertex v : p.blocks[i]) {
      const std::vector<long> c = counts_into_blocks(g, v, owner, k);
      for (std::size_t j = 0; j < k; ++j) {
        if (c[j] != ref[j]) {
          out.violating_vertex = v;
          out.violating_block = j;
          return out;
        }
      }
    }
  }
  out.equitable = true;
  out.b = std::move(b);
  return out;
}

Partition coarsest_equitable(const Graph& g, const Partition& initial) {
  check_partition(initial, g.order());
  const int n = g.order();
  Partition p;
  for (Block b : initial.blocks) {
    std::sort(b.begin(), b.end());
    p.blocks.push_back(std::move(b));
  }
  auto by_least = [](const Block& x, const Block& y) { return x.front() < y.front(); };
  std::sort(p.blocks.begin(), p.blocks.end(), by_least);
  for (;;) {
    const auto owner = block_of(p, n);
    const std::size_t k = p.blocks.size();
    Partition next;
    for (const Block& b : p.blocks) {
      std::map<std::vector<long>, Block> split;
      for (Vertex v : b) split[counts_into_blocks(g, v, owner, k)].push_back(v);
      for (auto& [sig, part] : split) next.blocks.push_back(std::move(part));
    }
    std::sort(next.blocks.begin(), next.blocks.end(), by_least);
    if (next.blocks.size() == k) {
      p.b = is_equitable(g, p).b;
      return p;
    }
    p = std::move(next);
  }
}

RationalMatrix divisor_matrix(const Graph& g, const Partition& p) {
  const EquitableCheck check = is_equitable(g, p);
  if (!check.equitable) {
    throw InvalidArgument("divisor matrix: partition is not equitable at vertex " +
                          std::to_string(*check.violating_vertex));
  }
  return check.b->map([](long x) { return Rational(x); });
}

Automorphism make_automorphism(const Graph& g, std::vector<Vertex> perm) {
  const int n = g.order();
  if (perm.size() != static_cast<std::size_t>(n)) throw InvalidArgument("automorphism: wrong length");
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (Vertex x : perm) {
    if (x < 0 || x >= n || hit[static_cast<std::size_t>(x)]) throw InvalidArgument("automorphism: not a permutation");
    hit[static_cast<std::size_t>(x)] = true;
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v) != g.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])) {
        throw InvalidArgument("automorphism: pair {" + std::to_string(u) + "," + std::to_string(v) +
                              "} changes adjacency");
      }
    }
  }
  Automorphism phi{std::move(perm), std::nullopt};
  const Partition orbits = orbit_partition(g, phi);
  const std::size_t size = orbits.blocks.empty() ? 0 : orbits.blocks.front().size();
  if (std::all_of(orbits.blocks.begin(), orbits.blocks.end(), [&](const Block& b) { return b.size() == size; })) {
    phi.orbit_size = static_cast<int>(size);
  }
  return phi;
}

Automorphism rotation(const Graph& g, int shift) {
  const int n = g.order();
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) perm[static_cast<std::size_t>(x)] = ((x + shift) % n + n) % n;
  return make_automorphism(g, std::move(perm));
}

Partition orbit_partition(const Graph& g, const Automorphism& phi) {
  const int n = g.order();
  if (phi.perm.size() != static_cast<std::size_t>(n)) throw InvalidArgument("automorphism: wrong length");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  Partition p;
  for (Vertex v = 0; v < n; ++v) {
    if (seen[static_cast<std::size_t>(v)]) continue;
    Block cycle;
    for (Vertex x = v; !seen[static_cast<std::size_t>(x)]; x = phi.perm[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = true;
      cycle.push_back(x);
    }
    p.blocks.push_back(std::move(cycle));
  }
  return p;
}

Partition circulant_orbit_partition(const Graph& g, int n) {
  const auto& info = g.circulant_info();
  if (!info) throw InvalidArgument("orbit partition: graph was not built as a circulant");
  if (info->half_step) throw InvalidArgument("orbit partition: connection set contains N/2");
  const int big = g.order();
  if (n <= 0 || big % n != 0) throw InvalidArgument("orbit partition: n must divide the order");
  Partition p;
  for (int i = 0; i < n; ++i) {
    Block b;
    for (int x = i; x < big; x += n) b.push_back(x);
    p.blocks.push_back(std::move(b));
  }
  return p;
}

// ---------------------------------------------------------------------------

std::vector<ComplexMatrix> Decomposition::complex_blocks() const {
  if (!exact) return approx_blocks;
  std::vector<ComplexMatrix> out;
  for (const ExactMatrix& b : blocks) out.push_back(to_complex(b));
  return out;
}

namespace {

template <class T>
std::vector<Matrix<T>> combine_slices(const std::vector<RationalMatrix>& slices, const T& omega) {
  const std::size_t k = slices.size();
  std::vector<T> powers(k, T(1));
  for (std::size_t i = 1; i < k; ++i) powers[i] = powers[i - 1] * omega;
  std::vector<Matrix<T>> blocks;
  for (std::size_t j = 0; j < k; ++j) {
    Matrix<T> b(slices[0].rows(), slices[0].cols(), T(0));
    for (std::size_t l = 0; l < k; ++l) {
      const T& w = powers[(j * l) % k];
      for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
          if (sgn(slices[l](r, c)) != 0) b(r, c) += w * T(slices[l](r, c));
        }
      }
    }
    blocks.push_back(std::move(b));
  }
  return blocks;
}

template <class T>
std::vector<ExactMatrix> wrap(std::vector<Matrix<T>> blocks) {
  std::vector<ExactMatrix> out;
  for (auto& b : blocks) out.emplace_back(std::move(b));
  return out;
}

}  // namespace

Decomposition equitable_decomposition(const RationalMatrix& m, const Automorphism& phi,
                                      std::optional<std::vector<Vertex>> t0) {
  const std::size_t n = m.rows();
  if (!m.is_square() || phi.perm.size() != n) throw InvalidArgument("decomposition: size mismatch");
  if (!phi.orbit_size) throw InvalidArgument("decomposition: automorphism is not uniform");
  const int k = *phi.orbit_size;
  auto at = [&](Vertex x) { return phi.perm[static_cast<std::size_t>(x)]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m(static_cast<std::size_t>(at(static_cast<Vertex>(i))), static_cast<std::size_t>(at(static_cast<Vertex>(j)))) !=
          m(i, j)) {
        throw InvalidArgument("decomposition: matrix is not invariant under the automorphism");
      }
    }
  }

  const Graph shape(static_cast<int>(n));
  const Partition orbits = orbit_partition(shape, phi);
  std::vector<Vertex> base;
  if (t0) {
    base = *t0;
    std::vector<int> hits(orbits.blocks.size(), 0);
    std::vector<std::size_t> owner = block_of(orbits, static_cast<int>(n));
    for (Vertex v : base) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) throw InvalidArgument("decomposition: transversal vertex out of range");
      ++hits[owner[static_cast<std::size_t>(v)]];
    }
    if (base.size() != orbits.blocks.size() || std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; })) {
      throw InvalidArgument("decomposition: T0 must meet every orbit exactly once");
    }
  } else {
    for (const Block& b : orbits.blocks) base.push_back(b.front());
  }

  Decomposition d;
  d.k = k;
  d.transversals.push_back(base);
  for (int l = 1; l < k; ++l) {
    std::vector<Vertex> next;
    for (Vertex v : d.transversals.back()) next.push_back(at(v));
    d.transversals.push_back(std::move(next));
  }
  std::vector<std::size_t> rows(base.begin(), base.end());
  for (const auto& t : d.transversals) {
    std::vector<std::size_t> cols(t.begin(), t.end());
    d.slices.push_back(m.select(rows, cols));
  }

  d.exact = true;
  switch (k) {
    case 1:
      d.blocks = wrap(combine_slices(d.slices, Rational(1)));
      break;
    case 2:
      d.blocks = wrap(combine_slices(d.slices, Rational(-1)));
      break;
    case 4:
      d.blocks = wrap(combine_slices(d.slices, GaussianRational::root()));
      break;
    case 3:
      d.blocks = wrap(combine_slices(d.slices, EisensteinRational(Rational(-1, 2), Rational(1, 2))));
      break;
    case 6:
      d.blocks = wrap(combine_slices(d.slices, EisensteinRational(Rational(1, 2), Rational(1, 2))));
      break;
    default: {
      d.exact = false;
      const double angle = 2 * std::numbers::pi / k;
      const std::complex<double> omega(std::cos(angle), std::sin(angle));
      for (int j = 0; j < k; ++j) {
        ComplexMatrix b(base.size(), base.size(), 0.0);
        for (int l = 0; l < k; ++l) {
          const std::complex<double> w = std::pow(omega, (j * l) % k);
          for (std::size_t r = 0; r < b.rows(); ++r) {
            for (std::size_t c = 0; c < b.cols(); ++c) {
              b(r, c) += w * d.slices[static_cast<std::size_t>(l)](r, c).get_d();
            }
          }
        }
        // Restore exact Hermitian symmetry lost to rounding.
        for (std::size_t r = 0; r < b.rows(); ++r) {
          b(r, r).imag(0);
          for (std::size_t c = r + 1; c < b.cols(); ++c) b(c, r) = std::conj(b(r, c));
        }
        d.approx_blocks.push_back(std::move(b));
      }
    }
  }
  return d;
}

Decomposition equitable_decomposition(const Graph& g, const Automorphism& phi,
                                      std::optional<std::vector<Vertex>> t0) {
  return equitable_decomposition(adjacency_rational(g), phi, std::move(t0));
}

std::vector<double> decomposition_spectrum(const Decomposition& d, double tol) {
  std::vector<double> all;
  for (const ComplexMatrix& b : d.complex_blocks()) {
    const Spectrum s = spectrum(b, tol);
    all.insert(all.end(), s.values.begin(), s.values.end());
  }
  std::sort(all.begin(), all.end(), std::greater<>());
  return all;
}

EcgNullReport verify_ecg_nullvectors(int q) {
  if (q < 0) throw InvalidArgument("ECG null vectors: q must be nonnegative");
  const int t = 6 * q + 1;
  const Graph g = extended_cube(t, t);
  const int n = g.order();
  const int r = n / 4;
  std::vector<Vertex> t0(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) t0[static_cast<std::size_t>(i)] = i;
  const Decomposition d = equitable_decomposition(g, rotation(g, r), t0);

  using G = GaussianRational;
  const G i = G::root();
  auto tile = [&](std::initializer_list<std::vector<G>> pieces, int repeat, std::vector<G> tail) {
    std::vector<G> out;
    for (int c = 0; c < repeat; ++c) {
      for (const auto& p : pieces) out.insert(out.end(), p.begin(), p.end());
    }
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
  };
  const std::vector<G> x0 = tile({{1, -2, 1}}, 2 * q, {1, -2, 1});
  const std::vector<G> x1_head{i, G(1) + i, 1};
  const std::vector<G> x1_hat{-1, G(-1) - i, -i};
  const std::vector<G> x1 = tile({x1_head, x1_hat}, q, x1_head);
  const std::vector<G> x2 = tile({{1, 0, -1}, {-1, 0, 1}}, q, {1, 0, -1});

  auto kills = [](const GaussianMatrix& b, const std::vector<G>& x) {
    const std::vector<G> y = b.apply(x);
    return std::all_of(y.begin(), y.end(), [](const G& v) { return v.is_zero(); });
  };
  EcgNullReport report;
  report.q = q;
  report.order = n;
  report.b0_kills_x0 = kills(d.blocks[0].gaussian(), x0);
  report.b1_kills_x1 = kills(d.blocks[1].gaussian(), x1);
  report.b2_kills_x2 = kills(d.blocks[2].gaussian(), x2);
  report.b3_is_b1_transpose = d.blocks[3].gaussian() == d.blocks[1].gaussian().transpose();
  return report;
}

}  // namespace forcelab
