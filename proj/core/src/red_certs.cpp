#include "forcelab/red_certs.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "forcelab/exact.hpp"

namespace forcelab {

std::vector<Vertex> RedCertificate::red_set() const {
  std::vector<Vertex> out;
  out.reserve(moves.size());
  for (const RedMove& m : moves) out.push_back(m.u);
  return out;
}

namespace {

void check_participants(const Graph& g, std::span<const Vertex> red, const RedMove& m) {
  std::vector<Vertex> involved{m.u, m.v};
  for (const auto* side : {&m.X, &m.Y}) {
    for (const auto& [x, count] : *side) {
      if (count == 0) throw InvalidArgument("red move: zero multiplicity for vertex " + std::to_string(x));
      if (count > kMaxMultiplicity) throw CapExceeded("red move: multiplicity above 10^6");
      involved.push_back(x);
    }
  }
  for (Vertex x : involved) {
    if (!g.contains(x)) throw InvalidArgument("red move: vertex " + std::to_string(x) + " out of range");
    if (std::find(red.begin(), red.end(), x) != red.end()) {
      throw InvalidArgument("red move: vertex " + std::to_string(x) + " is already red");
    }
  }
  if (m.u == m.v || m.X.contains(m.u) || m.Y.contains(m.u)) {
    throw InvalidArgument("red move: target " + std::to_string(m.u) + " appears among its own witnesses");
  }
}

bool row_equation_holds(const Graph& g, const RedMove& m) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<long long> rhs(n, 0);
  for (Vertex w : g.neighbors(m.v)) rhs[static_cast<std::size_t>(w)] += 1;
  for (const auto& [x, count] : m.X) {
    for (Vertex w : g.neighbors(x)) rhs[static_cast<std::size_t>(w)] += static_cast<long long>(count);
  }
  for (const auto& [y, count] : m.Y) {
    for (Vertex w : g.neighbors(y)) rhs[static_cast<std::size_t>(w)] -= static_cast<long long>(count);
  }
  const auto scale = static_cast<long long>(m.k) + 1;
  for (Vertex w : g.neighbors(m.u)) rhs[static_cast<std::size_t>(w)] -= scale;
  return std::all_of(rhs.begin(), rhs.end(), [](long long x) { return x == 0; });
}

std::uint64_t to_count(const Integer& x) {
  if (x > Integer(static_cast<unsigned long>(kMaxMultiplicity))) {
    throw CapExceeded("red certificate: multiplicity " + x.get_str() + " exceeds 10^6");
  }
  return x.get_ui();
}

}  // namespace

bool verify_red_move(const Graph& g, std::span<const Vertex> red_so_far, const RedMove& m) {
  if (m.k >= kMaxMultiplicity) throw CapExceeded("red move: k above 10^6");
  check_participants(g, red_so_far, m);
  return row_equation_holds(g, m);
}

std::vector<Vertex> apply_red_sequence(const Graph& g, const RedCertificate& cert) {
  std::vector<Vertex> red;
  for (std::size_t i = 0; i < cert.moves.size(); ++i) {
    bool ok = false;
    try {
      ok = verify_red_move(g, red, cert.moves[i]);
    } catch (const Error& e) {
      throw RedSequenceError(i, e.what());
    }
    if (!ok) throw RedSequenceError(i, "row equation fails");
    red.push_back(cert.moves[i].u);
  }
  return red;
}

std::size_t graph_nullity(const Graph& g) { return adjacency_nullity(g); }

RedDerivation derive_red_certificates(const Graph& g) {
  RedDerivation out;
  const int n = g.order();
  const RationalMatrix a = adjacency_rational(g);
  const std::vector<std::size_t> basis = independent_rows(a);
  std::vector<bool> in_basis(static_cast<std::size_t>(n), false);
  for (std::size_t r : basis) in_basis[r] = true;
  std::vector<std::size_t> others;
  for (std::size_t r = 0; r < static_cast<std::size_t>(n); ++r) {
    if (!in_basis[r]) others.push_back(r);
  }
  if (others.empty()) return out;

  const std::vector<std::size_t> all_cols = [&] {
    std::vector<std::size_t> c(static_cast<std::size_t>(n));
    std::iota(c.begin(), c.end(), 0);
    return c;
  }();
  const RationalMatrix w = a.select(basis, all_cols);
  const RationalMatrix targets = a.select(others, all_cols);
  const std::vector<RationalVector> coeffs = express_in_row_basis(w, targets);

  for (std::size_t t = 0; t < others.size(); ++t) {
    const auto u = static_cast<Vertex>(others[t]);
    Integer d = 1;
    for (const Rational& c : coeffs[t]) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> scaled;
    for (const Rational& c : coeffs[t]) scaled.push_back(c.get_num() * (d / c.get_den()));
    const auto lead = std::find_if(scaled.begin(), scaled.end(), [](const Integer& x) { return sgn(x) > 0; });

    RedMove m;
    m.u = u;
    if (lead == scaled.end()) {
      // Only a zero row has no positive coefficient; pair it with a white vertex.
      Vertex partner = -1;
      if (!basis.empty()) {
        partner = static_cast<Vertex>(basis.front());
      } else if (t + 1 < others.size()) {
        partner = static_cast<Vertex>(others[t + 1]);
      }
      if (partner < 0) {
        out.unrepresentable.push_back(u);
        continue;
      }
      m.v = partner;
      m.Y[partner] = 1;
      m.k = 0;
      out.certificate.moves.push_back(std::move(m));
      continue;
    }
    const auto lead_index = static_cast<std::size_t>(lead - scaled.begin());
    m.v = static_cast<Vertex>(basis[lead_index]);
    for (std::size_t i = 0; i < scaled.size(); ++i) {
      const auto x = static_cast<Vertex>(basis[i]);
      const int sign = sgn(scaled[i]);
      if (sign > 0) {
        const Integer copies = i == lead_index ? Integer(scaled[i] - 1) : scaled[i];
        if (sgn(copies) > 0) m.X[x] = to_count(copies);
      } else if (sign < 0) {
        m.Y[x] = to_count(Integer(-scaled[i]));
      }
    }
    m.k = to_count(Integer(d - 1));
    out.certificate.moves.push_back(std::move(m));
  }
  return out;
}

DoublingBound bipartite_doubling_bound(const Graph& g, std::span<const Vertex> side,
                                       const RedCertificate& cert) {
  const int n = g.order();
  std::vector<bool> in_side(static_cast<std::size_t>(n), false);
  for (Vertex v : side) {
    if (!g.contains(v)) throw InvalidArgument("doubling bound: vertex out of range");
    if (in_side[static_cast<std::size_t>(v)]) throw InvalidArgument("doubling bound: repeated side vertex");
    in_side[static_cast<std::size_t>(v)] = true;
  }
  if (2 * side.size() != static_cast<std::size_t>(n)) {
    throw InvalidArgument("doubling bound: parts have unequal size");
  }
  for (const Edge& e : g.edges()) {
    if (in_side[static_cast<std::size_t>(e.u)] == in_side[static_cast<std::size_t>(e.v)]) {
      throw InvalidArgument("doubling bound: side is not a part of a bipartition (edge " +
                            std::to_string(e.u) + "-" + std::to_string(e.v) + ")");
    }
  }
  auto inside = [&](Vertex x) { return g.contains(x) && in_side[static_cast<std::size_t>(x)]; };
  for (std::size_t i = 0; i < cert.moves.size(); ++i) {
    const RedMove& m = cert.moves[i];
    bool ok = inside(m.u) && inside(m.v);
    for (const auto& [x, c] : m.X) ok = ok && inside(x);
    for (const auto& [y, c] : m.Y) ok = ok && inside(y);
    if (!ok) throw InvalidArgument("doubling bound: move " + std::to_string(i) + " leaves the side");
  }
  const std::vector<Vertex> red = apply_red_sequence(g, cert);
  return {2 * red.size(), graph_nullity(g)};
}

std::vector<Vertex> aztec_diagonal_side(int r) {
  std::vector<Vertex> side;
  for (int l = 0; l < r; ++l) {
    for (int i = 1; i <= r + 1; ++i) side.push_back(aztec_vertex(r, i + l, r + 2 + l - i));
  }
  std::sort(side.begin(), side.end());
  return side;
}

RedCertificate aztec_diagonal_certificate(int r) {
  RedCertificate cert;
  for (int l = 0; l < r; ++l) {
    std::vector<Vertex> diag;
    for (int i = 1; i <= r + 1; ++i) diag.push_back(aztec_vertex(r, i + l, r + 2 + l - i));
    RedMove m;
    m.u = diag[static_cast<std::size_t>(r)];
    m.v = diag[static_cast<std::size_t>(r - 1)];
    for (int i = 0; i < r - 1; ++i) {
      auto& target = (r - 1 - i) % 2 == 0 ? m.X : m.Y;
      target[diag[static_cast<std::size_t>(i)]] = 1;
    }
    cert.moves.push_back(std::move(m));
  }
  return cert;
}

RedCertificate circulant_half_step_certificate(int n) {
  if (n < 8 || n % 8 != 0) throw InvalidArgument("half-step certificate needs 8 | n");
  const int h = n / 2;
  RedCertificate cert;
  for (int u = 0; u <= h - 2; u += 2) cert.moves.push_back(RedMove{u, u + h, {}, {}, 0});
  RedMove last{h, h + 2, {}, {}, 0};
  for (int i = (h + 2) / 2 + 1; 2 * i <= n - 1; ++i) {
    (i % 2 == 1 ? last.X : last.Y)[2 * i] = 1;
  }
  cert.moves.push_back(std::move(last));
  return cert;
}

}  // namespace forcelab
