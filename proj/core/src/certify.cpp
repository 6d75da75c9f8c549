#include "forcelab/certify.hpp"

#include <algorithm>
#include <bit>

#include "forcelab/error.hpp"
#include "forcelab/exact.hpp"

namespace forcelab {

namespace {

struct ZfOutcome {
  int value = 0;
  bool exact = false;
  std::string method;
};

// Z(G) given a proven lower bound `lower` (a nullity) and an optional known set.
ZfOutcome pin_zero_forcing(const Graph& g, int lower, const std::optional<std::vector<Vertex>>& known,
                           const ZfOptions& base, bool use_lower) {
  if (known) {
    if (!is_zfs(g, *known)) throw InvalidArgument("supplied forcing set does not force the graph");
    if (static_cast<int>(known->size()) == lower) {
      return {lower, true, "construction set meets the nullity bound"};
    }
  }
  ZfOptions opts = base;
  if (use_lower) {
    opts.size_hint = lower;
    opts.assert_lower_bound = true;
  }
  const ZfResult r = zero_forcing_number(g, opts);
  if (r.is_exact) {
    return {r.zf_number, true, use_lower ? "search from the nullity bound" : "exhaustive search"};
  }
  int upper = r.upper_bound;
  if (known) upper = std::min(upper, static_cast<int>(known->size()));
  return {upper, false, "upper bound only"};
}

std::string lambda_text(long lambda) {
  if (lambda == 0) return "A(G)";
  return lambda > 0 ? "A(G) - " + std::to_string(lambda) + "I" : "A(G) + " + std::to_string(-lambda) + "I";
}

}  // namespace

CertifyVerdict certify_universal_optimality(const Graph& g, long lambda,
                                            std::span<const std::uint32_t> primes,
                                            const CertifyOptions& options, std::string graph_id) {
  if (primes.empty()) throw InvalidArgument("certify: prime list is empty");
  CertifyVerdict v;
  v.graph_id = std::move(graph_id);
  v.lambda = lambda;
  const RationalMatrix a = adjacency_rational(g, lambda);
  v.nullity_q = rank_nullity(a).nullity;
  for (std::uint32_t p : primes) {
    const PrimeField f(p);
    v.nullities_mod_p[p] = rank_nullity(reduce_mod(a, f), f).nullity;
  }
  const ZfOutcome z = pin_zero_forcing(g, static_cast<int>(v.nullity_q), options.known_zfs, options.zf,
                                       options.nullity_lower_bound);
  if (!z.exact) {
    throw CapExceeded("certify: Z(G) not determined within the search cap (upper bound " +
                      std::to_string(z.value) + ")");
  }
  v.z_number = z.value;
  v.z_exact = true;
  v.z_method = z.method;

  const auto z_count = static_cast<std::size_t>(v.z_number);
  if (v.nullity_q != z_count) {
    v.reason = "null(" + lambda_text(lambda) + ") = " + std::to_string(v.nullity_q) + " < Z(G) = " +
               std::to_string(v.z_number) + "; inconclusive";
    return v;
  }
  for (const auto& [p, nul] : v.nullities_mod_p) {
    if (nul != z_count) {
      v.reason = "nullity over GF(" + std::to_string(p) + ") is " + std::to_string(nul) +
                 ", not Z(G); inconclusive for this prime set";
      return v;
    }
  }
  v.certified = true;
  const std::string value = std::to_string(v.z_number);
  v.claims.push_back("null(" + lambda_text(lambda) + ") = Z(G) = " + value + " over Q");
  v.claims.push_back("M(F,G) = Z(G) = " + value + " for every field F");
  v.claims.push_back("minimum rank " + std::to_string(g.order() - v.z_number) + " is field independent");
  v.claims.push_back(lambda_text(lambda) + " is universally optimal");
  return v;
}

Gf2MinRank min_rank_gf2_exhaustive(const Graph& g, std::optional<int> target) {
  const int n = g.order();
  if (n > kGf2Cap) throw CapExceeded("GF(2) exhaustive minimum rank is limited to 24 vertices");
  std::vector<std::uint32_t> base(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) base[static_cast<std::size_t>(v)] |= std::uint32_t{1} << w;
  }
  auto rank_of = [&](std::uint32_t diag) {
    std::vector<std::uint32_t> rows = base;
    for (int v = 0; v < n; ++v) {
      if (diag >> v & 1U) rows[static_cast<std::size_t>(v)] |= std::uint32_t{1} << v;
    }
    int rank = 0;
    for (int bit = 0; bit < n; ++bit) {
      const std::uint32_t mask = std::uint32_t{1} << bit;
      auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](std::uint32_t r) { return (r & mask) != 0; });
      if (pivot == rows.end()) continue;
      std::iter_swap(rows.begin() + rank, pivot);
      for (auto it = rows.begin() + rank + 1; it != rows.end(); ++it) {
        if (*it & mask) *it ^= rows[static_cast<std::size_t>(rank)];
      }
      ++rank;
    }
    return rank;
  };
  auto unpack = [n](std::uint32_t diag) {
    std::vector<int> d(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) d[static_cast<std::size_t>(v)] = static_cast<int>(diag >> v & 1U);
    return d;
  };
  Gf2MinRank out;
  out.target = target;
  out.min_rank = n;
  std::uint32_t best = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t diag = 0; diag < total; ++diag) {
    const int r = rank_of(static_cast<std::uint32_t>(diag));
    ++out.diagonals_examined;
    if (diag == 0 || r < out.min_rank) {
      best = static_cast<std::uint32_t>(diag);
      out.min_rank = r;
    }
    if (target && r == *target && !out.target_attained) {
      out.target_attained = true;
      out.target_diagonal = unpack(static_cast<std::uint32_t>(diag));
    }
  }
  out.diagonal = unpack(best);
  return out;
}

ParameterReport parameter_report(const Graph& g, std::span<const long> lambdas,
                                 std::span<const std::uint32_t> primes, const ReportOptions& options) {
  ParameterReport r;
  r.n = g.order();
  r.min_degree = min_degree(g);
  r.kappa = vertex_connectivity(g);
  r.m_lower_bound = r.kappa.kappa;
  r.m_lower_bound_source = "kappa";
  for (long lambda : lambdas) {
    const RationalMatrix a = adjacency_rational(g, lambda);
    const std::size_t nul = rank_nullity(a).nullity;
    r.nullity_q[lambda] = nul;
    if (static_cast<int>(nul) > r.m_lower_bound) {
      r.m_lower_bound = static_cast<int>(nul);
      r.m_lower_bound_source = "null(" + lambda_text(lambda) + ")";
    }
    for (std::uint32_t p : primes) {
      const PrimeField f(p);
      r.nullity_mod_p[p][lambda] = rank_nullity(reduce_mod(a, f), f).nullity;
    }
  }
  if (g.order() <= options.zf.cap) {
    ZfOptions opts = options.zf;
    opts.size_hint = r.m_lower_bound;
    opts.assert_lower_bound = true;
    r.z = zero_forcing_number(g, opts);
  } else {
    r.unavailable.push_back("Z: order above the search cap");
  }
  if (g.order() <= options.sap_cap) {
    r.sap = has_sap(adjacency_rational(g), g);
  } else {
    r.unavailable.push_back("SAP: order above the SAP cap");
  }
  r.chain_consistent = true;
  if (r.z && r.z->is_exact) {
    const int z = r.z->zf_number;
    r.chain_consistent = r.kappa.kappa <= z && r.min_degree <= z && r.m_lower_bound <= z;
  }
  return r;
}

// ---------------------------------------------------------------------------

namespace {

HarnessRow evaluate_row(const Graph& g, std::string instance, int expected,
                        const std::vector<Vertex>& construction, std::span<const std::uint32_t> primes,
                        const ZfOptions& zf) {
  HarnessRow row;
  row.instance = std::move(instance);
  row.n = g.order();
  row.expected = expected;
  const RationalMatrix a = adjacency_rational(g);
  row.nullity_q = rank_nullity(a).nullity;
  for (std::uint32_t p : primes) {
    const PrimeField f(p);
    row.nullity_mod_p[p] = rank_nullity(reduce_mod(a, f), f).nullity;
  }
  const ZfOutcome z = pin_zero_forcing(g, static_cast<int>(row.nullity_q), construction, zf, true);
  row.z = z.value;
  row.z_exact = z.exact;
  row.z_method = z.method;
  const auto want = static_cast<std::size_t>(expected);
  row.pass = z.exact && z.value == expected && row.nullity_q == want &&
             std::all_of(row.nullity_mod_p.begin(), row.nullity_mod_p.end(),
                         [&](const auto& kv) { return kv.second == want; });
  if (!z.exact) row.note = "Z bounded above only";
  return row;
}

}  // namespace

std::vector<HarnessRow> conjecture_harness(ConjectureFamily family, const HarnessRange& range,
                                           std::span<const std::uint32_t> primes, const ZfOptions& zf,
                                           int max_order) {
  std::vector<HarnessRow> rows;
  auto skipped = [&](std::string instance, int n, int expected) {
    HarnessRow row;
    row.instance = std::move(instance);
    row.n = n;
    row.expected = expected;
    row.skipped = true;
    row.note = "order above the harness cap";
    rows.push_back(std::move(row));
  };
  if (family == ConjectureFamily::CircL) {
    // The family is conjectured for odd l only.
    for (int l = std::max(range.lo, 3) | 1; l <= range.hi; l += 2) {
      for (int k = 1; k <= range.inner_max; ++k) {
        const int n = (l * l - 1) * k;
        const std::string name = "Circ[" + std::to_string(n) + ",{1," + std::to_string(l) + "}]";
        if (n > max_order) {
          skipped(name, n, 2 * l);
          continue;
        }
        const family::Circulant f{n, {1, l}};
        rows.push_back(evaluate_row(family_graph(f), name, 2 * l, construction_zfs(f), primes, zf));
      }
    }
  } else {
    for (int t : range.t_values) {
      for (int r = std::max(range.lo, 1); r <= range.hi; ++r) {
        const int k = 6 * r - t - 4;
        if (k < 0) continue;
        const std::string name = "ECG(" + std::to_string(t) + "," + std::to_string(k) + ")";
        const int n = 8 + 2 * (t + k);
        if (n > max_order) {
          skipped(name, n, 4);
          continue;
        }
        const family::ExtendedCube f{t, k};
        rows.push_back(evaluate_row(family_graph(f), name, 4, construction_zfs(f), primes, zf));
      }
    }
  }
  return rows;
}

}  // namespace forcelab
