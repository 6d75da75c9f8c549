#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "forcelab/graph.hpp"
#include "forcelab/structure.hpp"
#include "forcelab/zero_forcing.hpp"

namespace forcelab {

inline const std::vector<std::uint32_t> kDefaultPrimes{2, 3, 5, 7, 11};
inline const std::vector<long> kDefaultLambdas{-2, -1, 0, 1, 2};

struct CertifyOptions {
  ZfOptions zf;
  /// Start the Z search at null(A - lambda I), which never exceeds Z.
  bool nullity_lower_bound = true;
  /// A forcing set known for the family. When its size meets the nullity the
  /// search is skipped, which is how graphs above the search cap get an exact Z.
  std::optional<std::vector<Vertex>> known_zfs;
};

struct CertifyVerdict {
  std::string graph_id;
  long lambda = 0;
  int z_number = 0;
  bool z_exact = false;
  std::string z_method;
  std::size_t nullity_q = 0;
  std::map<std::uint32_t, std::size_t> nullities_mod_p;
  bool certified = false;
  std::string reason;
  std::vector<std::string> claims;
};

/// Z(G) against the nullity of A(G) - lambda I over Q and each GF(p).
/// Throws CapExceeded when Z cannot be pinned down.
CertifyVerdict certify_universal_optimality(const Graph& g, long lambda,
                                            std::span<const std::uint32_t> primes,
                                            const CertifyOptions& options = {},
                                            std::string graph_id = "");

struct Gf2MinRank {
  int min_rank = 0;
  /// Diagonal attaining min_rank.
  std::vector<int> diagonal;
  std::uint64_t diagonals_examined = 0;
  std::optional<int> target;
  bool target_attained = false;
  std::optional<std::vector<int>> target_diagonal;
};

inline constexpr int kGf2Cap = 24;

/// Minimum rank over S(GF(2), G) by trying all 2^n diagonals.
Gf2MinRank min_rank_gf2_exhaustive(const Graph& g, std::optional<int> target = std::nullopt);

struct ParameterReport {
  int n = 0;
  int min_degree = 0;
  KappaWitness kappa;
  std::map<long, std::size_t> nullity_q;
  /// prime -> lambda -> nullity.
  std::map<std::uint32_t, std::map<long, std::size_t>> nullity_mod_p;
  std::optional<ZfResult> z;
  std::optional<SapReport> sap;
  int m_lower_bound = 0;
  std::string m_lower_bound_source;
  bool chain_consistent = false;
  std::vector<std::string> unavailable;
};

struct ReportOptions {
  ZfOptions zf;
  /// Skip the SAP system above this order.
  int sap_cap = 40;
};

ParameterReport parameter_report(const Graph& g, std::span<const long> lambdas = kDefaultLambdas,
                                 std::span<const std::uint32_t> primes = kDefaultPrimes,
                                 const ReportOptions& options = {});

enum class ConjectureFamily { CircL, EcgTr };

struct HarnessRange {
  int lo = 0;
  int hi = 0;
  /// circ_l: k runs over 1..inner_max. ecg_tr: the t values to scan.
  int inner_max = 1;
  std::vector<int> t_values;
};

struct HarnessRow {
  std::string instance;
  int n = 0;
  std::size_t nullity_q = 0;
  std::map<std::uint32_t, std::size_t> nullity_mod_p;
  int expected = 0;
  std::optional<int> z;
  bool z_exact = false;
  std::string z_method;
  bool skipped = false;
  std::string note;
  bool pass = false;
};

/// Instance table for Circ[(l^2-1)k, {1,l}] with odd l (expected 2l) or ECG(t, 6r-t-4)
/// (expected 4). Rows above the caps are marked skipped.
std::vector<HarnessRow> conjecture_harness(ConjectureFamily family, const HarnessRange& range,
                                           std::span<const std::uint32_t> primes = kDefaultPrimes,
                                           const ZfOptions& zf = {}, int max_order = 200);

}  // namespace forcelab
