#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "forcelab/equitable.hpp"
#include "forcelab/red_certs.hpp"

namespace forcelab {

/// [{"u": 3, "v": 1, "X": {"4": 1}, "Y": {"0": 1}, "k": 0}, ...]
RedCertificate read_certificate_json(std::string_view text);
std::string write_certificate_json(const RedCertificate& cert);

/// [[0, 2], [1], ...]
Partition read_partition_json(std::string_view text);
std::string write_partition_json(const Partition& p);

/// Colon-separated images "p0:p1:...:p(n-1)".
std::vector<Vertex> parse_permutation(std::string_view text);

/// Family shorthand used on the command line:
///   circulant:N:s1,s2  aztec:R  ecg:T:K  petersen:N:K  path:N  cycle:N
///   complete:N  kbip:A:B  empty:N, and G*H for the Cartesian product.
Graph parse_graph_spec(std::string_view spec);

/// Comma-separated vertices "0,1,2"; empty text gives the empty set.
std::vector<Vertex> parse_vertex_list(std::string_view text);

}  // namespace forcelab
