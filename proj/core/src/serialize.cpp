#include "forcelab/serialize.hpp"

#include <charconv>

#include <json.hpp>

#include "forcelab/error.hpp"

namespace forcelab {

namespace {

using nlohmann::json;

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

int to_int(std::string_view token, const char* what) {
  int value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end) {
    throw ParseError(std::string(what) + ": bad integer \"" + std::string(token) + "\"");
  }
  return value;
}

Multiset read_multiset(const json& j) {
  Multiset out;
  if (j.is_null()) return out;
  if (!j.is_object()) throw ParseError("certificate: X and Y must be objects");
  for (const auto& [key, count] : j.items()) {
    if (!count.is_number_unsigned()) throw ParseError("certificate: counts must be nonnegative integers");
    const auto c = count.get<std::uint64_t>();
    if (c > 0) out[to_int(key, "certificate")] = c;
  }
  return out;
}

json write_multiset(const Multiset& m) {
  json out = json::object();
  for (const auto& [v, c] : m) out[std::to_string(v)] = c;
  return out;
}

std::vector<Vertex> split_ints(std::string_view text, char sep, const char* what) {
  std::vector<Vertex> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t stop = text.find(sep, start);
    out.push_back(to_int(text.substr(start, stop - start), what));
    if (stop == std::string_view::npos) break;
    start = stop + 1;
  }
  return out;
}

}  // namespace

RedCertificate read_certificate_json(std::string_view text) {
  const json j = parse_json(text, "certificate");
  if (!j.is_array()) throw ParseError("certificate: expected an array of moves");
  RedCertificate cert;
  try {
    for (const json& m : j) {
      RedMove move;
      move.u = m.at("u").get<Vertex>();
      move.v = m.at("v").get<Vertex>();
      move.X = read_multiset(m.value("X", json()));
      move.Y = read_multiset(m.value("Y", json()));
      move.k = m.value("k", std::uint64_t{0});
      cert.moves.push_back(std::move(move));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
  return cert;
}

std::string write_certificate_json(const RedCertificate& cert) {
  json out = json::array();
  for (const RedMove& m : cert.moves) {
    out.push_back({{"u", m.u}, {"v", m.v}, {"X", write_multiset(m.X)}, {"Y", write_multiset(m.Y)}, {"k", m.k}});
  }
  return out.dump();
}

Partition read_partition_json(std::string_view text) {
  const json j = parse_json(text, "partition");
  Partition p;
  try {
    for (const json& block : j) p.blocks.push_back(block.get<std::vector<Vertex>>());
  } catch (const json::exception& e) {
    throw ParseError(std::string("partition: ") + e.what());
  }
  return p;
}

std::string write_partition_json(const Partition& p) { return json(p.blocks).dump(); }

Graph parse_graph_spec(std::string_view spec) {
  if (const std::size_t star = spec.find('*'); star != std::string_view::npos) {
    return cartesian_product(parse_graph_spec(spec.substr(0, star)), parse_graph_spec(spec.substr(star + 1)));
  }
  const std::size_t colon = spec.find(':');
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view rest = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  std::vector<std::string_view> fields;
  for (std::size_t start = 0; !rest.empty();) {
    const std::size_t stop = rest.find(':', start);
    fields.push_back(rest.substr(start, stop - start));
    if (stop == std::string_view::npos) break;
    start = stop + 1;
  }
  auto need = [&](std::size_t count) {
    if (fields.size() != count) {
      throw ParseError("graph spec \"" + std::string(spec) + "\": expected " + std::to_string(count) + " fields");
    }
  };
  auto num = [&](std::size_t i) { return to_int(fields[i], "graph spec"); };
  if (kind == "circulant") {
    need(2);
    return circulant(num(0), split_ints(fields[1], ',', "graph spec"));
  }
  if (kind == "aztec") {
    need(1);
    return aztec_diamond(num(0));
  }
  if (kind == "ecg") {
    need(2);
    return extended_cube(num(0), num(1));
  }
  if (kind == "petersen") {
    need(2);
    return generalized_petersen(num(0), num(1));
  }
  if (kind == "path") {
    need(1);
    return path_graph(num(0));
  }
  if (kind == "cycle") {
    need(1);
    return cycle_graph(num(0));
  }
  if (kind == "complete") {
    need(1);
    return complete_graph(num(0));
  }
  if (kind == "kbip") {
    need(2);
    return complete_bipartite(num(0), num(1));
  }
  if (kind == "empty") {
    need(1);
    return empty_graph(num(0));
  }
  throw ParseError("unknown graph family \"" + std::string(kind) + "\"");
}

std::vector<Vertex> parse_permutation(std::string_view text) { return split_ints(text, ':', "permutation"); }

std::vector<Vertex> parse_vertex_list(std::string_view text) { return split_ints(text, ',', "vertex list"); }

}  // namespace forcelab
