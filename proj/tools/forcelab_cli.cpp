// forcelab command-line front end. Every subcommand prints a JSON document;
// --table appends an aligned text summary.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "forcelab/certify.hpp"
#include "forcelab/equitable.hpp"
#include "forcelab/error.hpp"
#include "forcelab/exact.hpp"
#include "forcelab/red_certs.hpp"
#include "forcelab/serialize.hpp"
#include "forcelab/spectrum.hpp"
#include "forcelab/structure.hpp"
#include "forcelab/zero_forcing.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace forcelab;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A path to an existing file is read; anything else is taken literally.
std::string file_or_inline(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return slurp(arg);
  return arg;
}

Graph load_graph(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return read_graph(slurp(arg));
  return parse_graph_spec(arg);
}

std::vector<std::uint32_t> parse_primes(const std::string& text) {
  std::vector<std::uint32_t> out;
  for (Vertex p : parse_vertex_list(text)) {
    if (p < 2) throw InvalidArgument("primes must be at least 2");
    out.push_back(static_cast<std::uint32_t>(p));
  }
  return out;
}

json forces_json(const std::vector<Force>& forces) {
  json out = json::array();
  for (const Force& f : forces) out.push_back({f.forcer, f.forced});
  return out;
}

json rational_matrix_json(const RationalMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (const Rational& x : m.row(r)) row.push_back(to_string(x));
    out.push_back(std::move(row));
  }
  return out;
}

json prime_map_json(const std::map<std::uint32_t, std::size_t>& m) {
  json out = json::object();
  for (const auto& [p, v] : m) out[std::to_string(p)] = v;
  return out;
}

struct Output {
  json doc;
  bool ok = true;
  std::vector<std::pair<std::string, std::string>> table;
};

void table_row(Output& out, std::string key, const json& value) {
  out.table.emplace_back(std::move(key), value.is_string() ? value.get<std::string>() : value.dump());
}

void print(const Output& out, bool table) {
  std::cout << out.doc.dump(2) << '\n';
  if (!table) return;
  std::size_t width = 0;
  for (const auto& [k, v] : out.table) width = std::max(width, k.size());
  for (const auto& [k, v] : out.table) std::cout << std::left << std::setw(static_cast<int>(width) + 2) << k << v << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"forcelab: zero forcing, exact nullity and minimum rank certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  bool table = false;
  app.add_flag("--table", table, "Also print an aligned text summary");

  std::string graph_arg;
  auto add_graph = [&](CLI::App* cmd) {
    cmd->add_option("--graph", graph_arg, "Edge list / JSON file, or a family spec such as circulant:8:1,3")
        ->required();
  };

  // gen
  std::string gen_format = "edges";
  auto* gen = app.add_subcommand("gen", "Print a graph in edge-list or JSON form");
  add_graph(gen);
  gen->add_option("--format", gen_format)->check(CLI::IsMember({"edges", "json"}));

  // zf
  auto* zf = app.add_subcommand("zf", "Zero forcing");
  zf->require_subcommand(1);
  zf->fallthrough();
  std::string set_arg;
  auto* zf_closure_cmd = zf->add_subcommand("closure", "Closure of a blue set");
  add_graph(zf_closure_cmd);
  zf_closure_cmd->add_option("--set", set_arg, "Comma-separated vertices")->required();
  ZfOptions zf_opts;
  int hint = -1;
  bool assert_bound = false;
  auto* zf_number_cmd = zf->add_subcommand("number", "Exact zero forcing number");
  add_graph(zf_number_cmd);
  zf_number_cmd->add_option("--hint", hint, "First set size to try");
  zf_number_cmd->add_flag("--assert-bound", assert_bound, "Treat the hint as a proven lower bound");
  zf_number_cmd->add_option("--cap", zf_opts.cap, "Largest order searched exactly");
  zf_number_cmd->add_option("--workers", zf_opts.workers, "Search threads");

  // red
  auto* red = app.add_subcommand("red", "Red color change certificates");
  red->require_subcommand(1);
  red->fallthrough();
  std::string cert_arg;
  auto* red_verify = red->add_subcommand("verify", "Replay a certificate");
  add_graph(red_verify);
  red_verify->add_option("--cert", cert_arg, "Certificate JSON file or literal")->required();
  auto* red_derive = red->add_subcommand("derive", "Certificate from the nullspace of A(G)");
  add_graph(red_derive);

  // kappa, sap
  auto* kappa = app.add_subcommand("kappa", "Vertex connectivity");
  add_graph(kappa);
  std::string matrix_arg;
  auto* sap = app.add_subcommand("sap", "Strong Arnold Property");
  add_graph(sap);
  sap->add_option("--matrix", matrix_arg, "Matrix text file (default A(G))");

  // equitable, decompose
  auto* eq = app.add_subcommand("equitable", "Equitable partitions");
  eq->require_subcommand(1);
  eq->fallthrough();
  std::string partition_arg;
  auto* eq_refine = eq->add_subcommand("refine", "Coarsest equitable refinement");
  add_graph(eq_refine);
  eq_refine->add_option("--partition", partition_arg, "Initial partition (default: one block)");
  auto* eq_divisor = eq->add_subcommand("divisor", "Divisor matrix of a partition");
  add_graph(eq_divisor);
  eq_divisor->add_option("--partition", partition_arg, "Partition JSON file or literal")->required();
  std::string perm_arg;
  int shift = 0;
  std::string t0_arg;
  auto* decompose = app.add_subcommand("decompose", "Equitable decomposition by a uniform automorphism");
  add_graph(decompose);
  auto* perm_opt = decompose->add_option("--perm", perm_arg, "Images p0:p1:...");
  decompose->add_option("--shift", shift, "Use x -> x + shift (mod n)")->excludes(perm_opt);
  decompose->add_option("--t0", t0_arg, "Transversal, comma-separated");

  // certify, mr2, report, conjecture
  long lambda = 0;
  std::string primes_arg = "2,3,5,7,11";
  auto* certify = app.add_subcommand("certify", "Universal optimality of A(G) - lambda I");
  add_graph(certify);
  certify->add_option("--lambda", lambda);
  certify->add_option("--primes", primes_arg);
  certify->add_option("--cap", zf_opts.cap, "Largest order searched exactly");
  std::string known_arg;
  certify->add_option("--known-zfs", known_arg, "A forcing set to use as an upper bound");
  int target = -1;
  auto* mr2 = app.add_subcommand("mr2", "Exhaustive minimum rank over GF(2)");
  add_graph(mr2);
  mr2->add_option("--target", target, "Also report whether this rank is attained");
  auto* report = app.add_subcommand("report", "Parameter report");
  add_graph(report);
  report->add_option("--primes", primes_arg);
  std::string family_arg;
  int lmin = 3;
  int lmax = 5;
  int kmax = 2;
  std::string t_arg = "0,1,2";
  int rmin = 1;
  int rmax = 2;
  int max_order = 200;
  auto* conj = app.add_subcommand("conjecture", "Instance table for a conjectured family");
  conj->add_option("--family", family_arg)->required()->check(CLI::IsMember({"circ_l", "ecg_tr"}));
  conj->add_option("--lmin", lmin);
  conj->add_option("--lmax", lmax);
  conj->add_option("--kmax", kmax);
  conj->add_option("--t", t_arg, "t values for ecg_tr");
  conj->add_option("--rmin", rmin);
  conj->add_option("--rmax", rmax);
  conj->add_option("--max-order", max_order);
  conj->add_option("--primes", primes_arg);

  CLI11_PARSE(app, argc, argv);

  Output out;
  try {
    if (gen->parsed()) {
      const Graph g = load_graph(graph_arg);
      std::cout << (gen_format == "json" ? write_graph_json(g) + "\n" : write_edge_list(g));
      return 0;
    }
    if (zf_closure_cmd->parsed()) {
      const Graph g = load_graph(graph_arg);
      const Coloring c = zf_closure(g, parse_vertex_list(set_arg));
      out.ok = c.all_blue();
      out.doc = {{"all_blue", c.all_blue()}, {"blue", c.blue_set()}, {"forces", forces_json(c.log)}};
      table_row(out, "all_blue", c.all_blue());
      table_row(out, "blue", c.blue_set().size());
    } else if (zf_number_cmd->parsed()) {
      const Graph g = load_graph(graph_arg);
      if (hint >= 0) zf_opts.size_hint = hint;
      zf_opts.assert_lower_bound = assert_bound;
      const ZfResult r = zero_forcing_number(g, zf_opts);
      out.ok = r.is_exact;
      out.doc = {{"zf_number", r.zf_number},
                 {"is_exact", r.is_exact},
                 {"lower_bound", r.lower_bound},
                 {"upper_bound", r.upper_bound},
                 {"witness", r.witness},
                 {"forces", forces_json(r.forces)},
                 {"stats", {{"subsets_examined", r.stats.subsets_examined}, {"seconds", r.stats.seconds}}}};
      table_row(out, "zf_number", r.zf_number);
      table_row(out, "is_exact", r.is_exact);
      table_row(out, "subsets", r.stats.subsets_examined);
    } else if (red_verify->parsed()) {
      const Graph g = load_graph(graph_arg);
      const RedCertificate cert = read_certificate_json(file_or_inline(cert_arg));
      try {
        const std::vector<Vertex> red_set = apply_red_sequence(g, cert);
        out.doc = {{"valid", true}, {"red_set", red_set}};
      } catch (const RedSequenceError& e) {
        out.ok = false;
        out.doc = {{"valid", false}, {"failing_index", e.index()}, {"error", e.what()}};
      }
      table_row(out, "valid", out.ok);
    } else if (red_derive->parsed()) {
      const Graph g = load_graph(graph_arg);
      const RedDerivation d = derive_red_certificates(g);
      const std::size_t nullity = graph_nullity(g);
      out.ok = d.nullity() == nullity;
      out.doc = {{"nullity", nullity},
                 {"certificate", json::parse(write_certificate_json(d.certificate))},
                 {"unrepresentable", d.unrepresentable}};
      table_row(out, "nullity", nullity);
      table_row(out, "moves", d.certificate.moves.size());
    } else if (kappa->parsed()) {
      const Graph g = load_graph(graph_arg);
      const KappaWitness k = vertex_connectivity(g);
      out.doc = {{"kappa", k.kappa}, {"separator", k.separator}, {"min_degree", min_degree(g)}};
      if (const auto& info = g.circulant_info()) {
        const KappaDeficiency d = circulant_kappa_deficient(info->n, info->connections);
        out.doc["circulant_deficient"] = d.deficient;
        out.doc["witness_divisor"] = d.divisor ? json(*d.divisor) : json();
        out.ok = d.deficient == (k.kappa < min_degree(g));
      }
      table_row(out, "kappa", k.kappa);
      table_row(out, "min_degree", min_degree(g));
    } else if (sap->parsed()) {
      const Graph g = load_graph(graph_arg);
      const RationalMatrix a =
          matrix_arg.empty() ? adjacency_rational(g) : ExactMatrix::parse(file_or_inline(matrix_arg)).rational();
      const SapReport r = has_sap(a, g);
      out.ok = r.has_sap;
      out.doc = {{"has_sap", r.has_sap}, {"violation_dim", r.violation_dim}, {"nullity", rank_nullity(a).nullity}};
      if (r.sample_violation) out.doc["sample_violation"] = rational_matrix_json(*r.sample_violation);
      table_row(out, "has_sap", r.has_sap);
      table_row(out, "violation_dim", r.violation_dim);
    } else if (eq_refine->parsed()) {
      const Graph g = load_graph(graph_arg);
      const Partition init =
          partition_arg.empty() ? unit_partition(g.order()) : read_partition_json(file_or_inline(partition_arg));
      const Partition p = coarsest_equitable(g, init);
      out.doc = {{"blocks", p.blocks}, {"divisor_matrix", rational_matrix_json(divisor_matrix(g, p))}};
      table_row(out, "blocks", p.blocks.size());
    } else if (eq_divisor->parsed()) {
      const Graph g = load_graph(graph_arg);
      const Partition p = read_partition_json(file_or_inline(partition_arg));
      const EquitableCheck c = is_equitable(g, p);
      out.ok = c.equitable;
      out.doc = {{"equitable", c.equitable}};
      if (c.equitable) {
        const RationalMatrix d = divisor_matrix(g, p);
        const Spectrum sd = spectrum(to_real(d));
        const Spectrum sa = spectrum(to_real(adjacency_rational(g)));
        const bool contained = contained_multiset(sd.values, sa.values);
        out.ok = contained;
        out.doc["divisor_matrix"] = rational_matrix_json(d);
        out.doc["spectrum"] = sd.values;
        out.doc["spectrum_contained"] = contained;
      } else {
        out.doc["violating_vertex"] = *c.violating_vertex;
        out.doc["violating_block"] = *c.violating_block;
      }
      table_row(out, "equitable", c.equitable);
    } else if (decompose->parsed()) {
      const Graph g = load_graph(graph_arg);
      const Automorphism phi = perm_arg.empty() ? rotation(g, shift) : make_automorphism(g, parse_permutation(perm_arg));
      std::optional<std::vector<Vertex>> t0;
      if (!t0_arg.empty()) t0 = parse_vertex_list(t0_arg);
      const Decomposition d = equitable_decomposition(g, phi, t0);
      json blocks = json::array();
      for (const ExactMatrix& b : d.blocks) blocks.push_back(b.to_text());
      const std::vector<double> union_spec = decomposition_spectrum(d);
      const Spectrum full = spectrum(to_real(adjacency_rational(g)));
      out.ok = same_multiset(union_spec, full.values);
      out.doc = {{"k", d.k},         {"exact", d.exact}, {"transversals", d.transversals},
                 {"blocks", blocks}, {"spectrum_union", union_spec}, {"spectrum_matches", out.ok}};
      table_row(out, "k", d.k);
      table_row(out, "spectrum_matches", out.ok);
    } else if (certify->parsed()) {
      const Graph g = load_graph(graph_arg);
      const std::vector<std::uint32_t> primes = parse_primes(primes_arg);
      CertifyOptions opts;
      opts.zf = zf_opts;
      if (!known_arg.empty()) opts.known_zfs = parse_vertex_list(known_arg);
      const CertifyVerdict v = certify_universal_optimality(g, lambda, primes, opts, graph_arg);
      out.ok = v.certified;
      out.doc = {{"graph", v.graph_id},
                 {"lambda", v.lambda},
                 {"z_number", v.z_number},
                 {"z_method", v.z_method},
                 {"nullity_Q", v.nullity_q},
                 {"nullities_mod_p", prime_map_json(v.nullities_mod_p)},
                 {"verdict", v.certified ? "Certified" : "NotCertified"},
                 {"reason", v.reason},
                 {"claims", v.claims}};
      table_row(out, "verdict", v.certified ? "Certified" : "NotCertified: " + v.reason);
      table_row(out, "Z", v.z_number);
      table_row(out, "null_Q", v.nullity_q);
    } else if (mr2->parsed()) {
      const Graph g = load_graph(graph_arg);
      std::optional<int> t;
      if (target >= 0) t = target;
      const Gf2MinRank r = min_rank_gf2_exhaustive(g, t);
      out.doc = {{"mr_gf2", r.min_rank}, {"diagonal", r.diagonal}, {"diagonals_examined", r.diagonals_examined}};
      if (t) {
        out.doc["target"] = *t;
        out.doc["target_attained"] = r.target_attained;
        if (r.target_diagonal) out.doc["target_diagonal"] = *r.target_diagonal;
      }
      table_row(out, "mr_gf2", r.min_rank);
    } else if (report->parsed()) {
      const Graph g = load_graph(graph_arg);
      const std::vector<std::uint32_t> primes = parse_primes(primes_arg);
      const ParameterReport r = parameter_report(g, kDefaultLambdas, primes);
      out.ok = r.chain_consistent;
      json nul = json::object();
      for (const auto& [l, v] : r.nullity_q) nul[std::to_string(l)] = v;
      json modp = json::object();
      for (const auto& [p, m] : r.nullity_mod_p) {
        for (const auto& [l, v] : m) modp[std::to_string(p)][std::to_string(l)] = v;
      }
      out.doc = {{"n", r.n},
                 {"min_degree", r.min_degree},
                 {"kappa", r.kappa.kappa},
                 {"separator", r.kappa.separator},
                 {"nullity_Q", nul},
                 {"nullity_mod_p", modp},
                 {"M_lower_bound", r.m_lower_bound},
                 {"M_lower_bound_source", r.m_lower_bound_source},
                 {"chain_consistent", r.chain_consistent},
                 {"unavailable", r.unavailable}};
      if (r.z) out.doc["Z"] = r.z->zf_number;
      if (r.sap) out.doc["sap"] = r.sap->has_sap;
      table_row(out, "n", r.n);
      table_row(out, "delta", r.min_degree);
      table_row(out, "kappa", r.kappa.kappa);
      table_row(out, "M >=", r.m_lower_bound);
      if (r.z) table_row(out, "Z", r.z->zf_number);
    } else if (conj->parsed()) {
      const std::vector<std::uint32_t> primes = parse_primes(primes_arg);
      HarnessRange range;
      ConjectureFamily fam = ConjectureFamily::CircL;
      if (family_arg == "circ_l") {
        range = {lmin, lmax, kmax, {}};
      } else {
        fam = ConjectureFamily::EcgTr;
        range = {rmin, rmax, 1, parse_vertex_list(t_arg)};
      }
      const auto rows = conjecture_harness(fam, range, primes, zf_opts, max_order);
      json arr = json::array();
      for (const HarnessRow& r : rows) {
        json row = {{"instance", r.instance}, {"n", r.n},           {"expected", r.expected},
                    {"skipped", r.skipped},   {"pass", r.pass},     {"note", r.note}};
        if (!r.skipped) {
          row["nullity_Q"] = r.nullity_q;
          row["nullity_mod_p"] = prime_map_json(r.nullity_mod_p);
          row["Z"] = r.z ? json(*r.z) : json();
          row["Z_exact"] = r.z_exact;
          row["Z_method"] = r.z_method;
          out.ok = out.ok && r.pass;
        }
        arr.push_back(std::move(row));
        table_row(out, r.instance,
                  r.skipped ? "skipped" : (r.pass ? "pass" : "fail") + std::string(" null=") + std::to_string(r.nullity_q));
      }
      out.doc = {{"family", family_arg}, {"rows", arr}};
    }
  } catch (const Error& e) {
    std::cout << json{{"error", e.what()}}.dump(2) << '\n';
    return 2;
  }
  print(out, table);
  return out.ok ? 0 : 1;
}
