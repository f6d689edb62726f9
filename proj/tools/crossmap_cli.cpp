// Command-line front end: validate drawings, run the discharging
// certification, generate the cylinder construction, and evaluate the
// crossing-number and chromatic-critical bounds.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "crossmap/albertson.hpp"
#include "crossmap/bounds.hpp"
#include "crossmap/construct.hpp"
#include "crossmap/discharge.hpp"
#include "crossmap/ledger_json.hpp"
#include "crossmap/map.hpp"
#include "crossmap/validate.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;

int real_precision() {
  const char* env = std::getenv("CROSSMAP_PRECISION");
  if (!env) return 10;
  int p = std::atoi(env);
  return p < 3 ? 3 : p > 17 ? 17 : p;
}

std::string fmt_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", real_precision(), v);
  return buf;
}

std::string fmt_p(double p) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%.3f", p);
  return buf;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string flags_line(const std::vector<std::string>& flags) {
  if (flags.empty()) return "none";
  std::string s;
  for (size_t i = 0; i < flags.size(); ++i)
    s += (i ? ", " : "") + flags[i];
  return s;
}

int cmd_validate(const std::string& path, int k_max, bool strict) {
  crossmap::PlanarMap m = crossmap::PlanarMap::parse(read_input(path));
  crossmap::ValidationReport r = crossmap::validate(m, k_max);
  crossmap::EdgeSet es = crossmap::recover_edges(m);
  std::cout << "nodes: " << m.node_count() << " (" << m.original_count()
            << " original, " << m.node_count() - m.original_count()
            << " crossing)\n";
  std::cout << "segments: " << m.segment_count() << "\n";
  std::cout << "euler: " << (r.euler_ok ? "ok" : "FAILED") << "\n";
  std::cout << "edges: " << es.count()
            << ", max crossings per edge: " << r.max_crossings_per_edge << "\n";
  std::cout << "min degree: " << r.min_degree << "\n";
  std::cout << "2-connected: " << (r.two_connected ? "yes" : "no") << "\n";
  std::cout << "simple: " << (r.simple ? "yes" : "no") << "\n";
  std::cout << "self-crossing edges: " << (r.self_crossing ? "yes" : "no") << "\n";
  std::cout << "assumption flags: " << flags_line(r.assumption_flags) << "\n";
  if (!r.euler_ok || !r.clean()) return strict ? kInputError : kFailed;
  return kOk;
}

int cmd_discharge(const std::string& path, const std::string& ledger_path,
                  bool permissive, bool json_out) {
  crossmap::PlanarMap m = crossmap::PlanarMap::parse(read_input(path));
  if (!permissive) {
    auto flags = crossmap::validate(m).assumption_flags;
    if (!flags.empty()) {
      std::cerr << "input violates discharging preconditions ("
                << flags_line(flags) << "); rerun with --permissive\n";
      return kFailed;
    }
  }
  crossmap::FaceSet fs = crossmap::trace_faces(m);
  crossmap::DischargeReport rep = crossmap::run_discharging(
      m, permissive ? crossmap::RunMode::permissive : crossmap::RunMode::strict);

  if (!ledger_path.empty())
    write_output(ledger_path, crossmap::ledger_to_json(m, fs, rep).dump(2) + "\n");

  if (json_out) {
    std::cout << crossmap::ledger_to_json(m, fs, rep).dump(2) << "\n";
  } else {
    std::cout << "n=" << rep.certificate.n << " vertices, m=" << rep.certificate.m
              << " edges, " << fs.count() << " faces\n";
    std::cout << "total charge: " << crossmap::pq_string(
                     crossmap::total_charge(rep.ledgers.back()))
              << " (4n-8)\n";
    if (!rep.assumption_flags.empty())
      std::cout << "assumption flags: " << flags_line(rep.assumption_flags) << "\n";
    for (const std::string& v : rep.assertion_violations)
      std::cout << "violation: " << v << "\n";
    std::cout << "final charges nonnegative: "
              << (rep.final_nonnegative ? "yes" : "no") << "\n";
    std::cout << "certificate: m=" << rep.certificate.m
              << " <= " << rep.certificate.bound << ": "
              << (rep.certificate.holds ? "HOLDS" : "FAILS") << "\n";
  }
  return rep.certificate.holds ? kOk : kFailed;
}

int cmd_construct_cylinder(long layers, const std::string& out_path) {
  write_output(out_path, crossmap::construct::cylinder(layers));
  return kOk;
}

int cmd_bounds(long n, long m, std::optional<long> t, std::optional<long> k,
               const std::string& format) {
  namespace cb = crossmap::bounds;
  json doc;
  doc["n"] = n;
  doc["m"] = m;
  json linear = json::array();
  for (int id = 1; id <= 5; ++id) {
    crossmap::Rational v = cb::linear_bound(id, n, m);
    linear.push_back({{"formula", id},
                      {"value", crossmap::pq_string(v)},
                      {"decimal", crossmap::to_double(v)}});
  }
  doc["linear"] = std::move(linear);
  auto best = cb::linear_best(n, m);
  doc["best_linear"] = {{"formula", best.formula},
                        {"value", crossmap::pq_string(best.value)},
                        {"decimal", crossmap::to_double(best.value)}};
  auto cl = cb::crossing_lemma(n, m);
  doc["crossing_lemma"] = {{"value", cl.value}, {"dense_branch", cl.dense}};
  doc["crossing_lemma_constant"] =
      crossmap::pq_string(cb::crossing_lemma_constant());
  doc["edge_removal_identity"] = cb::edge_removal_identity_check(n, m);
  if (t) doc["multigraph"] = {{"t", *t}, {"value", cb::multigraph_bound(n, m, *t)}};
  if (k) {
    auto me = cb::max_edges(n, *k);
    json items = json::array();
    for (const auto& item : me.applicable)
      items.push_back({{"rule", item.rule}, {"value", item.value}});
    doc["max_edges"] = {{"k", *k},
                        {"bounds", std::move(items)},
                        {"best", me.best},
                        {"rule", me.best_rule}};
  }
  if (format == "markdown") {
    std::cout << "| quantity | value |\n|---|---|\n";
    for (int id = 1; id <= 5; ++id)
      std::cout << "| linear bound (" << id << ") | "
                << fmt_real(crossmap::to_double(cb::linear_bound(id, n, m)))
                << " |\n";
    std::cout << "| best linear | " << fmt_real(crossmap::to_double(best.value))
              << " (formula " << best.formula << ") |\n";
    std::cout << "| crossing lemma | " << fmt_real(cl.value) << " |\n";
    if (t)
      std::cout << "| multigraph (t=" << *t << ") | "
                << fmt_real(cb::multigraph_bound(n, m, *t)) << " |\n";
    if (k)
      std::cout << "| max edges (k=" << *k << ") | "
                << fmt_real(cb::max_edges(n, *k).best) << " |\n";
  } else {
    std::cout << doc.dump(2) << "\n";
  }
  return kOk;
}

void print_rows_markdown(const std::vector<crossmap::albertson::AlbertsonRow>& rows) {
  std::cout << "| n | m | p | bound |\n|--:|--:|--:|------:|\n";
  for (const auto& r : rows)
    std::cout << "| " << r.n << " | " << r.m << " | " << fmt_p(r.p) << " | "
              << r.bound << " |\n";
}

json rows_json(const std::vector<crossmap::albertson::AlbertsonRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows)
    arr.push_back(
        {{"n", r.n}, {"m", r.m}, {"p", fmt_p(r.p)}, {"bound", r.bound}});
  return arr;
}

int cmd_albertson_table(long r, long n_from, long n_to, const std::string& format) {
  auto rows = crossmap::albertson::table(r, n_from, n_to);
  if (format == "json")
    std::cout << rows_json(rows).dump(2) << "\n";
  else
    print_rows_markdown(rows);
  return kOk;
}

int cmd_albertson_threshold(long r, const std::string& format) {
  auto t = crossmap::albertson::threshold(r);
  long z = crossmap::albertson::zarankiewicz(r);
  if (format == "json") {
    json doc{{"r", r},
             {"z", z},
             {"p_star", t.p_star},
             {"n_star", t.n_star},
             {"p_rounded", fmt_p(t.p_rounded)},
             {"coeff_a", t.coeff_a},
             {"coeff_b", t.coeff_b}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "r=" << r << ", Z(r)=" << z << "\n";
    std::cout << "p* = " << fmt_real(t.p_star) << "\n";
    std::cout << "n* = " << fmt_real(t.n_star) << "\n";
    std::cout << "at p=" << fmt_p(t.p_rounded) << ": bound(n) = "
              << fmt_real(t.coeff_a) << "*n + " << fmt_real(t.coeff_b) << "\n";
    std::cout << "covered for n >= " << static_cast<long>(std::ceil(t.n_star))
              << "\n";
  }
  return kOk;
}

int cmd_albertson_join(long r, long n) {
  long m = crossmap::albertson::join_case_min_edges(r, n);
  auto opt = crossmap::albertson::optimize_p(n, m);
  long z = crossmap::albertson::zarankiewicz(r);
  std::cout << "r=" << r << " n=" << n << ": join gives m >= " << m << "\n";
  std::cout << "p=" << fmt_p(opt.p) << " bound=" << opt.bound << " vs Z(" << r
            << ")=" << z << ": " << (opt.bound >= z ? "COVERED" : "NOT COVERED")
            << "\n";
  return opt.bound >= z ? kOk : kFailed;
}

int cmd_albertson_counterexample(long r) {
  auto rep = crossmap::albertson::counterexample_check(r);
  std::cout << "r=" << r << ": r(r-1)(r-2)(r-3)/64 >= Z(r): "
            << (rep.zr_ok ? "yes" : "NO") << "\n";
  for (const auto& rc : rep.ranges) {
    std::cout << "alpha in [" << fmt_real(rc.alpha_lo) << ", "
              << fmt_real(rc.alpha_hi) << "], k=" << rc.k
              << ": h >= 0: " << (rc.h_ok ? "yes" : "NO")
              << ", coefficient >= 1/64: " << (rc.coeff_ok ? "yes" : "NO")
              << " (min " << fmt_real(rc.min_coeff) << ")";
    if (rc.witness_alpha)
      std::cout << " witness alpha=" << fmt_real(*rc.witness_alpha);
    std::cout << "\n";
  }
  std::cout << (rep.holds ? "CHECK PASSED" : "CHECK FAILED") << "\n";
  return rep.holds ? kOk : kFailed;
}

int cmd_albertson_verify(long r, const std::string& format) {
  auto v = crossmap::albertson::verify(r);
  if (format == "json") {
    json doc{{"r", v.r}, {"z", v.z}};
    json cov = json::array();
    for (const auto& c : v.covered) {
      json jc{{"n_lo", c.n_lo}, {"how", c.how}};
      if (c.n_hi) jc["n_hi"] = *c.n_hi;
      cov.push_back(std::move(jc));
    }
    doc["covered"] = std::move(cov);
    doc["rows"] = rows_json(v.rows);
    if (v.join_m) doc["join_m"] = *v.join_m;
    if (v.join_bound) doc["join_bound"] = *v.join_bound;
    doc["exceptions"] = v.exceptions;
    doc["complete"] = v.complete;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "r=" << v.r << ", Z(r)=" << v.z << "\n";
    for (const auto& c : v.covered) {
      std::cout << "covered n in [" << c.n_lo << ", ";
      if (c.n_hi) std::cout << *c.n_hi;
      else std::cout << "inf";
      std::cout << "] by " << c.how << "\n";
    }
    if (!v.rows.empty()) print_rows_markdown(v.rows);
    if (v.join_m)
      std::cout << "join case: m >= " << *v.join_m << ", bound " << *v.join_bound
                << "\n";
    if (v.exceptions.empty()) {
      std::cout << "VERIFIED for every n\n";
    } else {
      std::cout << "unresolved n:";
      for (long n : v.exceptions) std::cout << ' ' << n;
      std::cout << "\n";
    }
  }
  return v.complete ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toolkit for drawings with few crossings per edge: combinatorial-"
               "map validation, discharging certificates, extremal cylinder "
               "construction, crossing-number bounds"};
  app.require_subcommand(1);

  // validate
  std::string v_path;
  int v_k = 4;
  bool v_strict = false;
  auto* validate_cmd = app.add_subcommand("validate", "check a map file");
  validate_cmd->add_option("file", v_path, "map file, or - for stdin")->required();
  validate_cmd->add_option("--k", v_k, "crossing budget per edge (default 4)");
  validate_cmd->add_flag("--strict", v_strict,
                         "treat precondition violations as input errors");

  // discharge
  std::string d_path, d_ledger;
  bool d_permissive = false, d_json = false;
  auto* discharge_cmd =
      app.add_subcommand("discharge", "run the discharging certification");
  discharge_cmd->add_option("file", d_path, "map file, or - for stdin")->required();
  discharge_cmd->add_option("--ledger", d_ledger, "write the step ledgers as JSON");
  discharge_cmd->add_flag("--permissive", d_permissive,
                          "record assertion violations instead of aborting");
  discharge_cmd->add_flag("--json", d_json, "print the full ledger JSON");

  // construct cylinder
  long c_layers = 0;
  std::string c_out;
  auto* construct_cmd = app.add_subcommand("construct", "generate drawings");
  auto* cylinder_cmd =
      construct_cmd->add_subcommand("cylinder", "hexagonal cylinder drawing");
  cylinder_cmd->add_option("--layers", c_layers, "number of layers (>= 2)")
      ->required();
  cylinder_cmd->add_option("-o,--output", c_out, "output path (default stdout)");
  construct_cmd->require_subcommand(1);

  // bounds
  long b_n = 0, b_m = 0;
  long b_t = -1, b_k = -1;
  std::string b_format = "json";
  auto* bounds_cmd =
      app.add_subcommand("bounds", "evaluate crossing-number lower bounds");
  bounds_cmd->add_option("--n", b_n, "vertices")->required();
  bounds_cmd->add_option("--m", b_m, "edges")->required();
  bounds_cmd->add_option("--multiplicity", b_t, "edge multiplicity");
  bounds_cmd->add_option("--k", b_k, "crossings per edge, for the edge-count bound");
  bounds_cmd->add_option("--format", b_format, "json or markdown");

  // albertson
  auto* albertson_cmd =
      app.add_subcommand("albertson", "chromatic-critical verification pipeline");
  albertson_cmd->require_subcommand(1);
  long a_r = 0, a_from = 0, a_to = 0, a_n = 0;
  std::string a_format = "markdown";

  auto* table_cmd = albertson_cmd->add_subcommand("table", "verification table");
  table_cmd->add_option("--r", a_r, "chromatic number")->required();
  table_cmd->add_option("--n-from", a_from, "first n")->required();
  table_cmd->add_option("--n-to", a_to, "last n")->required();
  table_cmd->add_option("--format", a_format, "markdown or json");

  auto* threshold_cmd =
      albertson_cmd->add_subcommand("threshold", "break-even n and p");
  threshold_cmd->add_option("--r", a_r, "chromatic number")->required();
  threshold_cmd->add_option("--format", a_format, "text or json");

  auto* join_cmd = albertson_cmd->add_subcommand("join", "join case at n = 2r-2");
  join_cmd->add_option("--r", a_r, "chromatic number")->required();
  join_cmd->add_option("--n", a_n, "vertex count (must be 2r-2)")->required();

  auto* cx_cmd = albertson_cmd->add_subcommand("check-counterexample",
                                               "minimal counterexample size check");
  cx_cmd->add_option("--r", a_r, "chromatic number")->required();

  auto* verify_cmd = albertson_cmd->add_subcommand("verify", "full per-r verdict");
  verify_cmd->add_option("--r", a_r, "chromatic number")->required();
  verify_cmd->add_option("--format", a_format, "text or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*validate_cmd) return cmd_validate(v_path, v_k, v_strict);
    if (*discharge_cmd)
      return cmd_discharge(d_path, d_ledger, d_permissive, d_json);
    if (*cylinder_cmd) return cmd_construct_cylinder(c_layers, c_out);
    if (*bounds_cmd)
      return cmd_bounds(b_n, b_m,
                        b_t >= 0 ? std::optional<long>(b_t) : std::nullopt,
                        b_k >= 0 ? std::optional<long>(b_k) : std::nullopt,
                        b_format);
    if (*table_cmd) return cmd_albertson_table(a_r, a_from, a_to, a_format);
    if (*threshold_cmd)
      return cmd_albertson_threshold(a_r, a_format == "json" ? "json" : "text");
    if (*join_cmd) return cmd_albertson_join(a_r, a_n);
    if (*cx_cmd) return cmd_albertson_counterexample(a_r);
    if (*verify_cmd)
      return cmd_albertson_verify(a_r, a_format == "json" ? "json" : "text");
  } catch (const crossmap::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const crossmap::MapError& e) {
    std::cerr << "map error: " << e.what() << "\n";
    return kInputError;
  } catch (const crossmap::DischargeError& e) {
    std::cerr << "discharge aborted: " << e.what() << "\n";
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
