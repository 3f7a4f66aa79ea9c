// pzr command-line tool. Talks to the library only through the C API.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pzr/pzr.h"

using nlohmann::json;

namespace {

struct Failure {
  int status;
};

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << json{{"error", "BadInput"}, {"message", "cannot read " + path}}.dump() << "\n";
    throw Failure{PZR_BAD_INPUT};
  }
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!text.empty() && text.back() != '\n') out << "\n";
  if (!out) {
    std::cerr << json{{"error", "BadInput"}, {"message", "cannot write " + path}}.dump() << "\n";
    throw Failure{PZR_BAD_INPUT};
  }
}

// Owns a string returned by the library.
struct Owned {
  char* p = nullptr;
  ~Owned() { pzr_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct Context {
  std::string command;
  std::string input_text;
  std::string diagnostic_path = "pzr-diagnostic.json";
};

Context ctx;

void write_diagnostic(int status, const std::string& message, const json& detail) {
  // Reproduction artifacts: these failures contradict a proved statement.
  json input = json::parse(ctx.input_text, nullptr, false);
  json diag = {{"format", "pzr-diagnostic"},
               {"format_version", 1},
               {"command", ctx.command},
               {"status", pzr_status_name(status)},
               {"message", message},
               {"detail", detail},
               {"input", input.is_discarded() ? json(ctx.input_text) : input}};
  std::ofstream(ctx.diagnostic_path) << diag.dump(2) << "\n";
  std::cerr << "diagnostic written to " << ctx.diagnostic_path << "\n";
}

void check(int status) {
  if (status == PZR_OK) return;
  json detail = json::parse(pzr_last_error_detail(), nullptr, false);
  std::cerr << json{{"error", pzr_status_name(status)}, {"message", pzr_last_error()}, {"detail", detail}}.dump() << "\n";
  if (pzr_is_theorem_violation(status)) write_diagnostic(status, pzr_last_error(), detail);
  throw Failure{status};
}

// The freshly built bundle or labels disagree with the graph.
[[noreturn]] void decode_violation(const Owned& report) {
  const std::string msg = "constructed output decodes wrongly";
  json detail = json::parse(report.str(), nullptr, false);
  std::cerr << json{{"error", pzr_status_name(PZR_VALIDATION_FAILED)}, {"message", msg}}.dump() << "\n";
  write_diagnostic(PZR_VALIDATION_FAILED, msg, detail);
  throw Failure{PZR_VALIDATION_FAILED};
}

struct Graph {
  pzr_graph* g = nullptr;
  explicit Graph(const std::string& path) {
    ctx.input_text = read_input(path);
    check(pzr_graph_from_json(ctx.input_text.c_str(), &g));
  }
  ~Graph() { pzr_graph_free(g); }
};

struct Bundle {
  pzr_bundle* b = nullptr;
  ~Bundle() { pzr_bundle_free(b); }
};

struct Labels {
  pzr_labels* l = nullptr;
  ~Labels() { pzr_labels_free(l); }
};

std::string stem(const std::string& path) {
  if (path == "-") return "out";
  auto dot = path.rfind('.');
  auto slash = path.rfind('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path;
  return path.substr(0, dot);
}

std::uint64_t default_seed() {
  if (const char* s = std::getenv("PZR_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      std::cerr << json{{"error", "BadInput"}, {"message", "PZR_SEED must be a non-negative integer"}}.dump() << "\n";
      throw Failure{PZR_BAD_INPUT};
    }
  }
  return 1;
}

// Verifier reports: printed, and a nonzero exit on violations.
int finish_report(int status, const Owned& report, const std::string& out) {
  if (report.p) write_output(out, report.str());
  if (status == PZR_VIOLATIONS) {
    std::cerr << json{{"error", "Violations"}, {"message", pzr_last_error()}}.dump() << "\n";
    return pzr_exit_code(status);
  }
  check(status);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boolean realizers and reachability labels for planar posets with a zero"};
  app.require_subcommand(1);
  app.add_option("--diagnostic", ctx.diagnostic_path, "Where theorem-violation diagnostics are written");

  std::string in, out, bundle_path, labels_path, map_path;
  long outer_face = -1;
  bool mirror = false, digraph = false;

  auto* embed = app.add_subcommand("embed", "Compute or verify a planar rotation system and list faces");
  embed->add_option("input", in, "Graph JSON ('-' for stdin)")->required();
  embed->add_option("-o,--output", out, "Embedding report (default stdout)");
  embed->add_option("--outer-face", outer_face, "Face id to use as the outer face");
  embed->add_flag("--mirror", mirror, "Reverse every rotation");

  auto* realize = app.add_subcommand("realize", "Build the 13-order Boolean realizer and its labels");
  realize->add_option("input", in, "Cover graph JSON of a poset with a zero")->required();
  realize->add_option("--bundle", bundle_path, "Bundle JSON output (default <input>.bundle.json)");
  realize->add_option("--labels", labels_path, "Label file output (default <input>.pzr)");

  auto* label = app.add_subcommand("label", "Reachability labels for a single-source planar digraph");
  label->add_option("input", in, "Digraph JSON")->required();
  label->add_option("--labels", labels_path, "Label file output (default <input>.pzr)");
  label->add_option("--map", map_path, "Component map output (default <input>.components.json)");

  std::string u_arg, v_arg;
  auto* query = app.add_subcommand("query", "Decide reachability from two labels");
  query->add_option("labels", labels_path, "Label file")->required();
  query->add_option("u", u_arg, "Source vertex id")->required();
  query->add_option("v", v_arg, "Target vertex id")->required();

  auto* verify = app.add_subcommand("verify", "Check a bundle or label file against a graph on all pairs");
  verify->add_option("input", in, "Graph JSON")->required();
  verify->add_option("--bundle", bundle_path, "Bundle JSON to check");
  verify->add_option("--labels", labels_path, "Label file to check");
  verify->add_flag("--digraph", digraph, "Check labels against digraph reachability");
  verify->add_option("-o,--output", out, "Report (default stdout)");

  auto* dimbound = app.add_subcommand("dimbound", "Realizer of size at most 2k+2 with an S_k witness");
  dimbound->add_option("input", in, "Cover graph JSON of a poset with a zero")->required();
  dimbound->add_option("-o,--output", out, "Report (default stdout)");

  std::string family;
  unsigned d = 3, depth = 3;
  std::size_t n = 30;
  std::uint64_t seed = 0;
  double cycle_fraction = 0.0;
  auto* gen = app.add_subcommand("gen", "Generate a fixture");
  gen->add_option("family", family, "wheel|nested|pathology|random|digraph|standard|chain")->required();
  gen->add_option("--d", d, "Wheel or standard example size");
  gen->add_option("--depth", depth, "Nesting depth");
  gen->add_option("--n", n, "Element count");
  auto* seed_opt = gen->add_option("--seed", seed, "Seed (default $PZR_SEED, else 1)");
  gen->add_option("--cycle-fraction", cycle_fraction, "Digraph: share of arcs closing cycles");
  gen->add_option("-o,--output", out, "Graph JSON (default stdout)");

  std::string which, pairs_json;
  std::size_t se_cap = 24, pair_cap = 60;
  auto* oracle = app.add_subcommand("oracle", "Brute-force oracles");
  oracle->add_option("which", which, "dim|se|reversible|incomparable")->required();
  oracle->add_option("input", in, "Graph JSON")->required();
  oracle->add_option("--pairs", pairs_json, "Pairs for 'reversible', as JSON [[a,b],...]");
  oracle->add_option("--se-cap", se_cap, "Element cap for se");
  oracle->add_option("--pair-cap", pair_cap, "Incomparable-pair cap for dim");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    ctx.command = app.get_subcommands().front()->get_name();
    if (*embed) {
      Graph g(in);
      Owned rep;
      check(pzr_embed(g.g, mirror, outer_face, &rep.p));
      write_output(out, rep.str());
    } else if (*realize) {
      Graph g(in);
      Bundle b;
      check(pzr_realize(g.g, &b.b));
      Owned bj, report;
      check(pzr_bundle_to_json(b.b, &bj.p));
      Labels l;
      check(pzr_labels_from_bundle(b.b, &l.l));
      Owned lt;
      check(pzr_labels_to_text(l.l, &lt.p));
      int st = pzr_verify_bundle(g.g, b.b, &report.p);
      if (st == PZR_VIOLATIONS) decode_violation(report);
      check(st);
      if (bundle_path.empty()) bundle_path = stem(in) + ".bundle.json";
      if (labels_path.empty()) labels_path = stem(in) + ".pzr";
      write_output(bundle_path, bj.str());
      write_output(labels_path, lt.str());
      std::cout << json{{"elements", pzr_graph_vertex_count(g.g)},
                        {"label_bits", pzr_labels_bit_length(l.l)},
                        {"bundle", bundle_path},
                        {"labels", labels_path},
                        {"verified", true}}
                       .dump()
                << "\n";
    } else if (*label) {
      Graph g(in);
      Labels l;
      Owned map, lt, report;
      check(pzr_label_digraph(g.g, &l.l, &map.p));
      check(pzr_labels_to_text(l.l, &lt.p));
      int st = pzr_verify_digraph_labels(g.g, l.l, &report.p);
      if (st == PZR_VIOLATIONS) decode_violation(report);
      check(st);
      if (labels_path.empty()) labels_path = stem(in) + ".pzr";
      if (map_path.empty()) map_path = stem(in) + ".components.json";
      write_output(labels_path, lt.str());
      write_output(map_path, map.str());
      std::cout << json{{"vertices", pzr_graph_vertex_count(g.g)},
                        {"components", json::parse(map.str())["component_count"]},
                        {"label_bits", pzr_labels_bit_length(l.l)},
                        {"labels", labels_path},
                        {"map", map_path},
                        {"verified", true}}
                       .dump()
                << "\n";
    } else if (*query) {
      // The answer is computed from the width and the two labels only.
      Labels parsed;
      check(pzr_labels_from_text(read_input(labels_path).c_str(), &parsed.l));
      auto index = [&](const std::string& s) -> std::size_t {
        try {
          std::size_t pos = 0;
          unsigned long long v = std::stoull(s, &pos);
          if (pos == s.size() && v < pzr_labels_count(parsed.l)) return v;
        } catch (const std::exception&) {
        }
        std::cerr << json{{"error", "IndexOutOfRange"}, {"message", "no label for vertex '" + s + "'"}}.dump() << "\n";
        throw Failure{PZR_INDEX_OUT_OF_RANGE};
      };
      Owned lu, lv;
      check(pzr_labels_get_hex(parsed.l, index(u_arg), &lu.p));
      check(pzr_labels_get_hex(parsed.l, index(v_arg), &lv.p));
      const unsigned w = pzr_labels_width(parsed.l);
      int answer = 0;
      check(pzr_query_hex(lu.p, lv.p, w, &answer));
      std::cout << answer << "\n";
    } else if (*verify) {
      Graph g(in);
      if (bundle_path.empty() == labels_path.empty()) {
        std::cerr << json{{"error", "BadInput"}, {"message", "pass exactly one of --bundle and --labels"}}.dump() << "\n";
        throw Failure{PZR_BAD_INPUT};
      }
      if (digraph && !bundle_path.empty()) {
        std::cerr << json{{"error", "BadInput"}, {"message", "--digraph applies to label files"}}.dump() << "\n";
        throw Failure{PZR_BAD_INPUT};
      }
      Owned report;
      int st;
      if (!bundle_path.empty()) {
        Bundle b;
        check(pzr_bundle_from_json(read_input(bundle_path).c_str(), &b.b));
        st = pzr_verify_bundle(g.g, b.b, &report.p);
      } else {
        Labels l;
        check(pzr_labels_from_text(read_input(labels_path).c_str(), &l.l));
        st = digraph ? pzr_verify_digraph_labels(g.g, l.l, &report.p) : pzr_verify_labels(g.g, l.l, &report.p);
      }
      return finish_report(st, report, out);
    } else if (*dimbound) {
      Graph g(in);
      Owned rep;
      check(pzr_dimbound(g.g, &rep.p));
      write_output(out, rep.str());
    } else if (*gen) {
      if (!*seed_opt) seed = default_seed();
      json params = {{"d", d}, {"depth", depth}, {"n", n}, {"seed", seed}, {"cycle_fraction", cycle_fraction}};
      Owned gj;
      check(pzr_generate(family.c_str(), params.dump().c_str(), &gj.p));
      write_output(out, gj.str());
    } else if (*oracle) {
      Graph g(in);
      json params = {{"se_elements", se_cap}, {"dimension_pairs", pair_cap}};
      if (!pairs_json.empty()) {
        params["pairs"] = json::parse(pairs_json, nullptr, false);
        if (params["pairs"].is_discarded()) {
          std::cerr << json{{"error", "BadInput"}, {"message", "--pairs is not valid JSON"}}.dump() << "\n";
          throw Failure{PZR_BAD_INPUT};
        }
      }
      Owned res;
      check(pzr_oracle(g.g, which.c_str(), params.dump().c_str(), &res.p));
      write_output("", res.str());
    }
  } catch (const Failure& f) {
    return pzr_exit_code(f.status);
  }
  return 0;
}
