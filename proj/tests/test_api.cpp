// C API and command-line tests. Links only the shared library.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "json.hpp"
#include "pzr/pzr.h"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  pzr_string_free(s);
  return out;
}

std::string generate(const char* family, const json& params) {
  char* out = nullptr;
  REQUIRE(pzr_generate(family, params.dump().c_str(), &out) == PZR_OK);
  return take(out);
}

json doc(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  json vs = json::array(), es = json::array();
  for (std::size_t i = 0; i < n; ++i) vs.push_back({{"id", i}});
  for (std::size_t k = 0; k < edges.size(); ++k) {
    es.push_back({{"id", k}, {"tail", edges[k].first}, {"head", edges[k].second}});
  }
  return {{"format", "pzr-graph"}, {"format_version", 1}, {"vertices", vs}, {"edges", es}};
}

// Reflexive reachability by BFS over the document's edges.
std::vector<std::vector<bool>> bfs(const json& g) {
  const std::size_t n = g["vertices"].size();
  std::vector<std::vector<int>> out(n);
  for (const auto& e : g["edges"]) out[e["tail"].get<int>()].push_back(e["head"].get<int>());
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<int> q{static_cast<int>(s)};
    r[s][s] = true;
    for (std::size_t k = 0; k < q.size(); ++k) {
      for (int v : out[q[k]]) {
        if (!r[s][v]) {
          r[s][v] = true;
          q.push_back(v);
        }
      }
    }
  }
  return r;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("pzr_api_" + std::to_string(::getpid()) + "_" + std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }
std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Run {
  int code;
  std::string out;
};

// Runs the CLI in dir; stdout captured, stderr discarded.
Run cli(const TempDir& dir, const std::string& args, const std::string& env = "") {
  std::string cmd = "cd '" + dir.path.string() + "' && " + env + " '" PZR_CLI_PATH "' " + args + " 2>/dev/null";
  FILE* p = ::popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t k = std::fread(buf, 1, sizeof buf, p)) out.append(buf, k);
  int st = ::pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

}  // namespace

TEST_CASE("status codes and exit codes") {
  CHECK(pzr_exit_code(PZR_OK) == 0);
  CHECK(pzr_exit_code(PZR_VIOLATIONS) == 1);
  CHECK(pzr_exit_code(PZR_BAD_INPUT) == 2);
  CHECK(pzr_exit_code(PZR_NOT_REDUCED) == 2);
  CHECK(pzr_exit_code(PZR_NON_PLANAR) == 3);
  CHECK(pzr_exit_code(PZR_NON_PLANAR_CONDENSATION) == 3);
  CHECK(pzr_exit_code(PZR_NO_ZERO) == 4);
  CHECK(pzr_exit_code(PZR_MULTIPLE_SOURCES) == 4);
  CHECK(pzr_exit_code(PZR_NOT_REVERSIBLE) == 5);
  CHECK(pzr_exit_code(PZR_COVERAGE_GAP) == 5);
  CHECK(std::string(pzr_status_name(PZR_NOT_REVERSIBLE)) == "NotReversible");
  CHECK(pzr_is_theorem_violation(PZR_BOTH_TILTS));
  CHECK_FALSE(pzr_is_theorem_violation(PZR_NO_ZERO));
}

TEST_CASE("graph documents through the C API") {
  pzr_graph* g = nullptr;
  CHECK(pzr_graph_from_json("{not json", &g) == PZR_BAD_INPUT);
  CHECK(std::string(pzr_last_error()).find("JSON") != std::string::npos);
  CHECK(pzr_graph_from_json(R"({"format":"pzr-graph","format_version":2,"vertices":[],"edges":[]})", &g) ==
        PZR_BAD_INPUT);
  json bad = doc(2, {{0, 5}});
  CHECK(pzr_graph_from_json(bad.dump().c_str(), &g) == PZR_BAD_INPUT);

  std::string w = generate("wheel", {{"d", 3}});
  REQUIRE(pzr_graph_from_json(w.c_str(), &g) == PZR_OK);
  char* back = nullptr;
  REQUIRE(pzr_graph_to_json(g, &back) == PZR_OK);
  CHECK(json::parse(take(back)) == json::parse(w));
  pzr_graph_free(g);
}

TEST_CASE("embedding") {
  pzr_graph* g = nullptr;
  char* rep = nullptr;
  // A tree has one face.
  REQUIRE(pzr_graph_from_json(doc(4, {{0, 1}, {1, 2}, {1, 3}}).dump().c_str(), &g) == PZR_OK);
  REQUIRE(pzr_embed(g, 0, -1, &rep) == PZR_OK);
  json r = json::parse(take(rep));
  CHECK(r["face_count"] == 1);
  CHECK(r["euler_characteristic"] == 2);
  json first = r["graph"];
  pzr_graph_free(g);

  // A supplied rotation is verified and passed through.
  REQUIRE(pzr_graph_from_json(first.dump().c_str(), &g) == PZR_OK);
  REQUIRE(pzr_embed(g, 0, -1, &rep) == PZR_OK);
  CHECK(json::parse(take(rep))["graph"] == first);
  REQUIRE(pzr_embed(g, 0, 5, &rep) == PZR_ROOT_NOT_ON_FACE);
  pzr_graph_free(g);

  // K5 is rejected with a witness.
  std::vector<std::pair<int, int>> k5;
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) k5.push_back({a, b});
  }
  REQUIRE(pzr_graph_from_json(doc(5, k5).dump().c_str(), &g) == PZR_OK);
  CHECK(pzr_embed(g, 0, -1, &rep) == PZR_NON_PLANAR);
  CHECK(json::parse(pzr_last_error_detail())["kuratowski_edges"].size() >= 9);
  pzr_graph_free(g);

  // A broken rotation fails the Euler gate.
  json square = doc(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  std::vector<std::vector<int>> rot{{0, 3}, {0, 1}, {1, 2}, {2, 3}};
  for (int v = 0; v < 4; ++v) square["vertices"][v]["rotation"] = rot[v];
  REQUIRE(pzr_graph_from_json(square.dump().c_str(), &g) == PZR_OK);
  REQUIRE(pzr_embed(g, 0, -1, &rep) == PZR_OK);
  CHECK(json::parse(take(rep))["face_count"] == 2);
  pzr_graph_free(g);
  square["vertices"][1]["rotation"] = std::vector<int>{0};
  REQUIRE(pzr_graph_from_json(square.dump().c_str(), &g) == PZR_OK);
  CHECK(pzr_embed(g, 0, -1, &rep) == PZR_MALFORMED_ROTATION);
  pzr_graph_free(g);
}

TEST_CASE("realize, labels and verification through the C API") {
  pzr_graph* g = nullptr;
  REQUIRE(pzr_graph_from_json(generate("wheel", {{"d", 4}}).c_str(), &g) == PZR_OK);
  pzr_bundle* b = nullptr;
  REQUIRE(pzr_realize(g, &b) == PZR_OK);
  char* rep = nullptr;
  REQUIRE(pzr_verify_bundle(g, b, &rep) == PZR_OK);
  CHECK(json::parse(take(rep))["ok"] == true);

  pzr_labels* l = nullptr;
  REQUIRE(pzr_labels_from_bundle(b, &l) == PZR_OK);
  const std::size_t n = pzr_graph_vertex_count(g);
  unsigned w = 0;
  while ((std::size_t{1} << w) < n) ++w;
  CHECK(pzr_labels_width(l) == w);
  CHECK(pzr_labels_bit_length(l) == 13 * w);
  char* text = nullptr;
  REQUIRE(pzr_labels_to_text(l, &text) == PZR_OK);
  std::string t = take(text);
  CHECK(t.rfind("PZR1 n=" + std::to_string(n) + " w=" + std::to_string(w) + " orders=13\n", 0) == 0);
  pzr_labels* l2 = nullptr;
  REQUIRE(pzr_labels_from_text(t.c_str(), &l2) == PZR_OK);
  REQUIRE(pzr_verify_labels(g, l2, &rep) == PZR_OK);
  take(rep);

  // Mutated bundle: swap the first two entries of L3.
  char* bj = nullptr;
  REQUIRE(pzr_bundle_to_json(b, &bj) == PZR_OK);
  json mutated = json::parse(take(bj));
  auto& seq = mutated["orders"][2]["order"];
  std::swap(seq[0], seq[1]);
  pzr_bundle* mb = nullptr;
  REQUIRE(pzr_bundle_from_json(mutated.dump().c_str(), &mb) == PZR_OK);
  CHECK(pzr_verify_bundle(g, mb, &rep) == PZR_VIOLATIONS);
  CHECK(json::parse(take(rep))["mismatch_count"].get<int>() >= 1);

  int ans = -1;
  CHECK(pzr_bundle_query(b, 0, 0, &ans) == PZR_OK);
  CHECK(ans == 1);
  CHECK(pzr_bundle_query(b, 0, 999, &ans) == PZR_INDEX_OUT_OF_RANGE);
  pzr_bundle_free(mb);
  pzr_labels_free(l2);
  pzr_labels_free(l);
  pzr_bundle_free(b);
  pzr_graph_free(g);

  REQUIRE(pzr_graph_from_json(generate("standard", {{"d", 3}}).c_str(), &g) == PZR_OK);
  CHECK(pzr_realize(g, &b) == PZR_NO_ZERO);
  pzr_graph_free(g);
}

TEST_CASE("queries depend on the two labels only") {
  for (double cf : {0.0, 0.2, 0.5}) {
    for (int seed = 1; seed <= 4; ++seed) {
      json d = json::parse(generate("digraph", {{"n", 40}, {"seed", seed}, {"cycle_fraction", cf}}));
      pzr_graph* g = nullptr;
      REQUIRE(pzr_graph_from_json(d.dump().c_str(), &g) == PZR_OK);
      pzr_labels* l = nullptr;
      REQUIRE(pzr_label_digraph(g, &l, nullptr) == PZR_OK);
      const unsigned w = pzr_labels_width(l);
      const std::size_t n = pzr_labels_count(l);
      std::vector<std::string> hex(n);
      for (std::size_t v = 0; v < n; ++v) {
        char* h = nullptr;
        REQUIRE(pzr_labels_get_hex(l, v, &h) == PZR_OK);
        hex[v] = take(h);
      }
      // Graph and label set released before any query runs.
      pzr_labels_free(l);
      pzr_graph_free(g);
      auto reach = bfs(d);
      std::size_t wrong = 0;
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
          int ans = -1;
          REQUIRE(pzr_query_hex(hex[u].c_str(), hex[v].c_str(), w, &ans) == PZR_OK);
          wrong += (ans == 1) != reach[u][v];
        }
      }
      CHECK(wrong == 0);
    }
  }
  int ans = 0;
  CHECK(pzr_query_hex("zz", "00", 1, &ans) == PZR_BAD_INPUT);
}

TEST_CASE("digraph labeling") {
  // A DAG with a zero gets the same labels as realize.
  std::string w = generate("wheel", {{"d", 3}});
  pzr_graph* g = nullptr;
  REQUIRE(pzr_graph_from_json(w.c_str(), &g) == PZR_OK);
  pzr_bundle* b = nullptr;
  REQUIRE(pzr_realize(g, &b) == PZR_OK);
  pzr_labels *direct = nullptr, *piped = nullptr;
  REQUIRE(pzr_labels_from_bundle(b, &direct) == PZR_OK);
  char* map = nullptr;
  REQUIRE(pzr_label_digraph(g, &piped, &map) == PZR_OK);
  json m = json::parse(take(map));
  CHECK(m["component_count"] == pzr_graph_vertex_count(g));
  char *t1 = nullptr, *t2 = nullptr;
  pzr_labels_to_text(direct, &t1);
  pzr_labels_to_text(piped, &t2);
  CHECK(take(t1) == take(t2));
  pzr_labels_free(direct);
  pzr_labels_free(piped);
  pzr_bundle_free(b);
  pzr_graph_free(g);

  // 2-cycles collapse; labels are shared within a component.
  json d = doc(5, {{0, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 4}, {4, 3}, {0, 0}});
  REQUIRE(pzr_graph_from_json(d.dump().c_str(), &g) == PZR_OK);
  pzr_labels* l = nullptr;
  REQUIRE(pzr_label_digraph(g, &l, &map) == PZR_OK);
  m = json::parse(take(map));
  CHECK(m["component_count"] == 3);
  CHECK(m["component_of"] == json::array({0, 1, 1, 2, 2}));
  CHECK(pzr_labels_width(l) == 2);
  char* rep = nullptr;
  CHECK(pzr_verify_digraph_labels(g, l, &rep) == PZR_OK);
  take(rep);
  pzr_labels_free(l);
  pzr_graph_free(g);

  REQUIRE(pzr_graph_from_json(doc(3, {{0, 2}, {1, 2}}).dump().c_str(), &g) == PZR_OK);
  CHECK(pzr_label_digraph(g, &l, nullptr) == PZR_MULTIPLE_SOURCES);
  pzr_graph_free(g);

  // K_{3,3} below a zero: the condensation's cover graph is not planar.
  std::vector<std::pair<int, int>> e{{0, 1}, {0, 2}, {0, 3}};
  for (int a = 1; a <= 3; ++a) {
    for (int c = 4; c <= 6; ++c) e.push_back({a, c});
  }
  REQUIRE(pzr_graph_from_json(doc(7, e).dump().c_str(), &g) == PZR_OK);
  CHECK(pzr_label_digraph(g, &l, nullptr) == PZR_NON_PLANAR_CONDENSATION);
  pzr_graph_free(g);
}

TEST_CASE("dimbound and oracles through the C API") {
  pzr_graph* g = nullptr;
  REQUIRE(pzr_graph_from_json(generate("wheel", {{"d", 5}}).c_str(), &g) == PZR_OK);
  char* rep = nullptr;
  REQUIRE(pzr_dimbound(g, &rep) == PZR_OK);
  json r = json::parse(take(rep));
  CHECK(r["size"].get<int>() <= 12);
  CHECK(r["size"].get<int>() <= 2 * r["k"].get<int>() + 2);
  CHECK(r["witness_is_standard_example"] == true);
  pzr_graph_free(g);

  REQUIRE(pzr_graph_from_json(generate("standard", {{"d", 3}}).c_str(), &g) == PZR_OK);
  REQUIRE(pzr_oracle(g, "dim", nullptr, &rep) == PZR_OK);
  CHECK(json::parse(take(rep))["value"] == 3);
  REQUIRE(pzr_oracle(g, "se", "{}", &rep) == PZR_OK);
  CHECK(json::parse(take(rep))["value"] == 3);
  REQUIRE(pzr_oracle(g, "reversible", R"({"pairs":[[0,3],[1,4]]})", &rep) == PZR_OK);
  r = json::parse(take(rep));
  CHECK(r["value"] == false);
  CHECK(r["witness"]["strict"] == true);
  CHECK(pzr_oracle(g, "reversible", R"({"pairs":[[0,4]]})", &rep) == PZR_BAD_INPUT);
  CHECK(pzr_oracle(g, "nope", nullptr, &rep) == PZR_BAD_PARAM);
  pzr_graph_free(g);
  CHECK(pzr_generate("nope", nullptr, &rep) == PZR_BAD_PARAM);
}

TEST_CASE("command line") {
  TempDir dir;
  CHECK(cli(dir, "gen wheel --d 4 -o w4.json").code == 0);
  Run r = cli(dir, "realize w4.json");
  CHECK(r.code == 0);
  CHECK(fs::exists(dir.file("w4.bundle.json")));
  CHECK(fs::exists(dir.file("w4.pzr")));
  CHECK(cli(dir, "verify w4.json --bundle w4.bundle.json").code == 0);
  CHECK(cli(dir, "verify w4.json --labels w4.pzr").code == 0);

  json mutated = json::parse(slurp(dir.file("w4.bundle.json")));
  auto& seq = mutated["orders"][4]["order"];
  std::reverse(seq.begin(), seq.end());
  write(dir.file("mut.json"), mutated.dump());
  r = cli(dir, "verify w4.json --bundle mut.json");
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["ok"] == false);

  CHECK(cli(dir, "gen chain --n 4 -o chain.json").code == 0);
  CHECK(cli(dir, "realize chain.json").code == 0);
  CHECK(cli(dir, "gen standard --d 3 -o s3.json").code == 0);
  CHECK(cli(dir, "realize s3.json").code == 4);
  CHECK(json::parse(cli(dir, "oracle dim s3.json").out)["value"] == 3);

  std::vector<std::pair<int, int>> k5;
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) k5.push_back({a, b});
  }
  write(dir.file("k5.json"), doc(5, k5).dump());
  CHECK(cli(dir, "embed k5.json").code == 3);
  write(dir.file("two.json"), doc(3, {{0, 2}, {1, 2}}).dump());
  CHECK(cli(dir, "label two.json").code == 4);
  write(dir.file("junk.json"), "[1,2");
  CHECK(cli(dir, "embed junk.json").code == 2);
  CHECK(cli(dir, "realize missing.json").code == 2);
  CHECK(cli(dir, "frobnicate").code == 2);

  json dm = json::parse(cli(dir, "dimbound w4.json").out);
  CHECK(dm["size"].get<int>() <= 2 * dm["k"].get<int>() + 2);

  // PZR_SEED is the default seed; --seed overrides it.
  std::string a = cli(dir, "gen random --n 25", "PZR_SEED=17").out;
  std::string b = cli(dir, "gen random --n 25 --seed 17").out;
  std::string c = cli(dir, "gen random --n 25 --seed 18").out;
  CHECK(a == b);
  CHECK(a != c);
}

TEST_CASE("command-line queries with the graph withheld") {
  TempDir dir;
  REQUIRE(cli(dir, "gen digraph --n 50 --seed 5 --cycle-fraction 0.2 -o g.json").code == 0);
  json d = json::parse(slurp(dir.file("g.json")));
  REQUIRE(cli(dir, "label g.json --labels g.pzr --map g.map.json").code == 0);
  fs::remove(dir.file("g.json"));
  fs::remove(dir.file("g.map.json"));
  auto reach = bfs(d);
  std::size_t wrong = 0, asked = 0;
  for (int u = 0; u < 50; u += 7) {
    for (int v = 0; v < 50; v += 3) {
      Run r = cli(dir, "query g.pzr " + std::to_string(u) + " " + std::to_string(v));
      REQUIRE(r.code == 0);
      wrong += (r.out == "1\n") != reach[u][v];
      ++asked;
    }
  }
  CHECK(asked > 100);
  CHECK(wrong == 0);
  CHECK(cli(dir, "query g.pzr 3 3").out == "1\n");
  CHECK(cli(dir, "query g.pzr 0 50").code == 2);
}
