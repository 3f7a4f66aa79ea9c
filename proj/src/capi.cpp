#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "analysis.hpp"
#include "dimbound.hpp"
#include "error.hpp"
#include "graphio.hpp"
#include "oracles.hpp"
#include "pzr/pzr.h"

using nlohmann::json;
using namespace pzr;

struct pzr_graph {
  GraphDocument doc;
};
struct pzr_bundle {
  RealizerBundle bundle;
};
struct pzr_labels {
  LabelSet labels;
};

static_assert(PZR_BAD_INPUT == static_cast<int>(Errc::BadInput) + 1);
static_assert(PZR_VALIDATION_FAILED == static_cast<int>(Errc::ValidationFailed) + 1);
static_assert(PZR_COVERAGE_GAP == static_cast<int>(Errc::CoverageGap) + 1);

namespace {

thread_local std::string last_message;
thread_local std::string last_detail = "null";

constexpr int kErrcCount = static_cast<int>(Errc::CoverageGap) + 1;

int set_error(int status, std::string message, const json& detail = nullptr) {
  last_message = std::move(message);
  last_detail = detail.dump();
  return status;
}

// Runs f, translating exceptions into status codes.
template <typename F>
int guarded(F&& f) {
  last_message.clear();
  last_detail = "null";
  try {
    return f();
  } catch (const Error& e) {
    return set_error(static_cast<int>(e.code()) + 1, e.what(), e.detail());
  } catch (const json::exception& e) {
    return set_error(PZR_BAD_INPUT, std::string("BadInput: ") + e.what());
  } catch (const std::bad_alloc&) {
    return set_error(PZR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(PZR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) fail(Errc::BadInput, std::string(what) + " is null");
}

json parse_params(const char* text) {
  if (!text || !*text) return json::object();
  json j = json::parse(text);
  if (!j.is_object()) fail(Errc::BadInput, "parameters must be a JSON object");
  return j;
}

json mismatches_report(const std::vector<Mismatch>& ms, std::size_t n) {
  json list = json::array();
  for (std::size_t i = 0; i < ms.size() && i < 20; ++i) {
    list.push_back({{"a", ms[i].a}, {"b", ms[i].b}, {"decoded", ms[i].decoded}, {"expected", ms[i].expected}});
  }
  return {{"ok", ms.empty()}, {"pairs_checked", n * n}, {"mismatch_count", ms.size()}, {"mismatches", list}};
}

int report(const std::vector<Mismatch>& ms, std::size_t n, char** out) {
  *out = dup(mismatches_report(ms, n).dump(2));
  if (ms.empty()) return PZR_OK;
  return set_error(PZR_VIOLATIONS, std::to_string(ms.size()) + " ordered pairs decode wrongly");
}

}  // namespace

extern "C" {

const char* pzr_status_name(int status) {
  if (status == PZR_OK) return "Ok";
  if (status == PZR_VIOLATIONS) return "Violations";
  if (status == PZR_INTERNAL) return "Internal";
  if (status >= 1 && status <= kErrcCount) return errc_name(static_cast<Errc>(status - 1));
  return "Unknown";
}

int pzr_exit_code(int status) {
  if (status == PZR_OK) return 0;
  if (status == PZR_VIOLATIONS) return 1;
  if (status >= 1 && status <= kErrcCount) return exit_code_for(static_cast<Errc>(status - 1));
  return 2;
}

int pzr_is_theorem_violation(int status) {
  return status >= 1 && status <= kErrcCount && is_theorem_violation(static_cast<Errc>(status - 1));
}

const char* pzr_last_error(void) { return last_message.c_str(); }
const char* pzr_last_error_detail(void) { return last_detail.c_str(); }
void pzr_string_free(char* s) { std::free(s); }

int pzr_graph_from_json(const char* text, pzr_graph** out) {
  return guarded([&] {
    require(text, "json");
    require(out, "out");
    *out = new pzr_graph{graph_from_text(text)};
    return PZR_OK;
  });
}

int pzr_graph_to_json(const pzr_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    *out = dup(graph_to_json(g->doc).dump(2));
    return PZR_OK;
  });
}

size_t pzr_graph_vertex_count(const pzr_graph* g) { return g ? g->doc.vertex_count : 0; }
void pzr_graph_free(pzr_graph* g) { delete g; }

int pzr_embed(const pzr_graph* g, int mirror, long outer_face, char** report_json) {
  return guarded([&] {
    require(g, "graph");
    std::optional<FaceId> f;
    if (outer_face >= 0) f = static_cast<FaceId>(outer_face);
    *report_json = dup(embed_document(g->doc, mirror != 0, f).to_json().dump(2));
    return PZR_OK;
  });
}

int pzr_realize(const pzr_graph* g, pzr_bundle** out) {
  return guarded([&] {
    require(g, "graph");
    Instance inst = instance_of(g->doc);
    auto an = Analysis::build(inst.embed());
    *out = new pzr_bundle{build_bundle(*an)};
    return PZR_OK;
  });
}

int pzr_bundle_to_json(const pzr_bundle* b, char** out) {
  return guarded([&] {
    require(b, "bundle");
    *out = dup(bundle_to_json(b->bundle).dump(2));
    return PZR_OK;
  });
}

int pzr_bundle_from_json(const char* text, pzr_bundle** out) {
  return guarded([&] {
    require(text, "json");
    *out = new pzr_bundle{bundle_from_json(json::parse(text))};
    return PZR_OK;
  });
}

void pzr_bundle_free(pzr_bundle* b) { delete b; }

int pzr_bundle_query(const pzr_bundle* b, size_t a, size_t c, int* answer) {
  return guarded([&] {
    require(b, "bundle");
    if (a >= b->bundle.element_count || c >= b->bundle.element_count) fail(Errc::IndexOutOfRange, "element out of range");
    *answer = decode(b->bundle, static_cast<Vertex>(a), static_cast<Vertex>(c)) ? 1 : 0;
    return PZR_OK;
  });
}

int pzr_labels_from_bundle(const pzr_bundle* b, pzr_labels** out) {
  return guarded([&] {
    require(b, "bundle");
    *out = new pzr_labels{make_labels(b->bundle)};
    return PZR_OK;
  });
}

int pzr_labels_to_text(const pzr_labels* l, char** out) {
  return guarded([&] {
    require(l, "labels");
    *out = dup(labels_to_text(l->labels));
    return PZR_OK;
  });
}

int pzr_labels_from_text(const char* text, pzr_labels** out) {
  return guarded([&] {
    require(text, "text");
    *out = new pzr_labels{labels_from_text(text)};
    return PZR_OK;
  });
}

size_t pzr_labels_count(const pzr_labels* l) { return l ? l->labels.labels.size() : 0; }
unsigned pzr_labels_width(const pzr_labels* l) { return l ? l->labels.w : 0; }
size_t pzr_labels_bit_length(const pzr_labels* l) { return l ? l->labels.bit_length() : 0; }

int pzr_labels_get_hex(const pzr_labels* l, size_t v, char** out) {
  return guarded([&] {
    require(l, "labels");
    if (v >= l->labels.labels.size()) fail(Errc::IndexOutOfRange, "vertex " + std::to_string(v) + " has no label");
    *out = dup(label_hex(l->labels.labels[v]));
    return PZR_OK;
  });
}

void pzr_labels_free(pzr_labels* l) { delete l; }

int pzr_query_hex(const char* label_u, const char* label_v, unsigned w, int* answer) {
  return guarded([&] {
    require(label_u, "label");
    require(label_v, "label");
    if (w < 1 || w > 32) fail(Errc::BadInput, "field width must lie in 1..32");
    *answer = decode_labels(label_from_hex(label_u, w), label_from_hex(label_v, w), w) ? 1 : 0;
    return PZR_OK;
  });
}

int pzr_label_digraph(const pzr_graph* g, pzr_labels** out, char** component_map_json) {
  return guarded([&] {
    require(g, "graph");
    DigraphLabeling r = label_digraph(g->doc);
    if (component_map_json) *component_map_json = dup(r.map_to_json().dump(2));
    *out = new pzr_labels{std::move(r.vertex_labels)};
    return PZR_OK;
  });
}

int pzr_verify_bundle(const pzr_graph* g, const pzr_bundle* b, char** report_json) {
  return guarded([&] {
    require(g, "graph");
    require(b, "bundle");
    Poset p = poset_of(g->doc);
    return report(verify_bundle(p, b->bundle), p.size(), report_json);
  });
}

int pzr_verify_labels(const pzr_graph* g, const pzr_labels* l, char** report_json) {
  return guarded([&] {
    require(g, "graph");
    require(l, "labels");
    Poset p = poset_of(g->doc);
    return report(verify_labels(p, l->labels), p.size(), report_json);
  });
}

int pzr_verify_digraph_labels(const pzr_graph* g, const pzr_labels* l, char** report_json) {
  return guarded([&] {
    require(g, "graph");
    require(l, "labels");
    return report(verify_digraph_labels(digraph_of(g->doc), l->labels), g->doc.vertex_count, report_json);
  });
}

int pzr_dimbound(const pzr_graph* g, char** report_json) {
  return guarded([&] {
    require(g, "graph");
    Instance inst = instance_of(g->doc);
    auto an = Analysis::build(inst.embed());
    BucketRealizer r = build_dim_realizer(*an);
    if (auto v = verify_realizer(an->poset(), r.extensions)) {
      fail(Errc::ValidationFailed, "bucket realizer fails the audit",
           {{"kind", v->kind}, {"order", v->order}, {"a", v->a}, {"b", v->b}});
    }
    json exts = json::array();
    for (std::size_t i = 0; i < r.extensions.size(); ++i) {
      exts.push_back({{"order", r.extensions[i].sequence()}, {"provenance", r.provenance[i]}});
    }
    json j = {{"format", "pzr-dimbound"},
              {"element_count", an->size()},
              {"k", r.k},
              {"size", r.extensions.size()},
              {"bound", 2 * r.k + 2},
              {"witness", r.witness},
              {"witness_is_standard_example", r.witness.size() < 2 || induces_standard_example(an->poset(), r.witness)},
              {"extensions", exts}};
    *report_json = dup(j.dump(2));
    return PZR_OK;
  });
}

int pzr_generate(const char* family, const char* params_json, char** graph_json) {
  return guarded([&] {
    require(family, "family");
    json p = parse_params(params_json);
    const std::string f = family;
    auto num = [&](const char* key, std::uint64_t fallback) { return p.value(key, fallback); };
    GraphDocument d;
    if (f == "wheel") {
      d = document_of(gen_wheel(static_cast<unsigned>(num("d", 3))));
    } else if (f == "nested") {
      d = document_of(gen_nested(static_cast<unsigned>(num("depth", 3))));
    } else if (f == "pathology") {
      d = document_of(gen_pathology());
    } else if (f == "random") {
      d = document_of(gen_random_planar_zero(num("n", 30), num("seed", 1)));
    } else if (f == "digraph") {
      GenSpec s;
      s.family = "random_single_source";
      s.n = num("n", 30);
      s.seed = num("seed", 1);
      s.cycle_fraction = p.value("cycle_fraction", 0.0);
      d = document_of(gen_random_single_source_digraph(s.n, s.seed, s.cycle_fraction));
      d.generator = to_json(s);
    } else if (f == "standard" || f == "chain") {
      GenSpec s;
      s.family = f == "standard" ? "standard_example" : "chain";
      if (f == "standard") s.d = static_cast<unsigned>(num("d", 3));
      if (f == "chain") s.n = num("n", 5);
      d = document_of(f == "standard" ? gen_standard_example(s.d) : gen_chain(s.n));
      d.generator = to_json(s);
    } else {
      fail(Errc::BadParam, "unknown family '" + f + "'");
    }
    *graph_json = dup(graph_to_json(d).dump(2));
    return PZR_OK;
  });
}

int pzr_oracle(const pzr_graph* g, const char* which, const char* params_json, char** result_json) {
  return guarded([&] {
    require(g, "graph");
    require(which, "oracle name");
    json params = parse_params(params_json);
    Poset p = poset_of(g->doc);
    OracleCaps caps;
    caps.dimension_pairs = params.value("dimension_pairs", caps.dimension_pairs);
    caps.se_elements = params.value("se_elements", caps.se_elements);
    const std::string w = which;
    json j = {{"oracle", w}, {"element_count", p.size()}};
    if (w == "dim") {
      j["value"] = exact_dimension(p, caps);
    } else if (w == "se") {
      j["value"] = exact_se(p, caps);
    } else if (w == "incomparable") {
      auto inc = incomparable_pairs(p);
      j["count"] = inc.size();
      j["pairs"] = inc;
    } else if (w == "reversible") {
      auto pairs = params.value("pairs", PairList{});
      auto c = find_nonreversible_witness(p, pairs);
      j["value"] = !c.has_value();
      if (c) j["witness"] = {{"pairs", c->pairs}, {"strict", c->strict}};
    } else {
      fail(Errc::BadParam, "unknown oracle '" + w + "'");
    }
    *result_json = dup(j.dump(2));
    return PZR_OK;
  });
}

}  // extern "C"
