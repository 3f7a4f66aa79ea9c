#include "graphio.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "analysis.hpp"
#include "error.hpp"

namespace pzr {

using nlohmann::json;

namespace {

template <typename T>
T get_index(const json& j, const char* key, std::size_t bound, const char* what) {
  if (!j.contains(key) || !j[key].is_number_unsigned()) {
    fail(Errc::BadInput, std::string(what) + " needs a non-negative integer '" + key + "'");
  }
  auto v = j[key].get<std::uint64_t>();
  if (v >= bound) fail(Errc::BadInput, std::string(what) + " '" + key + "' = " + std::to_string(v) + " is out of range");
  return static_cast<T>(v);
}

std::vector<UEdge> undirected(const GraphDocument& d) {
  std::vector<UEdge> out;
  for (const Arc& a : d.edges) out.push_back({a.tail, a.head});
  return out;
}

RotationSystem rotation_for(const GraphDocument& d) {
  if (d.rotation) {
    RotationSystem r(d.vertex_count, undirected(d), *d.rotation);
    if (!is_connected(d.vertex_count, r.edges())) fail(Errc::Disconnected, "graph is not connected");
    check_euler(r, trace_faces(r));
    return r;
  }
  return compute_embedding(d.vertex_count, undirected(d));
}

}  // namespace

GraphDocument graph_from_json(const json& j) {
  if (!j.is_object()) fail(Errc::BadInput, "graph document must be a JSON object");
  if (j.value("format", "") != "pzr-graph") fail(Errc::BadInput, "graph document needs \"format\": \"pzr-graph\"");
  if (j.value("format_version", -1) != kGraphFormatVersion) {
    fail(Errc::BadInput, "unsupported graph format_version");
  }
  if (!j.contains("vertices") || !j["vertices"].is_array() || !j.contains("edges") || !j["edges"].is_array()) {
    fail(Errc::BadInput, "graph document needs 'vertices' and 'edges' arrays");
  }
  GraphDocument d;
  const json& vs = j["vertices"];
  const json& es = j["edges"];
  d.vertex_count = vs.size();
  d.edges.assign(es.size(), Arc{0, 0});
  std::vector<bool> seen_v(vs.size(), false), seen_e(es.size(), false);
  std::vector<std::string> names(vs.size());
  std::vector<std::vector<EdgeId>> rot(vs.size());
  bool any_name = false;
  std::size_t with_rotation = 0;
  for (const json& v : vs) {
    if (!v.is_object()) fail(Errc::BadInput, "vertex entries must be objects");
    auto id = get_index<Vertex>(v, "id", vs.size(), "vertex");
    if (seen_v[id]) fail(Errc::BadInput, "duplicate vertex id " + std::to_string(id));
    seen_v[id] = true;
    if (v.contains("name")) {
      if (!v["name"].is_string()) fail(Errc::BadInput, "vertex names must be strings");
      names[id] = v["name"].get<std::string>();
      any_name = true;
    }
    if (v.contains("rotation")) {
      if (!v["rotation"].is_array()) fail(Errc::BadInput, "vertex rotation must be an array of edge ids");
      for (const json& e : v["rotation"]) {
        if (!e.is_number_unsigned() || e.get<std::uint64_t>() >= es.size()) {
          fail(Errc::BadInput, "rotation of vertex " + std::to_string(id) + " names an unknown edge");
        }
        rot[id].push_back(e.get<EdgeId>());
      }
      ++with_rotation;
    }
  }
  for (const json& e : es) {
    if (!e.is_object()) fail(Errc::BadInput, "edge entries must be objects");
    auto id = get_index<EdgeId>(e, "id", es.size(), "edge");
    if (seen_e[id]) fail(Errc::BadInput, "duplicate edge id " + std::to_string(id));
    seen_e[id] = true;
    d.edges[id] = {get_index<Vertex>(e, "tail", vs.size(), "edge"), get_index<Vertex>(e, "head", vs.size(), "edge")};
  }
  if (any_name) d.names = std::move(names);
  if (with_rotation == vs.size() && !vs.empty()) {
    d.rotation = std::move(rot);
  } else if (with_rotation != 0) {
    fail(Errc::BadInput, "either every vertex carries a rotation or none does");
  }
  if (j.contains("root")) d.root = get_index<Vertex>(j, "root", vs.size(), "graph");
  if (j.contains("sentinel_after")) d.sentinel_after = get_index<EdgeId>(j, "sentinel_after", es.size(), "graph");
  if (j.contains("outer_face")) d.outer_face = get_index<FaceId>(j, "outer_face", ~FaceId{0}, "graph");
  if (j.contains("generator")) d.generator = j["generator"];
  return d;
}

GraphDocument graph_from_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::BadInput, std::string("graph document is not valid JSON: ") + e.what());
  }
  return graph_from_json(j);
}

json graph_to_json(const GraphDocument& d) {
  json j = {{"format", "pzr-graph"}, {"format_version", kGraphFormatVersion}};
  json vs = json::array();
  for (Vertex v = 0; v < d.vertex_count; ++v) {
    json o = {{"id", v}};
    if (!d.names.empty() && !d.names[v].empty()) o["name"] = d.names[v];
    if (d.rotation) o["rotation"] = (*d.rotation)[v];
    vs.push_back(std::move(o));
  }
  json es = json::array();
  for (EdgeId e = 0; e < d.edges.size(); ++e) es.push_back({{"id", e}, {"tail", d.edges[e].tail}, {"head", d.edges[e].head}});
  j["vertices"] = std::move(vs);
  j["edges"] = std::move(es);
  if (d.root) j["root"] = *d.root;
  if (d.sentinel_after) j["sentinel_after"] = *d.sentinel_after;
  if (d.outer_face) j["outer_face"] = *d.outer_face;
  if (!d.generator.is_null()) j["generator"] = d.generator;
  return j;
}

GraphDocument document_of(const Poset& p) {
  GraphDocument d;
  d.vertex_count = p.size();
  d.edges = p.cover_arcs();
  d.root = p.zero();
  return d;
}

GraphDocument document_of(const Instance& inst) {
  GraphDocument d = document_of(*inst.poset);
  d.names = inst.names;
  d.rotation = inst.rotation.rotations();
  d.sentinel_after = inst.sentinel_after;
  d.outer_face = inst.outer_face;
  d.generator = to_json(inst.spec);
  return d;
}

GraphDocument document_of(const Digraph& g) {
  GraphDocument d;
  d.vertex_count = g.vertex_count;
  d.edges = g.arcs;
  return d;
}

Digraph digraph_of(const GraphDocument& d) { return Digraph{d.vertex_count, d.edges}; }

Poset poset_of(const GraphDocument& d) {
  if (d.vertex_count == 0) fail(Errc::BadInput, "graph has no vertices");
  return Poset::from_cover(digraph_of(d));
}

Instance instance_of(const GraphDocument& d) {
  Instance inst;
  auto p = std::make_shared<const Poset>(poset_of(d));
  if (!p->zero()) fail(Errc::NoZero, "poset has no unique minimal element");
  if (d.root && *d.root != *p->zero()) {
    fail(Errc::BadInput, "root " + std::to_string(*d.root) + " is not the zero " + std::to_string(*p->zero()));
  }
  inst.poset = p;
  inst.rotation = rotation_for(d);
  inst.sentinel_after = d.sentinel_after;
  inst.outer_face = d.outer_face;
  inst.names = d.names;
  inst.spec.family = "document";
  if (d.generator.is_object()) inst.spec.family = d.generator.value("family", "document");
  inst.embed();  // validates outer face and sentinel corner
  return inst;
}

json EmbedReport::to_json() const {
  json fs = json::array();
  for (const Face& f : faces) {
    json vs = json::array();
    for (DartId dt : f.boundary) vs.push_back(dt & 1 ? document.edges[dt / 2].head : document.edges[dt / 2].tail);
    fs.push_back({{"id", f.id}, {"darts", f.boundary}, {"vertices", vs}});
  }
  const long long euler = static_cast<long long>(document.vertex_count) - static_cast<long long>(document.edges.size()) +
                          static_cast<long long>(faces.size());
  return {{"format", "pzr-embedding"},
          {"format_version", kGraphFormatVersion},
          {"graph", graph_to_json(document)},
          {"face_count", faces.size()},
          {"euler_characteristic", euler},
          {"faces", fs}};
}

EmbedReport embed_document(const GraphDocument& d, bool mirror, std::optional<FaceId> outer_face) {
  if (d.vertex_count == 0) fail(Errc::BadInput, "graph has no vertices");
  RotationSystem r = rotation_for(d);
  if (mirror) r = r.mirrored();
  EmbedReport rep;
  rep.document = d;
  rep.document.rotation = r.rotations();
  rep.faces = trace_faces(r);
  if (!outer_face) outer_face = d.outer_face;
  if (mirror && !outer_face) rep.document.outer_face.reset();
  if (mirror) rep.document.sentinel_after.reset();  // corners move under mirroring
  if (outer_face) {
    if (*outer_face >= rep.faces.size()) fail(Errc::RootNotOnFace, "face " + std::to_string(*outer_face) + " does not exist");
    std::optional<Vertex> root = d.root;
    if (!root) {
      Digraph g = digraph_of(d);
      std::vector<bool> has_in(d.vertex_count, false);
      for (const Arc& a : g.arcs) has_in[a.head] = true;
      if (std::count(has_in.begin(), has_in.end(), false) == 1) {
        root = static_cast<Vertex>(std::find(has_in.begin(), has_in.end(), false) - has_in.begin());
      }
    }
    if (root) {
      const auto& b = rep.faces[*outer_face].boundary;
      bool on = std::any_of(b.begin(), b.end(), [&](DartId dt) { return r.dart_tail(dt) == *root; });
      if (!on) fail(Errc::RootNotOnFace, "face " + std::to_string(*outer_face) + " does not touch the root");
    }
    rep.document.outer_face = outer_face;
  }
  return rep;
}

json DigraphLabeling::map_to_json() const {
  return {{"format", "pzr-components"},
          {"format_version", kGraphFormatVersion},
          {"component_count", map.component_count},
          {"component_of", map.component_of}};
}

DigraphLabeling label_digraph(const GraphDocument& d) {
  if (d.vertex_count == 0) fail(Errc::BadInput, "graph has no vertices");
  Digraph g = digraph_of(d);
  auto [dag, map] = scc_condense(g);

  // Renumber components by their smallest member so a DAG keeps its ids.
  const std::size_t N = map.component_count;
  std::vector<Vertex> rep(N, ~Vertex{0});
  for (Vertex v = 0; v < d.vertex_count; ++v) rep[map.component_of[v]] = std::min(rep[map.component_of[v]], v);
  std::vector<Vertex> by_rep(N);
  for (Vertex c = 0; c < N; ++c) by_rep[c] = c;
  std::sort(by_rep.begin(), by_rep.end(), [&](Vertex a, Vertex b) { return rep[a] < rep[b]; });
  std::vector<Vertex> renum(N);
  for (Vertex i = 0; i < N; ++i) renum[by_rep[i]] = i;
  for (Vertex& c : map.component_of) c = renum[c];
  for (Arc& a : dag.arcs) a = {renum[a.tail], renum[a.head]};

  std::vector<bool> has_in(N, false);
  for (const Arc& a : dag.arcs) has_in[a.head] = true;
  auto sources = std::count(has_in.begin(), has_in.end(), false);
  if (sources != 1) {
    fail(Errc::MultipleSources, "condensation has " + std::to_string(sources) + " sources", {{"sources", sources}});
  }
  Digraph cover = transitive_reduction(dag);

  // Keep the document's own edge order and drawing when it already is the
  // cover graph; otherwise embed the cover graph afresh.
  GraphDocument cd = document_of(cover);
  bool identity = N == d.vertex_count;
  if (identity) {
    std::set<Arc> mine(d.edges.begin(), d.edges.end()), theirs(cover.arcs.begin(), cover.arcs.end());
    identity = mine.size() == d.edges.size() && mine == theirs;
  }
  if (identity) {
    cd = d;
  } else {
    cd.names.clear();
  }
  DigraphLabeling out;
  out.map = map;
  try {
    out.condensation = instance_of(cd);
  } catch (const Error& e) {
    if (e.code() == Errc::NonPlanar) fail(Errc::NonPlanarCondensation, "cover graph of the condensation is not planar", e.detail());
    throw;
  }
  out.condensation.spec.family = "condensation";
  auto an = Analysis::build(out.condensation.embed());
  out.bundle = build_bundle(*an);
  out.component_labels = make_labels(out.bundle);
  out.vertex_labels.n = d.vertex_count;
  out.vertex_labels.w = out.component_labels.w;
  for (Vertex v = 0; v < d.vertex_count; ++v) out.vertex_labels.labels.push_back(out.component_labels.labels[map.component_of[v]]);
  return out;
}

}  // namespace pzr
