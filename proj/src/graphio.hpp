#pragma once

#include <optional>
#include <string>
#include <vector>

#include "generators.hpp"
#include "json.hpp"
#include "labels.hpp"

namespace pzr {

inline constexpr int kGraphFormatVersion = 1;

// Graph JSON: {"format":"pzr-graph","format_version":1,
//   "vertices":[{"id","name"?,"rotation"?}], "edges":[{"id","tail","head"}],
//   "root"?, "sentinel_after"?, "outer_face"?, "generator"?}
// Rotations list edge ids clockwise; either every vertex carries one or none.
struct GraphDocument {
  std::size_t vertex_count = 0;
  std::vector<std::string> names;  // empty, or one per vertex
  std::vector<Arc> edges;          // index = edge id
  std::optional<std::vector<std::vector<EdgeId>>> rotation;
  std::optional<Vertex> root;
  std::optional<EdgeId> sentinel_after;
  std::optional<FaceId> outer_face;
  nlohmann::json generator;  // null when absent
};

GraphDocument graph_from_json(const nlohmann::json& j);
GraphDocument graph_from_text(const std::string& text);
nlohmann::json graph_to_json(const GraphDocument& d);

GraphDocument document_of(const Instance& inst);
GraphDocument document_of(const Poset& p);
GraphDocument document_of(const Digraph& g);
Digraph digraph_of(const GraphDocument& d);

// The edges must be the cover arcs of a poset with a zero. The supplied
// rotation is verified; without one an embedding is computed.
Instance instance_of(const GraphDocument& d);
// Poset only; no zero or planarity required.
Poset poset_of(const GraphDocument& d);

struct EmbedReport {
  GraphDocument document;  // with rotation (and outer_face when chosen)
  std::vector<Face> faces;
  nlohmann::json to_json() const;
};

// Computes or verifies a rotation for the underlying undirected graph.
EmbedReport embed_document(const GraphDocument& d, bool mirror, std::optional<FaceId> outer_face);

// Labeling pipeline for an arbitrary digraph: condense, reduce, embed the
// cover graph, realize. Components are numbered by smallest member.
struct DigraphLabeling {
  CondensationMap map;
  Instance condensation;
  RealizerBundle bundle;
  LabelSet component_labels;
  LabelSet vertex_labels;  // one per original vertex, width from the components
  nlohmann::json map_to_json() const;
};
DigraphLabeling label_digraph(const GraphDocument& d);

}  // namespace pzr
