#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "poset.hpp"

namespace pzr {

using EdgeId = std::uint32_t;
using FaceId = std::uint32_t;

struct UEdge {
  Vertex u;
  Vertex v;
};

// Dart 2e runs u->v along edge e, dart 2e+1 runs v->u.
using DartId = std::uint32_t;

struct Face {
  FaceId id = 0;
  std::vector<DartId> boundary;
};

// Per-vertex cyclic edge order, read as clockwise in the drawing.
class RotationSystem {
 public:
  RotationSystem() = default;
  // Throws MalformedRotation unless every edge appears exactly once at
  // each endpoint (self-loops are rejected).
  RotationSystem(std::size_t vertex_count, std::vector<UEdge> edges,
                 std::vector<std::vector<EdgeId>> rotation);

  std::size_t vertex_count() const { return rot_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<UEdge>& edges() const { return edges_; }
  const std::vector<EdgeId>& rotation(Vertex v) const { return rot_[v]; }
  const std::vector<std::vector<EdgeId>>& rotations() const { return rot_; }

  Vertex other(EdgeId e, Vertex v) const { return edges_[e].u == v ? edges_[e].v : edges_[e].u; }
  // Index of e inside rotation(v).
  std::size_t position(Vertex v, EdgeId e) const { return edges_[e].u == v ? pos_[e][0] : pos_[e][1]; }
  EdgeId succ(Vertex v, EdgeId e) const;

  static DartId dart(EdgeId e, bool reversed) { return 2 * e + (reversed ? 1 : 0); }
  Vertex dart_tail(DartId d) const { return d & 1 ? edges_[d / 2].v : edges_[d / 2].u; }
  Vertex dart_head(DartId d) const { return d & 1 ? edges_[d / 2].u : edges_[d / 2].v; }
  DartId dart_from(EdgeId e, Vertex tail) const { return dart(e, edges_[e].u != tail); }

  RotationSystem mirrored() const;

 private:
  std::vector<UEdge> edges_;
  std::vector<std::vector<EdgeId>> rot_;
  std::vector<std::array<std::uint32_t, 2>> pos_;
};

// From dart u->v along e the trace continues along succ_v(e). Faces are
// numbered in order of their lowest dart id.
std::vector<Face> trace_faces(const RotationSystem& r);

// Throws MalformedRotation when V - E + F != 2 (graph assumed connected).
void check_euler(const RotationSystem& r, const std::vector<Face>& faces);

bool is_connected(std::size_t vertex_count, const std::vector<UEdge>& edges);

// Throws Disconnected, or NonPlanar with the Kuratowski edge ids in the
// error detail.
RotationSystem compute_embedding(std::size_t vertex_count, const std::vector<UEdge>& edges);

// The cover graph of a poset with a unique zero x0, embedded, with the
// sentinel edge e_-inf attached to x0 inside the outer face. Internally the
// sentinel is a real edge (id = cover edge count) to a virtual vertex
// (id = element count), so face traces include it.
class EmbeddedCoverGraph {
 public:
  const Poset& poset() const { return *poset_; }
  std::shared_ptr<const Poset> poset_ptr() const { return poset_; }
  Vertex zero() const { return zero_; }
  std::size_t element_count() const { return poset_->size(); }
  std::size_t edge_count() const { return poset_->cover_arcs().size(); }

  // Rotation system including the sentinel.
  const RotationSystem& rotation() const { return rot_; }
  // Rotation system of the cover graph alone, as supplied.
  const RotationSystem& cover_rotation() const { return base_; }
  EdgeId sentinel() const { return static_cast<EdgeId>(edge_count()); }
  Vertex virtual_vertex() const { return static_cast<Vertex>(element_count()); }

  const std::vector<Face>& faces() const { return faces_; }
  FaceId outer_face() const { return outer_; }
  FaceId face_of_dart(DartId d) const { return dart_face_[d]; }
  FaceId face_left_of(EdgeId e, Vertex from) const { return dart_face_[rot_.dart_from(e, from)]; }

  // Cover edge joining u and v, if any.
  std::optional<EdgeId> edge_between(Vertex u, Vertex v) const;
  Vertex other(EdgeId e, Vertex v) const { return rot_.other(e, v); }
  Vertex lower(EdgeId e) const { return poset_->cover_arcs()[e].tail; }
  Vertex upper(EdgeId e) const { return poset_->cover_arcs()[e].head; }

  // Clockwise distance from e0 to e around z, in 1..deg-1 for e != e0.
  std::size_t ze_rank(Vertex z, EdgeId e0, EdgeId e) const;

 private:
  friend EmbeddedCoverGraph attach_root(std::shared_ptr<const Poset>, const RotationSystem&,
                                        std::optional<FaceId>, std::optional<EdgeId>);
  std::shared_ptr<const Poset> poset_;
  Vertex zero_ = 0;
  RotationSystem base_, rot_;
  std::vector<Face> faces_;
  std::vector<FaceId> dart_face_;
  FaceId outer_ = 0;
  std::vector<std::vector<std::pair<Vertex, EdgeId>>> adj_;
};

// r must be a rotation system over the poset's cover graph, with edge i
// being cover arc i. Face ids refer to trace_faces(r); they are kept.
// Without sentinel_after, the sentinel goes into the outer-face corner of
// x0 entered by the lowest-id edge; with it, into the corner right after
// that edge in x0's rotation, whose face then becomes the outer face.
EmbeddedCoverGraph attach_root(std::shared_ptr<const Poset> poset, const RotationSystem& r,
                               std::optional<FaceId> preferred_face = std::nullopt,
                               std::optional<EdgeId> sentinel_after = std::nullopt);

enum class Order { Left, Right, Equal };

// Left iff e comes before e2 walking clockwise around z from e0.
Order ze_compare(const EmbeddedCoverGraph& g, Vertex z, EdgeId e0, EdgeId e, EdgeId e2);

// Labels faces by connected component of the dual graph after removing the
// dual edges of cut edges. Faces with mask[f] == false are skipped (label
// kNoComponent) when a mask is given.
inline constexpr std::uint32_t kNoComponent = ~std::uint32_t{0};
std::vector<std::uint32_t> face_components(const EmbeddedCoverGraph& g,
                                           const std::vector<bool>& cut_edge,
                                           const std::vector<bool>* mask = nullptr);

enum class Location { On, Inside, Outside };

// The closed region bounded by a simple cycle of cover edges, or the
// degenerate region of a single edge (empty interior). The side holding
// the outer face is the exterior.
class Region {
 public:
  Region(const EmbeddedCoverGraph& g, const std::vector<EdgeId>& walk);

  Location locate(Vertex q) const;
  bool degenerate() const { return degenerate_; }
  const Bits& on() const { return on_; }
  const Bits& inside() const { return inside_; }
  bool face_inside(FaceId f) const { return face_inside_[f]; }
  const std::vector<bool>& boundary_edges() const { return cut_; }

 private:
  bool degenerate_ = false;
  Bits on_, inside_;
  std::vector<bool> face_inside_;
  std::vector<bool> cut_;
};

Location cycle_interior_membership(const EmbeddedCoverGraph& g, const std::vector<EdgeId>& walk,
                                   Vertex q);

}  // namespace pzr
