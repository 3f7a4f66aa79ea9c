#include "planar.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "error.hpp"

namespace pzr {

RotationSystem::RotationSystem(std::size_t vertex_count, std::vector<UEdge> edges,
                               std::vector<std::vector<EdgeId>> rotation)
    : edges_(std::move(edges)), rot_(std::move(rotation)) {
  if (rot_.size() != vertex_count) fail(Errc::MalformedRotation, "rotation count != vertex count");
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  pos_.assign(edges_.size(), {kUnset, kUnset});
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if (edges_[e].u >= vertex_count || edges_[e].v >= vertex_count) {
      fail(Errc::MalformedRotation, "edge " + std::to_string(e) + " endpoint out of range");
    }
    if (edges_[e].u == edges_[e].v) fail(Errc::MalformedRotation, "self-loop " + std::to_string(e));
  }
  for (Vertex v = 0; v < rot_.size(); ++v) {
    for (std::size_t i = 0; i < rot_[v].size(); ++i) {
      EdgeId e = rot_[v][i];
      if (e >= edges_.size() || (edges_[e].u != v && edges_[e].v != v)) {
        fail(Errc::MalformedRotation,
             "rotation of vertex " + std::to_string(v) + " lists non-incident edge " + std::to_string(e));
      }
      auto& slot = pos_[e][edges_[e].u == v ? 0 : 1];
      if (slot != kUnset) {
        fail(Errc::MalformedRotation,
             "edge " + std::to_string(e) + " repeated in rotation of " + std::to_string(v));
      }
      slot = static_cast<std::uint32_t>(i);
    }
  }
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if (pos_[e][0] == kUnset || pos_[e][1] == kUnset) {
      fail(Errc::MalformedRotation, "edge " + std::to_string(e) + " missing from a rotation");
    }
  }
}

EdgeId RotationSystem::succ(Vertex v, EdgeId e) const {
  const auto& r = rot_[v];
  return r[(position(v, e) + 1) % r.size()];
}

RotationSystem RotationSystem::mirrored() const {
  auto rot = rot_;
  for (auto& r : rot) std::reverse(r.begin(), r.end());
  std::size_t n = rot.size();
  return RotationSystem(n, edges_, std::move(rot));
}

std::vector<Face> trace_faces(const RotationSystem& r) {
  std::vector<Face> faces;
  if (r.edge_count() == 0) {
    faces.push_back(Face{0, {}});
    return faces;
  }
  std::vector<bool> seen(2 * r.edge_count(), false);
  for (DartId start = 0; start < seen.size(); ++start) {
    if (seen[start]) continue;
    Face f;
    f.id = static_cast<FaceId>(faces.size());
    DartId d = start;
    do {
      if (seen[d]) fail(Errc::MalformedRotation, "face trace revisits a dart");
      seen[d] = true;
      f.boundary.push_back(d);
      Vertex v = r.dart_head(d);
      EdgeId next = r.succ(v, d / 2);
      d = r.dart_from(next, v);
    } while (d != start);
    faces.push_back(std::move(f));
  }
  return faces;
}

void check_euler(const RotationSystem& r, const std::vector<Face>& faces) {
  long long chi = static_cast<long long>(r.vertex_count()) - static_cast<long long>(r.edge_count()) +
                  static_cast<long long>(faces.size());
  if (chi != 2) {
    fail(Errc::MalformedRotation, "rotation is not planar: V - E + F = " + std::to_string(chi));
  }
}

bool is_connected(std::size_t vertex_count, const std::vector<UEdge>& edges) {
  if (vertex_count == 0) return true;
  std::vector<std::vector<Vertex>> adj(vertex_count);
  for (const UEdge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<bool> seen(vertex_count, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == vertex_count;
}

RotationSystem compute_embedding(std::size_t vertex_count, const std::vector<UEdge>& edges) {
  if (!is_connected(vertex_count, edges)) fail(Errc::Disconnected, "graph is not connected");
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const UEdge& e : edges) {
    if (e.u >= vertex_count || e.v >= vertex_count) fail(Errc::BadInput, "edge endpoint out of range");
    if (e.u == e.v) fail(Errc::BadInput, "self-loop in cover graph");
    if (!seen.insert(std::minmax(e.u, e.v)).second) fail(Errc::BadInput, "parallel edges in cover graph");
  }

  using namespace boost;
  using G = adjacency_list<vecS, vecS, undirectedS, property<vertex_index_t, int>,
                           property<edge_index_t, int>>;
  using EdgeDesc = graph_traits<G>::edge_descriptor;
  G g(vertex_count);
  for (EdgeId i = 0; i < edges.size(); ++i) {
    add_edge(edges[i].u, edges[i].v, property<edge_index_t, int>(static_cast<int>(i)), g);
  }
  std::vector<std::vector<EdgeDesc>> storage(vertex_count);
  auto embedding = make_iterator_property_map(storage.begin(), get(vertex_index, g));
  std::vector<EdgeDesc> kuratowski;
  bool planar = boyer_myrvold_planarity_test(boyer_myrvold_params::graph = g,
                                             boyer_myrvold_params::embedding = embedding,
                                             boyer_myrvold_params::kuratowski_subgraph =
                                                 std::back_inserter(kuratowski));
  if (!planar) {
    nlohmann::json witness = nlohmann::json::array();
    for (const EdgeDesc& e : kuratowski) witness.push_back(get(edge_index, g, e));
    std::sort(witness.begin(), witness.end());
    fail(Errc::NonPlanar, "cover graph is not planar", {{"kuratowski_edges", witness}});
  }
  std::vector<std::vector<EdgeId>> rot(vertex_count);
  for (Vertex v = 0; v < vertex_count; ++v) {
    for (const EdgeDesc& e : storage[v]) rot[v].push_back(static_cast<EdgeId>(get(edge_index, g, e)));
  }
  RotationSystem r(vertex_count, edges, std::move(rot));
  check_euler(r, trace_faces(r));
  return r;
}

EmbeddedCoverGraph attach_root(std::shared_ptr<const Poset> poset, const RotationSystem& r,
                               std::optional<FaceId> preferred_face,
                               std::optional<EdgeId> sentinel_after) {
  const auto& covers = poset->cover_arcs();
  const std::size_t n = poset->size();
  if (r.vertex_count() != n || r.edge_count() != covers.size()) {
    fail(Errc::NotEmbedded, "rotation system does not match the cover graph");
  }
  for (EdgeId e = 0; e < covers.size(); ++e) {
    const UEdge& u = r.edges()[e];
    if (std::minmax(u.u, u.v) != std::minmax(covers[e].tail, covers[e].head)) {
      fail(Errc::NotEmbedded, "rotation edge " + std::to_string(e) + " is not cover arc " + std::to_string(e));
    }
  }
  Vertex x0 = poset->require_zero();
  auto base_faces = trace_faces(r);
  check_euler(r, base_faces);

  auto touches_root = [&](const Face& f) {
    if (f.boundary.empty()) return n == 1;
    return std::any_of(f.boundary.begin(), f.boundary.end(),
                       [&](DartId d) { return r.dart_head(d) == x0; });
  };
  const EdgeId sentinel = static_cast<EdgeId>(covers.size());
  const Vertex virt = static_cast<Vertex>(n);
  std::optional<EdgeId> corner = sentinel_after;
  if (corner) {
    if (*corner >= covers.size() || (covers[*corner].tail != x0 && covers[*corner].head != x0)) {
      fail(Errc::NotIncident, "sentinel corner edge is not incident to the zero");
    }
  }
  FaceId outer;
  if (corner) {
    FaceId f = 0;
    for (const Face& face : base_faces) {
      for (DartId d : face.boundary) {
        if (d / 2 == *corner && r.dart_head(d) == x0) f = face.id;
      }
    }
    if (preferred_face && *preferred_face != f) {
      fail(Errc::RootNotOnFace, "sentinel corner does not lie on the preferred face");
    }
    outer = f;
  } else if (preferred_face) {
    if (*preferred_face >= base_faces.size() || !touches_root(base_faces[*preferred_face])) {
      fail(Errc::RootNotOnFace, "face " + std::to_string(*preferred_face) + " is not incident to the zero");
    }
    outer = *preferred_face;
  } else {
    auto it = std::find_if(base_faces.begin(), base_faces.end(), touches_root);
    if (it == base_faces.end()) fail(Errc::RootNotOnFace, "zero lies on no face");
    outer = it->id;
  }

  auto rot = r.rotations();
  auto edges = r.edges();
  edges.push_back({x0, virt});
  if (rot[x0].empty()) {
    rot[x0].push_back(sentinel);
  } else {
    if (!corner) {
      // Corner of the outer face at x0 entered by the lowest-id edge.
      EdgeId best = ~EdgeId{0};
      for (DartId d : base_faces[outer].boundary) {
        if (r.dart_head(d) == x0) best = std::min(best, d / 2);
      }
      corner = best;
    }
    auto& rx = rot[x0];
    rx.insert(rx.begin() + static_cast<long>(r.position(x0, *corner)) + 1, sentinel);
  }
  rot.push_back({sentinel});

  EmbeddedCoverGraph g;
  g.poset_ = std::move(poset);
  g.zero_ = x0;
  g.base_ = r;
  g.rot_ = RotationSystem(n + 1, std::move(edges), std::move(rot));
  auto faces = trace_faces(g.rot_);
  check_euler(g.rot_, faces);
  if (faces.size() != base_faces.size()) {
    fail(Errc::MalformedRotation, "sentinel insertion changed the face count");
  }

  // Keep the face ids of the supplied rotation.
  std::vector<FaceId> base_dart_face(2 * covers.size(), 0);
  for (const Face& f : base_faces) {
    for (DartId d : f.boundary) base_dart_face[d] = f.id;
  }
  std::vector<Face> renumbered(faces.size());
  for (Face& f : faces) {
    FaceId id = 0;
    for (DartId d : f.boundary) {
      if (d / 2 != sentinel) {
        id = base_dart_face[d];
        break;
      }
    }
    f.id = id;
    renumbered[id] = std::move(f);
  }
  g.faces_ = std::move(renumbered);
  g.dart_face_.assign(2 * (covers.size() + 1), 0);
  for (const Face& f : g.faces_) {
    for (DartId d : f.boundary) g.dart_face_[d] = f.id;
  }
  g.outer_ = outer;
  if (g.dart_face_[2 * sentinel] != outer || g.dart_face_[2 * sentinel + 1] != outer) {
    fail(Errc::MalformedRotation, "sentinel does not border the outer face");
  }

  g.adj_.resize(n);
  for (EdgeId e = 0; e < covers.size(); ++e) {
    g.adj_[covers[e].tail].push_back({covers[e].head, e});
    g.adj_[covers[e].head].push_back({covers[e].tail, e});
  }
  for (auto& a : g.adj_) std::sort(a.begin(), a.end());
  return g;
}

std::optional<EdgeId> EmbeddedCoverGraph::edge_between(Vertex u, Vertex v) const {
  if (u >= adj_.size()) return std::nullopt;
  const auto& a = adj_[u];
  auto it = std::lower_bound(a.begin(), a.end(), std::pair<Vertex, EdgeId>{v, 0});
  if (it == a.end() || it->first != v) return std::nullopt;
  return it->second;
}

std::size_t EmbeddedCoverGraph::ze_rank(Vertex z, EdgeId e0, EdgeId e) const {
  for (EdgeId x : {e0, e}) {
    if (x >= rot_.edge_count() || (rot_.edges()[x].u != z && rot_.edges()[x].v != z)) {
      fail(Errc::NotIncident, "edge " + std::to_string(x) + " is not incident to " + std::to_string(z));
    }
  }
  std::size_t deg = rot_.rotation(z).size();
  return (rot_.position(z, e) + deg - rot_.position(z, e0)) % deg;
}

Order ze_compare(const EmbeddedCoverGraph& g, Vertex z, EdgeId e0, EdgeId e, EdgeId e2) {
  std::size_t a = g.ze_rank(z, e0, e), b = g.ze_rank(z, e0, e2);
  if (a == b) return Order::Equal;
  return a < b ? Order::Left : Order::Right;
}

std::vector<std::uint32_t> face_components(const EmbeddedCoverGraph& g,
                                           const std::vector<bool>& cut_edge,
                                           const std::vector<bool>* mask) {
  const auto& faces = g.faces();
  std::vector<std::uint32_t> comp(faces.size(), kNoComponent);
  std::uint32_t next = 0;
  std::vector<FaceId> stack;
  for (FaceId s = 0; s < faces.size(); ++s) {
    if (comp[s] != kNoComponent || (mask && !(*mask)[s])) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      FaceId f = stack.back();
      stack.pop_back();
      for (DartId d : faces[f].boundary) {
        EdgeId e = d / 2;
        if (e < cut_edge.size() && cut_edge[e]) continue;
        FaceId h = g.face_of_dart(d ^ 1);
        if (comp[h] != kNoComponent || (mask && !(*mask)[h])) continue;
        comp[h] = next;
        stack.push_back(h);
      }
    }
    ++next;
  }
  return comp;
}

Region::Region(const EmbeddedCoverGraph& g, const std::vector<EdgeId>& walk) {
  const std::size_t n = g.element_count();
  on_.resize(n);
  inside_.resize(n);
  face_inside_.assign(g.faces().size(), false);
  cut_.assign(g.edge_count() + 1, false);
  if (walk.empty()) fail(Errc::NotACycle, "empty walk");
  std::vector<int> degree(n, 0);
  for (EdgeId e : walk) {
    if (e >= g.edge_count()) fail(Errc::NotACycle, "walk uses a non-cover edge");
    if (cut_[e]) fail(Errc::NotACycle, "walk repeats edge " + std::to_string(e));
    cut_[e] = true;
    ++degree[g.lower(e)];
    ++degree[g.upper(e)];
    on_.set(g.lower(e));
    on_.set(g.upper(e));
  }
  if (walk.size() == 1) {
    degenerate_ = true;
    return;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] != 0 && degree[v] != 2) fail(Errc::NotACycle, "walk is not a simple cycle");
  }
  // One closed walk through all of it.
  Vertex start = g.lower(walk.front());
  Vertex at = start;
  EdgeId via = walk.front();
  std::size_t steps = 0;
  do {
    at = g.other(via, at);
    ++steps;
    const auto& rot = g.rotation().rotation(at);
    EdgeId next = via;
    for (EdgeId e : rot) {
      if (e != via && e < cut_.size() && cut_[e] && e != g.sentinel()) {
        next = e;
        break;
      }
    }
    via = next;
  } while (at != start && steps <= walk.size());
  if (steps != walk.size() || at != start) fail(Errc::NotACycle, "walk is not a single cycle");

  auto comp = face_components(g, cut_);
  std::uint32_t outside = comp[g.outer_face()];
  std::set<std::uint32_t> sides(comp.begin(), comp.end());
  if (sides.size() != 2) fail(Errc::NotACycle, "cycle does not split the plane in two");
  for (FaceId f = 0; f < comp.size(); ++f) face_inside_[f] = comp[f] != outside;
  for (Vertex v = 0; v < n; ++v) {
    if (on_[v]) continue;
    const auto& rot = g.rotation().rotation(v);
    if (rot.empty()) continue;
    if (face_inside_[g.face_left_of(rot.front(), v)]) inside_.set(v);
  }
}

Location Region::locate(Vertex q) const {
  if (q >= on_.size()) return Location::Outside;
  if (on_[q]) return Location::On;
  return inside_[q] ? Location::Inside : Location::Outside;
}

Location cycle_interior_membership(const EmbeddedCoverGraph& g, const std::vector<EdgeId>& walk,
                                   Vertex q) {
  return Region(g, walk).locate(q);
}

}  // namespace pzr
