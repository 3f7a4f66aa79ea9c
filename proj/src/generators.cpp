#include "generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "error.hpp"

namespace pzr {

nlohmann::json to_json(const GenSpec& s) {
  nlohmann::json j = {{"family", s.family}, {"prng", s.prng}};
  if (s.d) j["d"] = s.d;
  if (s.depth) j["depth"] = s.depth;
  if (s.n) j["n"] = s.n;
  if (s.family == "random_planar_zero" || s.family == "random_single_source") j["seed"] = s.seed;
  if (s.family == "random_single_source") j["cycle_fraction"] = s.cycle_fraction;
  return j;
}

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

double draw_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

namespace {

// Direction of edge e leaving v, in radians.
double edge_angle(const Drawing& d, Vertex v, const Arc& a) {
  Vertex w = a.tail == v ? a.head : a.tail;
  if (d.at_infinity && w == *d.at_infinity) return std::atan2(d.xy[v][1], d.xy[v][0]);
  if (d.at_infinity && v == *d.at_infinity) {
    // Seen from infinity the plane is mirrored, so clockwise there is
    // increasing polar angle of the neighbour.
    return -std::atan2(d.xy[w][1], d.xy[w][0]);
  }
  return std::atan2(d.xy[w][1] - d.xy[v][1], d.xy[w][0] - d.xy[v][0]);
}

}  // namespace

RotationSystem rotation_of(const Drawing& d) {
  std::vector<UEdge> edges;
  std::vector<std::vector<EdgeId>> rot(d.n);
  for (EdgeId e = 0; e < d.arcs.size(); ++e) {
    edges.push_back({d.arcs[e].tail, d.arcs[e].head});
    rot[d.arcs[e].tail].push_back(e);
    rot[d.arcs[e].head].push_back(e);
  }
  for (Vertex v = 0; v < d.n; ++v) {
    // Clockwise = decreasing angle.
    std::sort(rot[v].begin(), rot[v].end(), [&](EdgeId a, EdgeId b) {
      return edge_angle(d, v, d.arcs[a]) > edge_angle(d, v, d.arcs[b]);
    });
  }
  return RotationSystem(d.n, std::move(edges), std::move(rot));
}

EdgeId edge_before_direction(const Drawing& d, Vertex v, double angle) {
  // The edge with the smallest angle strictly above `angle`, cyclically.
  EdgeId best = ~EdgeId{0};
  double best_gap = 10.0;
  for (EdgeId e = 0; e < d.arcs.size(); ++e) {
    if (d.arcs[e].tail != v && d.arcs[e].head != v) continue;
    double gap = std::remainder(edge_angle(d, v, d.arcs[e]) - angle, 2 * std::numbers::pi);
    if (gap <= 0) gap += 2 * std::numbers::pi;
    if (gap < best_gap) {
      best_gap = gap;
      best = e;
    }
  }
  if (best == ~EdgeId{0}) fail(Errc::BadParam, "vertex has no edges");
  return best;
}

Instance instance_from_drawing(GenSpec spec, const Drawing& d, double sentinel_angle) {
  Instance inst;
  inst.spec = std::move(spec);
  Digraph cover{d.n, d.arcs};
  inst.poset = std::make_shared<const Poset>(Poset::from_cover(cover));
  inst.rotation = rotation_of(d);
  Vertex x0 = inst.poset->require_zero();
  if (!d.arcs.empty()) inst.sentinel_after = edge_before_direction(d, x0, sentinel_angle);
  inst.embed();  // validates Euler and the sentinel face
  return inst;
}

Poset gen_standard_example(unsigned d) {
  if (d < 2) fail(Errc::BadParam, "standard example needs d >= 2");
  Digraph g;
  g.vertex_count = 2 * d;
  for (Vertex i = 0; i < d; ++i) {
    for (Vertex j = 0; j < d; ++j) {
      if (i != j) g.arcs.push_back({i, d + j});
    }
  }
  return Poset::from_cover(g);
}

Poset gen_chain(std::size_t n) {
  Digraph g;
  g.vertex_count = n;
  for (Vertex i = 0; i + 1 < n; ++i) g.arcs.push_back({i, i + 1});
  return Poset::from_cover(g);
}

Instance gen_wheel(unsigned d) {
  if (d < 2) fail(Errc::BadParam, "wheel needs d >= 2");
  const double pi = std::numbers::pi;
  Drawing dr;
  // Ids: x0, rings t = 1..d-1 (w^t_i), b_0..b_{d-1}, top.
  auto ring = [d](unsigned t, unsigned i) { return static_cast<Vertex>(1 + (t - 1) * d + (i % d)); };
  const Vertex first_b = 1 + (d - 1) * d;
  const Vertex top = first_b + d;
  dr.n = top + 1;
  dr.xy.resize(dr.n);
  dr.at_infinity = top;
  dr.xy[0] = {0.0, 0.0};
  auto polar = [&](double radius, double angle) { return std::array<double, 2>{radius * std::cos(angle), radius * std::sin(angle)}; };
  auto theta = [&](unsigned t, unsigned i) { return 2 * pi * i / d + (t - 1) * pi / d; };
  for (unsigned t = 1; t < d; ++t) {
    for (unsigned i = 0; i < d; ++i) dr.xy[ring(t, i)] = polar(t, theta(t, i));
  }
  for (unsigned j = 0; j < d; ++j) dr.xy[first_b + j] = polar(d, theta(d - 1, j + 1));
  dr.xy[top] = {0.0, 0.0};

  for (unsigned i = 0; i < d; ++i) dr.arcs.push_back({0, ring(1, i)});
  for (unsigned t = 1; t + 1 < d; ++t) {
    for (unsigned i = 0; i < d; ++i) {
      dr.arcs.push_back({ring(t, i), ring(t + 1, i + d - 1)});
      dr.arcs.push_back({ring(t, i), ring(t + 1, i)});
    }
  }
  for (unsigned j = 0; j < d; ++j) dr.arcs.push_back({ring(d - 1, j + 1), first_b + j});
  for (unsigned j = 0; j < d; ++j) dr.arcs.push_back({first_b + j, top});

  GenSpec spec;
  spec.family = "wheel";
  spec.d = d;
  Instance inst = instance_from_drawing(spec, dr, pi / d);
  inst.names.assign(dr.n, "");
  inst.names[0] = "x0";
  for (unsigned t = 1; t < d; ++t) {
    for (unsigned i = 0; i < d; ++i) {
      inst.names[ring(t, i)] = t == 1 ? "a" + std::to_string(i) : "w" + std::to_string(t) + "_" + std::to_string(i);
    }
  }
  for (unsigned j = 0; j < d; ++j) inst.names[first_b + j] = "b" + std::to_string(j);
  inst.names[top] = "top";

  // Defining properties: unique minimum and maximum, S_d on a_i, b_j.
  const Poset& p = *inst.poset;
  std::size_t maxima = 0;
  for (Vertex v = 0; v < p.size(); ++v) maxima += p.upper_covers(v).empty();
  if (maxima != 1) fail(Errc::ValidationFailed, "wheel does not have a unique maximum");
  for (unsigned i = 0; i < d; ++i) {
    for (unsigned j = 0; j < d; ++j) {
      Vertex a = ring(1, i), b = first_b + j;
      if (p.leq(a, b) != (i != j)) fail(Errc::ValidationFailed, "wheel misses its standard example");
      if (i != j && (p.comparable(ring(1, i), ring(1, j)) || p.comparable(first_b + i, first_b + j))) {
        fail(Errc::ValidationFailed, "wheel standard example sides are not antichains");
      }
    }
  }
  return inst;
}

NestedLayout nested_layout(unsigned depth) {
  NestedLayout l;
  l.zero = 0;
  for (unsigned i = 0; i < depth; ++i) {
    l.left.push_back(4 * i + 1);
    l.right.push_back(4 * i + 2);
    l.top.push_back(4 * i + 3);
    l.hanging.push_back(4 * i + 4);
  }
  return l;
}

Instance gen_nested(unsigned depth) {
  if (depth < 1) fail(Errc::BadParam, "nested needs depth >= 1");
  NestedLayout l = nested_layout(depth);
  Drawing dr;
  dr.n = 1 + 4 * depth;
  dr.xy.resize(dr.n);
  std::array<double, 2> s{0.0, 0.0}, t{0.0, 20.0};
  double w = 10.0;
  dr.xy[0] = s;
  Vertex base = 0;
  for (unsigned i = 0; i < depth; ++i) {
    std::array<double, 2> mid{(s[0] + t[0]) / 2, (s[1] + t[1]) / 2};
    dr.xy[l.left[i]] = {mid[0] - w, mid[1]};
    dr.xy[l.right[i]] = {mid[0] + w, mid[1]};
    dr.xy[l.top[i]] = t;
    dr.xy[l.hanging[i]] = {s[0] + 0.2 * (t[0] - s[0]), s[1] + 0.2 * (t[1] - s[1])};
    dr.arcs.push_back({base, l.left[i]});
    dr.arcs.push_back({base, l.right[i]});
    dr.arcs.push_back({l.left[i], l.top[i]});
    dr.arcs.push_back({l.right[i], l.top[i]});
    dr.arcs.push_back({base, l.hanging[i]});
    std::array<double, 2> next{t[0] + 0.6 * (s[0] - t[0]), t[1] + 0.6 * (s[1] - t[1])};
    s = t;
    t = next;
    w *= 0.4;
    base = l.top[i];
  }
  GenSpec spec;
  spec.family = "nested";
  spec.depth = depth;
  Instance inst = instance_from_drawing(spec, dr, -std::numbers::pi / 2);
  inst.names.assign(dr.n, "");
  inst.names[0] = "x0";
  for (unsigned i = 0; i < depth; ++i) {
    std::string k = std::to_string(i + 1);
    inst.names[l.left[i]] = "l" + k;
    inst.names[l.right[i]] = "r" + k;
    inst.names[l.top[i]] = "y" + k;
    inst.names[l.hanging[i]] = "c" + k;
  }
  return inst;
}

Instance glue_at_zero(const std::vector<Instance>& parts, GenSpec spec) {
  // New ids: shared zero 0, then each part's other elements in order.
  std::size_t n = 1;
  std::vector<std::vector<Vertex>> remap;
  for (const Instance& part : parts) {
    Vertex x0 = part.poset->require_zero();
    std::vector<Vertex> m(part.poset->size());
    for (Vertex v = 0; v < m.size(); ++v) m[v] = v == x0 ? 0 : static_cast<Vertex>(n++);
    remap.push_back(std::move(m));
  }
  Digraph cover;
  cover.vertex_count = n;
  std::vector<UEdge> edges;
  std::vector<std::vector<EdgeId>> rot(n);
  std::vector<std::string> names(n);
  names[0] = "x0";
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const Instance& part = parts[k];
    EdgeId offset = static_cast<EdgeId>(cover.arcs.size());
    for (const Arc& a : part.poset->cover_arcs()) {
      cover.arcs.push_back({remap[k][a.tail], remap[k][a.head]});
      edges.push_back({remap[k][a.tail], remap[k][a.head]});
    }
    EmbeddedCoverGraph emb = part.embed();
    Vertex x0 = emb.zero();
    for (Vertex v = 0; v < part.poset->size(); ++v) {
      if (v == x0) continue;
      for (EdgeId e : part.rotation.rotation(v)) rot[remap[k][v]].push_back(e + offset);
    }
    // Root edges in clockwise order starting right after the sentinel.
    const auto& rx = emb.rotation().rotation(x0);
    std::size_t at = emb.rotation().position(x0, emb.sentinel());
    for (std::size_t i = 1; i < rx.size(); ++i) rot[0].push_back(rx[(at + i) % rx.size()] + offset);
    for (Vertex v = 0; v < part.poset->size(); ++v) {
      if (v != x0 && v < part.names.size()) names[remap[k][v]] = part.names[v];
    }
  }
  Instance inst;
  inst.spec = std::move(spec);
  inst.poset = std::make_shared<const Poset>(Poset::from_cover(cover));
  inst.rotation = RotationSystem(n, std::move(edges), std::move(rot));
  if (!inst.rotation.rotation(0).empty()) inst.sentinel_after = inst.rotation.rotation(0).back();
  inst.names = std::move(names);
  inst.embed();
  return inst;
}

Instance gen_random_planar_zero(std::size_t n, std::uint64_t seed) {
  if (n < 1) fail(Errc::BadParam, "random poset needs n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<UEdge> edges;
  std::vector<std::vector<EdgeId>> rot(1);
  for (Vertex x = 1; x < n; ++x) {
    rot.emplace_back();
    if (x == 1) {
      edges.push_back({0, 1});
      rot[0].push_back(0);
      rot[1].push_back(0);
      continue;
    }
    RotationSystem r(x, edges, std::vector<std::vector<EdgeId>>(rot.begin(), rot.begin() + x));
    auto faces = trace_faces(r);
    const Face& f = faces[draw_below(rng, faces.size())];
    // Corners of f, listed in traversal order: (vertex, entering edge).
    std::vector<std::pair<Vertex, EdgeId>> corners;
    for (DartId d : f.boundary) corners.push_back({r.dart_head(d), d / 2});
    std::size_t want = 1 + draw_below(rng, 3);
    std::vector<std::size_t> order(corners.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[draw_below(rng, i)]);
    std::vector<std::size_t> chosen;
    for (std::size_t i : order) {
      if (chosen.size() == want) break;
      bool dup = std::any_of(chosen.begin(), chosen.end(),
                             [&](std::size_t c) { return corners[c].first == corners[i].first; });
      if (!dup) chosen.push_back(i);
    }
    std::sort(chosen.begin(), chosen.end());
    for (std::size_t i : chosen) {
      auto [c, e_in] = corners[i];
      EdgeId e = static_cast<EdgeId>(edges.size());
      edges.push_back({c, x});
      auto& rc = rot[c];
      rc.insert(std::find(rc.begin(), rc.end(), e_in) + 1, e);
    }
    // Around x the corners appear in reverse traversal order.
    for (auto it = chosen.rbegin(); it != chosen.rend(); ++it) {
      EdgeId e = 0;
      for (EdgeId k = 0; k < edges.size(); ++k) {
        if (edges[k].v == x && edges[k].u == corners[*it].first) e = k;
      }
      rot[x].push_back(e);
    }
  }

  // Drop transitive arcs, carrying the rotation along.
  Digraph dag;
  dag.vertex_count = n;
  for (const UEdge& e : edges) dag.arcs.push_back({e.u, e.v});
  auto reach = reachability(dag);
  std::vector<std::vector<Vertex>> out(n);
  for (const UEdge& e : edges) out[e.u].push_back(e.v);
  std::vector<EdgeId> new_id(edges.size(), ~EdgeId{0});
  Digraph cover;
  cover.vertex_count = n;
  std::vector<UEdge> kept;
  for (EdgeId k = 0; k < edges.size(); ++k) {
    auto [u, v] = edges[k];
    bool implied = std::any_of(out[u].begin(), out[u].end(), [&](Vertex z) { return z != v && reach[z][v]; });
    if (implied) continue;
    new_id[k] = static_cast<EdgeId>(kept.size());
    kept.push_back(edges[k]);
    cover.arcs.push_back({u, v});
  }
  for (auto& r : rot) {
    std::vector<EdgeId> nr;
    for (EdgeId e : r) {
      if (new_id[e] != ~EdgeId{0}) nr.push_back(new_id[e]);
    }
    r = std::move(nr);
  }

  Instance inst;
  inst.spec.family = "random_planar_zero";
  inst.spec.n = n;
  inst.spec.seed = seed;
  inst.poset = std::make_shared<const Poset>(Poset::from_cover(cover));
  inst.rotation = RotationSystem(n, std::move(kept), std::move(rot));
  inst.embed();
  return inst;
}

Digraph gen_random_single_source_digraph(std::size_t n, std::uint64_t seed, double cycle_fraction) {
  if (cycle_fraction < 0 || cycle_fraction > 1) fail(Errc::BadParam, "cycle_fraction outside [0,1]");
  Instance base = gen_random_planar_zero(n, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  Digraph g;
  g.vertex_count = n;
  for (const Arc& a : base.poset->cover_arcs()) {
    g.arcs.push_back(a);
    if (draw_unit(rng) < cycle_fraction) g.arcs.push_back({a.head, a.tail});
  }
  return g;
}

Instance gen_pathology() {
  // Found by a seeded search over random straight-line drawings: inside
  // pairs (17,11) and (14,15) have depths of different parity and form a
  // strict alternating cycle. Wheel(5) is glued on at the zero to supply
  // dangerous pairs and tilting comparabilities.
  Drawing cyc;
  cyc.n = 21;
  cyc.xy = {{0.500, -3.000}, {0.408, 0.352}, {0.988, 0.959}, {0.456, 0.271}, {0.606, 0.378}, {0.544, 0.783},
            {0.952, 0.926},  {0.899, 0.799}, {0.182, 0.429}, {0.837, 0.361}, {0.073, 0.976}, {0.916, 0.802},
            {0.183, 0.920},  {0.792, 0.016}, {0.825, 0.588}, {0.466, 0.761}, {0.840, 0.733}, {0.352, 0.468},
            {0.231, 0.109},  {0.641, 0.464}, {0.435, 0.665}};
  cyc.arcs = {{0, 10},  {0, 13},  {0, 18},  {1, 4},   {1, 8},   {2, 6},   {2, 9},   {3, 1},
              {4, 19},  {6, 11},  {6, 15},  {8, 12},  {8, 17},  {9, 19},  {10, 2},  {10, 8},
              {11, 16}, {12, 6},  {12, 20}, {13, 2},  {13, 3},  {14, 11}, {15, 5},  {16, 5},
              {16, 7},  {17, 20}, {18, 3},  {19, 14}, {19, 20}, {20, 15}, {20, 16}};
  GenSpec part;
  part.family = "pathology";
  Instance piece = instance_from_drawing(part, cyc, -std::numbers::pi / 2);
  piece.names.assign(cyc.n, "");
  for (Vertex v = 1; v < cyc.n; ++v) piece.names[v] = "p" + std::to_string(v);
  GenSpec spec;
  spec.family = "pathology";
  return glue_at_zero({piece, gen_wheel(5)}, spec);
}

}  // namespace pzr
