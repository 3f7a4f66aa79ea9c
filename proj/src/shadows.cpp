#include "shadows.hpp"

#include <algorithm>
#include <string>

#include "error.hpp"

namespace pzr {

namespace {

std::string str(Vertex v) { return std::to_string(v); }

std::vector<EdgeId> edges_along(const EmbeddedCoverGraph& g, const std::vector<Vertex>& path) {
  std::vector<EdgeId> out;
  for (std::size_t k = 1; k < path.size(); ++k) {
    auto e = g.edge_between(path[k - 1], path[k]);
    if (!e) fail(Errc::ConstructionFailed, "consecutive path vertices " + str(path[k - 1]) + "," + str(path[k]) + " are not adjacent");
    out.push_back(*e);
  }
  return out;
}

std::vector<Vertex> segment(const WitnessTree& t, Vertex from, Vertex to) {
  auto p = t.path(to);
  return std::vector<Vertex>(p.begin() + t.depth(from), p.end());
}

}  // namespace

bool Block::contains(Vertex v) const {
  if (region) return region->on()[v] || region->inside()[v];
  return v == min || v == max;
}

Shadows::Shadows(const EmbeddedCoverGraph& g, const WitnessTree& left, const WitnessTree& right)
    : g_(g), left_(left), right_(right) {
  const std::size_t n = g.element_count();
  const Poset& p = g.poset();
  const Vertex x0 = g.zero();
  profiles_.resize(n);
  for (Vertex z = 0; z < n; ++z) {
    ShadowProfile& pr = profiles_[z];
    pr.z = z;
    for (Vertex v : left.path(z)) {
      if (right.on_path(v, z)) pr.common.push_back(v);
    }
  }

  blocks_.resize(n);
  for (Vertex y = 0; y < n; ++y) {
    if (y == x0) continue;
    const auto& c = profiles_[y].common;
    Block& b = blocks_[y];
    b.key = b.max = y;
    b.min = c[c.size() - 2];
    b.left_side = segment(left, b.min, y);
    b.right_side = segment(right, b.min, y);
    b.left_edges = edges_along(g, b.left_side);
    b.right_edges = edges_along(g, b.right_side);
    b.degenerate = b.left_edges.size() == 1 && b.right_edges.size() == 1;
    if (b.degenerate) continue;
    std::vector<EdgeId> cycle = b.left_edges;
    cycle.insert(cycle.end(), b.right_edges.rbegin(), b.right_edges.rend());
    b.region.emplace(g, cycle);
  }

  for (Vertex z = 0; z < n; ++z) {
    ShadowProfile& pr = profiles_[z];
    const std::size_t m = pr.common.size() - 1;
    pr.reversing.assign(m + 1, false);
    pr.bounds = {0};
    if (z == x0) {
      pr.sd = -1;
      continue;
    }
    pr.sd = 0;
    for (std::size_t i = 1; i <= m; ++i) {
      // Common points of z_i form a prefix of those of z.
      if (blocks_[pr.common[i]].min != pr.common[i - 1]) {
        fail(Errc::ValidationFailed, "common points of " + str(pr.common[i]) + " are not a prefix of those of " + str(z));
      }
      if (i < m && blocks_[pr.common[i]].interior(z)) {
        pr.reversing[i] = true;
        pr.bounds.push_back(i);
        ++pr.sd;
      }
    }
    pr.bounds.push_back(m);
  }

  partitions_.resize(n);
  for (Vertex y = 0; y < n; ++y) {
    if (y == x0) continue;
    const Block& b = blocks_[y];
    Bits in(n);
    if (b.region) {
      in = b.region->on() | b.region->inside();
    } else {
      in.set(b.min);
      in.set(b.max);
    }
    BlockPartition& part = partitions_[y];
    part.Z = in & p.down_set(y);
    part.B = in & p.up_set(y);
    part.B.reset(y);
    part.A = in - part.Z - part.B;
    part.A.reset(y);
  }
}

const Block& Shadows::block(Vertex key) const {
  if (key >= blocks_.size() || key == g_.zero()) fail(Errc::IndexOutOfRange, "no block with max " + str(key));
  return blocks_[key];
}

const BlockPartition& Shadows::partition(Vertex key) const {
  block(key);
  return partitions_[key];
}

ShadowSetId Shadows::shadow_set(Vertex z, std::size_t j) const {
  const ShadowProfile& pr = profiles_[z];
  if (pr.sd < 0 || j > static_cast<std::size_t>(pr.sd)) {
    fail(Errc::IndexOutOfRange, "shadow set " + std::to_string(j) + " of " + str(z) + " does not exist");
  }
  return {pr.common[pr.bounds[j]], pr.common[pr.bounds[j + 1]]};
}

std::vector<Vertex> Shadows::shadow_blocks(Vertex z, std::size_t j) const {
  shadow_set(z, j);
  const ShadowProfile& pr = profiles_[z];
  std::vector<Vertex> keys;
  for (std::size_t i = pr.bounds[j] + 1; i <= pr.bounds[j + 1]; ++i) keys.push_back(pr.common[i]);
  return keys;
}

std::size_t Shadows::pair_depth(Vertex a, Vertex b) const {
  if (a == b) fail(Errc::SameElement, "pair_depth of an element with itself");
  int sa = sd(a), sb = sd(b);
  if (sa < 0 || sb < 0) fail(Errc::IndexOutOfRange, "pair_depth involves the zero");
  const std::size_t top = static_cast<std::size_t>(std::max(sa, sb));
  for (std::size_t j = 0; j <= top; ++j) {
    auto ia = shadow_set(a, std::min<std::size_t>(j, sa));
    auto ib = shadow_set(b, std::min<std::size_t>(j, sb));
    if (!(ia == ib)) return j;
  }
  return top + 1;
}

Address Shadows::locate_inside_pair(Vertex a, Vertex b) const {
  std::size_t j = pair_depth(a, b);
  if (j > static_cast<std::size_t>(sd(b))) {
    fail(Errc::NoContainingBlock, "depth of (" + str(a) + "," + str(b) + ") exceeds sd(b)");
  }
  std::optional<Vertex> found;
  for (Vertex key : shadow_blocks(b, j)) {
    if (!blocks_[key].interior(a)) continue;
    if (found) fail(Errc::ValidationFailed, "two blocks of a shadow set hold " + str(a) + " inside");
    found = key;
  }
  if (!found) {
    fail(Errc::NoContainingBlock, "no block of shad_" + std::to_string(j) + "(" + str(b) + ") holds " + str(a),
         {{"a", a}, {"b", b}, {"j", j}});
  }
  return {static_cast<std::uint32_t>(j), *found};
}

Address address_of(const Shadows& s, const PairTable& pairs, Vertex a, Vertex b) {
  if (pairs(a, b) != PairType::Inside) fail(Errc::NotInside, "(" + str(a) + "," + str(b) + ") is not an inside pair");
  return s.locate_inside_pair(a, b);
}

AddressTable::AddressTable(const Shadows& s, const PairTable& pairs) : n_(pairs.size()) {
  addr_.resize(n_ * n_);
  has_.assign(n_ * n_, false);
  for (auto& r : rows_) r.assign(n_, Bits(n_));
  for (Vertex a = 0; a < n_; ++a) {
    for (Vertex b = 0; b < n_; ++b) {
      if (pairs(a, b) != PairType::Inside) continue;
      Address ad = s.locate_inside_pair(a, b);
      addr_[a * n_ + b] = ad;
      has_[a * n_ + b] = true;
      by_parity_[ad.j % 2].push_back({a, b});
      rows_[ad.j % 2][a].set(b);
    }
  }
}

std::optional<Address> AddressTable::operator()(Vertex a, Vertex b) const {
  if (!has_[a * n_ + b]) return std::nullopt;
  return addr_[a * n_ + b];
}

SeparatingPath build_separating_path(const Shadows& s, Vertex block_key, Vertex a, Vertex b) {
  const EmbeddedCoverGraph& g = s.graph();
  const Poset& p = g.poset();
  const Block& blk = s.block(block_key);
  const BlockPartition& part = s.partition(block_key);
  if (!part.A[a] || !part.B[b] || !p.less(a, b)) {
    fail(Errc::BadInput, "separating path needs a in A, b in B and a < b");
  }
  const WitnessTree& L = s.left();
  const Vertex x = blk.min, y = blk.max;
  if (!L.on_path(x, a) || !L.on_path(y, b)) {
    fail(Errc::ConstructionFailed, "block corners missing from the left witness paths");
  }
  SeparatingPath sp;
  sp.block = block_key;
  sp.a = a;
  sp.b = b;
  sp.vertices = segment(L, x, a);

  // Leftmost continuation from a towards b, until the upper segment
  // y W_L(b) b is met.
  auto on_upper = [&](Vertex v) { return L.on_path(v, b) && L.depth(v) >= L.depth(y); };
  Vertex at = a;
  EdgeId entering = L.entering_edge(a);
  while (!on_upper(at)) {
    std::optional<std::pair<std::size_t, Vertex>> best;
    for (Vertex w : p.upper_covers(at)) {
      if (!p.leq(w, b)) continue;
      std::size_t r = g.ze_rank(at, entering, *g.edge_between(at, w));
      if (!best || r < best->first) best = {r, w};
    }
    if (!best) fail(Errc::ConstructionFailed, "no continuation from " + str(at) + " towards " + str(b));
    entering = *g.edge_between(at, best->second);
    at = best->second;
    sp.vertices.push_back(at);
  }
  sp.peak = at;
  auto down = segment(L, y, at);
  for (auto it = down.rbegin() + 1; it != down.rend(); ++it) sp.vertices.push_back(*it);
  sp.edges = edges_along(g, sp.vertices);

  // Invariants: simple, below the peak, inside the closed block.
  auto sorted = sp.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    fail(Errc::ConstructionFailed, "separating path for (" + str(a) + "," + str(b) + ") is not simple",
         {{"path", sp.vertices}});
  }
  if (!part.B[sp.peak] && sp.peak != b) fail(Errc::ConstructionFailed, "peak outside B");
  for (Vertex v : sp.vertices) {
    if (!p.leq(v, sp.peak) || !p.leq(sp.peak, b)) fail(Errc::ConstructionFailed, "path element above the peak");
  }
  for (EdgeId e : sp.edges) {
    bool boundary = blk.region->boundary_edges()[e];
    if (!boundary && !blk.region->face_inside(g.face_of_dart(2 * e))) {
      fail(Errc::ConstructionFailed, "separating path leaves the block");
    }
  }
  return sp;
}

std::vector<std::optional<PathSide>> sides_of_path(const Shadows& s, const SeparatingPath& np) {
  const EmbeddedCoverGraph& g = s.graph();
  const Block& blk = s.block(np.block);
  const Region& reg = *blk.region;
  const std::size_t n = g.element_count();
  std::vector<bool> on_n(n, false), in_n(g.edge_count() + 1, false), cut = reg.boundary_edges();
  for (Vertex v : np.vertices) on_n[v] = true;
  for (EdgeId e : np.edges) in_n[e] = cut[e] = true;
  std::vector<bool> mask(g.faces().size());
  for (FaceId f = 0; f < mask.size(); ++f) mask[f] = reg.face_inside(f);
  auto comp = face_components(g, cut, &mask);

  std::vector<bool> left_edge(g.edge_count() + 1, false), right_edge(g.edge_count() + 1, false);
  for (EdgeId e : blk.left_edges) left_edge[e] = !in_n[e];
  for (EdgeId e : blk.right_edges) right_edge[e] = !in_n[e];
  std::vector<int> label(g.faces().size(), 0);  // bit 1 = left, bit 2 = right
  std::vector<int> comp_label(g.faces().size(), 0);
  for (FaceId f = 0; f < mask.size(); ++f) {
    if (!mask[f]) continue;
    for (DartId d : g.faces()[f].boundary) {
      if (left_edge[d / 2]) comp_label[comp[f]] |= 1;
      if (right_edge[d / 2]) comp_label[comp[f]] |= 2;
    }
  }

  std::vector<bool> left_v(n, false), right_v(n, false);
  for (Vertex v : blk.left_side) left_v[v] = true;
  for (Vertex v : blk.right_side) right_v[v] = true;
  std::vector<std::optional<PathSide>> out(n);
  for (Vertex q = 0; q < n; ++q) {
    if (!blk.contains(q)) continue;
    if (on_n[q]) {
      out[q] = PathSide::On;
    } else if (left_v[q]) {
      out[q] = PathSide::LeftOfN;
    } else if (right_v[q]) {
      out[q] = PathSide::RightOfN;
    } else {
      int l = comp_label[comp[g.face_left_of(g.rotation().rotation(q).front(), q)]];
      if (l != 1 && l != 2) {
        fail(Errc::ConstructionFailed, "separating path does not split the block at " + str(q));
      }
      out[q] = l == 1 ? PathSide::LeftOfN : PathSide::RightOfN;
    }
  }
  return out;
}

PathSide side_of_path(const Shadows& s, const SeparatingPath& np, Vertex q) {
  auto sides = sides_of_path(s, np);
  if (q >= sides.size() || !sides[q]) fail(Errc::NotInBlock, str(q) + " is not in the block");
  return *sides[q];
}

}  // namespace pzr
