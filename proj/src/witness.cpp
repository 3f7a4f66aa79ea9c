#include "witness.hpp"

#include <algorithm>
#include <string>

#include "error.hpp"

namespace pzr {

const char* pair_type_name(PairType t) {
  switch (t) {
    case PairType::Comparable: return "comparable";
    case PairType::Left: return "left";
    case PairType::Right: return "right";
    case PairType::Inside: return "inside";
    case PairType::Outside: return "outside";
  }
  return "?";
}

std::vector<Vertex> witness_path(const EmbeddedCoverGraph& g, TreeSide side, Vertex u) {
  const Poset& p = g.poset();
  Vertex at = g.zero();
  EdgeId entering = g.sentinel();
  std::vector<Vertex> path{at};
  while (at != u) {
    std::optional<std::pair<std::size_t, EdgeId>> best;
    Vertex next = at;
    for (Vertex w : p.upper_covers(at)) {
      if (!p.leq(w, u)) continue;
      EdgeId e = *g.edge_between(at, w);
      std::size_t r = g.ze_rank(at, entering, e);
      bool better = !best || (side == TreeSide::Left ? r < best->first : r > best->first);
      if (better) {
        best = {r, e};
        next = w;
      }
    }
    if (!best) fail(Errc::NotEmbedded, "no witnessing path to " + std::to_string(u));
    entering = best->second;
    at = next;
    path.push_back(at);
  }
  return path;
}

WitnessTree build_witness_tree(const EmbeddedCoverGraph& g, TreeSide side) {
  const std::size_t n = g.element_count();
  WitnessTree t;
  t.side_ = side;
  t.root_ = g.zero();
  constexpr Vertex kNone = ~Vertex{0};
  t.parent_.assign(n, kNone);
  t.entering_.assign(n, g.sentinel());
  t.depth_.assign(n, 0);
  t.rank_.assign(n, 0);
  t.children_.assign(n, {});

  std::vector<std::vector<Vertex>> paths(n);
  for (Vertex u = 0; u < n; ++u) {
    paths[u] = witness_path(g, side, u);
    const auto& path = paths[u];
    if (path.size() > 1) {
      t.parent_[u] = path[path.size() - 2];
      t.entering_[u] = *g.edge_between(t.parent_[u], u);
    }
    t.depth_[u] = static_cast<std::uint32_t>(path.size() - 1);
  }
  // The per-target paths must form one tree.
  for (Vertex u = 0; u < n; ++u) {
    const auto& path = paths[u];
    for (std::size_t k = 1; k < path.size(); ++k) {
      if (t.parent_[path[k]] != path[k - 1]) {
        fail(Errc::ValidationFailed, "witness paths to " + std::to_string(u) + " and " +
                                         std::to_string(path[k]) + " disagree on their common prefix");
      }
    }
  }

  for (Vertex v = 0; v < n; ++v) {
    if (t.parent_[v] == kNone) continue;
    Vertex par = t.parent_[v];
    t.rank_[v] = g.ze_rank(par, t.entering_[par], t.entering_[v]);
    t.children_[par].push_back(v);
  }
  for (auto& c : t.children_) {
    std::sort(c.begin(), c.end(), [&](Vertex a, Vertex b) { return t.rank_[a] < t.rank_[b]; });
  }

  std::size_t levels = 1;
  while ((std::size_t{1} << levels) < n) ++levels;
  t.up_.assign(levels, std::vector<Vertex>(n));
  for (Vertex v = 0; v < n; ++v) t.up_[0][v] = t.parent_[v] == kNone ? v : t.parent_[v];
  for (std::size_t k = 1; k < levels; ++k) {
    for (Vertex v = 0; v < n; ++v) t.up_[k][v] = t.up_[k - 1][t.up_[k - 1][v]];
  }
  return t;
}

std::optional<Vertex> WitnessTree::parent(Vertex v) const {
  if (v == root_) return std::nullopt;
  return parent_[v];
}

std::vector<Vertex> WitnessTree::path(Vertex v) const {
  std::vector<Vertex> p(depth_[v] + 1);
  for (std::size_t i = p.size(); i-- > 0;) {
    p[i] = v;
    v = parent_[v] == ~Vertex{0} ? v : parent_[v];
  }
  return p;
}

Vertex WitnessTree::ancestor_at_depth(Vertex v, std::uint32_t d) const {
  std::uint32_t climb = depth_[v] - d;
  for (std::size_t k = 0; climb; ++k, climb >>= 1) {
    if (climb & 1) v = up_[k][v];
  }
  return v;
}

bool WitnessTree::on_path(Vertex a, Vertex v) const {
  return depth_[a] <= depth_[v] && ancestor_at_depth(v, depth_[a]) == a;
}

Vertex WitnessTree::lca(Vertex u, Vertex v) const {
  if (depth_[u] > depth_[v]) std::swap(u, v);
  v = ancestor_at_depth(v, depth_[u]);
  if (u == v) return u;
  for (std::size_t k = up_.size(); k-- > 0;) {
    if (up_[k][u] != up_[k][v]) {
      u = up_[k][u];
      v = up_[k][v];
    }
  }
  return parent_[u];
}

PathOrder compare_paths(const WitnessTree& t, Vertex u, Vertex v) {
  Vertex z = t.lca(u, v);
  if (z == u) return PathOrder::PrefixOfSecond;
  if (z == v) return PathOrder::PrefixOfFirst;
  Vertex cu = t.ancestor_at_depth(u, t.depth(z) + 1);
  Vertex cv = t.ancestor_at_depth(v, t.depth(z) + 1);
  return t.child_rank(cu) < t.child_rank(cv) ? PathOrder::FirstLeft : PathOrder::FirstRight;
}

PairType classify_pair(const Poset& p, const WitnessTree& left, const WitnessTree& right, Vertex u,
                       Vertex v) {
  if (p.comparable(u, v)) fail(Errc::ComparableInput, "pair is comparable");
  PathOrder l = compare_paths(left, u, v), r = compare_paths(right, u, v);
  auto is_branch = [](PathOrder o) { return o == PathOrder::FirstLeft || o == PathOrder::FirstRight; };
  if (!is_branch(l) || !is_branch(r)) {
    fail(Errc::ValidationFailed, "incomparable pair (" + std::to_string(u) + "," + std::to_string(v) +
                                     ") has nested witness paths");
  }
  if (l == PathOrder::FirstLeft) return r == PathOrder::FirstLeft ? PairType::Left : PairType::Outside;
  return r == PathOrder::FirstRight ? PairType::Right : PairType::Inside;
}

PairTable::PairTable(const Poset& p, const WitnessTree& left, const WitnessTree& right)
    : n_(p.size()), t_(p.size() * p.size(), 0) {
  for (auto& rows : rows_) rows.assign(n_, Bits(n_));
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = 0; v < n_; ++v) {
      PairType t = p.comparable(u, v) ? PairType::Comparable : classify_pair(p, left, right, u, v);
      t_[u * n_ + v] = static_cast<std::uint8_t>(t);
      rows_[static_cast<int>(t)][u].set(v);
    }
  }
}

}  // namespace pzr
