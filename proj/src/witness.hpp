#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "planar.hpp"

namespace pzr {

enum class TreeSide { Left, Right };

// Outcome of comparing the root paths of u and v.
enum class PathOrder { PrefixOfSecond, PrefixOfFirst, FirstLeft, FirstRight };

enum class PairType : std::uint8_t { Comparable, Left, Right, Inside, Outside };

const char* pair_type_name(PairType t);

// The leftmost (or rightmost) witnessing paths from x0 to every element,
// stored as one tree.
class WitnessTree {
 public:
  TreeSide side() const { return side_; }
  Vertex root() const { return root_; }
  std::size_t size() const { return parent_.size(); }

  std::optional<Vertex> parent(Vertex v) const;
  // Last edge of the path to v; the sentinel for the root.
  EdgeId entering_edge(Vertex v) const { return entering_[v]; }
  std::uint32_t depth(Vertex v) const { return depth_[v]; }
  // Clockwise rank of entering_edge(v) at parent(v), counted from the
  // parent's own entering edge. Smaller is further left.
  std::size_t child_rank(Vertex v) const { return rank_[v]; }
  // Children in left-to-right order.
  const std::vector<Vertex>& children(Vertex v) const { return children_[v]; }

  // x0, ..., v.
  std::vector<Vertex> path(Vertex v) const;
  bool on_path(Vertex a, Vertex v) const;  // a lies on the path to v
  Vertex ancestor_at_depth(Vertex v, std::uint32_t d) const;
  Vertex lca(Vertex u, Vertex v) const;

 private:
  friend WitnessTree build_witness_tree(const EmbeddedCoverGraph&, TreeSide);
  TreeSide side_ = TreeSide::Left;
  Vertex root_ = 0;
  std::vector<Vertex> parent_;
  std::vector<EdgeId> entering_;
  std::vector<std::uint32_t> depth_;
  std::vector<std::size_t> rank_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<std::vector<Vertex>> up_;  // binary lifting
};

// The path procedure for a single target: from x0 with the sentinel as
// entering edge, repeatedly take the leftmost (rightmost) cover edge
// u_i -> w with w <= u.
std::vector<Vertex> witness_path(const EmbeddedCoverGraph& g, TreeSide side, Vertex u);

// Runs the path procedure for every element and checks that the paths
// agree on shared prefixes (throws ValidationFailed otherwise).
WitnessTree build_witness_tree(const EmbeddedCoverGraph& g, TreeSide side);

PathOrder compare_paths(const WitnessTree& t, Vertex u, Vertex v);

// Throws ComparableInput for comparable (or equal) u, v.
PairType classify_pair(const Poset& p, const WitnessTree& left, const WitnessTree& right, Vertex u,
                       Vertex v);

// All ordered pairs at once; Comparable on the diagonal and for u ~ v.
class PairTable {
 public:
  PairTable() = default;
  PairTable(const Poset& p, const WitnessTree& left, const WitnessTree& right);
  PairType operator()(Vertex u, Vertex v) const { return static_cast<PairType>(t_[u * n_ + v]); }
  std::size_t size() const { return n_; }
  // Bitset rows: {v : (u,v) has type t}.
  const Bits& row(PairType t, Vertex u) const { return rows_[static_cast<int>(t)][u]; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> t_;
  std::array<std::vector<Bits>, 5> rows_;
};

}  // namespace pzr
