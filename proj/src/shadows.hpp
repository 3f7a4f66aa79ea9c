#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "planar.hpp"
#include "witness.hpp"

namespace pzr {

// Region between consecutive common points min < max of the element max,
// bounded by the two witness-path segments between them.
struct Block {
  Vertex key = 0;  // = max
  Vertex min = 0, max = 0;
  std::vector<Vertex> left_side, right_side;  // min ... max
  std::vector<EdgeId> left_edges, right_edges;
  bool degenerate = false;
  std::optional<Region> region;  // empty for degenerate blocks

  bool contains(Vertex v) const;  // closed region
  bool interior(Vertex v) const { return region && region->inside()[v]; }
};

struct ShadowProfile {
  Vertex z = 0;
  std::vector<Vertex> common;  // z_0 = x0, ..., z_m = z
  std::vector<bool> reversing;  // per index; only 0 < i < m can be set
  int sd = -1;
  std::vector<std::size_t> bounds;  // i_0 = 0 < i_1 < ... < i_{sd+1} = m
};

struct ShadowSetId {
  Vertex base;
  Vertex terminal;
  bool operator==(const ShadowSetId&) const = default;
};

struct Address {
  std::uint32_t j = 0;
  Vertex block = 0;
  bool operator==(const Address&) const = default;
};

struct BlockPartition {
  Bits A, B, Z;
};

class Shadows {
 public:
  Shadows(const EmbeddedCoverGraph& g, const WitnessTree& left, const WitnessTree& right);
  Shadows(const Shadows&) = delete;
  Shadows& operator=(const Shadows&) = delete;

  const ShadowProfile& profile(Vertex z) const { return profiles_[z]; }
  // Blocks exist for every element but the zero.
  const Block& block(Vertex key) const;
  int sd(Vertex z) const { return profiles_[z].sd; }

  ShadowSetId shadow_set(Vertex z, std::size_t j) const;
  Vertex shadow_set_terminal(Vertex z, std::size_t j) const { return shadow_set(z, j).terminal; }
  // Keys of the blocks making up shad_j(z).
  std::vector<Vertex> shadow_blocks(Vertex z, std::size_t j) const;

  // Least j with shad_j(a) != shad_j(b); an exhausted profile keeps
  // contributing its last shadow set.
  std::size_t pair_depth(Vertex a, Vertex b) const;

  // The block of shad_j(b) holding a in its interior, j = pair_depth(a,b).
  // Callers establish that (a,b) is an inside pair.
  Address locate_inside_pair(Vertex a, Vertex b) const;

  const BlockPartition& partition(Vertex key) const;

  const EmbeddedCoverGraph& graph() const { return g_; }
  const WitnessTree& left() const { return left_; }
  const WitnessTree& right() const { return right_; }

 private:
  const EmbeddedCoverGraph& g_;
  const WitnessTree& left_;
  const WitnessTree& right_;
  std::vector<ShadowProfile> profiles_;
  std::vector<Block> blocks_;
  std::vector<BlockPartition> partitions_;
};

// Addresses of every inside pair, grouped into I_0 and I_1 by the parity
// of the depth.
class AddressTable {
 public:
  AddressTable(const Shadows& s, const PairTable& pairs);
  std::optional<Address> operator()(Vertex a, Vertex b) const;
  const std::vector<std::pair<Vertex, Vertex>>& inside_pairs(int parity) const { return by_parity_[parity]; }
  // Row of I_theta: {b : (a,b) in I_theta}.
  const Bits& row(int parity, Vertex a) const { return rows_[parity][a]; }

 private:
  std::size_t n_ = 0;
  std::vector<Address> addr_;
  std::vector<bool> has_;
  std::array<std::vector<std::pair<Vertex, Vertex>>, 2> by_parity_;
  std::array<std::vector<Bits>, 2> rows_;
};

Address address_of(const Shadows& s, const PairTable& pairs, Vertex a, Vertex b);

struct SeparatingPath {
  Vertex block = 0;
  Vertex a = 0, b = 0, peak = 0;
  std::vector<Vertex> vertices;  // x_B ... y_B
  std::vector<EdgeId> edges;
};

// Requires a in A_B, b in B_B and a < b.
SeparatingPath build_separating_path(const Shadows& s, Vertex block_key, Vertex a, Vertex b);

enum class PathSide { On, LeftOfN, RightOfN };

PathSide side_of_path(const Shadows& s, const SeparatingPath& n, Vertex q);

// Classifies every vertex of the closed block at once; nullopt outside.
std::vector<std::optional<PathSide>> sides_of_path(const Shadows& s, const SeparatingPath& n);

}  // namespace pzr
