#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace pzr {

using Vertex = std::uint32_t;
using Bits = boost::dynamic_bitset<std::uint64_t>;

struct Arc {
  Vertex tail;
  Vertex head;
  bool operator==(const Arc&) const = default;
  auto operator<=>(const Arc&) const = default;
};

struct Digraph {
  std::size_t vertex_count = 0;
  std::vector<Arc> arcs;
};

struct CondensationMap {
  std::vector<Vertex> component_of;
  std::size_t component_count = 0;
};

// Components are numbered in a topological order of the condensation
// (every dag arc goes from a lower to a higher component id).
std::pair<Digraph, CondensationMap> scc_condense(const Digraph& g);

// Reflexive reachability: row v holds every vertex reachable from v.
std::vector<Bits> reachability(const Digraph& dag);

// Throws CyclicInput for cyclic input. Output arcs sorted.
Digraph transitive_reduction(const Digraph& dag);

bool is_acyclic(const Digraph& g);

class Poset {
 public:
  // cover must be acyclic and transitively reduced. Cover arc i keeps
  // index i, which the embedding layer uses as its edge id.
  static Poset from_cover(const Digraph& cover);

  std::size_t size() const { return up_.size(); }
  const std::vector<Arc>& cover_arcs() const { return covers_; }
  const std::vector<Vertex>& upper_covers(Vertex v) const { return upper_[v]; }
  const std::vector<Vertex>& lower_covers(Vertex v) const { return lower_[v]; }

  bool leq(Vertex u, Vertex v) const { return up_[u][v]; }
  bool less(Vertex u, Vertex v) const { return u != v && up_[u][v]; }
  bool comparable(Vertex u, Vertex v) const { return up_[u][v] || up_[v][u]; }
  bool incomparable(Vertex u, Vertex v) const { return !comparable(u, v); }

  // {v : u <= v} and {v : v <= u}, both containing u.
  const Bits& up_set(Vertex u) const { return up_[u]; }
  const Bits& down_set(Vertex u) const { return down_[u]; }

  std::optional<Vertex> zero() const { return zero_; }
  Vertex require_zero() const;

 private:
  std::vector<Arc> covers_;
  std::vector<std::vector<Vertex>> upper_, lower_;
  std::vector<Bits> up_, down_;
  std::optional<Vertex> zero_;
};

// Ordered pairs (a,b) with a != b and a, b incomparable, sorted.
std::vector<std::pair<Vertex, Vertex>> incomparable_pairs(const Poset& p);

}  // namespace pzr
