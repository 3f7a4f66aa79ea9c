#pragma once

#include <cstdint>
#include <vector>

#include "poset.hpp"

namespace pzr {

class LinearOrder {
 public:
  LinearOrder() = default;
  // Throws BadInput unless seq is a permutation of 0..n-1.
  static LinearOrder from_sequence(std::vector<Vertex> seq);

  std::size_t size() const { return seq_.size(); }
  const std::vector<Vertex>& sequence() const { return seq_; }
  std::uint32_t position(Vertex v) const { return pos_[v]; }
  bool le(Vertex a, Vertex b) const { return pos_[a] <= pos_[b]; }

 private:
  std::vector<Vertex> seq_;
  std::vector<std::uint32_t> pos_;
};

bool is_linear_extension(const Poset& p, const LinearOrder& l);

// Topological order of base plus the reversed pairs (b before a for each
// (a,b)), smallest id first among available elements. Throws NotReversible
// with the offending cycle when the union is cyclic.
LinearOrder reversible_extension(std::size_t n, const std::vector<Arc>& base,
                                 const std::vector<std::pair<Vertex, Vertex>>& reverse);
LinearOrder reversible_extension(const Poset& p, const std::vector<std::pair<Vertex, Vertex>>& reverse);

}  // namespace pzr
