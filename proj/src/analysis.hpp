#pragma once

#include <memory>

#include "shadows.hpp"

namespace pzr {

// Everything derived from one embedded zero-poset up to the addresses.
// Pinned in memory: the shadow tables hold references into it.
class Analysis {
 public:
  explicit Analysis(EmbeddedCoverGraph g);
  Analysis(const Analysis&) = delete;
  Analysis& operator=(const Analysis&) = delete;

  static std::shared_ptr<const Analysis> build(EmbeddedCoverGraph g) {
    return std::make_shared<const Analysis>(std::move(g));
  }

  const EmbeddedCoverGraph& graph() const { return g_; }
  const Poset& poset() const { return g_.poset(); }
  std::size_t size() const { return g_.element_count(); }
  Vertex zero() const { return g_.zero(); }
  const WitnessTree& left() const { return left_; }
  const WitnessTree& right() const { return right_; }
  const PairTable& pairs() const { return pairs_; }
  const Shadows& shadows() const { return shadows_; }
  const AddressTable& addresses() const { return addresses_; }

  // sd parity with sd(x0) = -1 counted as odd.
  int parity(Vertex v) const { return ((shadows_.sd(v) % 2) + 2) % 2; }

 private:
  EmbeddedCoverGraph g_;
  WitnessTree left_, right_;
  PairTable pairs_;
  Shadows shadows_;
  AddressTable addresses_;
};

}  // namespace pzr
