#pragma once

#include <optional>
#include <string>
#include <vector>

#include "realizer.hpp"

namespace pzr {

struct HArc {
  std::uint32_t from, to;
  bool strong;
  std::optional<std::uint32_t> helper;  // weak arcs only
};

// Vertices are the pairs of I_theta, in AddressTable order.
struct HGraph {
  int theta = 0;
  PairList vertices;
  std::vector<HArc> arcs;
  std::vector<std::vector<std::uint32_t>> out;  // arc indices
};

// Throws CyclicH if the graph has a directed cycle.
HGraph build_H(const Analysis& an, int theta);

// value[v] = vertex count of the longest path starting at v (>= 1).
std::vector<std::uint32_t> longest_paths(const HGraph& h, bool strong_only = false);
// buckets[m] = I_theta(m); buckets[0] is empty.
std::vector<PairList> buckets(const HGraph& h);

// Longest all-strong path, as element pairs (a_1,b_1)..(a_k,b_k). Checked to
// induce S_k; empty when I_theta is empty.
PairList extract_standard_example(const Analysis& an, const HGraph& h);

struct BucketRealizer {
  std::vector<LinearOrder> extensions;
  std::vector<std::string> provenance;
  std::size_t k = 0;   // longest path in either H_theta
  PairList witness;    // an S_k from the strong paths (empty when k = 0)
};

// L1, L2 and one extension per nonempty I_theta(m). Throws CoverageGap if
// some incomparable pair is not reversed, ValidationFailed if the size
// bound 2k+2 fails.
BucketRealizer build_dim_realizer(const Analysis& an);

// a_i < b_j iff i != j, both sides antichains, a_i || b_i.
bool induces_standard_example(const Poset& p, const PairList& pairs);

}  // namespace pzr
