#pragma once

#include <optional>
#include <string>
#include <vector>

#include "labels.hpp"
#include "realizer.hpp"

namespace pzr {

struct AlternatingCycle {
  PairList pairs;  // x_i <= y_{i+1} cyclically
  bool strict = false;
};

bool is_alternating_cycle(const Poset& p, const PairList& c);
bool is_strict_alternating_cycle(const Poset& p, const PairList& c);

// nullopt when reversible; otherwise a strict alternating cycle recovered
// from the cycle of P plus the reversed pairs. Pairs must be incomparable.
std::optional<AlternatingCycle> find_nonreversible_witness(const Poset& p, const PairList& pairs);
inline bool is_reversible(const Poset& p, const PairList& pairs) { return !find_nonreversible_witness(p, pairs); }

// Exhaustive search for a strict alternating cycle (TooLarge above cap pairs).
std::optional<AlternatingCycle> enumerate_strict_cycle(const Poset& p, const PairList& pairs, std::size_t cap = 12);

struct OracleCaps {
  std::size_t dimension_pairs = 60;
  std::size_t se_elements = 24;
};

// Least t such that Inc(P) splits into t reversible sets.
unsigned exact_dimension(const Poset& p, const OracleCaps& caps = {});
// Largest d >= 2 with an induced S_d, else 1.
unsigned exact_se(const Poset& p, const OracleCaps& caps = {});

struct RealizerViolation {
  std::string kind;  // "not-extension" or "unreversed"
  std::size_t order = 0;
  Vertex a = 0, b = 0;
};
std::optional<RealizerViolation> verify_realizer(const Poset& p, const std::vector<LinearOrder>& orders);

struct Mismatch {
  Vertex a, b;
  bool decoded, expected;
};
std::vector<Mismatch> verify_bundle(const Poset& p, const RealizerBundle& b);
std::vector<Mismatch> verify_labels(const Poset& p, const LabelSet& labels);

// Reflexive reachability by BFS; any digraph, cycles and loops allowed.
std::vector<Bits> bfs_reachability(const Digraph& g);
// Decoded labels against BFS reachability in g, one label per vertex.
std::vector<Mismatch> verify_digraph_labels(const Digraph& g, const LabelSet& labels);

}  // namespace pzr
