#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "analysis.hpp"
#include "json.hpp"
#include "order.hpp"

namespace pzr {

using PairList = std::vector<std::pair<Vertex, Vertex>>;

inline constexpr std::size_t kOrderCount = 13;

// Preorder of the left tree visiting children rightmost first, checked
// against the pairwise comparator. Throws ComparatorNotTotal on mismatch.
LinearOrder order_L1(const WitnessTree& left);
// Preorder of the right tree visiting children leftmost first.
LinearOrder order_L2(const WitnessTree& right);

// a before b in L1 iff W_L(a) is a prefix of W_L(b) or W_L(b) is x0-left
// of W_L(a); the mirror statement for L2.
bool l1_before(const WitnessTree& left, Vertex a, Vertex b);
bool l2_before(const WitnessTree& right, Vertex a, Vertex b);

struct SafeSets {
  PairList left_safe, right_safe;
};
SafeSets safe_sets(const Analysis& an, int theta);

struct DangerEntry {
  Vertex a, b;
  Address address;
  std::pair<Vertex, Vertex> left_neighbor, right_neighbor;
};

struct DangerTable {
  std::array<std::vector<DangerEntry>, 2> entries;
  std::array<std::vector<Bits>, 2> rows;  // rows[theta][a] = {b : (a,b) in D_theta}
  std::vector<Bits> column;               // column[b] = {a : (a,b) dangerous}

  bool dangerous(Vertex a, Vertex b) const { return column[b][a]; }
  PairList pairs(int theta) const;
};

// Dangerous pairs by their neighbor characterization. Cross-checked
// against the complement of the safe sets (ValidationFailed on mismatch).
DangerTable dangerous_pairs(const Analysis& an, const std::array<SafeSets, 2>& safe);

enum class Tilt { None, Left, Right };
const char* tilt_name(Tilt t);

// Requires a < b with a, b != x0 (NotComparable otherwise); BothTilts if
// both directions hold.
Tilt tilt(const Analysis& an, const DangerTable& d, Vertex a, Vertex b);

// M0 < M1, M0' < M1', M0 < M1' with M_theta ascending by id.
std::array<LinearOrder, 3> parity_orders(const Analysis& an);

struct RealizerBundle {
  std::size_t element_count = 0;
  std::array<LinearOrder, kOrderCount> orders;
  std::array<std::string, kOrderCount> provenance;
};

// All intermediate products, kept for audits.
struct RealizerParts {
  std::array<SafeSets, 2> safe;
  DangerTable danger;
  // NTR0, NTL0, NTR1, NTL1 as strict relations: rows[a] = {b : (a,b)}.
  std::array<std::vector<Bits>, 4> not_tilting;
  RealizerBundle bundle;
};

RealizerParts build_realizer(const Analysis& an);
inline RealizerBundle build_bundle(const Analysis& an) { return build_realizer(an).bundle; }

// Bit i-1 of the mask is c_i = [a <= b in L_i].
std::uint16_t comparison_mask(const RealizerBundle& b, Vertex x, Vertex y);
// The five-step decision procedure.
bool decode_steps(std::uint16_t c);
// Closed form of the same function.
bool decode_formula(std::uint16_t c);
inline bool decode(const RealizerBundle& b, Vertex x, Vertex y) { return decode_steps(comparison_mask(b, x, y)); }

nlohmann::json bundle_to_json(const RealizerBundle& b);
RealizerBundle bundle_from_json(const nlohmann::json& j);

}  // namespace pzr
