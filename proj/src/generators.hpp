#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "planar.hpp"
#include "poset.hpp"

namespace pzr {

inline constexpr const char* kPrngName = "mt19937_64";

struct GenSpec {
  std::string family;
  unsigned d = 0;
  unsigned depth = 0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double cycle_fraction = 0.0;
  std::string prng = kPrngName;
};

nlohmann::json to_json(const GenSpec& s);

// A poset with a fixed drawing: the cover rotation plus the sentinel corner.
struct Instance {
  GenSpec spec;
  std::shared_ptr<const Poset> poset;
  RotationSystem rotation;
  std::optional<EdgeId> sentinel_after;
  std::optional<FaceId> outer_face;
  // Optional element names (standard-example and wheel families).
  std::vector<std::string> names;

  EmbeddedCoverGraph embed() const { return attach_root(poset, rotation, outer_face, sentinel_after); }
};

// Straight-line drawing; one vertex may sit at infinity, its edges
// leaving their other endpoint radially away from the origin.
struct Drawing {
  std::size_t n = 0;
  std::vector<Arc> arcs;
  std::vector<std::array<double, 2>> xy;
  std::optional<Vertex> at_infinity;
};

// Clockwise rotation read off the drawing (y axis pointing up).
RotationSystem rotation_of(const Drawing& d);

// Edge at v whose clockwise successor would be a ray leaving v at the
// given angle (radians): inserting the sentinel after it points the
// sentinel that way.
EdgeId edge_before_direction(const Drawing& d, Vertex v, double angle);

Instance instance_from_drawing(GenSpec spec, const Drawing& d, double sentinel_angle);

// Uniform value in [0, bound) from raw generator output (modulo reduction,
// kept for portability across standard libraries).
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound);
double draw_unit(std::mt19937_64& rng);

// S_d: a_i = i, b_i = d + i. No zero, so not drawn.
Poset gen_standard_example(unsigned d);
Poset gen_chain(std::size_t n);

// Zero below rings of a zig-zag band whose top ring realizes S_d, capped by
// a single maximum drawn at infinity.
Instance gen_wheel(unsigned d);

// Tower of pockets, each drawn inside the previous one; each pocket also
// holds one element hanging from its base.
Instance gen_nested(unsigned depth);

// Frozen fixture with dangerous pairs and a mixed-parity strict
// alternating cycle of inside pairs.
Instance gen_pathology();

Instance gen_random_planar_zero(std::size_t n, std::uint64_t seed);

Digraph gen_random_single_source_digraph(std::size_t n, std::uint64_t seed, double cycle_fraction);

// Joins instances at their zeros, side by side at the root.
Instance glue_at_zero(const std::vector<Instance>& parts, GenSpec spec);

// Nested: the element ids of the tower, for tests.
struct NestedLayout {
  Vertex zero;
  std::vector<Vertex> left, right, top, hanging;  // index i = level i + 1
};
NestedLayout nested_layout(unsigned depth);

}  // namespace pzr
