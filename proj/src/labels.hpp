#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "realizer.hpp"

namespace pzr {

// Field width in bits: ceil(log2 n), at least 1.
unsigned label_width(std::size_t n);

struct LabelSet {
  std::size_t n = 0;
  unsigned w = 1;
  std::vector<std::vector<std::uint8_t>> labels;  // 13 fields each, byte padded

  std::size_t bit_length() const { return kOrderCount * w; }
};

using Label = std::vector<std::uint8_t>;

LabelSet make_labels(const RealizerBundle& b);
std::array<std::uint32_t, kOrderCount> label_fields(const Label& l, unsigned w);
// Answers a <= b from the two labels alone.
bool decode_labels(const Label& a, const Label& b, unsigned w);

std::string label_hex(const Label& l);
Label label_from_hex(const std::string& hex, unsigned w);

// Header line "PZR1 n=<n> w=<w> orders=13", then one hex label per line.
std::string labels_to_text(const LabelSet& s);
LabelSet labels_from_text(const std::string& text);

}  // namespace pzr
