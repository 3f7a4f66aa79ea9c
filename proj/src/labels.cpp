#include "labels.hpp"

#include <sstream>

#include "error.hpp"

namespace pzr {

unsigned label_width(std::size_t n) {
  unsigned w = 0;
  while ((std::size_t{1} << w) < n) ++w;
  return w == 0 ? 1 : w;
}

namespace {

std::size_t byte_length(unsigned w) { return (kOrderCount * w + 7) / 8; }

}  // namespace

LabelSet make_labels(const RealizerBundle& b) {
  LabelSet s;
  s.n = b.element_count;
  s.w = label_width(s.n);
  s.labels.assign(s.n, Label(byte_length(s.w), 0));
  for (Vertex v = 0; v < s.n; ++v) {
    std::size_t bit = 0;
    for (std::size_t i = 0; i < kOrderCount; ++i) {
      std::uint32_t pos = b.orders[i].position(v);
      for (unsigned k = s.w; k-- > 0; ++bit) {
        if ((pos >> k) & 1) s.labels[v][bit / 8] |= std::uint8_t(0x80 >> (bit % 8));
      }
    }
  }
  return s;
}

std::array<std::uint32_t, kOrderCount> label_fields(const Label& l, unsigned w) {
  if (l.size() != byte_length(w)) fail(Errc::BadInput, "label has the wrong length");
  std::array<std::uint32_t, kOrderCount> f{};
  std::size_t bit = 0;
  for (std::size_t i = 0; i < kOrderCount; ++i) {
    for (unsigned k = 0; k < w; ++k, ++bit) f[i] = (f[i] << 1) | ((l[bit / 8] >> (7 - bit % 8)) & 1);
  }
  return f;
}

bool decode_labels(const Label& a, const Label& b, unsigned w) {
  auto fa = label_fields(a, w), fb = label_fields(b, w);
  std::uint16_t c = 0;
  for (std::size_t i = 0; i < kOrderCount; ++i) {
    if (fa[i] <= fb[i]) c |= std::uint16_t(1u << i);
  }
  return decode_steps(c);
}

std::string label_hex(const Label& l) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  for (std::uint8_t byte : l) {
    s += digits[byte >> 4];
    s += digits[byte & 15];
  }
  return s;
}

Label label_from_hex(const std::string& hex, unsigned w) {
  if (hex.size() != 2 * byte_length(w)) fail(Errc::BadInput, "label '" + hex + "' has the wrong length");
  Label l;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    auto nib = [&](char c) -> int {
      if (c >= '0' && c <= '9') return c - '0';
      if (c >= 'a' && c <= 'f') return c - 'a' + 10;
      fail(Errc::BadInput, "label '" + hex + "' is not lowercase hex");
    };
    l.push_back(std::uint8_t(nib(hex[i]) << 4 | nib(hex[i + 1])));
  }
  return l;
}

std::string labels_to_text(const LabelSet& s) {
  std::ostringstream out;
  out << "PZR1 n=" << s.n << " w=" << s.w << " orders=" << kOrderCount << "\n";
  for (const Label& l : s.labels) out << label_hex(l) << "\n";
  return out.str();
}

LabelSet labels_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string magic, ns, ws, os;
  if (!(in >> magic >> ns >> ws >> os) || magic != "PZR1" || ns.rfind("n=", 0) != 0 || ws.rfind("w=", 0) != 0 ||
      os != "orders=13") {
    fail(Errc::BadInput, "label file header must read 'PZR1 n=<n> w=<w> orders=13'");
  }
  LabelSet s;
  try {
    s.n = std::stoull(ns.substr(2));
    s.w = static_cast<unsigned>(std::stoul(ws.substr(2)));
  } catch (const std::exception&) {
    fail(Errc::BadInput, "label file header has non-numeric fields");
  }
  // Vertex labels of a condensed digraph are narrower than label_width(n).
  if (s.w < 1 || s.w > label_width(s.n)) fail(Errc::BadInput, "label width does not fit n");
  std::string line;
  while (in >> line) s.labels.push_back(label_from_hex(line, s.w));
  if (s.labels.size() != s.n) fail(Errc::BadInput, "label file holds a different number of labels than n");
  return s;
}

}  // namespace pzr
