#include "realizer.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "error.hpp"

namespace pzr {

namespace {

std::string pair_str(Vertex a, Vertex b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

template <class F>
void for_each_bit(const Bits& b, F f) {
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) f(static_cast<Vertex>(i));
}

void preorder(const WitnessTree& t, Vertex v, bool rightmost_first, std::vector<Vertex>& out) {
  out.push_back(v);
  const auto& ch = t.children(v);
  if (rightmost_first) {
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) preorder(t, *it, rightmost_first, out);
  } else {
    for (Vertex c : ch) preorder(t, c, rightmost_first, out);
  }
}

LinearOrder tree_order(const WitnessTree& t, bool rightmost_first,
                       bool (*before)(const WitnessTree&, Vertex, Vertex)) {
  std::vector<Vertex> seq;
  seq.reserve(t.size());
  preorder(t, t.root(), rightmost_first, seq);
  LinearOrder l = LinearOrder::from_sequence(std::move(seq));
  for (Vertex a = 0; a < t.size(); ++a) {
    for (Vertex b = 0; b < t.size(); ++b) {
      if (a != b && before(t, a, b) != (l.position(a) < l.position(b))) {
        fail(Errc::ComparatorNotTotal, "tree order disagrees with the path comparator on " + pair_str(a, b));
      }
    }
  }
  return l;
}

std::vector<Arc> arcs_of(const std::vector<Bits>& rows) {
  std::vector<Arc> arcs;
  for (Vertex a = 0; a < rows.size(); ++a) for_each_bit(rows[a], [&](Vertex b) { arcs.push_back({a, b}); });
  return arcs;
}

}  // namespace

bool l1_before(const WitnessTree& left, Vertex a, Vertex b) {
  PathOrder o = compare_paths(left, a, b);
  return a != b && (o == PathOrder::PrefixOfSecond || o == PathOrder::FirstRight);
}

bool l2_before(const WitnessTree& right, Vertex a, Vertex b) {
  PathOrder o = compare_paths(right, a, b);
  return a != b && (o == PathOrder::PrefixOfSecond || o == PathOrder::FirstLeft);
}

LinearOrder order_L1(const WitnessTree& left) { return tree_order(left, true, l1_before); }
LinearOrder order_L2(const WitnessTree& right) { return tree_order(right, false, l2_before); }

SafeSets safe_sets(const Analysis& an, int theta) {
  const Poset& p = an.poset();
  const PairTable& pt = an.pairs();
  const AddressTable& at = an.addresses();
  const std::size_t n = an.size();
  SafeSets s;
  for (Vertex a = 0; a < n; ++a) {
    const Bits& row = at.row(theta, a);
    if (row.none()) continue;
    // a' with (a',a) a left (right) pair and some (a',b') in I_theta, a < b'.
    Bits spoil_left(n), spoil_right(n);
    for_each_bit(pt.row(PairType::Right, a), [&](Vertex a2) {
      if (at.row(theta, a2).intersects(p.up_set(a))) spoil_left.set(a2);
    });
    for_each_bit(pt.row(PairType::Left, a), [&](Vertex a2) {
      if (at.row(theta, a2).intersects(p.up_set(a))) spoil_right.set(a2);
    });
    for_each_bit(row, [&](Vertex b) {
      if (!spoil_left.intersects(p.down_set(b))) s.left_safe.push_back({a, b});
      if (!spoil_right.intersects(p.down_set(b))) s.right_safe.push_back({a, b});
    });
  }
  return s;
}

PairList DangerTable::pairs(int theta) const {
  PairList out;
  for (const auto& e : entries[theta]) out.push_back({e.a, e.b});
  return out;
}

DangerTable dangerous_pairs(const Analysis& an, const std::array<SafeSets, 2>& safe) {
  const Poset& p = an.poset();
  const PairTable& pt = an.pairs();
  const AddressTable& at = an.addresses();
  const std::size_t n = an.size();

  // Inside pairs grouped by address: group[address][w] = {z : (w,z) there}.
  std::unordered_map<std::uint64_t, std::vector<Bits>> group;
  auto key = [n](const Address& ad) { return std::uint64_t{ad.j} * n + ad.block; };
  for (int theta = 0; theta < 2; ++theta) {
    for (const auto& [w, z] : at.inside_pairs(theta)) {
      auto& rows = group[key(*at(w, z))];
      if (rows.empty()) rows.assign(n, Bits(n));
      rows[w].set(z);
    }
  }

  DangerTable d;
  d.column.assign(n, Bits(n));
  for (int theta = 0; theta < 2; ++theta) {
    d.rows[theta].assign(n, Bits(n));
    for (const auto& [a, b] : at.inside_pairs(theta)) {
      Address ad = *at(a, b);
      const auto& rows = group.at(key(ad));
      auto neighbor = [&](PairType wa_side) -> std::optional<std::pair<Vertex, Vertex>> {
        // (w,a) of type wa_side means (a,w) of the opposite type.
        PairType flipped = wa_side == PairType::Left ? PairType::Right : PairType::Left;
        Bits ws = pt.row(flipped, a) & p.down_set(b);
        for (auto w = ws.find_first(); w != Bits::npos; w = ws.find_next(w)) {
          Bits zs = rows[w] & p.up_set(a) & pt.row(flipped, b);
          if (auto z = zs.find_first(); z != Bits::npos) {
            return std::pair<Vertex, Vertex>{static_cast<Vertex>(w), static_cast<Vertex>(z)};
          }
        }
        return std::nullopt;
      };
      auto ln = neighbor(PairType::Left);
      if (!ln) continue;
      auto rn = neighbor(PairType::Right);
      if (!rn) continue;
      d.entries[theta].push_back({a, b, ad, *ln, *rn});
      d.rows[theta][a].set(b);
      d.column[b].set(a);
    }

    // Dangerous means inside I_theta but in neither safe set.
    std::vector<Bits> covered(n, Bits(n));
    for (const auto& [a, b] : safe[theta].left_safe) covered[a].set(b);
    for (const auto& [a, b] : safe[theta].right_safe) covered[a].set(b);
    for (Vertex a = 0; a < n; ++a) {
      Bits expect = at.row(theta, a) - covered[a];
      if (expect != d.rows[theta][a]) {
        auto diff = expect ^ d.rows[theta][a];
        fail(Errc::ValidationFailed,
             "dangerous-pair characterization disagrees with the safe sets at " +
                 pair_str(a, static_cast<Vertex>(diff.find_first())));
      }
    }
  }
  return d;
}

const char* tilt_name(Tilt t) {
  switch (t) {
    case Tilt::None: return "none";
    case Tilt::Left: return "left";
    case Tilt::Right: return "right";
  }
  return "?";
}

Tilt tilt(const Analysis& an, const DangerTable& d, Vertex a, Vertex b) {
  const Poset& p = an.poset();
  if (a == an.zero() || b == an.zero() || !p.less(a, b)) {
    fail(Errc::NotComparable, "tilt needs a < b above the zero, got " + pair_str(a, b));
  }
  if (d.column[b].none()) return Tilt::None;
  const PairTable& pt = an.pairs();
  auto witnessed = [&](PairType a_u) {
    // u with (u,a) of the given type, (u,b) dangerous, a in A of its block.
    Bits us = d.column[b] & pt.row(a_u == PairType::Right ? PairType::Left : PairType::Right, a);
    for (auto u = us.find_first(); u != Bits::npos; u = us.find_next(u)) {
      Address ad = *an.addresses()(static_cast<Vertex>(u), b);
      if (an.shadows().partition(ad.block).A[a]) return true;
    }
    return false;
  };
  bool right = witnessed(PairType::Right), left = witnessed(PairType::Left);
  if (right && left) fail(Errc::BothTilts, "comparability " + pair_str(a, b) + " tilts both ways");
  return right ? Tilt::Right : left ? Tilt::Left : Tilt::None;
}

std::array<LinearOrder, 3> parity_orders(const Analysis& an) {
  std::array<std::vector<Vertex>, 2> m;
  for (Vertex v = 0; v < an.size(); ++v) m[an.parity(v)].push_back(v);
  auto cat = [](const std::vector<Vertex>& x, bool rx, const std::vector<Vertex>& y, bool ry) {
    std::vector<Vertex> s(x.begin(), x.end());
    if (rx) std::reverse(s.begin(), s.end());
    std::size_t k = s.size();
    s.insert(s.end(), y.begin(), y.end());
    if (ry) std::reverse(s.begin() + k, s.end());
    return LinearOrder::from_sequence(std::move(s));
  };
  return {cat(m[0], false, m[1], false), cat(m[0], true, m[1], true), cat(m[0], false, m[1], true)};
}

RealizerParts build_realizer(const Analysis& an) {
  const Poset& p = an.poset();
  const PairTable& pt = an.pairs();
  const std::size_t n = an.size();
  RealizerParts r;
  RealizerBundle& out = r.bundle;
  out.element_count = n;

  out.orders[0] = order_L1(an.left());
  out.orders[1] = order_L2(an.right());
  for (int k = 0; k < 2; ++k) {
    const LinearOrder& l = out.orders[k];
    if (!is_linear_extension(p, l)) fail(Errc::ValidationFailed, "tree order L" + std::to_string(k + 1) + " is not a linear extension");
    PairType side = k == 0 ? PairType::Left : PairType::Right;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = 0; b < n; ++b) {
        PairType t = pt(a, b);
        if ((t == side || t == PairType::Outside) && l.position(b) > l.position(a)) {
          fail(Errc::ValidationFailed, "L" + std::to_string(k + 1) + " keeps " + pair_str(a, b));
        }
      }
    }
  }
  out.provenance[0] = "left-tree preorder; reverses left and outside pairs";
  out.provenance[1] = "right-tree preorder; reverses right and outside pairs";

  r.safe = {safe_sets(an, 0), safe_sets(an, 1)};
  out.orders[2] = reversible_extension(p, r.safe[0].left_safe);
  out.orders[3] = reversible_extension(p, r.safe[0].right_safe);
  out.orders[4] = reversible_extension(p, r.safe[1].left_safe);
  out.orders[5] = reversible_extension(p, r.safe[1].right_safe);
  out.provenance[2] = "reverses left-safe inside pairs of even depth";
  out.provenance[3] = "reverses right-safe inside pairs of even depth";
  out.provenance[4] = "reverses left-safe inside pairs of odd depth";
  out.provenance[5] = "reverses right-safe inside pairs of odd depth";

  auto par = parity_orders(an);
  for (int k = 0; k < 3; ++k) out.orders[6 + k] = std::move(par[k]);
  out.provenance[6] = "even-sd ascending, then odd-sd ascending";
  out.provenance[7] = "even-sd descending, then odd-sd descending";
  out.provenance[8] = "even-sd ascending, then odd-sd descending";

  r.danger = dangerous_pairs(an, r.safe);
  const Vertex x0 = an.zero();
  for (int theta = 0; theta < 2; ++theta) {
    auto& ntr = r.not_tilting[2 * theta];
    auto& ntl = r.not_tilting[2 * theta + 1];
    ntr.assign(n, Bits(n));
    ntl.assign(n, Bits(n));
    ntr[x0].set();
    ntr[x0].reset(x0);
    ntl[x0] = ntr[x0];
    for (Vertex a = 0; a < n; ++a) {
      if (a == x0 || an.parity(a) != theta) continue;
      for_each_bit(p.up_set(a), [&](Vertex b) {
        if (b == a) return;
        Tilt t = tilt(an, r.danger, a, b);
        if (t != Tilt::Right) ntr[a].set(b);
        if (t != Tilt::Left) ntl[a].set(b);
      });
    }
  }
  const char* names[4] = {"not-tilting-right relation of even parity, reverses even dangerous pairs",
                          "not-tilting-left relation of even parity, reverses even dangerous pairs",
                          "not-tilting-right relation of odd parity, reverses odd dangerous pairs",
                          "not-tilting-left relation of odd parity, reverses odd dangerous pairs"};
  for (int k = 0; k < 4; ++k) {
    out.orders[9 + k] = reversible_extension(n, arcs_of(r.not_tilting[k]), r.danger.pairs(k / 2));
    out.provenance[9 + k] = names[k];
  }
  return r;
}

std::uint16_t comparison_mask(const RealizerBundle& b, Vertex x, Vertex y) {
  std::uint16_t c = 0;
  for (std::size_t i = 0; i < kOrderCount; ++i) {
    if (b.orders[i].le(x, y)) c |= std::uint16_t(1u << i);
  }
  return c;
}

bool decode_steps(std::uint16_t c) {
  auto bit = [c](int i) { return ((c >> (i - 1)) & 1) != 0; };
  for (int i = 1; i <= 6; ++i) {
    if (!bit(i)) return false;
  }
  bool even;
  if (bit(7) && bit(8)) {
    even = true;
  } else if (!bit(7) && !bit(8)) {
    even = false;
  } else {
    even = bit(7) == bit(9);
  }
  if (even) return bit(10) || bit(11);
  return bit(12) || bit(13);
}

bool decode_formula(std::uint16_t c) {
  bool c1 = c & 1, c2 = c & 2, c3 = c & 4, c4 = c & 8, c5 = c & 16, c6 = c & 32, c7 = c & 64, c8 = c & 128,
       c9 = c & 256, c10 = c & 512, c11 = c & 1024, c12 = c & 2048, c13 = c & 4096;
  bool e = (c7 && c8) || ((c7 != c8) && (c7 == c9));
  return c1 && c2 && c3 && c4 && c5 && c6 && ((e && (c10 || c11)) || (!e && (c12 || c13)));
}

nlohmann::json bundle_to_json(const RealizerBundle& b) {
  nlohmann::json orders = nlohmann::json::array();
  for (std::size_t i = 0; i < kOrderCount; ++i) {
    orders.push_back({{"order", b.orders[i].sequence()}, {"provenance", b.provenance[i]}});
  }
  return {{"format", "pzr-bundle"}, {"element_count", b.element_count}, {"orders", orders}};
}

RealizerBundle bundle_from_json(const nlohmann::json& j) {
  try {
    RealizerBundle b;
    b.element_count = j.at("element_count").get<std::size_t>();
    const auto& orders = j.at("orders");
    if (!orders.is_array() || orders.size() != kOrderCount) fail(Errc::BadInput, "bundle needs 13 orders");
    for (std::size_t i = 0; i < kOrderCount; ++i) {
      b.orders[i] = LinearOrder::from_sequence(orders[i].at("order").get<std::vector<Vertex>>());
      if (b.orders[i].size() != b.element_count) fail(Errc::BadInput, "bundle order has the wrong length");
      b.provenance[i] = orders[i].value("provenance", "");
    }
    return b;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::BadInput, std::string("malformed bundle: ") + e.what());
  }
}

}  // namespace pzr
