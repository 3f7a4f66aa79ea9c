#include "dimbound.hpp"

#include <algorithm>
#include <string>

#include "error.hpp"

namespace pzr {

namespace {

constexpr std::uint32_t kAbsent = ~std::uint32_t{0};

// Kahn order of H, or the vertices of a directed cycle.
std::vector<std::uint32_t> topo_order(const HGraph& h, std::vector<std::uint32_t>* cycle) {
  const std::size_t m = h.vertices.size();
  std::vector<std::uint32_t> indeg(m, 0), order;
  for (const HArc& a : h.arcs) ++indeg[a.to];
  for (std::uint32_t v = 0; v < m; ++v) {
    if (indeg[v] == 0) order.push_back(v);
  }
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (std::uint32_t ai : h.out[order[k]]) {
      if (--indeg[h.arcs[ai].to] == 0) order.push_back(h.arcs[ai].to);
    }
  }
  if (order.size() != m && cycle) {
    // Walk backwards along unplaced vertices until one repeats.
    std::vector<std::uint32_t> pred(m, kAbsent);
    for (const HArc& a : h.arcs) {
      if (indeg[a.from] > 0 && indeg[a.to] > 0) pred[a.to] = a.from;
    }
    std::uint32_t v = 0;
    while (indeg[v] == 0) ++v;
    std::vector<std::uint32_t> seen(m, kAbsent);
    std::vector<std::uint32_t> walk;
    while (seen[v] == kAbsent) {
      seen[v] = static_cast<std::uint32_t>(walk.size());
      walk.push_back(v);
      v = pred[v];
    }
    cycle->assign(walk.begin() + seen[v], walk.end());
    std::reverse(cycle->begin(), cycle->end());
  }
  return order;
}

}  // namespace

HGraph build_H(const Analysis& an, int theta) {
  const Poset& p = an.poset();
  const PairTable& pt = an.pairs();
  const AddressTable& at = an.addresses();
  const std::size_t n = an.size();
  HGraph h;
  h.theta = theta;
  h.vertices = at.inside_pairs(theta);
  std::vector<std::uint32_t> index(n * n, kAbsent);
  for (std::uint32_t i = 0; i < h.vertices.size(); ++i) {
    index[h.vertices[i].first * n + h.vertices[i].second] = i;
  }
  h.out.assign(h.vertices.size(), {});
  auto add = [&](std::uint32_t from, std::uint32_t to, bool strong, std::optional<std::uint32_t> helper) {
    h.out[from].push_back(static_cast<std::uint32_t>(h.arcs.size()));
    h.arcs.push_back({from, to, strong, helper});
  };

  for (std::uint32_t i = 0; i < h.vertices.size(); ++i) {
    auto [a, b] = h.vertices[i];
    const Bits& lefts = pt.row(PairType::Left, a);  // a' with (a,a') a left pair
    for (auto a2 = lefts.find_first(); a2 != Bits::npos; a2 = lefts.find_next(a2)) {
      Bits b2s = at.row(theta, static_cast<Vertex>(a2)) & p.up_set(a);
      if (b2s.none()) continue;
      bool strong = p.less(static_cast<Vertex>(a2), b);
      for (auto b2 = b2s.find_first(); b2 != Bits::npos; b2 = b2s.find_next(b2)) {
        std::uint32_t k = index[a2 * n + b2];
        if (strong) {
          add(i, k, true, std::nullopt);
          continue;
        }
        // Helper (u,v): u <= b, a' <= v, (a',u) left, and no other
        // comparabilities, so that the three pairs form a strict cycle.
        Bits us = (p.down_set(b) - p.down_set(static_cast<Vertex>(b2))) & pt.row(PairType::Left, static_cast<Vertex>(a2));
        for (auto u = us.find_first(); u != Bits::npos; u = us.find_next(u)) {
          Bits vs = (at.row(theta, static_cast<Vertex>(u)) & p.up_set(static_cast<Vertex>(a2))) - p.up_set(a);
          if (auto v = vs.find_first(); v != Bits::npos) {
            add(i, k, false, index[u * n + v]);
            break;
          }
        }
      }
    }
  }

  std::vector<std::uint32_t> cycle;
  if (topo_order(h, &cycle).size() != h.vertices.size()) {
    nlohmann::json pairs = nlohmann::json::array();
    for (std::uint32_t v : cycle) pairs.push_back({h.vertices[v].first, h.vertices[v].second});
    fail(Errc::CyclicH, "H_" + std::to_string(theta) + " has a directed cycle", {{"cycle", pairs}});
  }
  return h;
}

std::vector<std::uint32_t> longest_paths(const HGraph& h, bool strong_only) {
  auto order = topo_order(h, nullptr);
  std::vector<std::uint32_t> value(h.vertices.size(), 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (std::uint32_t ai : h.out[*it]) {
      const HArc& a = h.arcs[ai];
      if (strong_only && !a.strong) continue;
      value[*it] = std::max(value[*it], value[a.to] + 1);
    }
  }
  return value;
}

std::vector<PairList> buckets(const HGraph& h) {
  auto value = longest_paths(h);
  std::vector<PairList> out(1);
  for (std::uint32_t v = 0; v < value.size(); ++v) {
    if (value[v] >= out.size()) out.resize(value[v] + 1);
    out[value[v]].push_back(h.vertices[v]);
  }
  return out;
}

bool induces_standard_example(const Poset& p, const PairList& pairs) {
  std::vector<Vertex> all;
  for (auto [a, b] : pairs) {
    all.push_back(a);
    all.push_back(b);
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      auto [ai, bi] = pairs[i];
      auto [aj, bj] = pairs[j];
      if (i == j) {
        if (!p.incomparable(ai, bi)) return false;
        continue;
      }
      if (!p.less(ai, bj) || !p.incomparable(ai, aj) || !p.incomparable(bi, bj)) return false;
    }
  }
  return true;
}

PairList extract_standard_example(const Analysis& an, const HGraph& h) {
  PairList out;
  if (h.vertices.empty()) return out;
  auto value = longest_paths(h, true);
  std::uint32_t v = static_cast<std::uint32_t>(std::max_element(value.begin(), value.end()) - value.begin());
  while (true) {
    out.push_back(h.vertices[v]);
    std::uint32_t next = kAbsent;
    for (std::uint32_t ai : h.out[v]) {
      const HArc& a = h.arcs[ai];
      if (a.strong && value[a.to] + 1 == value[v] && (next == kAbsent || a.to < next)) next = a.to;
    }
    if (next == kAbsent) break;
    v = next;
  }
  if (!induces_standard_example(an.poset(), out)) {
    fail(Errc::ValidationFailed, "strong path does not induce a standard example", {{"pairs", out}});
  }
  return out;
}

BucketRealizer build_dim_realizer(const Analysis& an) {
  const Poset& p = an.poset();
  BucketRealizer r;
  r.extensions.push_back(order_L1(an.left()));
  r.provenance.push_back("left-tree preorder");
  r.extensions.push_back(order_L2(an.right()));
  r.provenance.push_back("right-tree preorder");
  for (int theta = 0; theta < 2; ++theta) {
    HGraph h = build_H(an, theta);
    auto bs = buckets(h);
    for (std::size_t m = 1; m < bs.size(); ++m) {
      if (bs[m].empty()) continue;
      r.extensions.push_back(reversible_extension(p, bs[m]));
      r.provenance.push_back("reverses I_" + std::to_string(theta) + "(" + std::to_string(m) + ")");
    }
    if (bs.size() - 1 > r.k) r.k = bs.size() - 1;
    auto w = extract_standard_example(an, h);
    if (w.size() > r.witness.size()) r.witness = std::move(w);
  }
  for (auto [a, b] : incomparable_pairs(p)) {
    bool reversed = std::any_of(r.extensions.begin(), r.extensions.end(),
                                [&](const LinearOrder& l) { return l.position(b) < l.position(a); });
    if (!reversed) {
      fail(Errc::CoverageGap, "no extension reverses (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  }
  if (r.extensions.size() > 2 * r.k + 2) fail(Errc::ValidationFailed, "bucket realizer exceeds 2k+2 orders");
  return r;
}

}  // namespace pzr
