#include "poset.hpp"

#include <algorithm>
#include <string>

#include "error.hpp"

namespace pzr {

namespace {

std::vector<std::vector<Vertex>> out_lists(const Digraph& g) {
  std::vector<std::vector<Vertex>> out(g.vertex_count);
  for (const Arc& a : g.arcs) {
    if (a.tail >= g.vertex_count || a.head >= g.vertex_count) {
      fail(Errc::BadInput, "arc endpoint out of range");
    }
    out[a.tail].push_back(a.head);
  }
  return out;
}

// Kahn order, or nullopt when cyclic.
std::optional<std::vector<Vertex>> topo_order(const Digraph& g) {
  auto out = out_lists(g);
  std::vector<std::size_t> indeg(g.vertex_count, 0);
  for (const Arc& a : g.arcs) ++indeg[a.head];
  std::vector<Vertex> order, stack;
  for (Vertex v = g.vertex_count; v-- > 0;) {
    if (indeg[v] == 0) stack.push_back(v);
  }
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (Vertex w : out[v]) {
      if (--indeg[w] == 0) stack.push_back(w);
    }
  }
  if (order.size() != g.vertex_count) return std::nullopt;
  return order;
}

}  // namespace

bool is_acyclic(const Digraph& g) { return topo_order(g).has_value(); }

std::pair<Digraph, CondensationMap> scc_condense(const Digraph& g) {
  const std::size_t n = g.vertex_count;
  auto out = out_lists(g);

  // Iterative Tarjan.
  constexpr Vertex kUnset = ~Vertex{0};
  std::vector<Vertex> index(n, kUnset), low(n, 0), comp(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack;
  std::vector<std::pair<Vertex, std::size_t>> call;
  Vertex next_index = 0;
  std::size_t found = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    call.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, i] = call.back();
      if (i < out[v].size()) {
        Vertex w = out[v][i++];
        if (index[w] == kUnset) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = static_cast<Vertex>(found);
        } while (w != v);
        ++found;
      }
      Vertex done = v;
      call.pop_back();
      if (!call.empty()) {
        Vertex parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }

  // Tarjan emits sinks first; flip so sources come first.
  CondensationMap map;
  map.component_count = found;
  map.component_of.resize(n);
  for (Vertex v = 0; v < n; ++v) map.component_of[v] = static_cast<Vertex>(found - 1 - comp[v]);

  Digraph dag;
  dag.vertex_count = found;
  for (const Arc& a : g.arcs) {
    Vertex s = map.component_of[a.tail], t = map.component_of[a.head];
    if (s != t) dag.arcs.push_back({s, t});
  }
  std::sort(dag.arcs.begin(), dag.arcs.end());
  dag.arcs.erase(std::unique(dag.arcs.begin(), dag.arcs.end()), dag.arcs.end());
  return {dag, map};
}

std::vector<Bits> reachability(const Digraph& dag) {
  auto order = topo_order(dag);
  if (!order) fail(Errc::CyclicInput, "digraph has a directed cycle");
  auto out = out_lists(dag);
  std::vector<Bits> reach(dag.vertex_count, Bits(dag.vertex_count));
  for (auto it = order->rbegin(); it != order->rend(); ++it) {
    Vertex v = *it;
    reach[v].set(v);
    for (Vertex w : out[v]) reach[v] |= reach[w];
  }
  return reach;
}

Digraph transitive_reduction(const Digraph& dag) {
  auto reach = reachability(dag);
  auto out = out_lists(dag);
  Digraph red;
  red.vertex_count = dag.vertex_count;
  for (Vertex x = 0; x < dag.vertex_count; ++x) {
    auto& succ = out[x];
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    for (Vertex y : succ) {
      bool implied = std::any_of(succ.begin(), succ.end(),
                                 [&](Vertex z) { return z != y && reach[z][y]; });
      if (!implied) red.arcs.push_back({x, y});
    }
  }
  return red;
}

Poset Poset::from_cover(const Digraph& cover) {
  const std::size_t n = cover.vertex_count;
  Poset p;
  p.up_ = reachability(cover);  // throws CyclicInput
  p.upper_.resize(n);
  p.lower_.resize(n);
  for (const Arc& a : cover.arcs) {
    p.upper_[a.tail].push_back(a.head);
    p.lower_[a.head].push_back(a.tail);
  }
  for (Vertex x = 0; x < n; ++x) {
    auto& succ = p.upper_[x];
    std::sort(succ.begin(), succ.end());
    if (std::adjacent_find(succ.begin(), succ.end()) != succ.end()) {
      fail(Errc::NotReduced, "parallel cover arcs at vertex " + std::to_string(x));
    }
    for (Vertex y : succ) {
      for (Vertex z : succ) {
        if (z != y && p.up_[z][y]) {
          fail(Errc::NotReduced, "arc " + std::to_string(x) + "->" + std::to_string(y) +
                                     " is implied via " + std::to_string(z));
        }
      }
    }
    std::sort(p.lower_[x].begin(), p.lower_[x].end());
  }
  p.covers_ = cover.arcs;
  p.down_.assign(n, Bits(n));
  for (Vertex u = 0; u < n; ++u) {
    for (auto v = p.up_[u].find_first(); v != Bits::npos; v = p.up_[u].find_next(v)) {
      p.down_[v].set(u);
    }
  }
  std::optional<Vertex> source;
  std::size_t sources = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (p.lower_[v].empty()) {
      ++sources;
      source = v;
    }
  }
  if (sources == 1) p.zero_ = source;
  return p;
}

Vertex Poset::require_zero() const {
  if (!zero_) fail(Errc::NoZero, "poset has no unique minimal element");
  return *zero_;
}

std::vector<std::pair<Vertex, Vertex>> incomparable_pairs(const Poset& p) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex a = 0; a < p.size(); ++a) {
    for (Vertex b = 0; b < p.size(); ++b) {
      if (a != b && p.incomparable(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

}  // namespace pzr
