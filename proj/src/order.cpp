#include "order.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "error.hpp"

namespace pzr {

LinearOrder LinearOrder::from_sequence(std::vector<Vertex> seq) {
  LinearOrder l;
  l.pos_.assign(seq.size(), ~std::uint32_t{0});
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] >= seq.size() || l.pos_[seq[i]] != ~std::uint32_t{0}) {
      fail(Errc::BadInput, "order is not a permutation of 0.." + std::to_string(seq.size() - 1));
    }
    l.pos_[seq[i]] = static_cast<std::uint32_t>(i);
  }
  l.seq_ = std::move(seq);
  return l;
}

bool is_linear_extension(const Poset& p, const LinearOrder& l) {
  if (l.size() != p.size()) return false;
  for (const Arc& a : p.cover_arcs()) {
    if (l.position(a.tail) >= l.position(a.head)) return false;
  }
  return true;
}

namespace {

// Some directed cycle among the vertices Kahn could not place.
std::vector<Vertex> find_cycle(const std::vector<std::vector<Vertex>>& out, const std::vector<int>& indeg) {
  const std::size_t n = out.size();
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<Vertex> stack;
  std::vector<Vertex> cycle;
  std::function<bool(Vertex)> dfs = [&](Vertex v) {
    state[v] = 1;
    stack.push_back(v);
    for (Vertex w : out[v]) {
      if (indeg[w] == 0) continue;
      if (state[w] == 1) {
        auto it = std::find(stack.begin(), stack.end(), w);
        cycle.assign(it, stack.end());
        return true;
      }
      if (state[w] == 0 && dfs(w)) return true;
    }
    stack.pop_back();
    state[v] = 2;
    return false;
  };
  for (Vertex v = 0; v < n; ++v) {
    if (indeg[v] > 0 && state[v] == 0 && dfs(v)) break;
  }
  return cycle;
}

}  // namespace

LinearOrder reversible_extension(std::size_t n, const std::vector<Arc>& base,
                                 const std::vector<std::pair<Vertex, Vertex>>& reverse) {
  std::vector<std::vector<Vertex>> out(n);
  std::vector<int> indeg(n, 0);
  auto add = [&](Vertex u, Vertex v) {
    out[u].push_back(v);
    ++indeg[v];
  };
  for (const Arc& a : base) add(a.tail, a.head);
  for (const auto& [a, b] : reverse) add(b, a);

  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 0; v < n; ++v) {
    if (indeg[v] == 0) ready.push(v);
  }
  std::vector<Vertex> seq;
  seq.reserve(n);
  while (!ready.empty()) {
    Vertex v = ready.top();
    ready.pop();
    seq.push_back(v);
    for (Vertex w : out[v]) {
      if (--indeg[w] == 0) ready.push(w);
    }
  }
  if (seq.size() != n) {
    auto cycle = find_cycle(out, indeg);
    fail(Errc::NotReversible, "relation plus reversed pairs is cyclic", {{"cycle", cycle}});
  }
  return LinearOrder::from_sequence(std::move(seq));
}

LinearOrder reversible_extension(const Poset& p, const std::vector<std::pair<Vertex, Vertex>>& reverse) {
  return reversible_extension(p.size(), p.cover_arcs(), reverse);
}

}  // namespace pzr
